"""Exception hierarchy shared across the package.

Everything user-facing derives from DomainError so the CLI can map
domain failures to exit code 1 uniformly.
"""


class DomainError(Exception):
    """Base class for all domain-level failures."""


class AlgebraError(DomainError):
    """Problems in the symbolic representation algebra."""


class UnsupportedDegreeError(AlgebraError):
    """Tensor/symmetric power degree outside the supported range."""


class UnsupportedReductionError(AlgebraError):
    """No isobaric decomposition is known for this atom under the assumption."""


class EvaluationError(AlgebraError):
    """Numeric character evaluation is missing a required symbol value."""


class PoleError(DomainError):
    """Problems computing pole orders."""


class MonomialExcludedError(PoleError):
    """Pole queries under the dihedral (monomial) assumption are excluded."""


class UnknownCuspidalityError(PoleError):
    """A pairing involves an atom whose cuspidality is not declared."""


class ParameterError(DomainError):
    """An argument is outside its documented range."""


class DatasetError(DomainError):
    """Problems generating or ingesting eigenvalue datasets."""


class SingularCurveError(DatasetError):
    """The requested Weierstrass model is singular."""


class DatasetFormatError(DatasetError):
    """Malformed dataset file; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
