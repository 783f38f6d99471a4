"""Hypothesis bundle governing cuspidality and isomorphism decisions."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import ParameterError


class RepType(enum.Enum):
    GENERAL = "general"
    TETRAHEDRAL = "tetrahedral"
    OCTAHEDRAL = "octahedral"
    DIHEDRAL = "dihedral"


@dataclass(frozen=True)
class TypeAssumption:
    """Representation type, self-duality, and central-character order.

    For non-dihedral self-dual representations the central character is
    forced trivial; conversely a trivial central character forces
    self-duality (the contragredient is the omega^{-1} twist).  Both
    constraints are validated at construction.
    """

    rep_type: RepType = RepType.GENERAL
    self_dual: bool = True
    omega_order: int = 1

    def __post_init__(self):
        if self.omega_order < 1:
            raise ParameterError("omega_order must be >= 1")
        if self.self_dual and self.rep_type is not RepType.DIHEDRAL and self.omega_order != 1:
            raise ParameterError(
                "self-dual non-dihedral representations have trivial central character"
            )
        if not self.self_dual and self.omega_order == 1:
            raise ParameterError(
                "a trivial central character forces self-duality; "
                "non-self-dual assumptions need omega_order >= 2"
            )


GENERAL_SELF_DUAL = TypeAssumption(RepType.GENERAL, True, 1)
TETRAHEDRAL_SELF_DUAL = TypeAssumption(RepType.TETRAHEDRAL, True, 1)
OCTAHEDRAL_SELF_DUAL = TypeAssumption(RepType.OCTAHEDRAL, True, 1)
