"""Empirical verification harness over eigenvalue datasets.

Truncated Dirichlet sums, density profiles, pole-order probes, and
theorem-checking reports.  Finite truncations cannot estimate Dirichlet
densities properly (the partial prime sum saturates at loglog X), so the
harness fixes the operating point s = 1 + 1/log X and reports both natural
and Dirichlet-weighted proportions as diagnostics, not proofs.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import bounds
from .datasets import EigenvalueRecord
from .errors import DatasetError, ParameterError

#: desk-scale proxy for "infinitely many": at least this fraction of primes
WITNESS_FRACTION = 0.01
DEFAULT_EPSILON = 0.01


def _require_records(records: Sequence[EigenvalueRecord]) -> None:
    if not records:
        raise DatasetError("empty dataset")


def _rotated_real(records: Sequence[EigenvalueRecord], phi: float) -> np.ndarray:
    rot = cmath.exp(1j * phi)
    return np.array([(r.a * rot).real for r in records], dtype=float)


def _primes(records: Sequence[EigenvalueRecord]) -> np.ndarray:
    return np.array([r.p for r in records], dtype=float)


def operating_point(records: Sequence[EigenvalueRecord]) -> float:
    """s = 1 + 1/log X with X the largest prime in the data."""
    _require_records(records)
    return 1.0 + 1.0 / math.log(records[-1].p)


def truncated_sum(
    records: Sequence[EigenvalueRecord], k: int, s: float, phi: float = 0.0
) -> float:
    """Sum over the dataset of Re(a_p e^{i phi})^k / p^s."""
    _require_records(records)
    if s <= 1.0:
        raise ParameterError(f"need s > 1, got {s}")
    vals = _rotated_real(records, phi)
    return float(np.sum(vals ** k / _primes(records) ** s))


def normalized_ratio(
    records: Sequence[EigenvalueRecord], k: int, s: float, phi: float = 0.0
) -> float:
    """truncated_sum divided by log(1/(s-1))."""
    return truncated_sum(records, k, s, phi) / math.log(1.0 / (s - 1.0))


@dataclass(frozen=True)
class DensityReport:
    threshold: float
    side: str
    phi: float
    natural_proportion: float
    dirichlet_weighted: float
    count: int
    s_used: float
    X: int

    def to_json(self) -> dict:
        return {
            "threshold": self.threshold,
            "side": self.side,
            "phi": self.phi,
            "natural_proportion": self.natural_proportion,
            "dirichlet_weighted": self.dirichlet_weighted,
            "count": self.count,
            "s_used": self.s_used,
            "X": self.X,
        }


def density_profile(
    records: Sequence[EigenvalueRecord], c: float, side: str, phi: float = 0.0
) -> DensityReport:
    """Proportion of primes with Re(a_p e^{i phi}) > c ('above') or < -c
    ('below'), both natural and weighted by p^-s at s = 1 + 1/log X."""
    _require_records(records)
    if c < 0:
        raise ParameterError("threshold must be >= 0")
    if side not in ("above", "below"):
        raise ParameterError(f"side must be 'above' or 'below', got {side!r}")
    vals = _rotated_real(records, phi)
    mask = vals > c if side == "above" else vals < -c
    s = operating_point(records)
    weights = _primes(records) ** -s
    return DensityReport(
        threshold=c,
        side=side,
        phi=phi,
        natural_proportion=float(mask.mean()),
        dirichlet_weighted=float(weights[mask].sum() / weights.sum()),
        count=int(mask.sum()),
        s_used=s,
        X=records[-1].p,
    )


def pole_order_probe(
    records: Sequence[EigenvalueRecord], k: int, s_grid: Sequence[float]
) -> float:
    """Least-squares slope of the truncated k-th power sum against
    log(1/(s-1)): an empirical pole-order estimate."""
    _require_records(records)
    if len(s_grid) < 3:
        raise ParameterError("need at least 3 grid points")
    gaps = sorted(s - 1.0 for s in s_grid)
    if gaps[0] <= 0:
        raise ParameterError("all grid points must exceed 1")
    if gaps[-1] / gaps[0] < 4.0:
        raise ParameterError("grid must span at least a factor of 4 in s - 1")
    x = np.array([math.log(1.0 / (s - 1.0)) for s in s_grid])
    y = np.array([truncated_sum(records, k, s) for s in s_grid])
    slope, _ = np.polyfit(x, y, 1)
    return float(slope)


THEOREMS = ("t1pos", "t1neg", "t2")


@dataclass(frozen=True)
class TheoremReport:
    theorem: str
    threshold: float
    epsilon: float
    phi: float
    count: int
    required: int
    total: int
    witnesses: tuple[tuple[int, float], ...]
    passed: bool

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "threshold": self.threshold,
            "epsilon": self.epsilon,
            "phi": self.phi,
            "count": self.count,
            "required": self.required,
            "total": self.total,
            "witnesses": [list(w) for w in self.witnesses],
            "passed": self.passed,
        }


def verify_theorem(
    records: Sequence[EigenvalueRecord],
    theorem: str,
    phi: float = 0.0,
    epsilon: float = DEFAULT_EPSILON,
    self_dual: bool = True,
) -> TheoremReport:
    """Count qualifying primes for the requested one-sided bound and pass if
    at least 1% of the records qualify (the desk-scale existence proxy)."""
    _require_records(records)
    if theorem not in THEOREMS:
        raise ParameterError(f"unknown theorem {theorem!r}; choose from {THEOREMS}")
    if theorem in ("t1pos", "t1neg") and not self_dual:
        raise DatasetError(f"theorem {theorem} requires a self-dual dataset")
    vals = _rotated_real(records, phi)
    if theorem == "t1pos":
        threshold = bounds.positive_side().constant
        mask = vals > threshold - epsilon
        extremity = vals
    elif theorem == "t1neg":
        threshold = -bounds.negative_side().constant
        mask = vals < threshold + epsilon
        extremity = -vals
    else:
        threshold = bounds.non_self_dual(phi).constant
        mask = vals > threshold - epsilon
        extremity = vals
    idx = np.nonzero(mask)[0]
    top = idx[np.argsort(-extremity[idx])][:10]
    witnesses = tuple((records[i].p, float(vals[i])) for i in top)
    count = int(mask.sum())
    required = math.floor(WITNESS_FRACTION * len(records))
    return TheoremReport(
        theorem=theorem,
        threshold=float(threshold),
        epsilon=epsilon,
        phi=phi,
        count=count,
        required=required,
        total=len(records),
        witnesses=witnesses,
        passed=count >= required and count > 0,
    )
