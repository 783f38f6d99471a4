"""Generate and ingest normalized Hecke-eigenvalue datasets.

Three generators at desk scale: point counts on a short Weierstrass model,
the weight-12 level-1 q-expansion through exact integer series arithmetic,
and a seeded synthetic sampler from the semicircle-squared distribution.
CSV round-trips carry a one-line '#' header followed by p,a_re,a_im[,a_raw]
rows.
"""

from __future__ import annotations

import functools
import io
import math
import random
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import DatasetError, DatasetFormatError, ParameterError, SingularCurveError

EC_X_CAP = 100_000
TAU_X_CAP = 10_000

# 11a1 in short Weierstrass form y^2 = x^3 - 27*c4*x - 54*c6 with
# (c4, c6) = (496, 20008); good away from 2, 3, 11.
CURVE_11A1 = (-13392, -1080432)


@dataclass(frozen=True)
class EigenvalueRecord:
    p: int
    a: complex
    omega_p: complex = 1.0 + 0j
    a_raw: float | None = None


@dataclass(frozen=True)
class DatasetHeader:
    source: str
    self_dual: bool
    X: int
    normalization: str = "unitary"
    omega_trivial: bool = True


@dataclass(frozen=True)
class Dataset:
    header: DatasetHeader
    records: tuple[EigenvalueRecord, ...]

    def __post_init__(self):
        last = 1
        for r in self.records:
            if r.p <= last:
                raise DatasetError("records must be sorted strictly increasing in p")
            if r.p > self.header.X:
                raise DatasetError(f"record prime {r.p} exceeds header X={self.header.X}")
            last = r.p


# ---------------------------------------------------------------------------
# Primes


def primes_up_to(x: int) -> list[int]:
    if x < 2:
        return []
    sieve = np.ones(x + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, int(math.isqrt(x)) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return [int(p) for p in np.nonzero(sieve)[0]]


def first_n_primes(n: int) -> list[int]:
    if n < 1:
        raise ParameterError("need n >= 1 primes")
    bound = 15 if n < 6 else int(n * (math.log(n) + math.log(math.log(n))) * 1.2) + 10
    ps = primes_up_to(bound)
    while len(ps) < n:
        bound *= 2
        ps = primes_up_to(bound)
    return ps[:n]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


# ---------------------------------------------------------------------------
# Elliptic curve point counts


def _ec_trace(A: int, B: int, p: int) -> int:
    """a_p = p + 1 - #E(F_p) for y^2 = x^3 + Ax + B via a full
    quadratic-character sweep over x."""
    xs = np.arange(p, dtype=np.int64)
    chi = np.full(p, -1, dtype=np.int64)
    chi[(xs * xs) % p] = 1
    chi[0] = 0
    f = (xs * xs % p * xs + (A % p) * xs + B % p) % p
    return -int(chi[f].sum())


def ec_ap(A: int, B: int, X: int) -> Dataset:
    """Unitarily normalized a_p/sqrt(p) for all good primes p <= X of the
    curve y^2 = x^3 + Ax + B; bad primes (dividing 2*disc) are skipped."""
    disc = -16 * (4 * A ** 3 + 27 * B ** 2)
    if disc == 0:
        raise SingularCurveError(f"curve y^2 = x^3 + {A}x + {B} is singular")
    if X < 5:
        raise ParameterError("need X >= 5")
    if X > EC_X_CAP:
        raise ParameterError(f"X = {X} exceeds the point-counting cap {EC_X_CAP}")
    skipped, records = [], []
    for p in primes_up_to(X):
        if (2 * disc) % p == 0:
            skipped.append(p)
            continue
        ap = _ec_trace(A, B, p)
        records.append(EigenvalueRecord(p, complex(ap / math.sqrt(p)), 1.0 + 0j, float(ap)))
    source = f"ec[a={A};b={B};skipped={';'.join(map(str, skipped))}]"
    return Dataset(DatasetHeader(source, True, X), tuple(records))


# ---------------------------------------------------------------------------
# Weight-12 level-1 coefficients


def _pack(coeffs: Sequence[int], width: int) -> int:
    return int.from_bytes(
        b"".join(c.to_bytes(width, "little") for c in coeffs), "little"
    )


def _unpack(value: int, width: int, n: int) -> list[int]:
    value &= (1 << (8 * width * n)) - 1  # truncate to the first n coefficients
    raw = value.to_bytes(width * n, "little")
    return [int.from_bytes(raw[i * width : (i + 1) * width], "little") for i in range(n)]


def _poly_mul_trunc(a: list[int], b: list[int], n: int) -> list[int]:
    """Truncated product of integer polynomials via Kronecker substitution:
    coefficients are packed into big integers (positive and negative parts
    separately) and multiplied with native big-int arithmetic."""
    bits_a = max((abs(c).bit_length() for c in a), default=1)
    bits_b = max((abs(c).bit_length() for c in b), default=1)
    width = (bits_a + bits_b + min(len(a), len(b)).bit_length() + 2 + 7) // 8 + 1
    a_pos = _pack([c if c > 0 else 0 for c in a], width)
    a_neg = _pack([-c if c < 0 else 0 for c in a], width)
    b_pos = _pack([c if c > 0 else 0 for c in b], width)
    b_neg = _pack([-c if c < 0 else 0 for c in b], width)
    plus = _unpack(a_pos * b_pos + a_neg * b_neg, width, n)
    minus = _unpack(a_pos * b_neg + a_neg * b_pos, width, n)
    return [pl - mi for pl, mi in zip(plus, minus)]


def _eta_coeffs(n: int) -> list[int]:
    """Coefficients of the product of (1 - q^m), m >= 1, to order n-1,
    by the pentagonal number expansion."""
    out = [0] * n
    out[0] = 1
    k = 1
    while True:
        placed = False
        for g in (k * (3 * k - 1) // 2, k * (3 * k + 1) // 2):
            if g < n:
                out[g] = (-1) ** k
                placed = True
        if not placed:
            break
        k += 1
    return out


@functools.lru_cache(maxsize=4)
def tau_coefficients(X: int) -> tuple[int, ...]:
    """tau(1)..tau(X) from the 24th power of the eta-product series."""
    if X > TAU_X_CAP:
        raise ParameterError(f"X = {X} exceeds the exact-series cap {TAU_X_CAP}")
    if X < 1:
        raise ParameterError("need X >= 1")
    e = _eta_coeffs(X)
    e2 = _poly_mul_trunc(e, e, X)
    e4 = _poly_mul_trunc(e2, e2, X)
    e8 = _poly_mul_trunc(e4, e4, X)
    e16 = _poly_mul_trunc(e8, e8, X)
    e24 = _poly_mul_trunc(e16, e8, X)
    return tuple(e24[:X])  # tau(n) is the coefficient of q^(n-1), times q


def tau_ap(X: int) -> Dataset:
    """Normalized tau(p)/p^(11/2) for primes p <= X."""
    taus = tau_coefficients(X)
    records = tuple(
        EigenvalueRecord(
            p, complex(taus[p - 1] / p ** 5.5), 1.0 + 0j, float(taus[p - 1])
        )
        for p in primes_up_to(X)
    )
    return Dataset(DatasetHeader(f"tau[X={X}]", True, X), records)


# ---------------------------------------------------------------------------
# Synthetic sampler


def sato_tate_sample(n: int, seed: int) -> Dataset:
    """a_p = 2 cos(theta_p) on the first n primes, theta drawn from the
    density (2/pi) sin^2 by rejection from a uniform proposal.  Each record
    derives its own generator from (seed, p), so output is reproducible
    regardless of evaluation order."""
    if n < 1:
        raise ParameterError("need n >= 1")
    records = []
    for p in first_n_primes(n):
        rng = random.Random(f"{seed}:{p}")
        while True:
            theta = rng.uniform(0.0, math.pi)
            if rng.random() <= math.sin(theta) ** 2:
                break
        records.append(EigenvalueRecord(p, complex(2.0 * math.cos(theta))))
    X = records[-1].p
    return Dataset(DatasetHeader(f"sato-tate[n={n};seed={seed}]", True, X), tuple(records))


# ---------------------------------------------------------------------------
# CSV round trip


def _format_bool(b: bool) -> str:
    return "true" if b else "false"


def _parse_bool(s: str) -> bool:
    if s not in ("true", "false"):
        raise DatasetFormatError(f"expected true/false, got {s!r}")
    return s == "true"


def write_csv(path: str | Path, dataset: Dataset) -> None:
    Path(path).write_text(dumps_csv(dataset), encoding="utf-8")


def dumps_csv(dataset: Dataset) -> str:
    h = dataset.header
    if "," in h.source:
        raise DatasetError("header source must not contain commas")
    buf = io.StringIO()
    buf.write(
        f"# source={h.source},self_dual={_format_bool(h.self_dual)},"
        f"normalization={h.normalization},X={h.X},"
        f"omega_trivial={_format_bool(h.omega_trivial)}\n"
    )
    with_raw = any(r.a_raw is not None for r in dataset.records)
    for r in dataset.records:
        row = f"{r.p},{r.a.real!r},{r.a.imag!r}"
        if with_raw:
            raw = r.a_raw if r.a_raw is not None else 0.0
            row += f",{int(raw) if float(raw).is_integer() else raw!r}"
        buf.write(row + "\n")
    return buf.getvalue()


def read_csv(path: str | Path) -> Dataset:
    return loads_csv(Path(path).read_text(encoding="utf-8"))


def loads_csv(text: str) -> Dataset:
    lines = text.splitlines()
    if not lines or not lines[0].startswith("#"):
        raise DatasetFormatError("missing '#' header line", line=1)
    fields = {}
    for item in lines[0].lstrip("#").strip().split(","):
        if "=" not in item:
            raise DatasetFormatError(f"malformed header item {item!r}", line=1)
        key, value = item.split("=", 1)
        fields[key.strip()] = value.strip()
    try:
        header = DatasetHeader(
            source=fields["source"],
            self_dual=_parse_bool(fields["self_dual"]),
            X=int(fields["X"]),
            normalization=fields.get("normalization", "unitary"),
            omega_trivial=_parse_bool(fields.get("omega_trivial", "true")),
        )
    except KeyError as exc:
        raise DatasetFormatError(f"header missing key {exc}", line=1) from None
    records = []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        parts = line.split(",")
        if len(parts) not in (3, 4):
            raise DatasetFormatError(f"expected 3 or 4 columns, got {len(parts)}", line=lineno)
        try:
            p = int(parts[0])
            a = complex(float(parts[1]), float(parts[2]))
            raw = float(parts[3]) if len(parts) == 4 else None
        except ValueError as exc:
            raise DatasetFormatError(str(exc), line=lineno) from None
        if not is_prime(p):
            raise DatasetFormatError(f"p = {p} is not prime", line=lineno)
        records.append(EigenvalueRecord(p, a, 1.0 + 0j, raw))
    try:
        return Dataset(header, tuple(records))
    except DatasetError as exc:
        raise DatasetFormatError(str(exc)) from None
