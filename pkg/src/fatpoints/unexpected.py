"""Generic-point dimensions, unexpected-curve detection and splitting types.

"General point" has two realizations.  Sampled mode evaluates the dimension
at a few independent integer points and takes the minimum: each sample
overestimates the generic value only on a proper closed locus, so the
minimum of independent samples is the generic dimension except with
vanishing probability, and it is always an upper bound that certifies a
"no unexpected curve" verdict outright.  Certified mode places P = [a, b, 1]
with symbolic parameters and certifies the generic corank by grid
evaluation beyond the degree bound of the minors.

The splitting type (a_Z, b_Z) is computed operationally from the trace
m(j) = dim I(Z + jP)_(j+1):  a_Z is the least j with m(j) nonzero and
b_Z = |Z| - 1 - a_Z.  Balancedness (b_Z - a_Z <= 1) is the semistability
gate: balanced configurations admit no unexpected curve.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import comb

from .field import Field
from .geom import PointConfiguration, ProjectivePoint
from .linsys import (
    FatPointScheme,
    symbolic_conditions_matrix,
    system_basis,
    system_dimension,
)
from .poly import Form, symbolic_rank_bound


@dataclass(frozen=True)
class GeneralPointStrategy:
    """How to realize "for a general point P"."""

    mode: str = "sampled"
    samples: int = 3
    height: int = 1000
    seed: int = 0

    def __post_init__(self):
        if self.mode not in ("sampled", "certified"):
            raise ValueError(f"unknown strategy mode {self.mode!r}")
        if self.samples < 1:
            raise ValueError("need at least one sample")
        if self.height < 2:
            raise ValueError("height bound must be at least 2")

    def sample_point(self, field: Field, index: int, avoid=()) -> ProjectivePoint:
        """Deterministic affine sample [x, y, 1]; independent per index."""
        rng = random.Random(f"fatpoints:{self.seed}:{index}")
        avoid = set(avoid)
        while True:
            x = rng.randint(-self.height, self.height)
            y = rng.randint(-self.height, self.height)
            p = ProjectivePoint(field, (field.scalar(x), field.scalar(y), field.one))
            if p not in avoid:
                return p


DEFAULT_STRATEGY = GeneralPointStrategy()


def _sampled_dims(Z: PointConfiguration, j: int, d: int, strategy, stop_at=None):
    """Dimensions of I(Z + jP)_d at the strategy's sample points.

    Stops early once a sample reaches stop_at (a proven generic upper
    bound cannot sink lower).
    """
    out = []
    avoid = set(Z.points)
    for i in range(strategy.samples):
        P = strategy.sample_point(Z.field, i, avoid)
        X = FatPointScheme.of(Z, (P, j))
        dim = system_dimension(X, d)
        out.append((P, dim))
        if stop_at is not None and dim <= stop_at:
            break
    return out


def _certified_dim(Z: PointConfiguration, j: int, d: int) -> int:
    M = symbolic_conditions_matrix(Z, j, d)
    cert = symbolic_rank_bound(M)
    return comb(d + 2, 2) - cert.rank


def multiplicity_dim(Z: PointConfiguration, j: int, strategy=DEFAULT_STRATEGY) -> int:
    """m(j): the generic value of dim I(Z + jP)_(j+1)."""
    if j < 0:
        raise ValueError("multiplicity must be nonnegative")
    d = j + 1
    if j == 0:
        return system_dimension(FatPointScheme.of(Z), d)
    if strategy.mode == "certified":
        return _certified_dim(Z, j, d)
    dims = _sampled_dims(Z, j, d, strategy, stop_at=0)
    return min(dim for _, dim in dims)


@dataclass(frozen=True)
class SplittingType:
    """Operational splitting type with its raw m(j) trace."""

    a: int
    b: int
    m_values: tuple
    balanced: bool

    def to_dict(self) -> dict:
        return {
            "aZ": self.a,
            "bZ": self.b,
            "m": list(self.m_values),
            "balanced": self.balanced,
        }


def splitting_type(Z: PointConfiguration, strategy=DEFAULT_STRATEGY) -> SplittingType:
    """Splitting type (a_Z, b_Z) from the full m(j) trace, j = 0 .. |Z|-1."""
    if len(Z) < 2:
        raise ValueError("splitting type needs at least two points")
    ms = tuple(multiplicity_dim(Z, j, strategy) for j in range(len(Z)))
    a = next(j for j, m in enumerate(ms) if m != 0)
    b = len(Z) - 1 - a
    return SplittingType(a=a, b=b, m_values=ms, balanced=(b - a <= 1))


def is_semistable_gate(Z: PointConfiguration, strategy=DEFAULT_STRATEGY) -> str:
    """'balanced' or 'unbalanced'; balanced blocks unexpected curves.

    Only a_Z is needed, so the m(j) scan stops at the first nonzero value.
    """
    for j in range(len(Z)):
        if multiplicity_dim(Z, j, strategy) != 0:
            a = j
            break
    else:
        raise AssertionError("unreachable: m(|Z|-1) is always positive")
    b = len(Z) - 1 - a
    return "balanced" if b - a <= 1 else "unbalanced"


@dataclass(frozen=True)
class UnexpectedCurveReport:
    """Verdict of the strict unexpected-curve inequality for one degree."""

    degree: int
    dim_z: int
    generic_dim: int
    threshold: int
    unexpected: bool
    certified: bool
    witness: Form | None
    samples: tuple

    def to_dict(self) -> dict:
        d = {
            "degree": self.degree,
            "dimZ": self.dim_z,
            "genericDim": self.generic_dim,
            "threshold": self.threshold,
            "unexpected": self.unexpected,
            "certified": self.certified,
            "samples": [
                {"point": [str(c) for c in p.coeffs], "dim": dim}
                for p, dim in self.samples
            ],
        }
        if self.witness is not None:
            d["witness"] = [str(c) for c in self.witness.coeffs]
        return d


def detect_unexpected(
    Z: PointConfiguration, d: int, strategy=DEFAULT_STRATEGY
) -> UnexpectedCurveReport:
    """Does Z admit an unexpected curve of degree d?

    Tests dim I(Z + (d-1)P)_d > max(dim I(Z)_d - C(d,2), 0) for general P.
    In sampled mode the generic dimension is the minimum over the samples;
    sampling stops as soon as the verdict is decided negatively, which is
    sound because every sample bounds the generic value from above.
    """
    if d < 2:
        raise ValueError("unexpected curves need degree at least 2")
    dim_z = system_dimension(FatPointScheme.of(Z), d)
    threshold = max(dim_z - comb(d, 2), 0)
    if strategy.mode == "certified":
        generic = _certified_dim(Z, d - 1, d)
        samples = _sampled_dims(Z, d - 1, d, strategy)
    else:
        samples = _sampled_dims(Z, d - 1, d, strategy, stop_at=threshold)
        generic = min(dim for _, dim in samples)
    unexpected = generic > threshold
    witness = None
    if unexpected:
        for P, dim in samples:
            if dim == generic:
                X = FatPointScheme.of(Z, (P, d - 1))
                witness = system_basis(X, d)[0]
                break
    return UnexpectedCurveReport(
        degree=d,
        dim_z=dim_z,
        generic_dim=generic,
        threshold=threshold,
        unexpected=unexpected,
        certified=(strategy.mode == "certified"),
        witness=witness,
        samples=tuple(samples),
    )


def fermat_unexpected_range(n: int, strategy=DEFAULT_STRATEGY) -> list[int]:
    """Degrees d in [3, 2n-3] where the dual Fermat F_n has unexpected curves."""
    from .configs import dual_fermat

    if n < 3:
        raise ValueError("Fermat configurations need n >= 3")
    Z = dual_fermat(n)
    out = []
    for d in range(3, 2 * n - 2):
        if detect_unexpected(Z, d, strategy).unexpected:
            out.append(d)
    return out
