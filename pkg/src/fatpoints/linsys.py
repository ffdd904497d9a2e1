"""Fat-point schemes and exact dimensions of linear systems of plane curves.

A point of multiplicity m imposes C(m+1, 2) linear conditions on forms of
degree d: the vanishing of all partial derivatives of order below m, taken
in the two variables of an affine chart containing the point.  The chart is
the one whose coordinate is the point's last nonzero coordinate; vanishing
to order m there is equivalent to scheme-theoretic vanishing, and the row
count matches the virtual-dimension bookkeeping exactly.

The nullspace of the conditions matrix is the system itself, reported as
forms in the fixed graded-lex monomial order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .field import Field, FieldMismatchError, Scalar
from .geom import PointConfiguration, ProjectivePoint
from .poly import (
    ExactMatrix,
    Form,
    ParamPoly,
    ParamRing,
    exact_rank,
    monomial_basis,
    nullspace_basis,
    rank_of_fraction_rows,
)


class BaseLocusError(ValueError):
    """A rational map was evaluated at a base point (all forms vanish)."""


class FatPointScheme:
    """Formal sum m1*P1 + ... + mr*Pr of distinct points with multiplicities."""

    __slots__ = ("field", "parts")

    def __init__(self, field: Field, parts):
        norm = []
        seen = set()
        for p, m in parts:
            if not isinstance(p, ProjectivePoint):
                p = ProjectivePoint(field, p)
            elif p.field != field:
                raise FieldMismatchError("scheme points over different fields")
            if not isinstance(m, int) or m < 1:
                raise ValueError("multiplicities must be integers >= 1")
            if p in seen:
                raise ValueError("scheme points must be pairwise distinct")
            seen.add(p)
            norm.append((p, m))
        self.field = field
        self.parts = tuple(norm)

    @classmethod
    def of(cls, Z: PointConfiguration, *extra) -> "FatPointScheme":
        """Simple points of Z plus optional (point, multiplicity) extras."""
        parts = [(p, 1) for p in Z.points]
        parts.extend(extra)
        return cls(Z.field, parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def condition_count(self) -> int:
        return sum(comb(m + 1, 2) for _, m in self.parts)

    def __repr__(self):
        return " + ".join(
            (f"{m}*" if m > 1 else "") + repr(p) for p, m in self.parts
        )


def _chart_index(p: ProjectivePoint) -> int:
    for i in (2, 1, 0):
        if p.coeffs[i]:
            return i
    raise AssertionError("unreachable: zero point")


def _chart_scaled(p: ProjectivePoint, chart: int):
    inv = p.coeffs[chart].inverse()
    return tuple(c * inv for c in p.coeffs)


def _derivative_orders(m: int):
    """Multi-indices (order in u, order in v) of total order < m."""
    out = []
    for o in range(m):
        for au in range(o, -1, -1):
            out.append((au, o - au))
    return out


def _falling(e: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= e - i
    return out


def _condition_rows_q(X: FatPointScheme, d: int) -> list:
    """Condition rows as plain Fractions; rational fields only (hot path)."""
    basis = monomial_basis(d)
    zero = Fraction(0)
    rows = []
    for p, m in X.parts:
        chart = _chart_index(p)
        u, v = [i for i in range(3) if i != chart]
        inv = 1 / p.coeffs[chart].coeffs[0]
        coords = [c.coeffs[0] * inv for c in p.coeffs]
        powers = []
        for c in coords:
            row = [Fraction(1)]
            for _ in range(d):
                row.append(row[-1] * c)
            powers.append(row)
        for au, av in _derivative_orders(m):
            row = []
            for e in basis:
                if e[u] < au or e[v] < av:
                    row.append(zero)
                    continue
                coef = _falling(e[u], au) * _falling(e[v], av)
                e2 = list(e)
                e2[u] -= au
                e2[v] -= av
                row.append(powers[0][e2[0]] * powers[1][e2[1]] * powers[2][e2[2]] * coef)
            rows.append(row)
    return rows


def conditions_matrix(X: FatPointScheme, d: int) -> ExactMatrix:
    """Interpolation matrix whose nullspace is I(X)_d as coefficient vectors.

    One row per point per derivative multi-index of order < m, columns in
    the graded-lex monomial order of degree d.
    """
    if d < 0:
        raise ValueError("degree must be nonnegative")
    field = X.field
    if field.degree == 1:
        raw = _condition_rows_q(X, d)
        rows = [[Scalar(field, (x,)) for x in row] for row in raw]
        return ExactMatrix(field, rows)
    basis = monomial_basis(d)
    rows = []
    for p, m in X.parts:
        chart = _chart_index(p)
        u, v = [i for i in range(3) if i != chart]
        coords = _chart_scaled(p, chart)
        powers = []
        for c in coords:
            row = [field.one]
            for _ in range(d):
                row.append(row[-1] * c)
            powers.append(row)
        for au, av in _derivative_orders(m):
            row = []
            for e in basis:
                if e[u] < au or e[v] < av:
                    row.append(field.zero)
                    continue
                coef = _falling(e[u], au) * _falling(e[v], av)
                e2 = list(e)
                e2[u] -= au
                e2[v] -= av
                val = powers[0][e2[0]] * powers[1][e2[1]] * powers[2][e2[2]]
                row.append(val * coef)
            rows.append(row)
    return ExactMatrix(field, rows)


def system_dimension(X: FatPointScheme, d: int) -> int:
    """dim I(X)_d by rank only, skipping the nullspace basis."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    ncols = comb(d + 2, 2)
    if not X.parts:
        return ncols
    if X.field.degree == 1:
        return ncols - rank_of_fraction_rows(_condition_rows_q(X, d), ncols)
    return ncols - exact_rank(conditions_matrix(X, d))


@dataclass(frozen=True)
class LinearSystemReport:
    """Exact dimension data of I(X)_d together with a basis of forms."""

    degree: int
    vdim: int
    edim: int
    dim: int
    special: bool
    basis: tuple

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "vdim": self.vdim,
            "edim": self.edim,
            "dim": self.dim,
            "special": self.special,
            "basis": [[str(c) for c in f.coeffs] for f in self.basis],
        }


def dim_linear_system(X: FatPointScheme, d: int) -> LinearSystemReport:
    """Exact dimension of I(X)_d with virtual/expected bookkeeping."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    ncols = comb(d + 2, 2)
    vdim = ncols - X.condition_count()
    edim = max(vdim, 0)
    M = conditions_matrix(X, d)
    if M.nrows == 0:
        basis_vecs = []
        eye = X.field.one
        zero = X.field.zero
        for c in range(ncols):
            v = [zero] * ncols
            v[c] = eye
            basis_vecs.append(tuple(v))
        dim = ncols
    else:
        basis_vecs = nullspace_basis(M)
        dim = len(basis_vecs)
    forms = tuple(Form(X.field, d, vec) for vec in basis_vecs)
    return LinearSystemReport(
        degree=d, vdim=vdim, edim=edim, dim=dim, special=(dim > edim), basis=forms
    )


def _check_vanishing(f: Form, X: FatPointScheme) -> None:
    # post-condition: every basis form meets every multiplicity condition
    from .poly import evaluate, partial_derivative

    for p, m in X.parts:
        chart = _chart_index(p)
        u, v = [i for i in range(3) if i != chart]
        for au, av in _derivative_orders(m):
            g = f
            for _ in range(au):
                g = partial_derivative(g, u)
            for _ in range(av):
                g = partial_derivative(g, v)
            if not evaluate(g, p.coeffs).is_zero():
                raise AssertionError(
                    f"basis form fails the order-{m} condition at {p!r}"
                )


def system_basis(X: FatPointScheme, d: int) -> list[Form]:
    """Linearly independent forms spanning I(X)_d, vanishing verified."""
    forms = list(dim_linear_system(X, d).basis)
    for f in forms:
        _check_vanishing(f, X)
    return forms


def rational_map_image(basis, p: ProjectivePoint):
    """Image [f1(p) : ... : fk(p)] in P^(k-1) of the map defined by a basis.

    Returns a ProjectivePoint when the basis has three forms (a plane map),
    otherwise the normalized tuple of scalar coordinates.
    """
    from .poly import evaluate

    basis = list(basis)
    if not basis:
        raise ValueError("rational map needs a nonempty basis")
    values = [evaluate(f, p.coeffs) for f in basis]
    if all(v.is_zero() for v in values):
        raise BaseLocusError(f"{p!r} lies in the base locus of the map")
    if len(values) == 3:
        return ProjectivePoint(p.field, values)
    for v in values:
        if v:
            inv = v.inverse()
            return tuple(x * inv for x in values)
    raise AssertionError("unreachable")


def symbolic_conditions_matrix(
    Z: PointConfiguration, j: int, d: int, ring: ParamRing | None = None
) -> ExactMatrix:
    """Conditions matrix of Z + j*P at degree d with P = [a, b, 1] symbolic.

    Rows for the points of Z are constant; rows for the general point are
    polynomials in the parameters a, b.
    """
    if ring is None:
        ring = ParamRing(Z.field)
    field = Z.field
    basis = monomial_basis(d)
    rows = []
    concrete = conditions_matrix(FatPointScheme.of(Z), d)
    for row in concrete.rows:
        rows.append([ring.coerce(e) for e in row])
    for au, av in _derivative_orders(j):
        row = []
        for e in basis:
            if e[0] < au or e[1] < av:
                row.append(ring.zero)
                continue
            coef = _falling(e[0], au) * _falling(e[1], av)
            term = {(e[0] - au, e[1] - av): field.scalar(coef)}
            row.append(ParamPoly(field, term))
        rows.append(row)
    return ExactMatrix(ring, rows)
