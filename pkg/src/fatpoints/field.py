"""Exact scalar arithmetic over Q and over cyclotomic extensions Q(zeta_n).

A scalar is stored as a vector of rational coefficients in the power basis
1, z, ..., z^(phi(n)-1), reduced modulo the n-th cyclotomic polynomial Phi_n.
The rational field is the degenerate case of vector length one; conductors
1 and 2 also collapse to plain rational values since phi(1) = phi(2) = 1.

Scalars are immutable and canonical: Fraction keeps gcd(num, den) = 1 with a
positive denominator, and the representative polynomial always has degree
below phi(n).  Equality of scalars therefore agrees with field equality.

Nothing in this module (or anything built on it) ever touches floating
point: rank decisions downstream must be exact.

The text grammar used by configuration files and the CLI:

    rational    -?DIGITS(/DIGITS)?            e.g.  "3", "-2/3"
    cyclotomic  polynomial in the symbol z    e.g.  "1-z^2", "-2/3*z"

Cyclotomic input is reduced modulo Phi_n on parse, so "z^4" is legal over
Q(zeta_3) and comes back as the reduced representative.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache


class FieldMismatchError(TypeError):
    """Combination of scalars from two different fields (never coerced)."""


def _divisors(n: int) -> list[int]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, constant term first, monic.

    Computed by exact division of z^n - 1 by the product of Phi_d over the
    proper divisors d of n.
    """
    if n < 1:
        raise ValueError("conductor must be a positive integer")
    num = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        num = _polydiv_exact(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


def _polydiv_exact(num: list[int], den: list[int]) -> list[int]:
    # den is monic, division known exact over Z
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        out[k - dd] = c
        if c:
            for i, di in enumerate(den):
                num[k - dd + i] -= c * di
    if any(num[:dd]):
        raise ArithmeticError("inexact polynomial division")
    return out


class Field:
    """Descriptor for Q or Q(zeta_n); creates and owns Scalar values.

    Fields compare (and hash) by kind and conductor.  Mixed-field arithmetic
    is rejected rather than coerced, so callers building configurations must
    pick one field up front.
    """

    __slots__ = ("kind", "conductor", "degree", "modulus", "_red", "_zero", "_one")

    def __init__(self, kind: str, conductor: int = 1):
        if kind not in ("rational", "cyclotomic"):
            raise ValueError(f"unknown field kind {kind!r}")
        if kind == "rational":
            conductor = 1
            self.modulus = None
            self.degree = 1
            self._red = ()
        else:
            if conductor < 1:
                raise ValueError("conductor must be a positive integer")
            mod = cyclotomic_polynomial(conductor)
            self.modulus = mod
            self.degree = len(mod) - 1
            self._red = _reduction_table(mod)
        self.kind = kind
        self.conductor = conductor
        zero = (Fraction(0),) * self.degree
        one = (Fraction(1),) + (Fraction(0),) * (self.degree - 1)
        self._zero = Scalar(self, zero)
        self._one = Scalar(self, one)

    # -- identity ---------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and self.kind == other.kind
            and self.conductor == other.conductor
        )

    def __hash__(self):
        return hash((self.kind, self.conductor))

    def __repr__(self):
        if self.kind == "rational":
            return "Q"
        return f"Q(zeta_{self.conductor})"

    # -- element construction ----------------------------------------------

    @property
    def zero(self) -> "Scalar":
        return self._zero

    @property
    def one(self) -> "Scalar":
        return self._one

    def scalar(self, value) -> "Scalar":
        """Coerce an int, Fraction, grammar string or same-field Scalar."""
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatchError(f"scalar of {value.field!r} used in {self!r}")
            return value
        if isinstance(value, (int, Fraction)):
            coeffs = (Fraction(value),) + (Fraction(0),) * (self.degree - 1)
            return Scalar(self, coeffs)
        if isinstance(value, str):
            return parse_scalar(self, value)
        raise TypeError(f"cannot make a scalar of {self!r} from {value!r}")

    def coerce(self, value) -> "Scalar":
        return self.scalar(value)

    def from_coeffs(self, coeffs) -> "Scalar":
        """Scalar from power-basis coefficients, reduced modulo Phi_n."""
        v = [Fraction(c) for c in coeffs]
        if self.kind == "rational":
            if any(v[1:]):
                raise ValueError("rational field admits no z coefficients")
            v = v[:1] or [Fraction(0)]
            return Scalar(self, tuple(v))
        deg = self.degree
        for k in range(len(v) - 1, deg - 1, -1):
            c = v[k]
            if c:
                for i in range(deg):
                    mi = self.modulus[i]
                    if mi:
                        v[k - deg + i] -= c * mi
            v[k] = Fraction(0)
        v = v[:deg] + [Fraction(0)] * (deg - len(v))
        return Scalar(self, tuple(v))

    def to_dict(self) -> dict:
        if self.kind == "rational":
            return {"type": "rational"}
        return {"type": "cyclotomic", "n": self.conductor}

    @staticmethod
    def from_dict(d: dict) -> "Field":
        kind = d.get("type")
        if kind == "rational":
            return Field("rational")
        if kind == "cyclotomic":
            return Field("cyclotomic", int(d["n"]))
        raise ValueError(f"unknown field descriptor {d!r}")


def _reduction_table(modulus: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    # row k gives z^(deg+k) in the power basis, for k = 0 .. deg-2
    deg = len(modulus) - 1
    rows = []
    cur = [-m for m in modulus[:deg]]  # z^deg
    rows.append(tuple(cur))
    for _ in range(deg - 2):
        nxt = [0] + cur[: deg - 1]
        top = cur[deg - 1]
        if top:
            for i in range(deg):
                nxt[i] += top * rows[0][i]
        rows.append(tuple(nxt))
        cur = nxt
    return tuple(rows)


class Scalar:
    """Immutable element of a Field, in canonical form."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: tuple):
        # trusted constructor: coeffs already reduced, length field.degree
        self.field = field
        self.coeffs = coeffs

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def is_rational(self) -> bool:
        """True when the value lies in the prime field Q."""
        return not any(self.coeffs[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    # -- arithmetic -----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatchError(
                    f"cannot mix scalars of {self.field!r} and {other.field!r}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.scalar(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(self.field, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(self.field, tuple(b - a for a, b in zip(self.coeffs, o.coeffs)))

    def __neg__(self):
        return Scalar(self.field, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        f = self.field
        if f.degree == 1:
            return Scalar(f, (self.coeffs[0] * o.coeffs[0],))
        return Scalar(f, _mul_reduce(f, self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise ZeroDivisionError("scalar division by zero")
        f = self.field
        if f.degree == 1:
            return Scalar(f, (1 / self.coeffs[0],))
        inv = _invert_mod(self.coeffs, f.modulus)
        return Scalar(f, inv)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- identity ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.scalar(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __str__(self):
        return render_scalar(self)

    __repr__ = __str__


def _mul_reduce(field: Field, u: tuple, v: tuple) -> tuple:
    deg = field.degree
    w = [Fraction(0)] * (2 * deg - 1)
    for i, ui in enumerate(u):
        if ui:
            for j, vj in enumerate(v):
                if vj:
                    w[i + j] += ui * vj
    out = w[:deg]
    red = field._red
    for k in range(deg, 2 * deg - 1):
        ck = w[k]
        if ck:
            row = red[k - deg]
            for i in range(deg):
                ri = row[i]
                if ri:
                    out[i] += ck * ri
    return tuple(out)


def _invert_mod(coeffs: tuple, modulus: tuple[int, ...]) -> tuple:
    # extended Euclid in Q[z] for gcd(poly, Phi_n) = 1
    def degree(p):
        d = len(p) - 1
        while d >= 0 and not p[d]:
            d -= 1
        return d

    r0 = [Fraction(m) for m in modulus]
    r1 = [Fraction(c) for c in coeffs]
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while degree(r1) > 0:
        d0, d1 = degree(r0), degree(r1)
        q = [Fraction(0)] * (d0 - d1 + 1)
        rr = list(r0)
        while degree(rr) >= d1:
            dr = degree(rr)
            c = rr[dr] / r1[d1]
            q[dr - d1] += c
            for i in range(d1 + 1):
                rr[i + dr - d1] -= c * r1[i]
        r0, r1 = r1, rr
        prod = [Fraction(0)] * (len(q) + len(s1) - 1)
        for i, qi in enumerate(q):
            if qi:
                for j, sj in enumerate(s1):
                    if sj:
                        prod[i + j] += qi * sj
        ns = [Fraction(0)] * max(len(s0), len(prod))
        for i in range(len(ns)):
            ns[i] = (s0[i] if i < len(s0) else 0) - (prod[i] if i < len(prod) else 0)
        s0, s1 = s1, ns
    c = r1[0]
    if not c:
        # cannot happen while Phi_n is irreducible over Q
        raise ZeroDivisionError("scalar division by zero")
    deg = len(modulus) - 1
    inv = [x / c for x in s1[:deg]]
    inv += [Fraction(0)] * (deg - len(inv))
    return tuple(inv)


# -- field-level operations -------------------------------------------------


def make_field(kind: str, n: int | None = None) -> Field:
    """Build a field descriptor; the cyclotomic kind requires a conductor."""
    if kind == "cyclotomic":
        if n is None:
            raise ValueError("cyclotomic field needs a conductor")
        return Field("cyclotomic", n)
    if kind == "rational":
        return Field("rational")
    raise ValueError(f"unknown field kind {kind!r}")


QQ = Field("rational")


def primitive_root(field: Field) -> Scalar:
    """The class of z: a primitive n-th root of unity in Q(zeta_n)."""
    if field.kind != "cyclotomic":
        raise ValueError("primitive_root needs a cyclotomic field")
    return field.from_coeffs([0, 1])


# -- text grammar -------------------------------------------------------------

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")
_TERM_RE = re.compile(
    r"^(?P<sign>[+-]?)"
    r"(?:(?P<coef>\d+(?:/\d+)?)\*?)?"
    r"(?P<z>z(?:\^(?P<exp>\d+))?)?$"
)


def parse_scalar(field: Field, text: str) -> Scalar:
    """Parse the scalar text grammar; cyclotomic input reduces mod Phi_n."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty scalar literal")
    if field.kind == "rational":
        if not _RATIONAL_RE.match(s):
            raise ValueError(f"bad rational literal {text!r}")
        return field.scalar(Fraction(s))
    terms = re.findall(r"[+-]?[^+-]+", s)
    if "".join(terms) != s:
        raise ValueError(f"bad scalar literal {text!r}")
    coeffs: dict[int, Fraction] = {}
    for term in terms:
        m = _TERM_RE.match(term)
        if not m or (m.group("coef") is None and m.group("z") is None):
            raise ValueError(f"bad term {term!r} in scalar literal {text!r}")
        c = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        if m.group("sign") == "-":
            c = -c
        e = 0
        if m.group("z"):
            e = int(m.group("exp")) if m.group("exp") else 1
        coeffs[e] = coeffs.get(e, Fraction(0)) + c
    top = max(coeffs)
    vec = [coeffs.get(i, Fraction(0)) for i in range(top + 1)]
    return field.from_coeffs(vec)


def render_scalar(s: Scalar) -> str:
    """Inverse of parse_scalar, low powers first; '0' for zero."""
    if s.is_rational():
        return str(s.coeffs[0])
    parts = []
    for e, c in enumerate(s.coeffs):
        if not c:
            continue
        if e == 0:
            body = str(abs(c))
        else:
            mag = abs(c)
            zpart = "z" if e == 1 else f"z^{e}"
            body = zpart if mag == 1 else f"{mag}*{zpart}"
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+" if c > 0 else "-") + body)
    return "".join(parts)
