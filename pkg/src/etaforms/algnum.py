"""Exact arithmetic in the four small real fields the eigenvalues live in.

Each field is Q(theta) with a fixed power basis 1, theta, theta^2:

    RATIONAL  theta = 1 (degree 1)
    SQRT5     theta = lambda = (1 + sqrt 5)/2,  x^2 - x - 1
    SQRT2     theta = sqrt 2,                    x^2 - 2
    COS7      theta = alpha = 2 cos(2 pi/7),     x^3 + x^2 - 2x - 1

Coordinates are ints or Fractions.  Quadratic fields carry the nontrivial
automorphism, COS7 the cyclic automorphism sigma: alpha -> beta -> gamma.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Union

Scalar = Union[int, Fraction]


def _norm(x) -> Scalar:
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    return x


class NumberField:
    """Q[x]/(min_poly) with min_poly monic, given lowest degree first."""

    def __init__(self, label: str, min_poly: tuple[int, ...], theta: float) -> None:
        self.label = label
        self.min_poly = tuple(min_poly)
        self.degree = len(min_poly) - 1
        self._theta = theta  # real embedding, debug only
        if self.min_poly[-1] != 1:
            raise ValueError("minimal polynomial must be monic")
        if self.degree in (2, 3) and any(self._eval_min_poly(r) == 0 for r in self._rational_root_candidates()):
            raise ValueError("minimal polynomial has a rational root")
        # theta^k for k < 2*degree - 1 as basis coordinate vectors
        self._powers = self._reduce_table()
        self._galois: list[tuple[tuple[Scalar, ...], ...]] = []

    def _eval_min_poly(self, x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.min_poly):
            acc = acc * x + c
        return acc

    def _rational_root_candidates(self) -> list[Fraction]:
        c0 = abs(self.min_poly[0])
        divs = [d for d in range(1, c0 + 1) if c0 % d == 0] or [0]
        return [Fraction(s * d) for d in divs for s in (1, -1)]

    def _reduce_table(self) -> list[tuple[Scalar, ...]]:
        n = self.degree
        table = []
        for k in range(2 * n - 1):
            if k < n:
                v = [0] * n
                v[k] = 1
            else:
                prev = table[k - 1]
                # theta * prev, then replace theta^n by -(c0 + c1 theta + ...)
                shifted = [0] + list(prev[:-1])
                top = prev[-1]
                v = [shifted[i] - top * self.min_poly[i] for i in range(n)]
            table.append(tuple(v))
        return table

    def __repr__(self) -> str:
        return f"NumberField({self.label})"

    def __reduce__(self):
        return (_field_by_label, (self.label,))

    # constructors -------------------------------------------------------
    def __call__(self, *coords) -> FieldElement:
        return FieldElement(self, coords)

    def zero(self) -> FieldElement:
        return FieldElement(self, (0,) * self.degree)

    def one(self) -> FieldElement:
        return FieldElement(self, (1,) + (0,) * (self.degree - 1))

    def gen(self) -> FieldElement:
        if self.degree == 1:
            return self.one()
        return FieldElement(self, (0, 1) + (0,) * (self.degree - 2))

    def coerce(self, x) -> FieldElement:
        if isinstance(x, FieldElement):
            if x.field is self:
                return x
            if x.field.degree == 1:
                return FieldElement(self, (x.coords[0],) + (0,) * (self.degree - 1))
            raise TypeError(f"cannot coerce {x.field.label} element into {self.label}")
        if isinstance(x, (int, Rational)):
            return FieldElement(self, (x,) + (0,) * (self.degree - 1))
        raise TypeError(f"cannot coerce {type(x).__name__} into {self.label}")

    def mul_vectors(self, a: Iterable[Scalar], b: Iterable[Scalar]) -> tuple[Scalar, ...]:
        a, b = tuple(a), tuple(b)
        n = self.degree
        raw = [0] * (2 * n - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        raw[i + j] += x * y
        return self.reduce_vector(raw)

    def reduce_vector(self, raw: list) -> tuple[Scalar, ...]:
        n = self.degree
        out = list(raw[:n]) + [0] * max(0, n - len(raw))
        for k in range(n, len(raw)):
            c = raw[k]
            if c:
                for i, t in enumerate(self._powers[k]):
                    if t:
                        out[i] += c * t
        return tuple(_norm(x) for x in out)

    # automorphisms ------------------------------------------------------
    def set_galois_images(self, images: list[tuple[Scalar, ...]]) -> None:
        """Images of theta under a generator of the Galois group."""
        self._galois = [tuple(v) for v in images]

    def automorphism(self, x: FieldElement) -> FieldElement:
        if self.degree == 1:
            return x
        g = FieldElement(self, self._galois[0])
        acc = self.zero()
        power = self.one()
        for c in x.coords:
            if c:
                acc = acc + power * c
            power = power * g
        return acc


class FieldElement:
    __slots__ = ("field", "coords")

    def __init__(self, field: NumberField, coords) -> None:
        coords = tuple(_norm(c) for c in coords)
        if len(coords) != field.degree:
            raise ValueError(f"{field.label} elements need {field.degree} coordinates")
        self.field = field
        self.coords = coords

    # arithmetic ---------------------------------------------------------
    def _lift(self, other) -> FieldElement | None:
        if isinstance(other, FieldElement):
            if other.field is self.field:
                return other
            if other.field.degree == 1:
                return self.field.coerce(other)
            if self.field.degree == 1:
                return None
            raise TypeError(f"field mismatch: {self.field.label} vs {other.field.label}")
        if isinstance(other, (int, Rational)):
            return self.field.coerce(other)
        return None

    def _promote_self(self, other):
        # rational element meeting an element of a bigger field
        if isinstance(other, FieldElement) and self.field.degree == 1 and other.field.degree > 1:
            return other.field.coerce(self)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            s = self._promote_self(other)
            return NotImplemented if s is None else s + other
        return FieldElement(self.field, (a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __neg__(self) -> FieldElement:
        return FieldElement(self.field, (-a for a in self.coords))

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            s = self._promote_self(other)
            return NotImplemented if s is None else s - other
        return FieldElement(self.field, (a - b for a, b in zip(self.coords, o.coords)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return FieldElement(self.field, (a * other for a in self.coords))
        o = self._lift(other)
        if o is None:
            s = self._promote_self(other)
            return NotImplemented if s is None else s * other
        return FieldElement(self.field, self.field.mul_vectors(self.coords, o.coords))

    __rmul__ = __mul__

    def inverse(self) -> FieldElement:
        """Solve x * y = 1 from the multiplication matrix of x."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        f = self.field
        n = f.degree
        cols = []
        for k in range(n):
            e = [0] * n
            e[k] = 1
            cols.append(f.mul_vectors(self.coords, e))
        # rows of augmented matrix: M y = e0, M[i][k] = cols[k][i]
        m = [[Fraction(cols[k][i]) for k in range(n)] + [Fraction(1 if i == 0 else 0)] for i in range(n)]
        for c in range(n):
            piv = next(r for r in range(c, n) if m[r][c] != 0)
            m[c], m[piv] = m[piv], m[c]
            pv = m[c][c]
            m[c] = [v / pv for v in m[c]]
            for r in range(n):
                if r != c and m[r][c] != 0:
                    fac = m[r][c]
                    m[r] = [a - fac * b for a, b in zip(m[r], m[c])]
        return FieldElement(f, (m[i][n] for i in range(n)))

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            return FieldElement(self.field, (Fraction(a) / other for a in self.coords))
        o = self._lift(other)
        if o is None:
            s = self._promote_self(other)
            return NotImplemented if s is None else s / other
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int) -> FieldElement:
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # comparison / queries ----------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            if other.field is self.field:
                return self.coords == other.coords
            if self.field.degree == 1 or other.field.degree == 1:
                return self.is_rational() and other.is_rational() and self.coords[0] == other.coords[0]
            return False
        if isinstance(other, (int, Rational)):
            return self.is_rational() and self.coords[0] == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.coords[0])
        return hash((self.field.label, self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def to_rational(self) -> Scalar:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coords[0]

    def to_int(self) -> int:
        r = self.to_rational()
        if isinstance(r, Fraction):
            raise ValueError(f"{self} is not an integer")
        return r

    def coordinate(self, i: int) -> Scalar:
        if not 0 <= i < self.field.degree:
            raise IndexError(f"basis index {i} out of range for {self.field.label}")
        return self.coords[i]

    def conjugates(self) -> list[FieldElement]:
        """Orbit of self under the Galois group, starting with self."""
        out = [self]
        for _ in range(self.field.degree - 1):
            out.append(self.field.automorphism(out[-1]))
        return out

    def to_float(self) -> float:
        # debug printer only
        t = self.field._theta
        return sum(float(c) * t**i for i, c in enumerate(self.coords))

    def __repr__(self) -> str:
        return f"FieldElement({self.field.label}, {self.coords})"

    def __str__(self) -> str:
        names = _BASIS_NAMES[self.field.label]
        terms = []
        for c, name in zip(self.coords, names):
            if c == 0:
                continue
            if name == "1":
                terms.append(str(c))
            elif c == 1:
                terms.append(name)
            elif c == -1:
                terms.append(f"-{name}")
            else:
                cs = f"({c})" if isinstance(c, Fraction) else str(c)
                terms.append(f"{cs}*{name}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")


_BASIS_NAMES = {
    "RATIONAL": ("1",),
    "SQRT5": ("1", "lambda"),
    "SQRT2": ("1", "sqrt2"),
    "COS7": ("1", "alpha", "alpha^2"),
}

RATIONAL = NumberField("RATIONAL", (0, 1), 1.0)
SQRT5 = NumberField("SQRT5", (-1, -1, 1), (1 + math.sqrt(5)) / 2)
SQRT2 = NumberField("SQRT2", (-2, 0, 1), math.sqrt(2))
COS7 = NumberField("COS7", (-1, -2, 1, 1), 2 * math.cos(2 * math.pi / 7))

SQRT5.set_galois_images([(1, -1)])  # lambda -> mu = 1 - lambda
SQRT2.set_galois_images([(0, -1)])
COS7.set_galois_images([(-2, 0, 1)])  # alpha -> beta = alpha^2 - 2

FIELDS = {f.label: f for f in (RATIONAL, SQRT5, SQRT2, COS7)}


def _field_by_label(label: str) -> NumberField:
    return FIELDS[label]


# named constants
LAMBDA = SQRT5(0, 1)
MU = SQRT5(1, -1)
ROOT5 = SQRT5(-1, 2)
ROOT2 = SQRT2(0, 1)
ALPHA = COS7(0, 1, 0)
BETA = COS7(-2, 0, 1)
GAMMA = COS7(1, -1, -1)


def div_sqrt5(x: FieldElement) -> Scalar:
    """x / sqrt5 for x in SQRT5 with x = c*sqrt5 (zero trace)."""
    # c*sqrt5 = -c + 2c*lambda
    c = Fraction(x.coordinate(1)) / 2
    if x.coordinate(0) != -c:
        raise ValueError(f"{x} is not a rational multiple of sqrt5")
    return _norm(c)


def rational(x: Scalar) -> FieldElement:
    return RATIONAL(x)
