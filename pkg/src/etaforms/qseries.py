"""Exact truncated q-series and the standard series builders.

A :class:`QSeries` of order N knows the coefficients of q^0 .. q^N.  The
coefficients live in one of the fields of :mod:`etaforms.algnum`; they are
stored as one integer/rational list per basis coordinate ("planes"), so
that integer series never pay for field-element boxing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from numbers import Rational
from typing import Iterable, Sequence

from .algnum import RATIONAL, FieldElement, NumberField, Scalar, _norm
from .bqf import Form, discriminant


def _halve(x: Scalar, d: int) -> Scalar:
    if isinstance(x, int) and x % d == 0:
        return x // d
    return _norm(Fraction(x, d) if isinstance(x, int) else x / d)


class QSeries:
    __slots__ = ("field", "order", "planes")

    def __init__(self, field: NumberField, order: int, planes: Sequence[Sequence[Scalar]]) -> None:
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        if len(planes) != field.degree:
            raise ValueError("one coefficient plane per basis element is required")
        self.field = field
        self.order = order
        self.planes = tuple(_fit(list(p), order + 1) for p in planes)

    # construction -------------------------------------------------------
    @classmethod
    def from_ints(cls, coeffs: Sequence[Scalar], order: int | None = None, field: NumberField = RATIONAL) -> QSeries:
        order = len(coeffs) - 1 if order is None else order
        planes = [list(coeffs)] + [[0] * (order + 1) for _ in range(field.degree - 1)]
        return cls(field, order, planes)

    @classmethod
    def from_elements(cls, field: NumberField, coeffs: Sequence[FieldElement | Scalar]) -> QSeries:
        els = [field.coerce(c) for c in coeffs]
        planes = [[e.coords[i] for e in els] for i in range(field.degree)]
        return cls(field, len(els) - 1, planes)

    @classmethod
    def zero(cls, order: int, field: NumberField = RATIONAL) -> QSeries:
        return cls(field, order, [[0] * (order + 1) for _ in range(field.degree)])

    @classmethod
    def one(cls, order: int, field: NumberField = RATIONAL) -> QSeries:
        s = cls.zero(order, field)
        s.planes[0][0] = 1
        return s

    @classmethod
    def monomial(cls, k: int, order: int, field: NumberField = RATIONAL) -> QSeries:
        s = cls.zero(order, field)
        if k <= order:
            s.planes[0][k] = 1
        return s

    # access -------------------------------------------------------------
    def __len__(self) -> int:
        return self.order + 1

    def __getitem__(self, n: int) -> FieldElement:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient q^{n} is beyond truncation order {self.order}")
        return FieldElement(self.field, (p[n] for p in self.planes))

    def coefficients(self) -> list[FieldElement]:
        return [self[n] for n in range(self.order + 1)]

    def integer_coefficients(self) -> list[int]:
        """Coefficients as Python ints; fails unless every one is a rational integer."""
        if any(any(p) for p in self.planes[1:]):
            raise ValueError("series has irrational coefficients")
        out = self.planes[0]
        if any(isinstance(x, Fraction) for x in out):
            raise ValueError("series has non-integral coefficients")
        return list(out)

    def is_integral(self) -> bool:
        return all(isinstance(x, int) for p in self.planes for x in p)

    def coordinate_series(self, i: int) -> list[Scalar]:
        return list(self.planes[i])

    def is_zero(self) -> bool:
        return not any(any(p) for p in self.planes)

    def support(self) -> list[int]:
        return [n for n in range(self.order + 1) if any(p[n] for p in self.planes)]

    def valuation(self) -> int | None:
        s = self.support()
        return s[0] if s else None

    # arithmetic ---------------------------------------------------------
    def _coerce(self, other: QSeries) -> tuple[QSeries, QSeries]:
        if other.field is self.field:
            return self, other
        if other.field.degree == 1:
            return self, other.promote(self.field)
        if self.field.degree == 1:
            return self.promote(other.field), other
        raise TypeError(f"incompatible fields {self.field.label} and {other.field.label}")

    def promote(self, field: NumberField) -> QSeries:
        if field is self.field:
            return self
        if self.field.degree != 1:
            raise TypeError(f"cannot promote {self.field.label} series to {field.label}")
        zeros = [[0] * (self.order + 1) for _ in range(field.degree - 1)]
        return QSeries(field, self.order, [self.planes[0]] + zeros)

    def truncate(self, order: int) -> QSeries:
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return QSeries(self.field, order, [p[: order + 1] for p in self.planes])

    def __add__(self, other):
        if not isinstance(other, QSeries):
            return self + self._constant(other)
        x, y = self._coerce(other)
        n = min(x.order, y.order)
        return QSeries(x.field, n, [[a + b for a, b in zip(p[: n + 1], q[: n + 1])] for p, q in zip(x.planes, y.planes)])

    __radd__ = __add__

    def __neg__(self) -> QSeries:
        return QSeries(self.field, self.order, [[-a for a in p] for p in self.planes])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def _constant(self, c) -> QSeries:
        e = self.field.coerce(c) if not isinstance(c, FieldElement) or c.field.degree == 1 else c
        s = QSeries.zero(self.order, e.field)
        for i, v in enumerate(e.coords):
            s.planes[i][0] = v
        return s

    def scale(self, c) -> QSeries:
        """Multiply by a field constant."""
        if isinstance(c, (int, Rational)):
            return QSeries(self.field, self.order, [[_norm(a * c) for a in p] for p in self.planes])
        x = self if c.field is self.field or c.field.degree == 1 else self.promote(c.field)
        c = x.field.coerce(c)
        f = x.field
        n = f.degree
        out = [[0] * (x.order + 1) for _ in range(n)]
        for i, plane in enumerate(x.planes):
            for j, cj in enumerate(c.coords):
                if not cj:
                    continue
                # theta^i * cj theta^j
                red = f.reduce_vector([0] * (i + j) + [cj])
                for k, t in enumerate(red):
                    if t:
                        o = out[k]
                        for m, a in enumerate(plane):
                            if a:
                                o[m] += a * t
        return QSeries(f, x.order, [[_norm(v) for v in o] for o in out])

    def __truediv__(self, d: int | Fraction) -> QSeries:
        if not isinstance(d, (int, Rational)):
            return NotImplemented
        if isinstance(d, int):
            return QSeries(self.field, self.order, [[_halve(a, d) for a in p] for p in self.planes])
        return self.scale(1 / Fraction(d))

    def __mul__(self, other):
        if not isinstance(other, QSeries):
            return self.scale(other)
        x, y = self._coerce(other)
        n = min(x.order, y.order)
        f = x.field
        deg = f.degree
        raw = [[0] * (n + 1) for _ in range(2 * deg - 1)]
        for i, p in enumerate(x.planes):
            for j, q in enumerate(y.planes):
                _convolve_into(raw[i + j], p, q, n)
        out = [[0] * (n + 1) for _ in range(deg)]
        for m in range(n + 1):
            vec = f.reduce_vector([r[m] for r in raw])
            for k in range(deg):
                out[k][m] = vec[k]
        return QSeries(f, n, out)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, e: int) -> QSeries:
        if e < 0:
            return self.inverse() ** (-e)
        result = QSeries.one(self.order, self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> QSeries:
        """Power series inverse; the constant term must be 1 and the field rational."""
        if self.field.degree != 1:
            raise NotImplementedError("inversion is only needed for rational series")
        a = self.planes[0]
        if a[0] != 1:
            raise ValueError("only series with constant term 1 are inverted")
        n = self.order
        nz = [(k, a[k]) for k in range(1, n + 1) if a[k]]
        b = [0] * (n + 1)
        b[0] = 1
        for m in range(1, n + 1):
            acc = 0
            for k, ak in nz:
                if k > m:
                    break
                acc -= ak * b[m - k]
            b[m] = acc
        return QSeries(RATIONAL, n, [b])

    # substitutions ------------------------------------------------------
    def shift(self, j: int, order: int | None = None) -> QSeries:
        """q^j * self, truncated at ``order`` (default: self.order + j)."""
        order = self.order + j if order is None else order
        if order - j > self.order:
            raise ValueError("shift would read beyond the truncation order")
        planes = []
        for p in self.planes:
            v = [0] * (order + 1)
            for m in range(max(0, -j), order - j + 1):
                if m + j >= 0:
                    v[m + j] = p[m]
            planes.append(v)
        return QSeries(self.field, order, planes)

    def dilate(self, k: int, order: int | None = None) -> QSeries:
        """self(q^k) truncated at ``order`` (default: k * self.order + k - 1)."""
        if k < 1:
            raise ValueError("dilation factor must be positive")
        order = k * self.order + k - 1 if order is None else order
        if order // k > self.order:
            raise ValueError("dilation would read beyond the truncation order")
        planes = []
        for p in self.planes:
            v = [0] * (order + 1)
            for m in range(order // k + 1):
                v[m * k] = p[m]
            planes.append(v)
        return QSeries(self.field, order, planes)

    def twist(self) -> QSeries:
        """self(-q): negate odd coefficients."""
        return QSeries(self.field, self.order, [[-a if m % 2 else a for m, a in enumerate(p)] for p in self.planes])

    def extract(self, residue: int, modulus: int) -> QSeries:
        """Keep only coefficients q^n with n = residue (mod modulus)."""
        return QSeries(
            self.field,
            self.order,
            [[a if m % modulus == residue % modulus else 0 for m, a in enumerate(p)] for p in self.planes],
        )

    # comparison / display -----------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        try:
            x, y = self._coerce(other)
        except TypeError:
            return False
        n = min(x.order, y.order)
        return all(p[: n + 1] == q[: n + 1] for p, q in zip(x.planes, y.planes))

    __hash__ = None  # type: ignore[assignment]

    def first_difference(self, other: QSeries, order: int | None = None) -> int | None:
        """Smallest index where the two series differ, or None."""
        x, y = self._coerce(other)
        n = min(x.order, y.order) if order is None else order
        if n > min(x.order, y.order):
            raise ValueError(f"comparison order {n} exceeds known order {min(x.order, y.order)}")
        for m in range(n + 1):
            if any(p[m] != q[m] for p, q in zip(x.planes, y.planes)):
                return m
        return None

    def __repr__(self) -> str:
        return f"QSeries({self.field.label}, order={self.order}, {self.to_text(12)})"

    def to_text(self, max_terms: int | None = None) -> str:
        terms = []
        for n in self.support():
            c = self[n]
            terms.append(_term(c, n))
            if max_terms is not None and len(terms) >= max_terms:
                terms.append("...")
                break
        body = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        return f"{body} + O(q^{self.order + 1})"

    def to_records(self) -> list[str]:
        return [f"n={n} coeff={self[n]}" for n in self.support()]


def _term(c: FieldElement, n: int) -> str:
    mono = "" if n == 0 else ("q" if n == 1 else f"q^{n}")
    s = str(c)
    if not mono:
        return s
    if s == "1":
        return mono
    if s == "-1":
        return f"-{mono}"
    if c.is_rational() and not isinstance(c.coords[0], Fraction):
        return f"{s}*{mono}"
    return f"({s})*{mono}"


def _fit(p: list, length: int) -> list:
    if len(p) >= length:
        return p[:length]
    return p + [0] * (length - len(p))


def _convolve_into(out: list, p: Sequence, q: Sequence, n: int) -> None:
    pn = [(i, a) for i, a in enumerate(p[: n + 1]) if a]
    qn = [(j, b) for j, b in enumerate(q[: n + 1]) if b]
    if len(pn) > len(qn):
        pn, qn = qn, pn
    for i, a in pn:
        lim = n - i
        for j, b in qn:
            if j > lim:
                break
            out[i + j] += a * b


# ---------------------------------------------------------------------------
# Builders


def pentagonal_exponents(n_max: int) -> list[tuple[int, int]]:
    """(exponent, sign) pairs k(3k-1)/2 <= n_max for k in Z, sorted by exponent."""
    out = [(0, 1)]
    k = 1
    while True:
        e1 = k * (3 * k - 1) // 2
        if e1 > n_max:
            break
        sign = -1 if k % 2 else 1
        out.append((e1, sign))
        e2 = k * (3 * k + 1) // 2
        if e2 <= n_max:
            out.append((e2, sign))
        k += 1
    return sorted(out)


def euler_E(m: int, order: int) -> QSeries:
    """E(q^m) = prod (1 - q^(mn)) via the pentagonal number theorem."""
    if m < 1:
        raise ValueError("scale must be positive")
    c = [0] * (order + 1)
    for e, sign in pentagonal_exponents(order // m):
        c[m * e] = sign
    return QSeries.from_ints(c)


@dataclass(frozen=True)
class EtaQuotientSpec:
    """q^j * prod E(q^s)^r over ``factors`` = ((s, r), ...)."""

    j: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        scales = [s for s, _ in self.factors]
        if len(set(scales)) != len(scales):
            raise ValueError("eta-quotient scales must be distinct")
        if any(s < 1 for s in scales) or any(r == 0 for _, r in self.factors):
            raise ValueError("scales must be positive and powers nonzero")
        if self.j < 0:
            raise ValueError("prefactor exponent must be non-negative")

    @classmethod
    def combine(cls, j: int, factors: Iterable[tuple[int, int]]) -> EtaQuotientSpec:
        """Merge repeated scales and drop cancelled ones."""
        acc: dict[int, int] = {}
        for s, r in factors:
            acc[s] = acc.get(s, 0) + r
        return cls(j, tuple(sorted((s, r) for s, r in acc.items() if r)))

    @property
    def weight(self) -> Fraction:
        return Fraction(sum(r for _, r in self.factors), 2)

    def is_proper(self) -> bool:
        """True when j = sum(r s)/24, i.e. this is q^(...) times a genuine eta-quotient."""
        return 24 * self.j == sum(r * s for s, r in self.factors)

    @property
    def level(self) -> int:
        from math import lcm

        base = lcm(*[s for s, _ in self.factors]) if self.factors else 1
        n = base
        while sum(Fraction(r * n, s) for s, r in self.factors) % 24 != 0:
            n += base
        return n


def _mul_E(c: list[int], s: int, order: int, power: int) -> None:
    """In place: c <- c * E(q^s)^power (power = +1 or -1)."""
    pent = [(s * e, sign) for e, sign in pentagonal_exponents(order // s) if e]
    if power > 0:
        for n in range(order, 0, -1):
            acc = c[n]
            for e, sign in pent:
                if e > n:
                    break
                acc += sign * c[n - e]
            c[n] = acc
    else:
        for n in range(1, order + 1):
            acc = c[n]
            for e, sign in pent:
                if e > n:
                    break
                acc -= sign * c[n - e]
            c[n] = acc


def eta_quotient(spec: EtaQuotientSpec, order: int) -> QSeries:
    inner = order - spec.j
    c = [0] * (order + 1)
    if inner >= 0:
        c[0] = 1
        # multiply first so that intermediate coefficients stay small
        for s, r in sorted(spec.factors, key=lambda f: -f[1]):
            for _ in range(abs(r)):
                _mul_E(c, s, inner, 1 if r > 0 else -1)
        c = [0] * spec.j + c[: inner + 1]
    return QSeries.from_ints(c[: order + 1], order)


def theta_normalize(u: int, v: int) -> tuple[int, int, int]:
    """Shift f(q^u, q^v) to q^P f(q^u', q^v') with u', v' >= 0; returns (P, u', v')."""
    if u + v <= 0:
        raise ValueError("f(q^u, q^v) needs u + v > 0")
    if u >= 0 and v >= 0:
        return 0, u, v
    t = u + v
    n = -(u // t)  # ceil(-u / t)
    up, vp = u + n * t, v - n * t
    pre = u * n * (n + 1) // 2 + v * n * (n - 1) // 2
    return pre, up, vp


def theta_f(u: int, v: int, order: int, negate: bool = False) -> QSeries:
    """Ramanujan's f(q^u, q^v) = sum_n q^(u n(n+1)/2 + v n(n-1)/2).

    With ``negate`` this is f(-q^u, -q^v), whose n-th term carries (-1)^n.
    """
    pre, _, _ = theta_normalize(u, v)
    t = u + v
    # e(n) = t n^2/2 + (u - v) n/2 is convex; start at the integer nearest its vertex
    n0 = round(Fraction(v - u, 2 * t))
    if u * n0 * (n0 + 1) // 2 + v * n0 * (n0 - 1) // 2 < 0 or pre < 0:
        raise ValueError("f(q^u, q^v) has negative powers of q")
    c = [0] * (order + 1)
    for direction in (1, -1):
        n = n0 if direction == 1 else n0 - 1
        while True:
            e = u * n * (n + 1) // 2 + v * n * (n - 1) // 2
            if e > order:
                break
            c[e] += -1 if negate and n % 2 else 1
            n += direction
    return QSeries.from_ints(c)


def phi(order: int, k: int = 1) -> QSeries:
    """phi(q^k) = f(q^k, q^k)."""
    return theta_f(k, k, order)


def psi(order: int, k: int = 1) -> QSeries:
    """psi(q^k) = f(q^k, q^3k)."""
    return theta_f(k, 3 * k, order)


def at_minus(series_builder, order: int, k: int = 1) -> QSeries:
    """g(-q^k) for a builder g(order) -> g(q)."""
    return series_builder(order // k).twist().dilate(k, order)


def theta_form(f: Form, order: int) -> QSeries:
    """B(a,b,c,q) = sum over (x, y) of q^(ax^2 + bxy + cy^2), to order N."""
    a, b, c = f
    if a <= 0 or discriminant(f) >= 0:
        raise ValueError(f"{f} is not positive definite")
    d = -discriminant(f)
    coeffs = [0] * (order + 1)
    ymax = isqrt(4 * a * order // d)
    for y in range(-ymax, ymax + 1):
        disc = 4 * a * order - d * y * y
        if disc < 0:
            continue
        r = isqrt(disc)
        lo = (-b * y - r) // (2 * a) - 1
        hi = (-b * y + r) // (2 * a) + 1
        for x in range(lo, hi + 1):
            n = a * x * x + b * x * y + c * y * y
            if n <= order:
                coeffs[n] += 1
    return QSeries.from_ints(coeffs)


def linear_combination(terms: Iterable[tuple[object, QSeries]], field: NumberField) -> QSeries:
    acc = None
    for c, s in terms:
        t = s.promote(field).scale(c)
        acc = t if acc is None else acc + t
    if acc is None:
        raise ValueError("empty linear combination")
    return acc


# ---------------------------------------------------------------------------
# Identity suite


def jtp_product(u: int, v: int, order: int) -> QSeries:
    """(-a; ab)_inf (-b; ab)_inf (ab; ab)_inf at a = q^u, b = q^v, u, v > 0, as a finite product."""
    t = u + v
    acc = QSeries.one(order)
    for base in (u, v):
        e = base
        while e <= order:
            acc = acc * (QSeries.one(order) + QSeries.monomial(e, order))
            e += t
    return acc * euler_E(t, order)


def _E(s: int, r: int = 1):
    return (s, r)


def builder_identities_suite(order: int = 400) -> list[tuple[str, QSeries, QSeries]]:
    N = order
    eq = lambda j, *fs: eta_quotient(EtaQuotientSpec.combine(j, fs), N)  # noqa: E731
    out: list[tuple[str, QSeries, QSeries]] = []
    for u, v in ((1, 1), (1, 3), (1, 2), (1, 5), (2, 3), (5, 7)):
        out.append((f"jtp f(q^{u},q^{v})", theta_f(u, v, N), jtp_product(u, v, N)))
    out.append(("pent E(q)=f(-q,-q^2)", euler_E(1, N), theta_f(1, 2, N, negate=True)))
    out.append(("phi eta-quotient", phi(N), eq(0, _E(2, 5), _E(4, -2), _E(1, -2))))
    out.append(("psi eta-quotient", psi(N), eq(0, _E(2, 2), _E(1, -1))))
    out.append(("f12", theta_f(1, 2, N), eq(0, _E(3, 2), _E(2, 1), _E(6, -1), _E(1, -1))))
    out.append(("f15", theta_f(1, 5, N), eq(0, _E(12), _E(2, 2), _E(3), _E(6, -1), _E(4, -1), _E(1, -1))))
    out.append(("pentcor", euler_E(1, N), theta_f(5, 7, N) - theta_f(1, 11, N).shift(1, N)))
    out.append(("mod31", phi(N), phi(N, 9) + theta_f(3, 15, N).shift(1, N) * 2))
    out.append(("phieven", phi(N), phi(N, 4) + psi(N, 8).shift(1, N) * 2))
    out.append(("psipsiaux", psi(N).twist(), theta_f(6, 10, N) - theta_f(2, 14, N).shift(1, N)))
    out.append(("mod32", psi(N), theta_f(3, 6, N) + psi(N, 9).shift(1, N)))
    out.append(("E(-q)", euler_E(1, N).twist(), eq(0, _E(2, 3), _E(4, -1), _E(1, -1))))
    out.append(("phi(-q)", phi(N).twist(), eq(0, _E(1, 2), _E(2, -1))))
    out.append(("psi(-q)", psi(N).twist(), eq(0, _E(1), _E(4), _E(2, -1))))
    return out
