"""Hecke operators T_p acting on q-series of a fixed discriminant."""

from __future__ import annotations

from dataclasses import dataclass

from .algnum import FieldElement
from .ntheory import is_prime, kronecker
from .qseries import QSeries


@dataclass(frozen=True)
class HeckeContext:
    discriminant: int
    prime: int
    input_order: int

    def __post_init__(self) -> None:
        if not is_prime(self.prime):
            raise ValueError(f"{self.prime} is not prime")
        if self.input_order < self.prime:
            raise ValueError(f"order {self.input_order} is too small for T_{self.prime}")

    @property
    def output_order(self) -> int:
        return self.input_order // self.prime

    @property
    def chi(self) -> int:
        return kronecker(self.discriminant, self.prime)


def apply_Tp(s: QSeries, d: int, p: int) -> QSeries:
    """[q^n] T_p(s) = h(pn) + (d/p) h(n/p), known up to n = N // p."""
    ctx = HeckeContext(d, p, s.order)
    chi = ctx.chi
    m = ctx.output_order
    planes = []
    for h in s.planes:
        out = [h[p * n] for n in range(m + 1)]
        if chi:
            for n in range(0, m + 1, p):
                out[n] += chi * h[n // p]
        planes.append(out)
    return QSeries(s.field, m, planes)


def eigen_check(s: QSeries, d: int, p: int) -> FieldElement | None:
    """Eigenvalue of s under T_p, or None if s is not an eigenform to the known order.

    The candidate is solved from the first index where s is nonzero and then
    checked at every index up to N // p.
    """
    image = apply_Tp(s, d, p)
    m = image.order
    first = next((n for n in range(m + 1) if any(pl[n] for pl in s.planes)), None)
    if first is None:
        raise ValueError(f"series vanishes up to q^{m}; no eigenvalue can be read off")
    ev = image[first] / s[first]
    if image != s.truncate(m).scale(ev):
        return None
    return ev


def coeff_recursion(h_p, chi: int, k: int):
    """h(p^k) from h(p^(j+1)) = h(p) h(p^j) - chi h(p^(j-1)) with h(1) = 1."""
    if k < 0:
        raise ValueError("exponent must be >= 0")
    prev, cur = 0, 1
    for _ in range(k):
        prev, cur = cur, h_p * cur - chi * prev
    return cur


def coeff_sequence(h_p, chi: int, k: int) -> list:
    return [coeff_recursion(h_p, chi, j) for j in range(k + 1)]


def first_nonzero(s: QSeries, upto: int | None = None) -> int | None:
    upto = s.order if upto is None else upto
    for n in range(upto + 1):
        if any(pl[n] for pl in s.planes):
            return n
    return None

