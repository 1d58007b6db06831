"""Elementary number theory: symbols, valuations, factorization, modular
square roots and polynomial arithmetic over prime fields.

Polynomials mod p are held in :class:`ModPoly` with coefficients listed
lowest degree first, i.e. ``[c0, c1, ..., cn]`` stands for
``c0 + c1*z + ... + cn*z^n`` with ``cn != 0`` (the zero polynomial is ``[]``).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt
from typing import NamedTuple


class PrimePower(NamedTuple):
    prime: int
    exponent: int


# Deterministic for n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_up_to(n: int) -> list[int]:
    """All primes p <= n (sieve of Eratosthenes)."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
    return [i for i, v in enumerate(sieve) if v]


def ord_p(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("ord_p(0) is undefined")
    n = abs(n)
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


@lru_cache(maxsize=65536)
def _factorize(n: int) -> tuple[PrimePower, ...]:
    out = []
    for p in (2, 3):
        if n % p == 0:
            k = ord_p(n, p)
            n //= p**k
            out.append(PrimePower(p, k))
    f = 5
    step = 2
    while f * f <= n:
        if n % f == 0:
            k = ord_p(n, f)
            n //= f**k
            out.append(PrimePower(f, k))
        f += step
        step = 6 - step
    if n > 1:
        out.append(PrimePower(n, 1))
    return tuple(out)


def factorize(n: int) -> list[PrimePower]:
    """Prime factorization by trial division; ``factorize(1) == []``."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    return list(_factorize(n))


def legendre(n: int, p: int) -> int:
    """Legendre symbol via Euler's criterion, p an odd prime."""
    r = pow(n % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def kronecker(n: int, m: int) -> int:
    """Kronecker symbol (n/m) for m >= 1, multiplicative over the primes of m."""
    if m < 1:
        raise ValueError("kronecker symbol needs m >= 1")
    result = 1
    for p, k in factorize(m):
        if p == 2:
            if n % 2 == 0:
                return 0
            chi = 1 if n % 8 in (1, 7) else -1
        else:
            chi = legendre(n, p)
            if chi == 0:
                return 0
        if k % 2:
            result *= chi
    return result


def sqrt_mod(a: int, p: int) -> int | None:
    """Square root of a modulo an odd prime p (Tonelli-Shanks).

    Returns the smaller of the two roots, 0 if p | a, and None for a
    non-residue.
    """
    a %= p
    if a == 0:
        return 0
    if legendre(a, p) != 1:
        return None
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while legendre(z, p) != -1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return min(r, p - r)


# ---------------------------------------------------------------------------
# Polynomials over GF(p)


def _trim(coeffs: list[int]) -> list[int]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


@dataclass(frozen=True)
class ModPoly:
    modulus: int
    coeffs: tuple[int, ...]

    def __init__(self, modulus: int, coeffs) -> None:
        c = _trim([x % modulus for x in coeffs])
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_int_poly(cls, p: int, coeffs) -> ModPoly:
        return cls(p, coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __add__(self, other: ModPoly) -> ModPoly:
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return ModPoly(
            self.modulus,
            [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)],
        )

    def __neg__(self) -> ModPoly:
        return ModPoly(self.modulus, [-c for c in self.coeffs])

    def __sub__(self, other: ModPoly) -> ModPoly:
        return self + (-other)

    def __mul__(self, other: ModPoly | int) -> ModPoly:
        if isinstance(other, int):
            return ModPoly(self.modulus, [c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ModPoly(self.modulus, [])
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return ModPoly(self.modulus, out)

    __rmul__ = __mul__

    def __divmod__(self, other: ModPoly) -> tuple[ModPoly, ModPoly]:
        p = self.modulus
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        r = list(self.coeffs)
        d = other.coeffs
        inv = pow(d[-1], -1, p)
        q = [0] * max(len(r) - len(d) + 1, 0)
        for k in range(len(r) - len(d), -1, -1):
            c = r[k + len(d) - 1] * inv % p
            q[k] = c
            if c:
                for j, y in enumerate(d):
                    r[k + j] = (r[k + j] - c * y) % p
        return ModPoly(p, q), ModPoly(p, r)

    def __mod__(self, other: ModPoly) -> ModPoly:
        return divmod(self, other)[1]

    def __floordiv__(self, other: ModPoly) -> ModPoly:
        return divmod(self, other)[0]

    def monic(self) -> ModPoly:
        if self.is_zero():
            return self
        inv = pow(self.coeffs[-1], -1, self.modulus)
        return self * inv

    def derivative(self) -> ModPoly:
        return ModPoly(self.modulus, [i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.modulus
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            if mono and c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}{'*' if mono else ''}{mono}")
        return " + ".join(terms) + f" (mod {self.modulus})"


def poly_gcd(a: ModPoly, b: ModPoly) -> ModPoly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_powmod(base: ModPoly, e: int, mod: ModPoly) -> ModPoly:
    """base^e reduced modulo ``mod`` by square-and-multiply."""
    result = ModPoly(mod.modulus, [1]) % mod
    base = base % mod
    while e:
        if e & 1:
            result = (result * base) % mod
        base = (base * base) % mod
        e >>= 1
    return result


def poly_rem_frobenius(w: ModPoly) -> ModPoly:
    """rem(z^p, W(z)) over GF(p) for monic W."""
    if w.degree < 1 or not w.is_monic():
        raise ValueError("W must be monic of degree >= 1")
    z = ModPoly(w.modulus, [0, 1])
    return poly_powmod(z, w.modulus, w)


def is_squarefree(w: ModPoly) -> bool:
    return poly_gcd(w, w.derivative()).degree == 0


def factor_degree_pattern(w: ModPoly) -> list[int]:
    """Sorted degrees of the irreducible factors of a squarefree W over GF(p).

    Distinct-degree factorization: the factors of degree i are exactly
    those dividing z^(p^i) - z once smaller degrees are removed.
    """
    if w.degree < 1:
        raise ValueError("W must have positive degree")
    w = w.monic()
    if not is_squarefree(w):
        raise ValueError(f"polynomial is not squarefree mod {w.modulus}")
    p = w.modulus
    z = ModPoly(p, [0, 1])
    degrees: list[int] = []
    f = w
    h = z
    i = 0
    while f.degree >= 2 * (i + 1):
        i += 1
        h = poly_powmod(h, p, f)
        g = poly_gcd(f, h - z)
        if g.degree > 0:
            degrees += [i] * (g.degree // i)
            f = f // g
            h = h % f
    if f.degree > 0:
        degrees.append(f.degree)
    return sorted(degrees)
