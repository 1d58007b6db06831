"""Positive definite binary quadratic forms (a, b, c) = ax^2 + bxy + cy^2.

Reduction, Dirichlet composition, class groups, genus characters and
brute-force representation counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt
from typing import NamedTuple, Sequence

from .ntheory import factorize, kronecker, primes_up_to


class Form(NamedTuple):
    a: int
    b: int
    c: int

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def is_positive_definite(self) -> bool:
        return self.a > 0 and self.discriminant < 0

    def is_primitive(self) -> bool:
        return gcd(gcd(self.a, self.b), self.c) == 1

    def opposite(self) -> Form:
        return Form(self.a, -self.b, self.c)

    def __call__(self, x: int, y: int) -> int:
        return self.a * x * x + self.b * x * y + self.c * y * y

    def __str__(self) -> str:
        return f"({self.a},{self.b},{self.c})"

    @classmethod
    def parse(cls, text: str) -> Form:
        parts = [int(t) for t in text.strip("() ").split(",")]
        if len(parts) != 3:
            raise ValueError(f"expected a,b,c but got {text!r}")
        return cls(*parts)


Matrix = tuple[tuple[int, int], tuple[int, int]]
IDENTITY: Matrix = ((1, 0), (0, 1))


def discriminant(f: Form) -> int:
    return f.b * f.b - 4 * f.a * f.c


def is_discriminant(d: int) -> bool:
    return d % 4 in (0, 1)


def transform(f: Form, m: Matrix) -> Form:
    """The form (x, y) -> f(alpha x + beta y, gamma x + delta y)."""
    (al, be), (ga, de) = m
    a, b, c = f
    return Form(
        a * al * al + b * al * ga + c * ga * ga,
        2 * a * al * be + b * (al * de + be * ga) + 2 * c * ga * de,
        a * be * be + b * be * de + c * de * de,
    )


def _matmul(m: Matrix, n: Matrix) -> Matrix:
    (a, b), (c, d) = m
    (e, f), (g, h) = n
    return ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))


def is_reduced(f: Form) -> bool:
    a, b, c = f
    if not (abs(b) <= a <= c):
        return False
    if (abs(b) == a or a == c) and b < 0:
        return False
    return True


def reduce(f: Form) -> tuple[Form, Matrix]:
    """Gauss reduction; returns (reduced form, M in SL2(Z)) with f o M reduced."""
    if not f.is_positive_definite():
        raise ValueError(f"{f} is not positive definite")
    m = IDENTITY
    a, b, c = f
    while True:
        # translate b into (-a, a]
        k = (a - b) // (2 * a)
        if k:
            t = ((1, k), (0, 1))
            a, b, c = transform(Form(a, b, c), t)
            m = _matmul(m, t)
        if a > c:
            s = ((0, -1), (1, 0))
            a, b, c = c, -b, a
            m = _matmul(m, s)
            continue
        break
    if a == c and b < 0:
        s = ((0, -1), (1, 0))
        a, b, c = c, -b, a
        m = _matmul(m, s)
    return Form(a, b, c), m


def reduced(f: Form) -> Form:
    return reduce(f)[0]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def compose(f: Form, g: Form) -> Form:
    """Dirichlet composition of two primitive forms of equal discriminant, reduced."""
    if discriminant(f) != discriminant(g):
        raise ValueError(f"discriminant mismatch: {f} has {discriminant(f)}, {g} has {discriminant(g)}")
    if not (f.is_primitive() and g.is_primitive()):
        raise ValueError("composition needs primitive forms")
    a1, b1, c1 = f
    a2, b2, c2 = g
    if a1 > a2:
        a1, b1, c1, a2, b2, c2 = a2, b2, c2, a1, b1, c1
    s = (b1 + b2) // 2
    n = b2 - s
    if a2 % a1 == 0:
        y1, d = 0, a1
    else:
        d, u, _ = _xgcd(a2, a1)
        y1 = u
    if s % d == 0:
        y2, x2, d1 = -1, 0, d
    else:
        d1, x2, y2 = _xgcd(s, d)
        y2 = -y2
    v1, v2 = a1 // d1, a2 // d1
    r = (y1 * y2 * n - x2 * c2) % v1
    b3 = b2 + 2 * v2 * r
    a3 = v1 * v2
    c3 = (b3 * b3 - discriminant(f)) // (4 * a3)
    return reduced(Form(a3, b3, c3))


def inverse(f: Form) -> Form:
    return reduced(f.opposite())


def principal_form(d: int) -> Form:
    if d % 4 == 0:
        return Form(1, 0, -d // 4)
    return Form(1, 1, (1 - d) // 4)


def power(f: Form, k: int) -> Form:
    d = discriminant(f)
    result = principal_form(d)
    base = reduced(f) if k >= 0 else inverse(f)
    for _ in range(abs(k)):
        result = compose(result, base)
    return result


# ---------------------------------------------------------------------------
# Representation counts


def representations(f: Form, n: int) -> list[tuple[int, int]]:
    """All (x, y) with f(x, y) == n."""
    if n < 0:
        return []
    if n == 0:
        return [(0, 0)]
    a, b, c = f
    d = -discriminant(f)
    out = []
    ymax = isqrt(4 * a * n // d) + 1
    for y in range(-ymax, ymax + 1):
        disc = 4 * a * n - d * y * y
        if disc < 0:
            continue
        r = isqrt(disc)
        if r * r != disc:
            continue
        for num in {-b * y + r, -b * y - r}:
            if num % (2 * a) == 0:
                out.append((num // (2 * a), y))
    return sorted(out)


def rep_count(f: Form, n: int) -> int:
    """#{(x, y) in Z^2 : f(x, y) = n}."""
    return len(representations(f, n))


def rep_count_box(f: Form, n: int) -> int:
    """Naive box enumeration; independent check of rep_count.

    f(x, y) = n forces y^2 <= 4an/|d| and x^2 <= 4cn/|d|.
    """
    d = -discriminant(f)
    rx = isqrt(4 * f.c * n // d) + 1
    ry = isqrt(4 * f.a * n // d) + 1
    return sum(1 for x in range(-rx, rx + 1) for y in range(-ry, ry + 1) if f(x, y) == n)


def w(d: int) -> int:
    return {-3: 6, -4: 4}.get(d, 2)


def conductor(d: int) -> int:
    """Largest f with d/f^2 still a discriminant."""
    best = 1
    for f in range(1, isqrt(abs(d)) + 1):
        if d % (f * f) == 0 and is_discriminant(d // (f * f)):
            best = f
    return best


# ---------------------------------------------------------------------------
# Class groups


def reduced_forms(d: int, primitive: bool = True) -> list[Form]:
    """Reduced forms of discriminant d, sorted by (a, |b|, -b)."""
    if d >= 0 or not is_discriminant(d):
        raise ValueError(f"{d} is not a negative discriminant")
    out = []
    amax = isqrt(-d // 3)
    for a in range(1, amax + 1):
        for b in range(-a + 1, a + 1):
            if (b - d) % 2:
                continue
            num = b * b - d
            if num % (4 * a):
                continue
            c = num // (4 * a)
            f = Form(a, b, c)
            if not is_reduced(f):
                continue
            if primitive and not f.is_primitive():
                continue
            out.append(f)
    return sorted(out, key=lambda f: (f.a, abs(f.b), -f.b, f.c))


@dataclass(frozen=True)
class ClassGroup:
    discriminant: int
    classes: tuple[Form, ...]
    structure: tuple[int, ...]
    generators: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.classes)

    def index(self, f: Form) -> int:
        return self.classes.index(reduced(f))

    def element_order(self, f: Form) -> int:
        return _element_order(reduced(f))

    def structure_name(self) -> str:
        return " x ".join(f"C{n}" for n in self.structure) if self.structure else "C1"


def _element_order(f: Form) -> int:
    e = principal_form(discriminant(f))
    g = f
    k = 1
    while g != e:
        g = compose(g, f)
        k += 1
    return k


def _subgroup(gens: Sequence[Form], d: int) -> set[Form]:
    e = principal_form(d)
    seen = {e}
    frontier = [e]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = compose(x, g)
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return seen


def _invariant_factors(classes: Sequence[Form], d: int) -> list[int]:
    """Invariant factors n1 | n2 | ... from p-torsion subgroup sizes."""
    h = len(classes)
    if h == 1:
        return []
    orders = {f: _element_order(f) for f in classes}
    # per prime: partition of exponents
    parts: dict[int, list[int]] = {}
    for p, e in factorize(h):
        sizes = []
        k = 0
        while True:
            k += 1
            cnt = sum(1 for o in orders.values() if (p**k) % o == 0)
            sizes.append(cnt)
            if cnt == p**e:
                break
        logs = [0] + [_ilog(s, p) for s in sizes]
        # number of cyclic p-factors of exponent >= k
        ge = [logs[k] - logs[k - 1] for k in range(1, len(logs))]
        exps = []
        for k in range(len(ge)):
            nxt = ge[k + 1] if k + 1 < len(ge) else 0
            exps += [k + 1] * (ge[k] - nxt)
        parts[p] = sorted(exps, reverse=True)
    r = max(len(v) for v in parts.values())
    factors = []
    for i in range(r):
        n = 1
        for p, exps in parts.items():
            if i < len(exps):
                n *= p ** exps[i]
        factors.append(n)
    return sorted(factors, reverse=True)


def _ilog(n: int, p: int) -> int:
    k = 0
    while n > 1:
        n //= p
        k += 1
    return k


@lru_cache(maxsize=None)
def enumerate_class_group(d: int) -> ClassGroup:
    classes = tuple(reduced_forms(d))
    structure = _invariant_factors(classes, d)
    # greedy generators: largest order first, each enlarging the subgroup correctly
    gens: list[int] = []
    chosen: list[Form] = []
    target = 1
    for n in structure:
        target *= n
        for i, f in enumerate(classes):
            if _element_order(f) != n:
                continue
            if len(_subgroup(chosen + [f], d)) == target:
                gens.append(i)
                chosen.append(f)
                break
    return ClassGroup(d, classes, tuple(structure), tuple(gens))


# ---------------------------------------------------------------------------
# Genus characters
#
# A character is a pair (top, bottom) of Kronecker symbol arguments where
# the string "p" stands for the represented prime: ("p", 5) is (p/5) and
# (-2, "p") is (-2/p).

Character = tuple[object, object]

GENUS_CHARACTERS: dict[int, tuple[Character, ...]] = {
    -47: ((-47, "p"),),
    -71: ((-71, "p"),),
    -135: (("p", 5), ("p", 3)),
    -648: (("p", 3), (-2, "p")),
    -1024: ((-1, "p"), (2, "p")),
    -1872: (("p", 3), ("p", 13), (-1, "p")),
}


def eval_character(ch: Character, p: int) -> int:
    top, bottom = ch
    top = p if top == "p" else top
    bottom = p if bottom == "p" else bottom
    return kronecker(top, bottom)


def represented_primes(f: Form, bound: int = 10**5, coprime_to: int = 1):
    for p in primes_up_to(bound):
        if coprime_to % p and rep_count(f, p) > 0:
            yield p


def genus_characters(f: Form, characters: Sequence[Character] | None = None, bound: int = 10**5) -> tuple[int, ...]:
    """Character values at the smallest prime p coprime to 2d represented by f."""
    d = discriminant(f)
    if characters is None:
        characters = GENUS_CHARACTERS[d]
    for p in represented_primes(f, bound, coprime_to=2 * d):
        return tuple(eval_character(ch, p) for ch in characters)
    raise RuntimeError(f"no prime <= {bound} represented by {f}")


def genera(d: int) -> dict[tuple[int, ...], list[Form]]:
    """Classes of discriminant d grouped by genus character vector."""
    return {k: list(v) for k, v in _genera(d).items()}


@lru_cache(maxsize=None)
def _genera(d: int) -> dict[tuple[int, ...], tuple[Form, ...]]:
    out: dict[tuple[int, ...], list[Form]] = {}
    for f in enumerate_class_group(d).classes:
        out.setdefault(genus_characters(f), []).append(f)
    return {k: tuple(v) for k, v in out.items()}


def class_pair(f: Form) -> Form:
    """Representative with b >= 0 of the pair {f, f^-1}, which share a theta series."""
    g = reduced(f)
    h = reduced(g.opposite())
    return g if g.b >= 0 else h


def find_representing_class(d: int, n: int) -> tuple[Form, tuple[int, int]] | None:
    """First reduced class (b >= 0 representative) representing n, with a witness."""
    for f in enumerate_class_group(d).classes:
        if f.b < 0:
            continue
        reps = representations(f, n)
        if reps:
            return f, reps[-1]
    return None
