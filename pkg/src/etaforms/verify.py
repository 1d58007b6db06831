"""Verification harness: theta-difference theorems, Hecke tables, eigenform sweeps."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import gcd
from typing import Callable, Sequence

from .algnum import ALPHA, BETA, GAMMA, LAMBDA, MU, RATIONAL, ROOT2, SQRT2, SQRT5, COS7
from .bqf import (
    Form,
    class_pair,
    compose,
    discriminant,
    enumerate_class_group,
    inverse,
    is_discriminant,
    power,
    principal_form,
    reduced,
    reduced_forms,
)
from .formulas import (
    CLASS_PAIR,
    COMPLETIONS,
    CONDUCTOR,
    DISCRIMINANTS,
    INERT,
    RAMIFIED,
    classify_prime,
    completion_series,
    completion_tag,
    eigenvalue,
)
from .hecke import apply_Tp, eigen_check
from .ntheory import primes_up_to
from .qseries import (
    EtaQuotientSpec,
    QSeries,
    at_minus,
    builder_identities_suite,
    eta_quotient,
    linear_combination,
    phi,
    psi,
    theta_f,
    theta_form,
)


@dataclass(frozen=True)
class VerificationReport:
    name: str
    params: tuple
    order: int
    first_discrepancy: tuple | None = None
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.first_discrepancy is None

    @property
    def verdict(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def line(self) -> str:
        params = ",".join(str(p) for p in self.params)
        status = "PASS" if self.passed else f"FAIL@{self.first_discrepancy[0]}"
        out = f"{self.name} {params} {self.order} {status}"
        if self.detail:
            out += f" {self.detail}"
        return out


def compare(name: str, params: tuple, lhs: QSeries, rhs: QSeries, order: int | None = None, detail: str = "") -> VerificationReport:
    """Coefficientwise comparison; refuses to look past either series' known order."""
    n = lhs.first_difference(rhs, order)
    order = min(lhs.order, rhs.order) if order is None else order
    disc = None if n is None else (n, str(lhs[n]), str(rhs[n]))
    return VerificationReport(name, params, order, disc, detail)


def _first_failure(name: str, params: tuple, order: int, checks: Sequence[tuple[QSeries, QSeries]]) -> VerificationReport:
    for lhs, rhs in checks:
        rep = compare(name, params, lhs, rhs, order)
        if not rep.passed:
            return rep
    return VerificationReport(name, params, order)


def _B(a: int, b: int, c: int, order: int) -> QSeries:
    return theta_form(Form(a, b, c), order)


# ---------------------------------------------------------------------------
# Theta-difference theorems


def verify_thm1(m: int, s: int, order: int = 400) -> VerificationReport:
    """(B(6m,m,s) - B(6m,5m,s+m))/2 = q^s E(q^m) E(q^(24s-m))."""
    if m < 1 or s < 1 or 24 * s - m <= 0:
        raise ValueError("thm1 needs m, s >= 1 and 24s - m > 0")
    lhs = (_B(6 * m, m, s, order) - _B(6 * m, 5 * m, s + m, order)) / 2
    rhs = eta_quotient(EtaQuotientSpec.combine(s, [(m, 1), (24 * s - m, 1)]), order)
    return _first_failure("thm1", (m, s), order, [(lhs, rhs)])


def verify_thm2(m: int, s: int, order: int = 400) -> VerificationReport:
    """(B(8m,2m,s) - B(8m,6m,s+m))/2 = q^s psi(-q^(8s-m)) psi(-q^m)."""
    if m < 1 or s < 1 or 8 * s - m <= 0:
        raise ValueError("thm2 needs m, s >= 1 and 8s - m > 0")
    t = 8 * s - m
    lhs = (_B(8 * m, 2 * m, s, order) - _B(8 * m, 6 * m, s + m, order)) / 2
    rhs = (at_minus(psi, order, t) * at_minus(psi, order, m)).shift(s, order)
    # psi(-q) = E(q)E(q^4)/E(q^2)
    eta = eta_quotient(
        EtaQuotientSpec.combine(s, [(t, 1), (4 * t, 1), (2 * t, -1), (m, 1), (4 * m, 1), (2 * m, -1)]), order
    )
    return _first_failure("thm2", (m, s), order, [(lhs, rhs), (lhs, eta)])


def verify_thm3(m: int, k: int, order: int = 400) -> VerificationReport:
    """(B(m,0,4k) - B(4m,4m,k+m))/2 = q^m psi(q^(8m)) phi(-q^k)."""
    if m < 1 or k < 1:
        raise ValueError("thm3 needs m, k >= 1")
    lhs = (_B(m, 0, 4 * k, order) - _B(4 * m, 4 * m, k + m, order)) / 2
    rhs = (psi(order, 8 * m) * at_minus(phi, order, k)).shift(m, order)
    # psi(q) = E(q^2)^2/E(q), phi(-q) = E(q)^2/E(q^2)
    eta = eta_quotient(EtaQuotientSpec.combine(m, [(k, 2), (16 * m, 2), (2 * k, -1), (8 * m, -1)]), order)
    return _first_failure("thm3", (m, k), order, [(lhs, rhs), (lhs, eta)])


def verify_thm4(m: int, s: int, order: int = 400) -> VerificationReport:
    """(B(m,0,9s) - B(9m,6m,s+m))/2 against its eta-quotient product."""
    if m < 1 or s < 1:
        raise ValueError("thm4 needs m, s >= 1")
    lhs = (_B(m, 0, 9 * s, order) - _B(9 * m, 6 * m, s + m, order)) / 2
    factors = [
        (s, 1), (4 * s, 1), (6 * s, 2), (2 * s, -1), (3 * s, -1), (12 * s, -1),
        (6 * m, 2), (9 * m, 1), (36 * m, 1), (3 * m, -1), (12 * m, -1), (18 * m, -1),
    ]  # fmt: skip
    rhs = eta_quotient(EtaQuotientSpec.combine(m, factors), order)
    return _first_failure("thm4", (m, s), order, [(lhs, rhs)])


THEOREMS: dict[str, Callable[[int, int, int], VerificationReport]] = {
    "thm1": verify_thm1,
    "thm2": verify_thm2,
    "thm3": verify_thm3,
    "thm4": verify_thm4,
}


def theorem_grid(name: str) -> list[tuple[int, int]]:
    if name == "thm1":
        return [(m, s) for m in range(1, 13) for s in range(1, 13) if 24 * s - m > 0]
    if name == "thm2":
        return [(m, s) for m in range(1, 11) for s in range(1, 11) if 8 * s - m > 0]
    if name == "thm3":
        return [(m, k) for m in range(1, 11) for k in range(1, 11)]
    if name == "thm4":
        return [(m, s) for m in range(1, 9) for s in range(1, 9)]
    raise ValueError(f"unknown theorem {name!r}")


def residue_values(f: Form, modulus: int) -> frozenset[int]:
    """All values of f(x, y) mod M over (x, y) in (Z/M)^2."""
    import numpy as np

    a, b, c = f
    r = np.arange(modulus, dtype=np.int64)
    x = r[:, None]
    y = r[None, :]
    vals = ((a * x % modulus) * x + (b * x % modulus) * y + (c * y % modulus) * y) % modulus
    return frozenset(np.unique(vals).tolist())


def verify_thm1_residues(m: int, s: int) -> VerificationReport:
    """(6m,m,s) and (6m,5m,s+m) take the same values modulo 24sm."""
    modulus = 24 * s * m
    x = residue_values(Form(6 * m, m, s), modulus)
    y = residue_values(Form(6 * m, 5 * m, s + m), modulus)
    sym = sorted(x ^ y)
    disc = None if not sym else (sym[0], str(sym[0] in x), str(sym[0] in y))
    return VerificationReport("thm1-residues", (m, s), modulus, disc)


# ---------------------------------------------------------------------------
# Hecke action on class theta series

# Split-prime action: column (class representing p) -> row -> combination.
_Combo = tuple[tuple[int, Form], ...]


def _split_table(columns: Sequence[Form], rows: dict[Form, Sequence[_Combo]]) -> dict[Form, dict[Form, _Combo]]:
    return {col: {row: combos[i] for row, combos in rows.items()} for i, col in enumerate(columns)}


def _c(*terms) -> _Combo:
    return tuple((k, Form(*f)) for k, f in terms)


_F47 = [Form(1, 1, 12), Form(3, 1, 4), Form(2, 1, 6)]
_F71 = [Form(1, 1, 18), Form(2, 1, 9), Form(4, 3, 5), Form(3, 1, 6)]
_F135 = [Form(1, 1, 34), Form(4, 3, 9), Form(2, 1, 17), Form(5, 5, 8)]
_F648 = [Form(1, 0, 162), Form(9, 6, 19), Form(2, 0, 81), Form(11, 10, 17)]

HECKE_SPLIT_TABLES: dict[int, dict[Form, dict[Form, _Combo]]] = {
    -47: _split_table(
        _F47,
        {
            _F47[0]: [_c((2, _F47[0])), _c((2, _F47[1])), _c((2, _F47[2]))],
            _F47[1]: [_c((2, _F47[1])), _c((1, _F47[0]), (1, _F47[2])), _c((1, _F47[1]), (1, _F47[2]))],
            _F47[2]: [_c((2, _F47[2])), _c((1, _F47[1]), (1, _F47[2])), _c((1, _F47[0]), (1, _F47[1]))],
        },
    ),
    -71: _split_table(
        _F71,
        {
            _F71[0]: [_c((2, _F71[0])), _c((2, _F71[1])), _c((2, _F71[2])), _c((2, _F71[3]))],
            _F71[1]: [
                _c((2, _F71[1])),
                _c((1, _F71[0]), (1, _F71[2])),
                _c((1, _F71[1]), (1, _F71[3])),
                _c((1, _F71[3]), (1, _F71[2])),
            ],
            _F71[2]: [
                _c((2, _F71[2])),
                _c((1, _F71[1]), (1, _F71[3])),
                _c((1, _F71[0]), (1, _F71[3])),
                _c((1, _F71[1]), (1, _F71[2])),
            ],
            _F71[3]: [
                _c((2, _F71[3])),
                _c((1, _F71[3]), (1, _F71[2])),
                _c((1, _F71[1]), (1, _F71[2])),
                _c((1, _F71[0]), (1, _F71[1])),
            ],
        },
    ),
    -135: _split_table(
        _F135,
        {
            _F135[0]: [_c((2, _F135[0])), _c((2, _F135[1])), _c((2, _F135[2])), _c((2, _F135[3]))],
            _F135[1]: [
                _c((2, _F135[1])),
                _c((1, _F135[0]), (1, _F135[1])),
                _c((1, _F135[2]), (1, _F135[3])),
                _c((2, _F135[2])),
            ],
            _F135[2]: [
                _c((2, _F135[2])),
                _c((1, _F135[3]), (1, _F135[2])),
                _c((1, _F135[0]), (1, _F135[1])),
                _c((2, _F135[1])),
            ],
            _F135[3]: [_c((2, _F135[3])), _c((2, _F135[2])), _c((2, _F135[1])), _c((2, _F135[0]))],
        },
    ),
    -648: _split_table(
        _F648,
        {
            _F648[0]: [_c((2, _F648[0])), _c((2, _F648[1])), _c((2, _F648[2])), _c((2, _F648[3]))],
            _F648[1]: [
                _c((2, _F648[1])),
                _c((1, _F648[0]), (1, _F648[1])),
                _c((2, _F648[3])),
                _c((1, _F648[2]), (1, _F648[3])),
            ],
            _F648[2]: [_c((2, _F648[2])), _c((2, _F648[3])), _c((2, _F648[0])), _c((2, _F648[1]))],
            _F648[3]: [
                _c((2, _F648[3])),
                _c((1, _F648[3]), (1, _F648[2])),
                _c((2, _F648[1])),
                _c((1, _F648[0]), (1, _F648[1])),
            ],
        },
    ),
}

# Action at primes dividing d: (d, p) -> row -> (form, dilation), meaning B(form, q^dilation).
HECKE_BAD_TABLES: dict[tuple[int, int], dict[Form, tuple[Form, int]]] = {
    (-135, 3): {
        _F135[0]: (Form(1, 1, 4), 3),
        _F135[1]: (Form(1, 1, 4), 3),
        _F135[2]: (Form(2, 1, 2), 3),
        _F135[3]: (Form(2, 1, 2), 3),
    },
    (-135, 5): {
        _F135[0]: (_F135[3], 1),
        _F135[1]: (_F135[2], 1),
        _F135[2]: (_F135[1], 1),
        _F135[3]: (_F135[0], 1),
    },
    (-648, 2): {
        _F648[0]: (_F648[2], 1),
        _F648[1]: (_F648[3], 1),
        _F648[2]: (_F648[0], 1),
        _F648[3]: (_F648[1], 1),
    },
    (-648, 3): {
        _F648[0]: (Form(1, 0, 18), 3),
        _F648[1]: (Form(1, 0, 18), 3),
        _F648[2]: (Form(2, 0, 9), 3),
        _F648[3]: (Form(2, 0, 9), 3),
    },
}


def class_rows(d: int) -> list[Form]:
    """One representative (b >= 0) per class pair of discriminant d."""
    return [f for f in enumerate_class_group(d).classes if f.b >= 0]


def _combo_series(combo: _Combo, order: int) -> QSeries:
    return linear_combination([(k, theta_form(f, order)) for k, f in combo], RATIONAL)


def _dilated_theta(f: Form, k: int, order: int) -> QSeries:
    return theta_form(f, order // k).dilate(k, order)


def composition_prediction(d: int, p: int, row: Form) -> _Combo | None:
    """Predicted T_p B(row) from composition with the class representing p.

    Split p: B(F.P) + B(F.P^-1). Ramified p not dividing the conductor: B(F.P).
    Inert p: the zero series (empty combination). None for conductor primes.
    """
    cl = classify_prime(d, p)
    if cl.verdict == INERT:
        return ()
    if cl.verdict == CONDUCTOR:
        return None
    P = cl.form
    if cl.verdict == RAMIFIED:
        return _c((1, class_pair(compose(row, P))))
    a = class_pair(compose(row, P))
    b = class_pair(compose(row, inverse(P)))
    return _c((2, a)) if a == b else _c((1, a), (1, b))


def conductor_candidates(d: int, p: int) -> list[tuple[Form, int]]:
    """Forms of discriminant d/p^2 dilated by p, then forms of discriminant d (any content)."""
    out = []
    if d % (p * p) == 0 and is_discriminant(d // (p * p)):
        out += [(f, p) for f in reduced_forms(d // (p * p), primitive=False)]
    return out + [(f, 1) for f in reduced_forms(d, primitive=False)]


def _hecke_row(d: int, p: int, row: Form, order: int) -> list[VerificationReport]:
    image = apply_Tp(theta_form(row, order), d, p)
    m = image.order
    params = (d, p, f"({row.a},{row.b},{row.c})")
    reports = []
    cl = classify_prime(d, p)
    table = HECKE_SPLIT_TABLES.get(d)
    if cl.verdict == CLASS_PAIR and table is not None:
        want = _combo_series(table[cl.form][row], m)
        reports.append(compare("hecke-table", params, image, want))
    bad = HECKE_BAD_TABLES.get((d, p))
    if bad is not None:
        f, k = bad[row]
        reports.append(compare("hecke-table", params, image, _dilated_theta(f, k, m)))
    combo = composition_prediction(d, p, row)
    if combo is not None:
        want = _combo_series(combo, m) if combo else QSeries.zero(m)
        reports.append(compare("hecke-compose", params, image, want))
    else:
        # the image is a single theta series of discriminant d or d/p^2 (in q^p)
        found = next(
            (
                (f, k)
                for f, k in conductor_candidates(d, p)
                if image.first_difference(_dilated_theta(f, k, m)) is None
            ),
            None,
        )
        if found is None:
            reports.append(VerificationReport("hecke-conductor", params, m, (0, "no theta series match", "")))
        else:
            f, k = found
            reports.append(VerificationReport("hecke-conductor", params, m, None, f"B({f.a},{f.b},{f.c},q^{k})"))
    return reports


def verify_hecke_tables(d: int, prime_bound: int = 100, order: int = 2000) -> list[VerificationReport]:
    """T_p on every class theta series of d, p <= bound, against tables and composition."""
    out = []
    for p in primes_up_to(prime_bound):
        for row in class_rows(d):
            out.extend(_hecke_row(d, p, row, order))
    return out


# ---------------------------------------------------------------------------
# Completion eigenforms


def verify_completion_eigen(tag, prime_bound: int = 100, order: int = 2000) -> list[VerificationReport]:
    tag = completion_tag(tag)
    d = DISCRIMINANTS[int(tag.split("a")[0])]
    s = completion_series(tag, order)
    out = []
    for p in primes_up_to(prime_bound):
        want = eigenvalue(tag, p)
        got = eigen_check(s, d, p)
        params = (tag, p)
        m = order // p
        if got is not None and got == want:
            out.append(VerificationReport("eigen", params, m, None, f"lambda={got}"))
        else:
            image = apply_Tp(s, d, p)
            expected = s.truncate(m).scale(want)
            n = image.first_difference(expected)
            if n is None:  # eigenvalue matches but eigen_check disagrees: report the mismatch itself
                out.append(VerificationReport("eigen", params, m, (0, str(got), str(want))))
            else:
                out.append(VerificationReport("eigen", params, m, (n, str(image[n]), str(expected[n]))))
    return out


# ---------------------------------------------------------------------------
# Level 1872 negative control


def gordon_hughes_h(order: int, negate: bool = True) -> QSeries:
    """q[phi(-Q^39)f(Q^2,Q^4) + Q phi(-Q^3)f(Q^26,Q^52) - Q^5 psi(Q^6)f(Q^13,Q^65) - Q^10 psi(Q^78)f(Q,Q^5)], Q = q^12.

    With negate=False the phi arguments are taken at +Q and the psi terms are doubled.
    """
    M = order // 12
    ph = (lambda k: at_minus(phi, M, k)) if negate else (lambda k: phi(M, k))
    c = 1 if negate else 2
    inner = (
        ph(39) * theta_f(2, 4, M)
        + (ph(3) * theta_f(26, 52, M)).shift(1, M)
        - (psi(M, 6) * theta_f(13, 65, M)).shift(5, M).scale(c)
        - (psi(M, 78) * theta_f(1, 5, M)).shift(10, M).scale(c)
    )
    return inner.dilate(12, order).shift(1, order)


def gordon_hughes_candidate(order: int) -> QSeries:
    """h(q) + 2 q^7 E(q^12) E(q^156)."""
    return gordon_hughes_h(order) + eta_quotient(EtaQuotientSpec(7, ((12, 1), (156, 1))), order) * 2


GH_PRIMES = (7, 11, 17)


def verify_gordon_hughes(order: int = 2000) -> list[VerificationReport]:
    """The candidate is not an eigenform for T_7, T_11, T_17; the phi(+Q) variant is a theta combination."""
    if order < 2000:
        raise ValueError("order must be >= 2000 for a meaningful T_17 comparison")
    s = gordon_hughes_candidate(order)
    out = []
    for p in GH_PRIMES:
        ev = eigen_check(s, -1872, p)
        disc = None if ev is None else (0, "eigenform", str(ev))
        out.append(VerificationReport("gordon-hughes", ("not-eigen", p), order // p, disc))
    lhs = gordon_hughes_h(order, negate=False)
    rhs = (_B(1, 0, 468, order) + _B(13, 0, 36, order) - _B(4, 0, 117, order) - _B(9, 0, 52, order)) / 2
    out.append(compare("gordon-hughes", ("theta-form",), lhs, rhs))
    return out


# ---------------------------------------------------------------------------
# Multiplicativity


def multiplicativity_failure(s: QSeries, bound: int) -> tuple | None:
    """First (mn, [q^mn], [q^m][q^n]) with gcd(m, n) = 1, mn <= bound and [q^mn] != [q^m][q^n]."""
    if bound > s.order:
        raise ValueError(f"bound {bound} exceeds the known order {s.order}")
    coeffs = s.coefficients()
    if coeffs[1] != 1:
        return (1, str(coeffs[1]), "1")
    for k in range(2, bound + 1):
        for m in range(2, k):
            if m * m > k:
                break
            if k % m == 0 and gcd(m, k // m) == 1:
                prod = coeffs[m] * coeffs[k // m]
                if coeffs[k] != prod:
                    return (k, str(coeffs[k]), str(prod))
    return None


def table1_combination(d: int, pattern: str, generators: Sequence[Form], order: int) -> QSeries:
    """Multiplicative combination of class theta series for a cyclic or C4 x C4 class group."""

    def th(f: Form) -> QSeries:
        return theta_form(reduced(f), order)

    A = generators[0]
    I = principal_form(d)

    def Ak(k: int) -> Form:
        return power(A, k) if k else I

    if pattern == "C5a":
        terms, field = [(1, Ak(0)), (-MU, Ak(1)), (-LAMBDA, Ak(2))], SQRT5
    elif pattern == "C5b":
        terms, field = [(1, Ak(0)), (-LAMBDA, Ak(1)), (-MU, Ak(2))], SQRT5
    elif pattern in ("C7a", "C7b", "C7c"):
        x, y, z = {"C7a": (ALPHA, BETA, GAMMA), "C7b": (BETA, GAMMA, ALPHA), "C7c": (GAMMA, ALPHA, BETA)}[pattern]
        terms, field = [(1, Ak(0)), (x, Ak(1)), (y, Ak(2)), (z, Ak(3))], COS7
    elif pattern == "C6":
        terms, field = [(1, Ak(0)), (-1, Ak(2)), (1, Ak(1)), (-1, Ak(3))], RATIONAL
    elif pattern == "C8":
        terms, field = [(1, Ak(0)), (-1, Ak(4)), (ROOT2, Ak(1)), (-ROOT2, Ak(3))], SQRT2
    elif pattern == "C4xC4":
        B = generators[1]
        B2 = power(B, 2)
        terms = [
            (1, I), (1, Ak(2)), (-1, B2), (-1, compose(Ak(2), B2)), (2, A), (-2, compose(A, B2)),
        ]  # fmt: skip
        field = RATIONAL
    else:
        raise ValueError(f"unknown pattern {pattern!r}")
    for _, f in terms:
        if discriminant(f) != d:
            raise ValueError(f"{f} does not have discriminant {d}")
    return linear_combination([(c, th(f)) for c, f in terms], field) / 2


TABLE1_CASES: tuple[tuple[int, str, tuple[Form, ...]], ...] = (
    (-47, "C5a", (Form(2, 1, 6),)),
    (-47, "C5b", (Form(2, 1, 6),)),
    (-71, "C7a", (Form(2, 1, 9),)),
    (-71, "C7b", (Form(2, 1, 9),)),
    (-71, "C7c", (Form(2, 1, 9),)),
    (-135, "C6", (Form(2, 1, 17),)),
    (-648, "C6", (Form(11, 10, 17),)),
    (-1024, "C8", (Form(5, 4, 52),)),
    (-1872, "C4xC4", (Form(7, 2, 67), Form(11, 8, 44))),
)


def verify_table1_multiplicativity(order: int = 5000) -> list[VerificationReport]:
    """[q^mn] = [q^m][q^n] for coprime m, n with mn <= order, for every completion and combination."""
    out = []
    for tag in COMPLETIONS:
        s = completion_series(tag, order)
        out.append(VerificationReport("mult", (tag,), order, multiplicativity_failure(s, order)))
    for d, pattern, gens in TABLE1_CASES:
        s = table1_combination(d, pattern, gens, order)
        params = (d, pattern) + tuple(f"({g.a},{g.b},{g.c})" for g in gens)
        out.append(VerificationReport("mult-table1", params, order, multiplicativity_failure(s, order)))
    return out


# ---------------------------------------------------------------------------
# Builder identities


def verify_builder_identities(order: int = 400) -> list[VerificationReport]:
    return [compare("identity", (name,), lhs, rhs, order) for name, lhs, rhs in builder_identities_suite(order)]


# ---------------------------------------------------------------------------
# Suite runners

SUITES = ("thm1", "thm2", "thm3", "thm4", "hecke", "eigen", "gordon-hughes", "mult", "identities")

DEFAULT_ORDERS = {
    "thm1": 400,
    "thm2": 400,
    "thm3": 400,
    "thm4": 400,
    "hecke": 2000,
    "eigen": 2000,
    "gordon-hughes": 2000,
    "mult": 5000,
    "identities": 400,
}


def _run_task(task: tuple) -> list[VerificationReport]:
    fn, args = task
    result = fn(*args)
    return result if isinstance(result, list) else [result]


def suite_tasks(suite: str, order: int | None = None, prime_bound: int = 100) -> list[tuple]:
    if suite not in DEFAULT_ORDERS:
        raise ValueError(f"unknown suite {suite!r}; expected one of {', '.join(SUITES + ('all',))}")
    order = DEFAULT_ORDERS[suite] if order is None else order
    if suite in THEOREMS:
        return [(THEOREMS[suite], (x, y, order)) for x, y in theorem_grid(suite)]
    if suite == "hecke":
        return [(verify_hecke_tables, (d, prime_bound, order)) for d in DISCRIMINANTS.values()]
    if suite == "eigen":
        return [(verify_completion_eigen, (tag, prime_bound, order)) for tag in COMPLETIONS]
    if suite == "gordon-hughes":
        return [(verify_gordon_hughes, (order,))]
    if suite == "mult":
        return [(verify_table1_multiplicativity, (order,))]
    if suite == "identities":
        return [(verify_builder_identities, (order,))]
    raise AssertionError(f"suite {suite!r} has no task builder")


def run_suite(suite: str, order: int | None = None, jobs: int = 1, prime_bound: int = 100) -> list[VerificationReport]:
    """Run one suite (or "all"); reports come back in a deterministic order."""
    names = SUITES if suite == "all" else (suite,)
    tasks = [t for name in names for t in suite_tasks(name, order, prime_bound)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_run_task, tasks))
    else:
        chunks = [_run_task(t) for t in tasks]
    return [r for chunk in chunks for r in chunk]
