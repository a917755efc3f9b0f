"""Case split for ``x^6 + a4 x^4 + a3 x^3 + a2 x^2 + a1 x`` with ``p = -1 mod 6``.

:func:`classify` returns the case label (i)..(xi) whose polynomial
conditions hold, and :func:`closed_form` the five slopes of ``L(f, T)``
attached to that case.  Some conditions change for p = 11, 17, 23; those
variants are encoded as stated for each prime.
"""

from fractions import Fraction

from .errors import HypothesisFailed, RegimeError
from .poly import LaurentPoly

CASES = ("i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x", "xi")


def _inv(p):
    def run(expr):
        return expr % p
    return run


def invariants(a4, a3, a2, a1, p):
    m = _inv(p)
    return {
        "A": m(3 * a3**2 + a4**3 - 3 * a2 * a4),
        "B": m(7 * a3 * a4**3 + 12 * a3**3 - 12 * a1 * a4**2),
        "B11": m(-4 * a1**2 * a4**4 + 2 * a3**2 * a4**6 - a3**4 * a4**3 - 4 * a3**6
                 + a1 * a3 * a4**5 - 3 * a1 * a3**3 * a4**2),
        "C": m(48384 * a3**8 + 225 * a4**12 + 5600 * a4**9 * a3**2
               + 41888 * a4**6 * a3**4 + 80640 * a4**3 * a3**6),
        "C11": m(5 + 5 * a3**4 * a4**4 + 2 * a3**6 * a4 - 2 * a3**8 * a4**8 - 2 * a4**5
                 + 5 * a3**2 * a4**2 - 2 * a3**4 * a4**9 - 2 * a3**6 * a4**6 + 2 * a3**8 * a4**3),
        "C17": m(-4 * a3**8 + 8 * a4**5 * a3**4 + 7 * a3**5 * a4**4 - 2 * a3**7 * a4**2),
        "C23": m(-10 * a3**8 + 11 * a4**12 + 8 * a3**2 * a4**9 - 11 * a3**4 * a4**6
                 - 9 * a3**6 * a4**3),
        "D": m(a2**2 + 2 * a1 * a3),
        "E": m(9 * a2**3 - 10 * a3**4),
    }


def hypothesis(coeffs, p):
    """``p = -1 mod 6`` and ``p >= 6 + sum of exponents with nonzero coefficient``."""
    a4, a3, a2, a1 = (c % p for c in coeffs)
    need = 6 + sum(i for i, c in zip((4, 3, 2, 1), (a4, a3, a2, a1)) if c)
    return p % 6 == 5 and p >= need


def classify(coeffs, p):
    """Case label for ``coeffs = (a4, a3, a2, a1)``, or None if no case applies."""
    if not hypothesis(coeffs, p):
        raise HypothesisFailed(f"p = {p} outside the hypothesis for {coeffs}")
    a4, a3, a2, a1 = (c % p for c in coeffs)
    I = invariants(a4, a3, a2, a1, p)
    if a4:
        if a3 == 0 and a1 == 0 and (3 * a2 - a4 * a4) % p == 0:
            return "v"
        if I["A"]:
            return "i"
        if p == 11:
            if I["B11"]:
                return "ii"
            return "iii" if I["C11"] else None
        if I["B"]:
            return "ii"
        Ckey = {17: "C17", 23: "C23"}.get(p, "C")
        return "iii" if I[Ckey] else "iv"
    if a3:
        if a1 == 0 and a2 == 0:
            return "xi"
        if I["D"]:
            return "vi"
        if I["E"] == 0:
            return "ix"
        return "viii" if a1 and a2 else None
    if a2:
        return "vii"
    if a1:
        return "x"
    return None


def closed_form(case, p):
    """The five slopes (sorted) of ``L(f, T)`` for the given case."""
    P = p - 1
    w = {
        "i": (Fraction(p + 1, 6 * P), Fraction(p + 1, 3 * P)),
        "ii": (Fraction(p + 1, 6 * P), Fraction(p + 4, 3 * P)),
        "iii": (Fraction(p + 1, 6 * P), Fraction(1, 2) if p == 11 else Fraction(p + 7, 3 * P)),
        "iv": (Fraction(p + 1, 6 * P), Fraction(1, 2) if p == 17 else Fraction(p + 10, 3 * P)),
        "v": (Fraction(p + 1, 6 * P), Fraction(1, 2)),
        "vi": (Fraction(p + 7, 6 * P), Fraction(p - 2, 3 * P)),
        "vii": (Fraction(p + 7, 6 * P), Fraction(p + 1, 3 * P)),
        "viii": (Fraction(p + 13, 6 * P), Fraction(p - 5, 3 * P)),
        "ix": (Fraction(p + 19, 6 * P), Fraction(p - 8, 3 * P)),
        "x": (Fraction(p + 19, 6 * P), Fraction(p + 4, 3 * P)),
        "xi": (Fraction(p + 1, 4 * P), Fraction(p + 1, 4 * P)),
    }
    if case not in w:
        raise RegimeError(f"unknown case {case!r}")
    w1, w2 = w[case]
    half = Fraction(1, 2)
    return sorted([w1, w2, half, 1 - w2, 1 - w1])


def sextic(coeffs, p):
    a4, a3, a2, a1 = coeffs
    return LaurentPoly.univariate(p, {6: 1, 4: a4, 3: a3, 2: a2, 1: a1})


def find_instance(case, primes=(11, 17, 23, 29)):
    """First ``(p, coeffs)`` in a small search that falls in ``case``."""
    for p in primes:
        for a4 in range(p):
            for a3 in range(p):
                for a2 in range(p):
                    for a1 in range(p):
                        c = (a4, a3, a2, a1)
                        if hypothesis(c, p) and classify(c, p) == case:
                            return p, c
    return None
