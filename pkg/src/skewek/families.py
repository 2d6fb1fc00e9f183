"""Stock families of stable ideals used for cross-checked invariants.

powers of the maximal ideal, the ideals generated by monomials whose
degree equals their largest variable index (Catalan-counted generators),
and seeded random stable closures.
"""

from __future__ import annotations

import random
from math import comb

from .errors import SkewekError
from .ideal import MonomialIdeal, ideal, stable_closure
from .monoid import max_index, monomials_of_degree


def power_of_maximal_ideal(n: int, d: int) -> MonomialIdeal:
    """All monomials of degree d in n variables."""
    if n < 1 or d < 1:
        raise SkewekError("need n >= 1 and d >= 1")
    return ideal(n, monomials_of_degree(n, d))


def power_betti(n: int, d: int, q: int) -> int:
    """Closed form for the Betti numbers of the d-th power ideal."""
    return comb(d + n - 1, d + q) * comb(d + q - 1, q)


def s_n_ideal(n: int) -> MonomialIdeal:
    """Generated by the monomials whose degree equals their top variable."""
    if n < 1:
        raise SkewekError("need n >= 1")
    raw = []
    for d in range(1, n + 1):
        for w in monomials_of_degree(n, d):
            if max_index(w) == d:
                raw.append(w)
    return ideal(n, raw)


def s_n_betti(n: int, q: int) -> int:
    """Closed form: Catalan-weighted sum of binomials over the top index."""
    return sum(comb(2 * m - 2, m - 1) // m * comb(m - 1, q) for m in range(1, n + 1))


def random_stable_ideal(n: int, seed: int, gen_count: int = 2, deg_cap: int = 4) -> MonomialIdeal:
    """Stable closure of gen_count random monomials of degree <= deg_cap.

    Deterministic for a fixed seed.  Closure moves preserve degree, so all
    minimal generators keep degree <= deg_cap.
    """
    if n < 1 or gen_count < 1 or deg_cap < 1:
        raise SkewekError("need n, gen_count, deg_cap all >= 1")
    rng = random.Random(seed)
    raw = []
    for _ in range(gen_count):
        exps = [0] * n
        for _ in range(rng.randint(1, deg_cap)):
            exps[rng.randrange(n)] += 1
        raw.append(tuple(exps))
    return stable_closure(n, raw)
