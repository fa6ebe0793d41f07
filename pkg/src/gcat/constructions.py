"""Construction algebra on G-invariants and catenary data.

Every operation here works purely on invariant vectors, never touching a
matroid; the test suite validates each one against matroid-level composition.
Symbol-basis rewrites accumulate coefficients; gamma-basis (catenary) forms
are used where they are simpler, with cross-checks where both exist.
"""

from __future__ import annotations

import itertools
import math

from .errors import ExactnessError
from .ginvariant import (CatenaryData, GInvariant, catenary_from_g,
                         g_from_catenary, g_invariant)
from .matroid import Matroid


def _accumulate(pairs) -> dict:
    acc: dict = {}
    for key, c in pairs:
        acc[key] = acc.get(key, 0) + c
    return acc


# -- dual, truncation, lift ---------------------------------------------------

def g_dual(g: GInvariant) -> GInvariant:
    """Reverse each symbol and switch 0s and 1s; coefficients unchanged."""
    swap = str.maketrans("01", "10")
    coeffs = {key[::-1].translate(swap): c for key, c in g.coeffs.items()}
    return GInvariant(g.n, g.n - g.r, coeffs)


def g_truncate(g: GInvariant) -> GInvariant:
    """Turn the rightmost 1 of each symbol into a 0.

    The per-symbol rewrite is exact because truncating caps every prefix
    rank at r-1, which flips exactly the step where the rank reached r.
    Merging the last two parts of each composition in the gamma basis is NOT
    equivalent: merged coordinates count flags of the original matroid, and
    overcount each flag of the truncation once per interpolating copoint
    (e.g. it would give 18 instead of 6 for the truncated rank-3 wheel).
    """
    if g.r < 1:
        raise ValueError("cannot truncate at rank 0")
    coeffs = _accumulate((key[:i] + "0" + key[i + 1:], c)
                         for key, c in g.coeffs.items()
                         for i in (key.rindex("1"),))
    return GInvariant(g.n, g.r - 1, coeffs)


def cat_truncate(c: CatenaryData) -> CatenaryData:
    """Catenary data of the truncation, through the symbol-basis rewrite."""
    return catenary_from_g(g_truncate(g_from_catenary(c)))


def g_lift(g: GInvariant) -> GInvariant:
    """Turn the leftmost 0 of each symbol into a 1."""
    if g.r >= g.n:
        raise ValueError("cannot lift a matroid with no circuits")
    coeffs = _accumulate((key[:i] + "1" + key[i + 1:], c)
                         for key, c in g.coeffs.items()
                         for i in (key.index("0"),))
    return GInvariant(g.n, g.r + 1, coeffs)


# -- direct sums ---------------------------------------------------------------

def _shuffles(a: tuple, b: tuple):
    """All interleavings of two tuples, with the position sets of a."""
    m, n = len(a), len(b)
    for pos in itertools.combinations(range(m + n), m):
        out = [None] * (m + n)
        ai = iter(a)
        for p in pos:
            out[p] = next(ai)
        bi = iter(b)
        for i in range(m + n):
            if out[i] is None:
                out[i] = next(bi)
        yield tuple(out)


def g_shuffle(g1: GInvariant, g2: GInvariant) -> GInvariant:
    """Shuffle product: the G-invariant of the direct sum."""
    coeffs = _accumulate(
        ("".join(s), c1 * c2)
        for k1, c1 in g1.coeffs.items()
        for k2, c2 in g2.coeffs.items()
        for s in _shuffles(tuple(k1), tuple(k2)))
    return GInvariant(g1.n + g2.n, g1.r + g2.r, coeffs)


def cat_direct_sum(c1: CatenaryData, c2: CatenaryData) -> CatenaryData:
    """Catenary data of a direct sum: shuffle the positive parts, add loops."""
    counts = _accumulate(
        ((a[0] + b[0],) + s, x * y)
        for a, x in c1.counts.items()
        for b, y in c2.counts.items()
        for s in _shuffles(a[1:], b[1:]))
    return CatenaryData(c1.n + c2.n, c1.r + c2.r, counts)


# -- single-element and loop adjustments ----------------------------------------

def _insertions(key: str, ch: str):
    for i in range(len(key) + 1):
        yield key[:i] + ch + key[i:]


def g_add_coloop(g: GInvariant) -> GInvariant:
    """Insert a 1 in every position of every symbol."""
    coeffs = _accumulate((s, c) for key, c in g.coeffs.items()
                         for s in _insertions(key, "1"))
    return GInvariant(g.n + 1, g.r + 1, coeffs)


def g_add_loop(g: GInvariant) -> GInvariant:
    """Insert a 0 in every position of every symbol."""
    coeffs = _accumulate((s, c) for key, c in g.coeffs.items()
                         for s in _insertions(key, "0"))
    return GInvariant(g.n + 1, g.r, coeffs)


def cat_strip_loops(c: CatenaryData, h: int) -> CatenaryData:
    """Drop h loops: rewrite the leading part h of every key to 0."""
    counts = {}
    for comp, cnt in c.counts.items():
        if comp[0] != h:
            raise ValueError(f"key {comp} does not start with {h} loops")
        counts[(0,) + comp[1:]] = cnt
    return CatenaryData(c.n - h, c.r, counts)


def cat_add_loops(c: CatenaryData, h: int) -> CatenaryData:
    """Inverse of cat_strip_loops: direct sum with h loops, loopless input."""
    counts = {}
    for comp, cnt in c.counts.items():
        if comp[0] != 0:
            raise ValueError(f"key {comp} is not loopless")
        counts[(h,) + comp[1:]] = cnt
    return CatenaryData(c.n + h, c.r, counts)


# -- free extension and coextension ----------------------------------------------

def _demote(key: str) -> str:
    i = key.rindex("1")
    return key[:i] + "0" + key[i + 1:]


def _promote(key: str) -> str:
    i = key.index("0")
    return key[:i] + "1" + key[i + 1:]


def g_free_extension(g: GInvariant) -> GInvariant:
    """Insert a 1 everywhere, then demote the rightmost 1 of each result."""
    coeffs = _accumulate((_demote(s), c) for key, c in g.coeffs.items()
                         for s in _insertions(key, "1"))
    return GInvariant(g.n + 1, g.r, coeffs)


def g_free_coextension(g: GInvariant) -> GInvariant:
    """Insert a 0 everywhere, then promote the leftmost 0 of each result."""
    coeffs = _accumulate((_promote(s), c) for key, c in g.coeffs.items()
                         for s in _insertions(key, "0"))
    return GInvariant(g.n + 1, g.r + 1, coeffs)


# -- free product -----------------------------------------------------------------

def free_product_rank_sequence(key1: str, key2: str, positions) -> str:
    """Rank sequence of a shuffle of two rank sequences in the free product.

    `positions` says which slots of the merged order carry key1's elements.
    The rank after each step is min(r1_total + r2 of the part seen from the
    second factor, r1 of the part seen from the first factor + its size).
    """
    n1, n2 = len(key1), len(key2)
    pos = frozenset(positions)
    w1 = [0]
    for ch in key1:
        w1.append(w1[-1] + (ch == "1"))
    w2 = [0]
    for ch in key2:
        w2.append(w2[-1] + (ch == "1"))
    r1_total = w1[-1]
    out = []
    prev = x1 = 0
    for j in range(1, n1 + n2 + 1):
        if j - 1 in pos:
            x1 += 1
        x2 = j - x1
        cur = min(r1_total + w2[x2], w1[x1] + x2)
        out.append("1" if cur > prev else "0")
        prev = cur
    return "".join(out)


def g_free_product(g1: GInvariant, g2: GInvariant) -> GInvariant:
    """G-invariant of the free product, replayed over all position sets.

    Iterates over symbol pairs times binomial(n1+n2, n1) position sets;
    intended for n1 + n2 up to about 14.
    """
    n1, n2 = g1.n, g2.n
    coeffs: dict[str, int] = {}
    position_sets = list(itertools.combinations(range(n1 + n2), n1))
    for k1, c1 in g1.coeffs.items():
        for k2, c2 in g2.coeffs.items():
            c = c1 * c2
            for pos in position_sets:
                key = free_product_rank_sequence(k1, k2, pos)
                coeffs[key] = coeffs.get(key, 0) + c
    return GInvariant(n1 + n2, g1.r + g2.r, coeffs)


# -- q-cone ------------------------------------------------------------------------

def cat_qcone(c: CatenaryData, q: int) -> CatenaryData:
    """Catenary data of a q-cone of a simple matroid with catenary data c.

    Each flag, for each jump position j, contributes q^(j-1) flags whose
    composition keeps the first j parts, inserts (sum of those parts)(q-1)+1,
    and scales the remaining parts by q.  Simplicity of the input is checked
    on the keys (no loops, singleton points); the transform itself is formal
    in q, so representability over a field with q elements is the caller's
    obligation.
    """
    if q < 2:
        raise ValueError("q-cone needs q >= 2")
    r = c.r
    counts: dict[tuple, int] = {}
    for comp, cnt in c.counts.items():
        if comp[0] != 0 or (r >= 1 and comp[1] != 1):
            raise ValueError(f"q-cone input must be simple; key {comp}")
        prefix_sum = 0
        for j in range(1, r + 2):
            prefix = comp[:j]
            prefix_sum = sum(prefix)
            new = prefix + (prefix_sum * (q - 1) + 1,) \
                + tuple(a * q for a in comp[j:])
            counts[new] = counts.get(new, 0) + cnt * q ** (j - 1)
    return CatenaryData(q * c.n + 1, r + 1, counts)


# -- circuit-hyperplane relaxation ----------------------------------------------------

def g_relax(g: GInvariant) -> GInvariant:
    """Relax one circuit-hyperplane at the invariant level.

    Adds r!(n-r)! to the top symbol 1^r 0^(n-r) and subtracts the same from
    1^(r-1) 0 1 0^(n-r-1); a negative result means the input had no
    circuit-hyperplane to relax.  For rank >= 2 the same update is applied
    in the gamma basis and the two answers are checked against each other.
    """
    n, r = g.n, g.r
    if r < 1 or n < r + 1:
        raise ExactnessError("no circuit-hyperplane can exist at this shape")
    delta = math.factorial(r) * math.factorial(n - r)
    top = "1" * r + "0" * (n - r)
    swapped = "1" * (r - 1) + "01" + "0" * (n - r - 1)
    coeffs = dict(g.coeffs)
    coeffs[top] = coeffs.get(top, 0) + delta
    coeffs[swapped] = coeffs.get(swapped, 0) - delta
    if coeffs[swapped] < 0:
        raise ExactnessError(
            f"coefficient of [{swapped}] would become negative: "
            "input has no circuit-hyperplane")
    out = GInvariant(n, r, coeffs)
    if r >= 2:
        c = catenary_from_g(g)
        counts = dict(c.counts)
        kmax = (0,) + (1,) * (r - 1) + (n - r + 1,)
        kswp = (0,) + (1,) * (r - 2) + (2, n - r)
        counts[kmax] = counts.get(kmax, 0) + math.factorial(r)
        counts[kswp] = counts.get(kswp, 0) - math.factorial(r) // 2
        if counts[kswp] < 0:
            raise ExactnessError(
                f"flag count at {kswp} would become negative: "
                "input has no circuit-hyperplane")
        via_gamma = g_from_catenary(CatenaryData(n, r, counts))
        if via_gamma != out:
            raise ExactnessError("relaxation disagrees between symbol and gamma bases")
    return out


# -- deletion/contraction identity check ----------------------------------------------

def _concat(g: GInvariant, suffix: str) -> dict:
    return {key + suffix: c for key, c in g.coeffs.items()}


def _concat_left(prefix: str, g: GInvariant) -> dict:
    return {prefix + key: c for key, c in g.coeffs.items()}


def dc_sum_check(m: Matroid) -> bool | str:
    """Verify the all-deletions and all-contractions concatenation identities.

    The G-invariant equals the sum over elements of G(M minus a) with a 0
    (or 1, for a coloop) appended, and the sum of G(M / a) with a 1 (or 0,
    for a loop) prepended.  Returns True, or the name of the failing side.
    """
    if m.n < 1:
        raise ValueError("identities need at least one element")
    g = g_invariant(m)
    del_acc: dict[str, int] = {}
    con_acc: dict[str, int] = {}
    for e in range(m.n):
        bit = 1 << e
        gdel = g_invariant(m.delete(bit))
        part = _concat(gdel, "1" if m.is_coloop(e) else "0")
        for key, c in part.items():
            del_acc[key] = del_acc.get(key, 0) + c
        gcon = g_invariant(m.contract(bit))
        part = _concat_left("0" if m.is_loop(e) else "1", gcon)
        for key, c in part.items():
            con_acc[key] = con_acc.get(key, 0) + c
    if GInvariant(m.n, m.r, del_acc) != g:
        return "deletion"
    if GInvariant(m.n, m.r, con_acc) != g:
        return "contraction"
    return True
