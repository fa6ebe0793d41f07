"""Matroid parameters extracted from catenary data alone.

Chain counts F_{h,k}, flat counts f_k(s), coloop-refined counts f_k(s,c),
circuit/cocircuit/cyclic-set counts, spanning-circuit detection, and the
G-invariants of the restriction to and contraction by a unique flat.  All
divisions are exact-integer checked; a failure names the violated identity
and signals a non-matroid input.
"""

from __future__ import annotations

import itertools
import math

from .constructions import g_dual
from .errors import ExactnessError
from .ginvariant import (CatenaryData, GInvariant, catenary_from_g,
                         g_from_catenary, gamma_one)


def _validate_sizes(c: CatenaryData, h: int, k: int, sizes) -> tuple[int, ...]:
    sizes = tuple(int(s) for s in sizes)
    if not 0 <= h <= k <= c.r:
        raise ValueError(f"need 0 <= h <= k <= r, got h={h}, k={k}, r={c.r}")
    if len(sizes) != k - h + 1:
        raise ValueError(f"expected {k - h + 1} sizes for ranks {h}..{k}")
    if sizes[0] < 0 or any(x >= y for x, y in zip(sizes, sizes[1:])):
        raise ValueError(f"sizes must strictly increase: {sizes}")
    if sizes[-1] > c.n:
        raise ValueError(f"size {sizes[-1]} exceeds n={c.n}")
    return sizes


def chain_count(c: CatenaryData, h: int, k: int, sizes) -> int:
    """Number of chains of flats with ranks h..k and the given sizes.

    Specializing every symbol to 1 collapses the restriction/contraction
    factors to s_h! and (n-s_k)!, leaving a sum over catenary keys whose
    middle parts match the size increments, weighted by the all-ones gamma
    values of the head and tail.
    """
    sizes = _validate_sizes(c, h, k, sizes)
    n = c.n
    s_h, s_k = sizes[0], sizes[-1]
    incr = tuple(sizes[i + 1] - sizes[i] for i in range(len(sizes) - 1))
    total = 0
    for comp, cnt in c.counts.items():
        if comp[h + 1:k + 1] != incr:
            continue
        head = comp[:h + 1]
        if sum(head) != s_h:
            continue
        tail = (0,) + comp[k + 1:]
        total += gamma_one(head) * gamma_one(tail) * cnt
    denom = math.factorial(s_h) * math.factorial(n - s_k)
    if total % denom:
        raise ExactnessError(
            f"chain count F_{{{h},{k}}}{sizes} = {total}/{denom} is not integral")
    return total // denom


def flat_count(c: CatenaryData, k: int, s: int) -> int:
    """Number of rank-k flats of size s."""
    return chain_count(c, k, k, (s,))


def flat_count_coloops(c: CatenaryData, k: int, s: int, coloops: int) -> int:
    """Number of rank-k, size-s flats whose restriction has exactly the
    given number of coloops.

    Solves the triangular system sum_{j>=c} f_k(s,j) j!/(j-c)! =
    F_{k-c,k}(s-c, ..., s) downward from c = k; coloops = 0 counts the
    cyclic flats of that rank and size.
    """
    if not 0 <= coloops <= k <= c.r:
        raise ValueError(f"need 0 <= coloops <= k <= r, got {coloops}, {k}, {c.r}")
    f = {}
    for cc in range(k, -1, -1):
        if s - cc < 0 or k - cc > s - cc:
            rhs = 0
        else:
            rhs = chain_count(c, k - cc, k, tuple(range(s - cc, s + 1)))
        acc = rhs - sum(f[j] * _perm(j, cc) for j in range(cc + 1, k + 1))
        denom = math.factorial(cc)
        if acc % denom:
            raise ExactnessError(
                f"coloop census f_{k}({s},{cc}) = {acc}/{denom} is not integral")
        val = acc // denom
        if val < 0:
            raise ExactnessError(f"coloop census f_{k}({s},{cc}) = {val} is negative")
        f[cc] = val
    return f[coloops]


def _perm(j: int, c: int) -> int:
    return math.factorial(j) // math.factorial(j - c)


def cyclic_flat_count(c: CatenaryData, k: int, s: int) -> int:
    """Number of cyclic flats of rank k and size s: f_k(s, 0)."""
    return flat_count_coloops(c, k, s, 0)


def family_counts(g: GInvariant, kind: str, size: int,
                  rank: int | None = None) -> int:
    """Count cocircuits, circuits, or cyclic sets of a given size.

    Cocircuits are complements of copoints; circuits are cocircuits of the
    dual; a cyclic set's complement is a flat of the dual.  For cyclic sets
    a rank may be given, otherwise all ranks are summed.
    """
    n, r = g.n, g.r
    if kind == "cocircuit":
        if not 1 <= size <= n or r == 0:
            return 0
        return flat_count(catenary_from_g(g), r - 1, n - size)
    if kind == "circuit":
        return family_counts(g_dual(g), "cocircuit", size)
    if kind == "cyclic_set":
        cdual = catenary_from_g(g_dual(g))
        ranks = range(r + 1) if rank is None else (rank,)
        total = 0
        for j in ranks:
            kdual = n - size - r + j
            if 0 <= kdual <= n - r:
                total += flat_count(cdual, kdual, n - size)
        return total
    raise ValueError(f"unknown family {kind!r}")


def has_spanning_circuit(g: GInvariant) -> bool:
    """True when some circuit has size r+1; for a graphic invariant this is
    Hamiltonicity of the (connected) graph."""
    return family_counts(g, "circuit", g.r + 1) > 0


def _admissible_interior(c: CatenaryData, h: int, k: int, s_h: int, s_k: int):
    """Candidate strictly increasing interior size sequences for F_{h,k}."""
    if h == k:
        if s_h == s_k:
            yield (s_h,)
        return
    gaps = k - h - 1
    if gaps == 0:
        yield (s_h, s_k)
        return
    for interior in itertools.combinations(range(s_h + 1, s_k), gaps):
        yield (s_h,) + interior + (s_k,)


def _best_chain_sizes(c: CatenaryData, h: int, k: int, s_h: int, s_k: int):
    """Size sequence with the largest chain count (deterministic tie-break)."""
    best = None
    for sizes in _admissible_interior(c, h, k, s_h, s_k):
        cnt = chain_count(c, h, k, sizes)
        if cnt > 0 and (best is None or cnt > best[0]):
            best = (cnt, sizes)
    if best is None:
        raise ExactnessError(
            f"no chain of flats joins ranks {h} and {k} at sizes {s_h}, {s_k}")
    return best


def g_split_at_unique_flat(g: GInvariant, k: int, s: int
                           ) -> tuple[GInvariant, GInvariant]:
    """G-invariants of the restriction to and contraction by the unique
    rank-k, size-s flat.

    Each catenary coordinate of the minor is a catenary coordinate of the
    whole matroid with the complementary parts pinned to a fixed size
    sequence, divided by the number of chains realizing that sequence.
    """
    c = catenary_from_g(g)
    n, r = c.n, c.r
    if not 0 <= k <= r:
        raise ValueError(f"flat rank {k} out of range 0..{r}")
    if flat_count(c, k, s) != 1:
        raise ExactnessError(
            f"f_{k}({s}) = {flat_count(c, k, s)}; the flat is not unique")
    loops = c.loops() if c.counts else 0

    # restriction: pin a maximal-count size sequence from (k, s) up to (r, n)
    cnt_up, sizes_up = _best_chain_sizes(c, k, r, s, n)
    incr_up = tuple(sizes_up[i + 1] - sizes_up[i] for i in range(len(sizes_up) - 1))
    rest: dict[tuple, int] = {}
    for comp, cnt in c.counts.items():
        if comp[k + 1:] != incr_up or sum(comp[:k + 1]) != s:
            continue
        if cnt % cnt_up:
            raise ExactnessError(
                f"restriction coordinate {comp[:k + 1]} = {cnt}/{cnt_up} "
                "is not integral")
        rest[comp[:k + 1]] = cnt // cnt_up
    g_rest = g_from_catenary(CatenaryData(s, k, rest))

    # contraction: pin a sequence from (0, loops) up to (k, s)
    cnt_dn, sizes_dn = _best_chain_sizes(c, 0, k, loops, s)
    incr_dn = tuple(sizes_dn[i + 1] - sizes_dn[i] for i in range(len(sizes_dn) - 1))
    contr: dict[tuple, int] = {}
    for comp, cnt in c.counts.items():
        if comp[1:k + 1] != incr_dn or comp[0] != loops:
            continue
        if cnt % cnt_dn:
            raise ExactnessError(
                f"contraction coordinate {comp[k + 1:]} = {cnt}/{cnt_dn} "
                "is not integral")
        contr[(0,) + comp[k + 1:]] = cnt // cnt_dn
    g_contr = g_from_catenary(CatenaryData(n - s, r - k, contr))
    return g_rest, g_contr
