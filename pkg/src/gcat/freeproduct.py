"""Detecting free products from the G-invariant alone.

A pinchpoint of the lattice of cyclic flats is an interior element comparable
with every cyclic flat; pinchpoints are in bijection with the sharp free
product factorizations M = (M|X) # (M/X).  Free extensions and coextensions
are invisible to the invariant by design, so only proper factorizations
(both parts with at least two cyclic flats) are reported.
"""

from __future__ import annotations

from dataclasses import dataclass

from .configuration import Configuration
from .errors import ExactnessError
from .ginvariant import GInvariant, catenary_from_g
from .matroid import Matroid, elements_of
from .parameters import flat_count, flat_count_coloops, g_split_at_unique_flat


@dataclass(frozen=True)
class FactorizationReport:
    """Outcome of free-product detection on an invariant.

    Each factor records the rank and size of a verified pinchpoint together
    with the invariants of the two constituents of the sharp factorization.
    """

    is_proper: bool
    factors: tuple  # of (rank, size, GInvariant, GInvariant)


def pinchpoints(c: Configuration) -> list[int]:
    """Interior nodes comparable to every node of the configuration."""
    bot, top = c.bottom, c.top
    return [x for x in range(c.m)
            if x not in (bot, top)
            and all(c.comparable(x, y) for y in range(c.m))]


def _cyclic_census(g: GInvariant) -> dict[tuple[int, int], int]:
    """Count of cyclic flats by (rank, size), from the invariant."""
    c = catenary_from_g(g)
    out: dict[tuple[int, int], int] = {}
    for k in range(c.r + 1):
        for s in range(k, c.n + 1):
            v = flat_count_coloops(c, k, s, 0)
            if v:
                out[(k, s)] = v
    return out


def detect_free_product(g: GInvariant) -> FactorizationReport:
    """Decide whether the invariant belongs to a proper free product.

    Candidate ranks carry exactly one cyclic flat; a candidate is a
    pinchpoint when it is the unique flat of its rank and size and the
    cyclic flats of the two split parts exhaust the cyclic flats of M below
    and above the candidate's rank.
    """
    c = catenary_from_g(g)
    census = _cyclic_census(g)
    factors = []
    for k in range(1, c.r):
        at_rank = [(kk, s) for (kk, s) in census if kk == k]
        if sum(census[key] for key in at_rank) != 1:
            continue
        if not any(kk > k for (kk, _) in census):
            # the candidate is the maximum of the cyclic-flat lattice (the
            # matroid has coloops); a pinchpoint must be interior
            continue
        s0 = at_rank[0][1]
        if flat_count(c, k, s0) != 1:
            continue
        left, right = g_split_at_unique_flat(g, k, s0)
        below = sum(v for (kk, _), v in census.items() if kk <= k)
        above = sum(v for (kk, _), v in census.items() if kk >= k)
        if sum(_cyclic_census(left).values()) != below:
            continue
        if sum(_cyclic_census(right).values()) != above:
            continue
        factors.append((k, s0, left, right))
    return FactorizationReport(bool(factors), tuple(factors))


def factor_at_pinchpoint(m: Matroid, x: int) -> tuple[Matroid, Matroid]:
    """Split an explicit matroid at a pinchpoint of its cyclic-flat lattice.

    Returns (M|X, M/X) and checks that their free product reproduces M's
    basis collection under the natural relabeling.
    """
    zf = m.cyclic_flats()
    masks = [f for f, _ in zf]
    if x not in masks:
        raise ValueError("target set is not a cyclic flat")
    bottom = min(masks, key=lambda f: f.bit_count())
    top = max(masks, key=lambda f: f.bit_count())
    if x in (bottom, top):
        raise ValueError("pinchpoints are interior to the cyclic-flat lattice")
    for f in masks:
        if not (f & ~x == 0 or x & ~f == 0):
            raise ValueError("target cyclic flat is not a pinchpoint")
    rest = m.restrict(x)
    contr = m.contract(x)
    # reproduce M: product elements are sorted(X) then sorted(E - X)
    relabel = elements_of(x) + elements_of(m.full & ~x)
    prod = rest.free_product(contr)
    mapped = frozenset(
        sum(1 << relabel[i] for i in elements_of(b)) for b in prod.bases)
    if mapped != m.bases:
        raise ExactnessError("free product of the parts does not rebuild the matroid")
    return rest, contr
