"""Reassembling a G-invariant from decks of minors.

A deck is an unlabeled multiset of invariants of minors: restrictions to
copoints, contractions by circuits, or (restriction, contraction) pairs over
the rank-k flats.  The circle product concatenates gamma-basis coordinates,
the slicing identity sums it over a rank level, and the copoint recursion
rebuilds the catenary data once the ground-set size has been recovered from
the deck by exact rational search.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .constructions import g_dual
from .errors import ExactnessError
from .ginvariant import (CatenaryData, GInvariant, catenary_from_g,
                         g_from_catenary, g_invariant)
from .matroid import Matroid


@dataclass(frozen=True)
class Deck:
    """Multiset of deck entries with a role tag.

    Entries are (invariant, multiplicity) pairs for the copoint, circuit,
    and h-sums roles, and ((restriction, contraction), multiplicity) pairs
    for the rank-k role.
    """

    role: str
    entries: tuple

    ROLES = ("copoint", "circuit", "rank-k", "h-sums", "rank-g-contractions")

    def __post_init__(self):
        if self.role not in self.ROLES:
            raise ValueError(f"unknown deck role {self.role!r}")
        object.__setattr__(self, "entries", tuple(
            (item, int(mult)) for item, mult in self.entries))
        for item, mult in self.entries:
            if mult < 1:
                raise ValueError("multiplicities must be positive")


def circle_product(c1: CatenaryData, c2: CatenaryData) -> CatenaryData:
    """Concatenate gamma coordinates: keys of c2 must be loopless."""
    counts: dict[tuple, int] = {}
    for a, x in c1.counts.items():
        for b, y in c2.counts.items():
            if b[0] != 0:
                raise ValueError(f"second factor has a loopy key {b}")
            key = a + b[1:]
            counts[key] = counts.get(key, 0) + x * y
    return CatenaryData(c1.n + c2.n, c1.r + c2.r, counts)


def slice_assemble(deck: Deck, k: int) -> GInvariant:
    """Reassemble the invariant from the rank-k deck of (M|X, M/X) pairs."""
    if deck.role != "rank-k":
        raise ValueError("slicing needs a rank-k deck of pairs")
    total: dict[tuple, int] = {}
    shape = None
    for (g_rest, g_contr), mult in deck.entries:
        if g_rest.r != k:
            raise ValueError(
                f"deck entry has restriction rank {g_rest.r}, expected {k}")
        prod = circle_product(catenary_from_g(g_rest), catenary_from_g(g_contr))
        if shape is None:
            shape = (prod.n, prod.r)
        elif shape != (prod.n, prod.r):
            raise ValueError("deck entries have inconsistent shapes")
        for comp, v in prod.counts.items():
            total[comp] = total.get(comp, 0) + mult * v
    if shape is None:
        raise ValueError("empty deck")
    return g_from_catenary(CatenaryData(shape[0], shape[1], total))


def _copoint_catenaries(deck: Deck) -> list[tuple[CatenaryData, int, int]]:
    """Entry catenaries with multiplicities and implied copoint counts.

    A size-grouped entry sums the invariants of several same-size copoints;
    its coefficient total is that copoint count times s!, which recovers the
    count exactly.
    """
    cats = []
    for g, mult in deck.entries:
        c = catenary_from_g(g)
        total = g.total()
        fact = math.factorial(g.n)
        if total == 0 or total % fact:
            raise ExactnessError(
                f"entry coefficient total {total} is not a positive multiple "
                f"of {g.n}!: not a sum of invariants")
        cats.append((c, mult, total // fact))
    if not cats:
        raise ValueError("empty deck")
    ranks = {c.r for c, _, _ in cats}
    if len(ranks) != 1:
        raise ExactnessError(f"deck entries have mixed ranks {sorted(ranks)}")
    return cats


def recover_n(deck: Deck) -> int:
    """Ground-set size from a copoint deck, by monotone exact search.

    Summing, over deck entries and their flag compositions, the product of
    a_{j+1}/(n - s_j) over the entry's ranks gives a strictly decreasing
    function of n that equals 1 exactly at the true ground-set size.
    """
    cats = _copoint_catenaries(deck)
    entry_rank = cats[0][0].r
    if entry_rank < 1:
        raise ExactnessError(
            "rank-0 deck entries leave the ground-set size undetermined")

    def value(n: int) -> Fraction:
        total = Fraction(0)
        for c, mult, _ in cats:
            for comp, cnt in c.counts.items():
                term = Fraction(mult * cnt)
                s = comp[0]
                for j in range(entry_rank):
                    term *= Fraction(comp[j + 1], n - s)
                    s += comp[j + 1]
                total += term
        return total

    low = max(c.n for c, _, _ in cats)
    cap = sum(c.n * mult * count for c, mult, count in cats) + entry_rank + 1
    prev = None
    for n in range(low + 1, cap + 1):
        cur = value(n)
        if prev is not None and cur >= prev:
            raise ExactnessError("deck equation is not strictly decreasing in n")
        prev = cur
        if cur == 1:
            return n
        if cur < 1:
            break
    raise ExactnessError(
        "no ground-set size satisfies the copoint-deck equation: not a copoint deck")


def reconstruct_from_copoint_deck(deck: Deck) -> GInvariant:
    """Rebuild the invariant from the unlabeled copoint restrictions.

    Works equally from individual entries or size-grouped sums: only the
    per-size totals enter, via the copoint recursion
    nu(a_0, ..., a_{r-1}, a_r) = sum over entries of size n - a_r of the
    entry's nu(a_0, ..., a_{r-1}).
    """
    if deck.role not in {"copoint", "h-sums"}:
        raise ValueError("copoint reconstruction needs a copoint or h-sums deck")
    cats = _copoint_catenaries(deck)
    n = recover_n(deck)
    r = cats[0][0].r + 1
    loopsets = {c.loops() for c, _, _ in cats}
    if len(loopsets) != 1:
        raise ExactnessError(
            f"inconsistent loop counts across deck entries: {sorted(loopsets)}")
    counts: dict[tuple, int] = {}
    for c, mult, _ in cats:
        a_r = n - c.n
        if a_r < 1:
            raise ExactnessError(f"deck entry of size {c.n} cannot be a copoint")
        for comp, cnt in c.counts.items():
            key = comp + (a_r,)
            counts[key] = counts.get(key, 0) + mult * cnt
    return g_from_catenary(CatenaryData(n, r, counts))


def circuit_deck_reconstruct(deck: Deck) -> GInvariant:
    """Rebuild the invariant from the contractions by all circuits.

    Contracting a circuit of M restricts the dual to a copoint, so
    dualizing the deck reduces to copoint reconstruction.
    """
    if deck.role != "circuit":
        raise ValueError("circuit reconstruction needs a circuit deck")
    dual_deck = Deck("copoint", tuple(
        (g_dual(g), mult) for g, mult in deck.entries))
    return g_dual(reconstruct_from_copoint_deck(dual_deck))


def girth_deck_reconstruct(deck: Deck, g: int, n: int) -> GInvariant:
    """Rebuild the invariant of a matroid with girth at least g+2 from the
    contractions by its rank-g flats (all of which are g-element independent
    flats, restricting to free matroids).
    """
    total: dict[tuple, int] = {}
    shape = None
    for entry, mult in deck.entries:
        c = catenary_from_g(entry)
        if shape is None:
            shape = (c.n, c.r)
        elif shape != (c.n, c.r):
            raise ValueError("deck entries have inconsistent shapes")
        for comp, v in c.counts.items():
            total[comp] = total.get(comp, 0) + mult * v
    if shape is None:
        raise ValueError("empty deck")
    if shape[0] + g != n:
        raise ValueError(
            f"entries of size {shape[0]} with g={g} do not fit n={n}")
    prefix = CatenaryData(g, g, {(0,) + (1,) * g: math.factorial(g)})
    assembled = circle_product(prefix, CatenaryData(shape[0], shape[1], total))
    return g_from_catenary(assembled)


# -- deck extraction from explicit matroids -------------------------------------

def _group(invariants) -> tuple:
    seen: dict = {}
    order: list = []
    for g in invariants:
        if g in seen:
            seen[g] += 1
        else:
            seen[g] = 1
            order.append(g)
    return tuple((g, seen[g]) for g in order)


def copoint_deck(m: Matroid) -> Deck:
    """Deck of G-invariants of the restrictions to copoints."""
    return Deck("copoint", _group(
        g_invariant(m.restrict(x)) for x in m.copoints()))


def size_grouped_copoint_deck(m: Matroid) -> Deck:
    """The copoint deck with same-size entries summed (the h-sums form)."""
    by_size: dict[int, dict[str, int]] = {}
    shapes: dict[int, tuple[int, int]] = {}
    for x in m.copoints():
        g = g_invariant(m.restrict(x))
        acc = by_size.setdefault(g.n, {})
        for key, c in g.coeffs.items():
            acc[key] = acc.get(key, 0) + c
        shapes[g.n] = (g.n, g.r)
    entries = tuple((GInvariant(*shapes[s], by_size[s]), 1)
                    for s in sorted(by_size))
    return Deck("h-sums", entries)


def circuit_deck(m: Matroid) -> Deck:
    """Deck of G-invariants of the contractions by circuits."""
    return Deck("circuit", _group(
        g_invariant(m.contract(x)) for x in m.circuits()))


def rank_deck(m: Matroid, k: int) -> Deck:
    """Deck of (restriction, contraction) invariant pairs over rank-k flats."""
    return Deck("rank-k", _group(
        (g_invariant(m.restrict(x)), g_invariant(m.contract(x)))
        for x in m.flats_of_rank(k)))


def girth_deck(m: Matroid, g: int) -> Deck:
    """Deck of contractions by the rank-g flats."""
    return Deck("rank-g-contractions", _group(
        g_invariant(m.contract(x)) for x in m.flats_of_rank(g)))
