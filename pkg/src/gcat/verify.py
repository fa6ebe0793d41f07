"""Cross-module identity harness run by the CLI's verify command.

Each check computes the same quantity along two independent routes and
demands exact equality.  The deep suite adds the slower sweeps (parameter
censuses against exhaustive flat scans, configuration-derived catenary,
free-product agreement, relaxation deltas).
"""

from __future__ import annotations

import math

from . import constructions as cons
from . import parameters as params
from .configuration import catenary_from_config, configuration_of
from .errors import ExactnessError
from .freeproduct import detect_free_product
from .ginvariant import (basis_count, catenary, catenary_from_g,
                         g_brute_force, g_from_catenary, g_invariant,
                         oracle_limit, tutte_brute_force, tutte_from_g)
from .matroid import Matroid, elements_of
from .reconstruction import (circuit_deck, circuit_deck_reconstruct,
                             copoint_deck, rank_deck,
                             reconstruct_from_copoint_deck, recover_n,
                             size_grouped_copoint_deck, slice_assemble)


def _exhaustive_flat_census(m: Matroid):
    flats = {}
    for k in range(m.r + 1):
        for f in m.flats_of_rank(k):
            flats.setdefault((k, f.bit_count()), []).append(f)
    return flats


def run_verify(m: Matroid, deep: bool = False, limit: int | None = None):
    """Run the identity suite; returns (all_passed, list of check records)."""
    checks = []

    def check(name):
        def wrap(fn):
            try:
                fn()
                checks.append({"name": name, "status": "pass"})
            except AssertionError as exc:
                checks.append({"name": name, "status": "fail",
                               "detail": str(exc) or "assertion failed"})
            except ExactnessError as exc:
                checks.append({"name": name, "status": "fail", "detail": str(exc)})
        return wrap

    cat = catenary(m)
    g = g_from_catenary(cat)
    cap = oracle_limit(limit)

    @check("dual-involution")
    def _():
        assert m.dual().dual().bases == m.bases

    @check("coefficient-total-n-factorial")
    def _():
        assert g.total() == math.factorial(m.n)

    @check("top-symbol-counts-bases")
    def _():
        top = "1" * m.r + "0" * (m.n - m.r)
        expect = math.factorial(m.r) * math.factorial(m.n - m.r) * len(m.bases)
        assert g[top] == expect, f"{g[top]} != {expect}"

    @check("gamma-roundtrip")
    def _():
        assert catenary_from_g(g) == cat

    @check("basis-count-formula")
    def _():
        assert basis_count(cat) == len(m.bases)

    if m.n <= cap:
        @check("permutation-oracle")
        def _():
            assert g_brute_force(m, limit=cap) == g

        @check("tutte-specialization-vs-subsets")
        def _():
            assert tutte_from_g(g) == tutte_brute_force(m, limit=cap)

    @check("slicing-at-every-rank")
    def _():
        for k in range(m.r + 1):
            assert slice_assemble(rank_deck(m, k), k) == g, f"rank {k}"

    if m.r >= 2:
        @check("copoint-deck-roundtrip")
        def _():
            deck = copoint_deck(m)
            assert recover_n(deck) == m.n
            assert reconstruct_from_copoint_deck(deck) == g
            assert reconstruct_from_copoint_deck(size_grouped_copoint_deck(m)) == g

    if m.n - m.r >= 2:
        @check("circuit-deck-roundtrip")
        def _():
            assert circuit_deck_reconstruct(circuit_deck(m)) == g

    if m.n >= 1:
        @check("deletion-contraction-sums")
        def _():
            assert cons.dc_sum_check(m) is True

    if m.r >= 1:
        @check("copoint-recursion")
        def _():
            agg = {}
            for x in m.copoints():
                sub = catenary(m.restrict(x))
                a_r = m.n - x.bit_count()
                for comp, v in sub.counts.items():
                    key = comp + (a_r,)
                    agg[key] = agg.get(key, 0) + v
            assert agg == dict(cat.counts)

    if deep:
        census = _exhaustive_flat_census(m)

        @check("flat-counts-vs-exhaustive")
        def _():
            for k in range(m.r + 1):
                for s in range(m.n + 1):
                    expect = len(census.get((k, s), []))
                    assert params.flat_count(cat, k, s) == expect, (k, s)

        @check("coloop-census-vs-exhaustive")
        def _():
            for (k, s), flats in census.items():
                by_c = {}
                for f in flats:
                    ncol = sum(1 for e in elements_of(f)
                               if m.rank(f & ~(1 << e)) == k - 1)
                    by_c[ncol] = by_c.get(ncol, 0) + 1
                for c in range(k + 1):
                    assert params.flat_count_coloops(cat, k, s, c) \
                        == by_c.get(c, 0), (k, s, c)

        @check("family-counts-vs-exhaustive")
        def _():
            circuits = m.circuits()
            cocircuits = m.cocircuits()
            cyc = m.cyclic_sets()
            for s in range(m.n + 1):
                assert params.family_counts(g, "circuit", s) \
                    == sum(1 for c in circuits if c.bit_count() == s), s
                assert params.family_counts(g, "cocircuit", s) \
                    == sum(1 for c in cocircuits if c.bit_count() == s), s
                for j in range(m.r + 1):
                    assert params.family_counts(g, "cyclic_set", s, j) == sum(
                        1 for c in cyc
                        if c.bit_count() == s and m.rank(c) == j), (s, j)

        @check("spanning-circuit")
        def _():
            expect = any(c.bit_count() == m.r + 1 for c in m.circuits())
            assert params.has_spanning_circuit(g) == expect

        @check("unique-flat-split")
        def _():
            for (k, s), flats in census.items():
                if len(flats) != 1:
                    continue
                left, right = params.g_split_at_unique_flat(g, k, s)
                assert left == g_invariant(m.restrict(flats[0])), (k, s)
                assert right == g_invariant(m.contract(flats[0])), (k, s)

        if not m.coloops():
            @check("configuration-catenary")
            def _():
                assert catenary_from_config(configuration_of(m)) == cat

        @check("freeproduct-detection-vs-lattice")
        def _():
            masks = [f for f, _ in m.cyclic_flats()]
            bottom = min(masks, key=int.bit_count)
            top = max(masks, key=int.bit_count)
            pins = [f for f in masks if f not in (bottom, top)
                    and all(f & ~y == 0 or y & ~f == 0 for y in masks)]
            rep = detect_free_product(g)
            assert rep.is_proper == bool(pins)
            expect = {(g_invariant(m.restrict(f)), g_invariant(m.contract(f)))
                      for f in pins}
            assert {(left, right)
                    for _, _, left, right in rep.factors} == expect

        @check("relaxation-delta")
        def _():
            for x in m.copoints():
                k = x.bit_count()
                if m.rank(x) != k - 1:
                    continue
                if not all(m.rank(x & ~(1 << e)) == k - 1
                           for e in elements_of(x)):
                    continue
                assert cons.g_relax(g) == g_invariant(m.relax(x))

        @check("averaged-slicing")
        def _():
            total = {}
            for k in range(m.r + 1):
                part = slice_assemble(rank_deck(m, k), k)
                for key, c in part.coeffs.items():
                    total[key] = total.get(key, 0) + c
            assert all(v % (m.r + 1) == 0 for v in total.values())
            scaled = {key: v // (m.r + 1) for key, v in total.items()}
            assert scaled == dict(g.coeffs)

    passed = all(c["status"] == "pass" for c in checks)
    return passed, checks
