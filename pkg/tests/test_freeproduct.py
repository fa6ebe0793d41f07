"""Pinchpoints and free-product detection from the invariant."""

import random

import pytest

from gcat import (configuration_of, detect_free_product, elements_of,
                  factor_at_pinchpoint, from_graph, g_invariant, mask_of,
                  pinchpoints, uniform)
from conftest import K4_EDGES, load_data


class TestPinchpoints:
    def test_free_product_chain(self):
        fp = uniform(1, 2).free_product(uniform(1, 2))
        conf = configuration_of(fp)
        nodes = pinchpoints(conf)
        assert [(conf.sizes[x], conf.ranks[x]) for x in nodes] == [(2, 1)]

    def test_fig1_has_none(self):
        assert pinchpoints(configuration_of(load_data("fig1-n"))) == []

    def test_two_node_has_none(self):
        assert pinchpoints(configuration_of(uniform(2, 4))) == []


class TestDetect:
    def test_u12_squared(self):
        rep = detect_free_product(
            g_invariant(uniform(1, 2).free_product(uniform(1, 2))))
        assert rep.is_proper
        (k, s, left, right), = rep.factors
        assert (k, s) == (1, 2)
        assert left == g_invariant(uniform(1, 2))
        assert right == g_invariant(uniform(1, 2))

    def test_fig1_not_proper(self):
        rep = detect_free_product(g_invariant(load_data("fig1-n")))
        assert not rep.is_proper and rep.factors == ()

    def test_k4_not_proper(self):
        assert not detect_free_product(
            g_invariant(from_graph(K4_EDGES))).is_proper

    def test_matches_lattice_on_corpus(self, corpus, cache):
        for name, m in corpus:
            if m.n > 6 or m.coloops():
                continue
            rep = detect_free_product(cache.g(name, m))
            assert rep.is_proper == bool(
                pinchpoints(configuration_of(m))), name

    def test_top_of_lattice_is_not_a_pinchpoint(self):
        # with a coloop present the maximum cyclic flat has rank below r(M)
        # and used to masquerade as a pinchpoint candidate
        m = uniform(2, 3).add_coloop()
        assert not detect_free_product(g_invariant(m)).is_proper
        m2 = uniform(1, 2).free_product(uniform(1, 2)).add_coloop()
        rep = detect_free_product(g_invariant(m2))
        assert [(k, s) for k, s, _, _ in rep.factors] == [(1, 2)]

    def test_sharp_products_recover_parts(self, corpus, named, cache):
        pool = [(name, m) for name, m in corpus
                if m.n <= 4 and not m.coloops() and not m.closure(0)
                and len(m.cyclic_flats()) >= 2]
        rng = random.Random(17)
        assert len(pool) >= 3
        seen = 0
        for _ in range(20):
            (n1, m1), (n2, m2) = rng.choice(pool), rng.choice(pool)
            if m1.n + m2.n > 8:
                continue
            prod = m1.free_product(m2)
            rep = detect_free_product(g_invariant(prod))
            assert rep.is_proper, (n1, n2)
            pairs = [(left, right) for _, _, left, right in rep.factors]
            assert (g_invariant(m1), g_invariant(m2)) in pairs, (n1, n2)
            seen += 1
        assert seen >= 15


class TestFactorAtPinchpoint:
    def test_round_trip(self):
        fp = uniform(1, 2).free_product(uniform(1, 2))
        rest, contr = factor_at_pinchpoint(fp, mask_of([0, 1]))
        assert rest == uniform(1, 2) and contr == uniform(1, 2)

    def test_random_sharp_products(self, corpus):
        pool = [m for _, m in corpus
                if m.n <= 4 and not m.coloops() and not m.closure(0)
                and len(m.cyclic_flats()) >= 2]
        rng = random.Random(23)
        done = 0
        while done < 20:
            m1, m2 = rng.choice(pool), rng.choice(pool)
            if m1.n + m2.n > 8:
                continue
            prod = m1.free_product(m2)
            x = mask_of(range(m1.n))
            rest, contr = factor_at_pinchpoint(prod, x)
            assert rest.bases == m1.bases and contr.bases == m2.bases
            done += 1

    def test_guards(self):
        n = load_data("fig1-n")
        with pytest.raises(ValueError):
            factor_at_pinchpoint(n, mask_of([0, 1, 2]))
        with pytest.raises(ValueError):
            factor_at_pinchpoint(n, mask_of([0, 1]))


class TestCoLoopReduction:
    def test_coloop_shift_identity(self):
        # for M1 with coloop set Y: (M1 \ Y) # ((M1|Y) # M2) matches M1 # M2
        m2 = uniform(1, 2)
        for m1 in (uniform(2, 3).add_coloop(), uniform(1, 2).add_coloop()):
            y = m1.coloops()
            lhs = m1.free_product(m2)
            stripped = m1.delete(y)
            inner = m1.restrict(y).free_product(m2)
            rhs = stripped.free_product(inner)
            # same unordered ground set: coloops of M1 sit between the parts
            # in both factorizations, so the basis collections agree after
            # sorting elements back into place
            perm = elements_of(m1.full & ~y) + elements_of(y) \
                + list(range(m1.n, m1.n + m2.n))
            mapped = frozenset(
                sum(1 << perm[e] for e in elements_of(b)) for b in rhs.bases)
            assert mapped == lhs.bases
