#!/usr/bin/env python3
"""Push invariants through constructions without touching the matroids.

Each operation below rewrites the invariant directly; the assertions check
it against building the construction explicitly and recomputing.
"""

from gcat import (cat_qcone, catenary, from_paving_copoints,
                  g_dual, g_free_extension, g_free_product, g_invariant,
                  g_relax, g_shuffle, g_truncate, uniform)

u23 = uniform(2, 3)
g23 = g_invariant(u23)

print("dual:      ", dict(g_dual(g23).items()))
assert g_dual(g23) == g_invariant(u23.dual())

print("truncation:", dict(g_truncate(g23).items()))
assert g_truncate(g23) == g_invariant(u23.truncate())

print("direct sum:", dict(g_shuffle(g23, g23).items()))
assert g_shuffle(g23, g23) == g_invariant(u23.direct_sum(u23))

# free extension: the two-line matroid grows a free point
two_lines_5 = from_paving_copoints(5, 3, [[0, 1, 2], [0, 3, 4]])
g5 = g_invariant(two_lines_5)
print("free ext:  ", dict(g_free_extension(g5).items()))
assert g_free_extension(g5) == g_invariant(two_lines_5.free_extension())

# free product of two three-point lines
gfp = g_free_product(g23, g23)
print("free prod: ", dict(gfp.items()))
assert gfp == g_invariant(u23.free_product(u23))

# q-cone of a three-point line over GF(2) is the seven-point plane
cone = cat_qcone(catenary(u23), 2)
print("2-cone of a 3-point line:", dict(cone.items()))

# relaxing the parallel pair of U(1,2)+U(1,1) yields U(2,3)
loose = g_invariant(uniform(1, 2).direct_sum(uniform(1, 1)))
print("relaxation:", dict(g_relax(loose).items()))
assert g_relax(loose) == g23
