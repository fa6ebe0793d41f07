#!/usr/bin/env python3
"""Catenary data from the abstract cyclic-flat lattice, and free products.

Two non-isomorphic six-point matroids share their configuration (the
size/rank-labeled lattice of cyclic flats), hence their catenary data and
invariant.  A pinchpoint in that lattice is exactly a free-product seam,
and the detection runs on the invariant alone.
"""

from gcat import (canonical_key, catenary, catenary_from_config,
                  configuration_of, detect_free_product,
                  factor_at_pinchpoint, from_paving_copoints, g_invariant,
                  mask_of, pinchpoints, uniform)

two_lines = from_paving_copoints(6, 3, [[0, 1, 2], [3, 4, 5]])
lines_and_point = from_paving_copoints(6, 3, [[0, 1, 2], [0, 3, 4]])

ca = configuration_of(two_lines)
cb = configuration_of(lines_and_point)
print("configuration nodes:", sorted(zip(ca.sizes, ca.ranks)))
print("same configuration:", canonical_key(ca) == canonical_key(cb))
print("catenary from the lattice alone:", dict(catenary_from_config(ca).items()))
assert catenary_from_config(ca) == catenary(two_lines) == catenary(lines_and_point)

fp = uniform(1, 2).free_product(uniform(1, 2))
conf = configuration_of(fp)
print("\nfree product of two parallel pairs:")
print("  pinchpoints:", [(conf.sizes[x], conf.ranks[x])
                         for x in pinchpoints(conf)])
report = detect_free_product(g_invariant(fp))
print("  proper free product:", report.is_proper)
for k, s, left, right in report.factors:
    print(f"  split at rank {k} size {s}: {dict(left.items())} "
          f"# {dict(right.items())}")

rest, contr = factor_at_pinchpoint(fp, mask_of([0, 1]))
print("  matroid-level factors:", rest, contr)

print("\nno pinchpoint, no proper factorization:")
print("  two-lines matroid:",
      detect_free_product(g_invariant(two_lines)).is_proper)
