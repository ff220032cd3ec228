"""Groups as multiplication tables, and the Cayley graphs they generate.

Run: python3 demos/01_groups_and_cayley_graphs.py
"""

from signedcayley.cayley import CayleySpec, build_cayley, cayley_graph, verify_coset_multipartite
from signedcayley.graphs import are_isomorphic, complete_multipartite_parts, hypercube, mobius_ladder
from signedcayley.groups import (catalog_group, closure, element_order, groups_of_order,
                                 inverse_closed_subsets, invariant_vector, left_cosets, right_cosets)

# The catalog holds one group per isomorphism class up to order 12.
print("groups of order 8:")
for G in groups_of_order(8):
    orders = sorted(element_order(G, g) for g in range(G.order))
    print(f"  {G.catalog_name:<9} abelian={G.is_abelian!s:<5} element orders {orders}")

# Elements are addressed by name; D8 uses r^i and r^i s.
D8 = catalog_group("D8")
print("\nD8 elements:", " ".join(D8.names))
S = [D8.element(x) for x in ("s", "rs", "r2")]
print("<s, rs, r2> has", len(closure(D8, S)), "elements")

# Adjacency is a ~ b iff a b^-1 lies in S.
g = cayley_graph(D8, ["s", "rs", "r2"])
print("Cay({s, rs, r2} : D8) degrees", set(g.degrees), "connected", g.is_connected())
print("  isomorphic to the Moebius ladder M8:", are_isomorphic(g, mobius_ladder(8)) is not None)
print("  isomorphic to the cube Q3:", are_isomorphic(g, hypercube(3)) is not None)

# Cubic connection sets on Z2 x Z2 x Z2 give the cube.
E8 = catalog_group("Z2xZ2xZ2")
cubes = [S for S in inverse_closed_subsets(E8, 3, require_generating=True)]
print(f"\nZ2xZ2xZ2 has {len(cubes)} generating cubic connection sets;",
      "all cubes:", all(are_isomorphic(build_cayley(CayleySpec(E8, S)), hypercube(3)) for S in cubes))

# Removing a proper subgroup H from G leaves a complete multipartite graph.
S3 = catalog_group("S3")
H = {S3.identity, S3.element("(12)")}
rest = frozenset(range(6)) - H
print("\nCay(S3 minus {e, (12)}) part sizes:", complete_multipartite_parts(build_cayley(CayleySpec(S3, rest))))
print("parts match right cosets Hg:", verify_coset_multipartite(S3, H))
print("left and right cosets of a non-normal H differ:",
      set(left_cosets(S3, H)) != set(right_cosets(S3, H)))

print("\ninvariant vector of Dic3:", invariant_vector(catalog_group("Dic3")))
