"""Signed domination numbers: exact search, brute force, and closed forms.

Run: python3 demos/02_signed_domination.py
"""

from signedcayley.cayley import CayleySpec, build_cayley, parse_cayley_spec
from signedcayley.domination import (construct_high_degree_certificate, gamma_exact, gamma_formula,
                                     gamma_naive, is_signed_dominating, regular_lower_bound)
from signedcayley.graphs import hypercube, standard_graph
from signedcayley.groups import catalog_group

# gamma of a cycle, with the optimal labeling the solver returns
for n in (6, 7, 8):
    res = gamma_exact(standard_graph("cycle", n))
    print(f"C{n}: gamma {res.gamma} (closed form {gamma_formula('cycle', n)}), -1 at {res.negatives}")

# The search maximises the -1 set under |N[v] & W| <= deg(v) // 2.
Q3 = hypercube(3)
exact, naive = gamma_exact(Q3), gamma_naive(Q3)
print(f"\ncube: exact {exact.gamma} in {exact.nodes_explored} nodes, "
      f"brute force {naive.gamma} after {naive.nodes_explored} labelings")
print("regular lower bound for n=8, k=3:", regular_lower_bound(8, 3))

# High-degree Cayley graphs come with explicit labelings.
for text in ("cyclic:8:1,2,3,5,6,7", "cyclic:9:2,3,4,5,6,7", "cyclic:12:1,2,4,5,7,8,10,11"):
    spec = parse_cayley_spec(text)
    lab = construct_high_degree_certificate(spec)
    g = build_cayley(spec)
    print(f"\n{text}: construction weight {lab.weight}, valid {is_signed_dominating(g, lab)}, "
          f"true gamma {gamma_exact(g).gamma}")

# With |S| = n - 4 the value 4 is not forced: here gamma is 2.
Z6 = catalog_group("Z6")
g = build_cayley(CayleySpec(Z6, frozenset({1, 5})))
print("\nCay({1, 5} : Z6) = C6 has |S| = n-4 and gamma", gamma_exact(g).gamma)
