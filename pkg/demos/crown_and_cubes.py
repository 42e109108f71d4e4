"""Crown graphs hit every divisor; cubes alternate between RA and 1/2-RA.

crown(2n) is complete bipartite minus a perfect matching.  Its RA matrix
has a single nontrivial divisor n-2, so the family realizes every divisor
value.  Cube graphs Q_d are RA exactly for even d.  The girth-4 predictor
reproduces both patterns from degree and intersection counts alone.
"""

from ramat.graphs import crown, cube
from ramat.ra_core import classify
from ramat.theorems import mu_girth4

print("crown family:")
for half in range(4, 11):
    g = crown(2 * half)
    c = classify(g)
    p = mu_girth4(g)
    print(f"  crown({2 * half:2d}): classified {c.status:8s}  predicted mu={p.mu}")

print()
print("cube chain:")
for d in range(2, 7):
    c = classify(cube(d))
    print(f"  Q_{d} ({2 ** d:2d} vertices): {c.status}")
