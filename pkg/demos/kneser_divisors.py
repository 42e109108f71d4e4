"""Kneser graphs carry many equal divisors, certified by explicit kernel
vectors.

For Kn(n,p) with p prime, each p-subset x yields the vector with entry
|x & v| at vertex v; modulo p it annihilates every RA-matrix row.  The
vectors span a space of dimension n-2 when p divides n (else n-1), which
lower-bounds the count of divisors divisible by p.  Direct elimination
shows the exact divisor multisets.
"""

from collections import Counter

from ramat.graphs import kneser, kneser_vertices
from ramat.ra_core import classify, ra_matrix
from ramat.theorems import kneser_kernel_span_dim, kneser_kernel_vector

for (n, p) in ((6, 2), (8, 2), (10, 2), (12, 2), (9, 3)):
    g = kneser(n, p)
    c = classify(g)
    nontrivial = Counter(d for d in c.divisors if d > 1)
    span = kneser_kernel_span_dim(n, p)
    print(f"Kn({n},{p}): {g.n} vertices, divisors>1 {dict(nontrivial)}, "
          f"kernel-vector span dim {span}")

# spot-check the annihilation property on the smallest case
g = kneser(6, 2)
cm = ra_matrix(g).matrix
x = (1, 2)
vec = kneser_kernel_vector(6, 2, x)
residues = [r % 2 for r in cm.mul_vector(vec)]
print(f"\nC * x mod 2 for x={x}: all zero -> {not any(residues)}")
print("vector entries over the vertex order:",
      dict(zip(kneser_vertices(6, 2), vec)))
