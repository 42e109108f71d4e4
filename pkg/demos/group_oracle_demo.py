"""The divisor computation agrees with brute-force group enumeration.

Heisenberg groups witness divisors: a divisor divisible by p blocks
single-vertex commutator placement over H(F_p).  Dihedral matrix powers
show that divisors alone do not determine the group: [[1,0],[0,4]] and
[[1,2],[0,4]] share divisors [1,4] but generate groups of different order.
"""

from ramat.graphs import complete, cycle, path
from ramat.group_oracle import (
    dihedral,
    heisenberg,
    matrix_power,
    oracle_record,
    tuple_subgroup_order_histogram,
)
from ramat.intlin import IntMatrix
from ramat.ra_core import elementary_divisors

h2 = heisenberg(2)
for name, g in (("P3", path(3)), ("K3", complete(3)), ("C4", cycle(4))):
    divisors = elementary_divisors(g).divisors
    rec = oracle_record(h2, g, descriptor=name)
    print(f"{name}: divisors {list(divisors)}")
    print(f"  oracle: {rec}")

print()
d8 = dihedral(8)
for rows in ([[1, 0], [0, 4]], [[1, 2], [0, 4]]):
    m = IntMatrix(rows)
    sub = matrix_power(d8, m)
    hist = tuple_subgroup_order_histogram(d8, sub)
    print(f"D8 over {rows}: order {len(sub)}, element-order histogram {hist}")
