"""Why column order matters for Hermite pivots but not for Smith divisors.

The matrix [[2,1],[0,2]] is already in Hermite form with pivots [2,2].
Swapping its columns and re-reducing gives pivots [1,4]: the diagonal is
not an invariant of the row lattice.  The Smith divisors [1,4] are.
"""

from ramat.intlin import IntMatrix, hermite_normal_form, smith_normal_form

m = IntMatrix([[2, 1], [0, 2]])
swapped = IntMatrix([[1, 2], [2, 0]])

print("original matrix:")
print(m.to_text())
print("Hermite diagonal:", list(hermite_normal_form(m).diagonal))
print()
print("columns swapped:")
print(swapped.to_text())
h = hermite_normal_form(swapped)
print("Hermite form:")
print(h.matrix.to_text())
print("Hermite diagonal:", list(h.diagonal))
print()
print("Smith divisors (both):", list(smith_normal_form(m).divisors),
      list(smith_normal_form(swapped).divisors))
