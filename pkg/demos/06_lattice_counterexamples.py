"""Rank 2 is different: the sum theorems fail in the integer lattice.

The quadrant is free on the two unit vectors; the points strictly above
the x-axis form a strongly atomic monoid whose atoms sit at height one.
Their sum is the lexicographic cone, which keeps a single atom (1,0) and
stops being atomic: nothing off the x-axis is a sum of atoms.
"""

from puiseux import (
    LatticePoint,
    lat_atomic_elements_in_box,
    lat_atoms_in_box,
    lat_contains,
    lat_factorizations_in_box,
    lex_sum_check,
)

P = LatticePoint

# Closed-form membership for the three monoids.
print("(-5,2) above the axis?", lat_contains("upperhalf", P(-5, 2)))
print("(-3,0) in the cone?", lat_contains("lexcone", P(-3, 0)))
print("(3,0) in the cone?", lat_contains("lexcone", P(3, 0)))

# Atoms inside a box, by exhaustive decomposition search.
print("quadrant atoms:", lat_atoms_in_box("quadrant", 2))
print("upperhalf atoms (box 3):", lat_atoms_in_box("upperhalf", 3))
print("lexcone atoms (box 10):", lat_atoms_in_box("lexcone", 10))

# The sum really is the lexicographic cone, checked pointwise on the box.
print("sum equals cone on box 10:", lex_sum_check(10))

# The cone's atomic elements are only the nonnegative x-axis; in
# particular (0,1) is a member that no sum of atoms reaches.
atomic = lat_atomic_elements_in_box(8)
print("atomic elements:", [str(v) for v in atomic])
print("(0,1) atomic?", P(0, 1) in atomic)

# Factorization structure of the summands: the quadrant factors uniquely,
# while a height-2 point splits as (n,1) + (-n,1) in ever more ways as the
# box grows, even though every factorization has length exactly 2.
print("unique in the quadrant:", lat_factorizations_in_box("quadrant", P(3, 2), 4))
for bound in (2, 4, 6):
    zs = lat_factorizations_in_box("upperhalf", P(0, 2), bound)
    print(f"box {bound}: {len(zs)} factorizations of (0,2), lengths {sorted({len(z) for z in zs})}")
