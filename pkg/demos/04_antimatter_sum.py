"""Two atomic monoids whose sum has no atoms at all.

The grams family 1/(2^n p_n) is atomic, and so is the companion family of
staircase sequences b_1 > b_2 > ... built under each grams generator.  In
their sum, every generator of either family becomes reducible, with an
exact identity as the certificate, so the sum is antimatter.
"""

from fractions import Fraction

from puiseux import antimatter_witness, family_generator, grams_companion, truncate

F = Fraction

# The grams generators and their truncations stay atomic at every size.
print("grams generators:", [str(family_generator("grams", n)) for n in range(1, 5)])
for k in (1, 3, 6):
    trunc = truncate("grams", k)
    print(f"K={k}: all generators atoms?", trunc.atoms == trunc.generators)

# The companion staircase under a_1 = 1/6: the index f(1) is the least one
# whose odd prime exceeds 2 * 3 = 6, so f(1) = 3 and b_1 = a_1 - a_3.
seq = grams_companion(1, 3)
print("f(1):", seq.f_index)
print("staircase:", [str(b) for b in seq.b], " exponents:", seq.c)
a_1 = family_generator("grams", 1)
print("band respected:", all(a_1 / 2 < b < a_1 for b in seq.b))

# Witness that a_1 is reducible in the sum: a_1 = b_1 + a_{f(1)}.
w = antimatter_witness(1)
print(w.identity(), " holds:", w.holds())

# Witness that b_1 is reducible: b_1 = b_2 + 1/2^4, and the power of two
# is itself a grams element, eleven copies of 1/176.
wb = antimatter_witness(1, 1)
print(wb.identity(), " holds:", wb.holds())
for cert in wb.certificates:
    print("  ", cert)
assert 11 * F(1, 176) == F(1, 16)

# The same pattern holds higher up; f(2) jumps to the eighth odd prime 23.
print("f(2):", grams_companion(2, 1).f_index)
for n in (2, 3):
    print(antimatter_witness(n).identity())
