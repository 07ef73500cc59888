"""
Classical invariants of a Seifert matrix
========================================

Alexander polynomial, signature, Levine-Tristram signatures and the
homological monodromy for one member of the family.
"""
from fractions import Fraction

from hopfplumb import alexander, homological_monodromy, knot_signature, levine_tristram, seifert_family
from hopfplumb.invariants import lt_grid

g, n = 2, 3
A = seifert_family(g, n)

delta = alexander(A)
print("Alexander polynomial:", delta)
print("Delta(1) =", delta(1), " Delta(-1) =", delta(-1))
print("signature:", knot_signature(A))

mono = homological_monodromy(A)
print("monodromy M = A^-T A:")
for row in mono.M.tolist():
    print("   ", row)
print("order of M:", mono.order_label)

# the Levine-Tristram function drops by 2 at each root of Delta on the circle
for s in levine_tristram(A, lt_grid(10)):
    flag = " (root of Delta)" if s.degenerate else ""
    print(f"theta = {s.theta} pi: sigma = {s.signature}{flag}")

# at exp(i pi / 5) the form is singular
print(levine_tristram(A, [Fraction(1, 5)])[0])
