"""
Building the plumbed family and its Seifert matrices
====================================================

Walk through the combinatorial data behind K_n: the intersection matrix of
the two multicurves, the Seifert matrix derived from the arc gamma_n, and the
comparison with the chain of Hopf bands for T(2, 2g+1).
"""
from hopfplumb import build_family_matrix, seifert_chain, seifert_family
from hopfplumb.plumbing import CurveChainModel

g = 3

# The multicurves alpha (odd curves of the chain) and beta (even curves
# plus the core of the last band) meet according to N.  Only one entry,
# the intersection of gamma_n with alpha_{g-1}, depends on n.
for n in range(0, 4):
    print(f"N for g={g}, n={n}:")
    for row in build_family_matrix(g, n).tolist():
        print("   ", row)

# The Seifert matrix is assembled from linking numbers.  The row for the
# last band is computed by pushing gamma through t_c^{-n} on homology.
model = CurveChainModel(g)
print("basis:", model.basis)
print("gamma_n pairing for n = 0..3:", [model.gamma_n_functional(n) for n in range(4)])

A = seifert_family(g, 5)
print("Seifert matrix of K_5:")
for row in A.tolist():
    print("   ", row)

# c is null-homologous, so every K_n has the Seifert matrix of the chain.
print("equal to chain(2g):", A == seifert_chain(2 * g))
