"""
Stretch factors from Thurston's construction
============================================

Classify the monodromy of each K_n and print certified enclosures of the
stretch factor.  All endpoints are exact rationals; the decimals shown are
rounded outward.
"""
from fractions import Fraction

from hopfplumb import build_family_matrix, thurston_classify, verify_family_bounds
from hopfplumb.thurston import closed_form_enclosure, g2_closed_form_mu

tol = Fraction(1, 10 ** 12)

# genus 2: compare the bisected enclosure with the closed form for mu
for n in range(0, 6):
    r = thurston_classify(build_family_matrix(2, n), tol)
    T, D = g2_closed_form_mu(n)
    lo, hi = r.mu.decimal(12)
    print(f"g=2 n={n}: {r.classification:17s} mu in [{lo}, {hi}]",
          "closed form inside:", closed_form_enclosure(T, D, 128) in r.mu)
    if r.lambda_abs is not None:
        print("          |lambda| in", r.lambda_abs.decimal(10))

# higher genus: the eigenvalue bounds 16n^2 - 4n <= mu <= 16n^2 + 4n + 4
for g in (3, 4):
    for n in (1, 2, 5):
        rep = verify_family_bounds(g, n, tol)
        print(f"g={g} n={n}: {rep.lower_bound} <= {float(rep.mu.mid):.4f} <= {rep.upper_bound}",
              "isolated disc:", rep.isolated_disc_ok)
