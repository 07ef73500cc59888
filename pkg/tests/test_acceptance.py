"""The twelve acceptance criteria, each checked against an independent oracle where one exists."""
import io
import json
import random
import time
from fractions import Fraction

import mpmath
import numpy as np
import sympy

from hopfplumb.cli import main
from hopfplumb.invariants import (LaurentPolynomial, alexander, alexander_raw, fox_milnor_witness,
                                  homological_monodromy, knot_signature)
from hopfplumb.linalg import IntegerMatrix, char_poly, disc_is_isolated, gershgorin_discs, gram, signature_exact
from hopfplumb.plumbing import CurveChainModel, build_family_matrix, seifert_chain, seifert_family
from hopfplumb.records import (FamilyRecord, enclosure_from_dict, enclosure_to_dict, family_record, family_table, rows_from_csv, rows_from_json,
                               rows_to_csv, rows_to_json)
from hopfplumb.thurston import (ELLIPTIC, PSEUDO_ANOSOV, certified_mu, closed_form_enclosure, g2_closed_form_mu,
                                stretch_factors_distinct, thurston_classify, verify_family_bounds)
from hopfplumb.verify import leibniz_det, lt_csv

TOL = Fraction(1, 10 ** 9)


def _mp(x: Fraction):
    return mpmath.mpf(x.numerator) / x.denominator


def test_criterion_01_seifert_form(report_criterion):
    start = time.perf_counter()
    bad = []
    derived_rows = set()
    for g in range(2, 7):
        chain = seifert_chain(2 * g)
        for n in range(0, 11):
            if seifert_family(g, n).matrix != chain.matrix:
                bad.append((g, n))
            derived_rows.add((g, CurveChainModel(g).gamma_n_functional(n)))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 1.0 and len(derived_rows) == 5
    report_criterion(1, "Seifert form equals chain(2g)", ok,
                     f"55 cases, mismatches {bad}, {elapsed:.3f} s (limit 1 s)")


def test_criterion_02_eigenvalue_bounds(report_criterion):
    start = time.perf_counter()
    bad = []
    for g in range(3, 6):
        for n in range(1, 11):
            rep = verify_family_bounds(g, n, TOL)
            lower, upper = 16 * n * n - 4 * n, 16 * n * n + 4 * n + 4
            discs = gershgorin_discs(gram(build_family_matrix(g, n)))
            big = max(range(len(discs)), key=lambda i: discs[i].center)
            ok = (rep.mu.width <= TOL and lower <= rep.mu.lo and rep.mu.hi <= upper
                  and discs[big].radius == 2 + 4 * n and disc_is_isolated(discs, big)
                  and rep.bounds_ok and rep.isolated_disc_ok)
            if not ok:
                bad.append((g, n))
    elapsed = time.perf_counter() - start
    report_criterion(2, "eigenvalue bounds and isolated disc", not bad and elapsed < 5.0,
                     f"30 cases, failures {bad}, {elapsed:.3f} s (limit 5 s)")


def test_criterion_03_g2_closed_form(report_criterion):
    bad = []
    for n in range(0, 11):
        T, D = g2_closed_form_mu(n)
        mu, _ = certified_mu(build_family_matrix(2, n), TOL)
        exact = closed_form_enclosure(T, D, 128)  # interval evaluation of the radical
        with mpmath.workdps(60):
            ref = (T + mpmath.sqrt(T * T - 4 * D)) / 2
            inside = _mp(mu.lo) <= ref <= _mp(mu.hi)
        if not (mu.width <= TOL and exact in mu and inside):
            bad.append(n)
    report_criterion(3, "g=2 closed-form cross-check", not bad, f"n = 0..10, failures {bad}")


def test_criterion_04_classification(report_criterion):
    bad = []
    for g in range(2, 6):
        for n in range(0, 11):
            r = thurston_classify(build_family_matrix(g, n), TOL)
            if n == 0:
                ok = r.classification == ELLIPTIC
            else:
                lam, inv = r.signed_stretch()
                ok = (r.classification == PSEUDO_ANOSOV and 1 in lam * inv
                      and (2 - r.mu) in lam + inv)
            if not ok:
                bad.append((g, n))
    report_criterion(4, "classification and lambda identities", not bad,
                     f"g = 2..5, n = 0..10, failures {bad}")


def test_criterion_05_distinctness(report_criterion):
    summary = []
    ok = True
    for g in (2, 3):
        flag, encs = stretch_factors_distinct(g, 10, TOL)
        disjoint = all(not a.overlaps(b) for i, a in enumerate(encs) for b in encs[i + 1:])
        monotone = all(a.strictly_below(b) for a, b in zip(encs, encs[1:]))
        ok = ok and flag and disjoint and monotone and len(encs) == 10
        summary.append(f"g={g}: {len(encs)} disjoint increasing")
    report_criterion(5, "pairwise distinct stretch factors", ok, "; ".join(summary))


def test_criterion_06_signature(report_criterion):
    bad = []
    for g in range(2, 7):
        for n in range(0, 11):
            A = seifert_family(g, n).matrix
            ev = np.linalg.eigvalsh(np.array((A + A.T).tolist(), dtype=float))
            float_sig = int(np.sum(ev > 0) - np.sum(ev < 0))
            if not (knot_signature(seifert_family(g, n)) == -2 * g == float_sig):
                bad.append((g, n))
    report_criterion(6, "maximal signature -2g", not bad, f"55 cases, failures {bad}")


def _brute_order(M, cap=60):
    P = sympy.Matrix(M.tolist())
    Q = P
    for k in range(1, cap + 1):
        if Q.is_Identity:
            return k
        Q = Q * P
    return None


def test_criterion_07_monodromy(report_criterion):
    bad = []
    for g in range(2, 7):
        for n in range(0, 11):
            A = seifert_family(g, n)
            data = homological_monodromy(A, 50)
            form = A.matrix - A.matrix.T
            if not (data.order == 4 * g + 2 == _brute_order(data.M) and data.M.T @ form @ data.M == form):
                bad.append((g, n))
    report_criterion(7, "periodic monodromy of order 4g+2", not bad, f"g = 2..6, n = 0..10, failures {bad}")


def test_criterion_08_alexander_module(report_criterion):
    bad = []
    for g in range(2, 7):
        Ms = {homological_monodromy(seifert_family(g, n)).M for n in range(0, 11)}
        d = alexander(seifert_family(g, 0))
        cp = LaurentPolynomial.from_polynomial(char_poly(Ms.copy().pop())).normalized()
        if not (len(Ms) == 1 and cp == d and d(1) == 1 and d.is_palindromic() and abs(d(-1)) == 2 * g + 1):
            bad.append(g)
    report_criterion(8, "Alexander module", not bad, f"g = 2..6, failures {bad}")


def test_criterion_09_levine_tristram(report_criterion):
    bad = []
    for g in range(2, 7):
        outs = {lt_csv(seifert_family(g, n), 64) for n in range(0, 11)}
        last = outs.copy().pop().strip().split("\n")[-1].split(",")
        if not (len(outs) == 1 and int(last[1]) == knot_signature(seifert_family(g, 1))):
            bad.append(g)
        code_out = [io.StringIO(), io.StringIO()]
        for buf, n in zip(code_out, (1, 7)):
            main(["lt-signature", "--genus", str(g), "--n", str(n)], out=buf)
        if code_out[0].getvalue() != code_out[1].getvalue():
            bad.append(("cli", g))
    report_criterion(9, "Levine-Tristram byte-identical across n", not bad, f"g = 2..6, failures {bad}")


def test_criterion_10_fox_milnor(report_criterion):
    bad = []
    for g in range(2, 7):
        d = alexander(seifert_family(g, 1))
        if not fox_milnor_witness(d * d, d):
            bad.append(g)
    report_criterion(10, "Fox-Milnor factorization", not bad, f"g = 2..6, failures {bad}")


def _random_symmetric(rng, size):
    m = [[0] * size for _ in range(size)]
    for i in range(size):
        for j in range(i, size):
            m[i][j] = m[j][i] = rng.randint(-5, 5)
    return IntegerMatrix(m)


def test_criterion_11_oracles(report_criterion):
    rng = random.Random(20261014)
    sig_done = 0
    sig_bad = 0
    while sig_done < 200:
        S = _random_symmetric(rng, rng.randint(1, 8))
        ev = np.linalg.eigvalsh(np.array(S.tolist(), dtype=float))
        if np.abs(ev).min() < 1e-6:
            continue
        sig_done += 1
        sig_bad += signature_exact(S) != int(np.sum(ev > 0) - np.sum(ev < 0))
    det_bad = 0
    for _ in range(200):
        k = rng.randint(1, 6)
        A = IntegerMatrix([[rng.randint(-5, 5) for _ in range(k)] for _ in range(k)])
        det_bad += char_poly(A)(0) != (-1) ** k * leibniz_det(A)
    t = sympy.Symbol("t")
    cof_bad = 0
    for k in (2, 4):
        A = seifert_chain(k).matrix
        hand = sympy.Matrix(k, k, lambda i, j: A[i, j] - t * A[j, i]).det(method="berkowitz")
        cof_bad += [int(c) for c in sympy.Poly(sympy.expand(hand), t).all_coeffs()[::-1]] != \
            list(alexander_raw(A).coeffs)
    ok = sig_bad == det_bad == cof_bad == 0
    report_criterion(11, "oracle suites", ok,
                     f"signature {200 - sig_bad}/200, det {200 - det_bad}/200, cofactor {2 - cof_bad}/2")


def test_criterion_12_end_to_end(report_criterion):
    out = io.StringIO()
    start = time.perf_counter()
    code = main(["verify", "--g-max", "4", "--n-max", "5"], out=out)
    elapsed = time.perf_counter() - start
    trips = True
    for g in range(2, 5):
        for n in range(0, 6):
            rec = family_record(g, n)
            trips &= FamilyRecord.from_json(rec.to_json()) == rec
        rows = family_table(g, 5)
        trips &= rows_from_csv(rows_to_csv(rows)) == rows and rows_from_json(rows_to_json(rows)) == rows
        enc = family_record(g, 1).lambda_abs
        trips &= enclosure_from_dict(json.loads(json.dumps(enclosure_to_dict(enc)))) == enc
    ok = code == 0 and elapsed < 30 and trips and "FAIL" not in out.getvalue()
    report_criterion(12, "verify --g-max 4 --n-max 5 end to end", ok,
                     f"exit {code}, {elapsed:.2f} s (limit 30 s), round trips {'ok' if trips else 'broken'}")
