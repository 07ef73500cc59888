"""Mechanical re-check of every claim about the family ``K_n``.

Each ``check_*`` function takes explicit ranges and returns a :class:`Check`;
:func:`run_verification` assembles them for ``g <= g_max`` and ``n <= n_max``.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

import numpy as np

from . import thurston
from .interval import RationalEnclosure
from .invariants import (LaurentPolynomial, alexander, alexander_raw, fox_milnor_witness, homological_monodromy,
                         knot_signature, levine_tristram, lt_grid, monodromy_matches_alexander)
from .linalg import IntegerMatrix, char_poly, signature_exact
from .plumbing import build_family_matrix, seifert_chain, seifert_family
from .records import FamilyRecord, family_record, family_table, rows_from_csv, rows_from_json, rows_to_csv, rows_to_json

__all__ = ["Check", "VerificationReport", "run_verification", "lt_csv", "leibniz_det"]

SeifertBuilder = Callable[[int, int], object]


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    evidence: str

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}: {self.evidence}"


@dataclass
class VerificationReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def lines(self) -> list[str]:
        verdict = "VERIFIED" if self.passed else "FAILED"
        failed = [c.name for c in self.checks if not c.passed]
        tail = f"overall: {verdict}" + (f" ({', '.join(failed)})" if failed else "")
        return [c.line() for c in self.checks] + [tail]


def _first_failure(cases: Iterable, test) -> str | None:
    for case in cases:
        try:
            if not test(case):
                return f"fails at {case}"
        except Exception as exc:  # a broken constructor must surface as a failed check
            return f"error at {case}: {type(exc).__name__}: {exc}"
    return None


def _result(name: str, cases: list, test, ok_text: str) -> Check:
    bad = _first_failure(cases, test)
    if bad is None:
        return Check(name, True, f"{len(cases)} cases; {ok_text}")
    return Check(name, False, bad)


def check_seifert_theorem(gs, ns, seifert: SeifertBuilder = seifert_family) -> Check:
    cases = list(itertools.product(gs, ns))
    return _result("seifert-form", cases,
                   lambda c: seifert(*c).matrix == seifert_chain(2 * c[0]).matrix,
                   "seifert_family(g, n) == seifert_chain(2g)")


def check_eigenvalue_bounds(gs, ns, tol) -> Check:
    cases = list(itertools.product(gs, ns))

    def ok(c):
        rep = thurston.verify_family_bounds(*c, tol)
        return rep.mu.width <= tol and rep.bounds_ok and rep.isolated_disc_ok

    return _result("eigenvalue-bounds", cases, ok, "16n^2-4n <= mu_n <= 16n^2+4n+4, big disc isolated")


def _inside_closed_form(mu: RationalEnclosure, T: int, D: int) -> bool:
    # mu's endpoints are never roots, so the exact value is interior and enough bits suffice
    for bits in (64, 128, 256, 512, 1024):
        if thurston.closed_form_enclosure(T, D, bits) in mu:
            return True
    return False


def check_g2_closed_form(ns, tol) -> Check:
    def ok(n):
        mu, _ = thurston.certified_mu(build_family_matrix(2, n), tol)
        return mu.width <= tol and _inside_closed_form(mu, *thurston.g2_closed_form_mu(n))

    return _result("g2-closed-form", list(ns), ok, "mu_n encloses (T + sqrt(T^2 - 4D))/2")


def check_classification(gs, ns, tol) -> Check:
    cases = list(itertools.product(gs, ns))

    def ok(c):
        g, n = c
        r = thurston.thurston_classify(build_family_matrix(g, n), tol)
        if n == 0:
            return r.classification == thurston.ELLIPTIC
        if r.classification != thurston.PSEUDO_ANOSOV:
            return False
        lam, inv = r.signed_stretch()
        return 1 in lam * inv and r.trace in lam + inv

    ok_sym = thurston.product_identity_holds()
    check = _result("classification", cases, ok,
                    "n=0 elliptic, n>=1 pseudo-Anosov, lambda*lambda^-1 contains 1, lambda+lambda^-1 contains 2-mu")
    if not ok_sym:
        return Check(check.name, False, "symbolic product identity failed")
    return check


def check_distinctness(gs, n_max, tol) -> Check:
    def ok(g):
        distinct, _ = thurston.stretch_factors_distinct(g, n_max, tol)
        encs = [thurston.certified_mu(build_family_matrix(g, n), tol)[0] for n in range(1, n_max + 1)]
        return distinct and all(a.strictly_below(b) for a, b in zip(encs, encs[1:]))

    return _result("distinct-stretch", list(gs), ok, f"mu_1 < ... < mu_{n_max}, pairwise disjoint")


def check_signature(gs, ns, seifert: SeifertBuilder = seifert_family) -> Check:
    cases = list(itertools.product(gs, ns))
    return _result("max-signature", cases, lambda c: knot_signature(seifert(*c)) == -2 * c[0], "sigma = -2g")


def check_monodromy(gs, ns, seifert: SeifertBuilder = seifert_family) -> Check:
    cases = list(itertools.product(gs, ns))

    def ok(c):
        A = seifert(*c).matrix
        data = homological_monodromy(A, 50)
        form = A - A.T
        return data.order == 4 * c[0] + 2 and data.M.T @ form @ data.M == form

    return _result("periodic-monodromy", cases, ok, "order 4g+2, intersection form preserved")


def check_alexander_module(gs, ns, seifert: SeifertBuilder = seifert_family) -> Check:
    ns = list(ns)

    def ok(g):
        mats = [seifert(g, n).matrix for n in ns]
        Ms = {homological_monodromy(A).M for A in mats}
        if len(Ms) != 1:
            return False
        for A in mats:
            d = alexander(A)
            if not (monodromy_matches_alexander(A) and d(1) == 1 and d.is_palindromic()
                    and abs(d(-1)) == 2 * g + 1):
                return False
        return True

    return _result("alexander-module", list(gs), ok,
                   "monodromy constant in n, char(M) ~ Delta, Delta(1)=1, palindromic, |Delta(-1)|=2g+1")


def lt_csv(A, samples: int = 64) -> str:
    rows = ["theta,sigma_omega,degenerate"]
    for s in levine_tristram(A, lt_grid(samples)):
        rows.append(f"{float(s.theta) * np.pi:.15g},{s.signature},{'true' if s.degenerate else 'false'}")
    return "\n".join(rows) + "\n"


def check_levine_tristram(gs, ns, seifert: SeifertBuilder = seifert_family, samples: int = 64) -> Check:
    ns = list(ns)

    def ok(g):
        outs = {lt_csv(seifert(g, n), samples) for n in ns}
        last = levine_tristram(seifert(g, ns[0]), [1])[0]
        return len(outs) == 1 and last.signature == knot_signature(seifert(g, ns[0])) == -2 * g

    return _result("levine-tristram", list(gs), ok, f"{samples}-sample CSV byte-identical across n")


def check_fox_milnor(gs, seifert: SeifertBuilder = seifert_family) -> Check:
    def ok(g):
        d = alexander(seifert(g, 1))
        return fox_milnor_witness(d * d, d)

    return _result("fox-milnor", list(gs), ok, "Delta^2 = f(t) f(1/t) with f = Delta")


def leibniz_det(A: IntegerMatrix) -> int:
    """Determinant by permutation expansion; independent of any elimination."""
    n = A.nrows
    total = 0
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        prod = 1
        for i, p in enumerate(perm):
            prod *= A[i, p]
            if not prod:
                break
        total += -prod if inversions % 2 else prod
    return total


def random_symmetric(rng: random.Random, size: int, bound: int = 5) -> IntegerMatrix:
    m = [[0] * size for _ in range(size)]
    for i in range(size):
        for j in range(i, size):
            m[i][j] = m[j][i] = rng.randint(-bound, bound)
    return IntegerMatrix(m)


def check_oracles(trials: int = 200, seed: int = 0) -> Check:
    rng = random.Random(seed)
    done = 0
    while done < trials:
        S = random_symmetric(rng, rng.randint(1, 8))
        ev = np.linalg.eigvalsh(np.array(S.tolist(), dtype=float))
        if np.abs(ev).min() < 1e-6:
            continue
        if signature_exact(S) != int(np.sum(ev > 0) - np.sum(ev < 0)):
            return Check("oracles", False, f"signature mismatch on {S}")
        done += 1
    for _ in range(trials):
        k = rng.randint(1, 6)
        A = IntegerMatrix([[rng.randint(-5, 5) for _ in range(k)] for _ in range(k)])
        if char_poly(A)(0) != (-1) ** k * leibniz_det(A):
            return Check("oracles", False, f"char_poly(0) mismatch on {A}")
    # hand cofactor expansions of det(A - t A^T)
    hand = {2: [1, -1, 1], 4: [1, -1, 1, -1, 1]}
    for k, coeffs in hand.items():
        if alexander_raw(seifert_chain(k)).coeffs != tuple(coeffs):
            return Check("oracles", False, f"alexander mismatch for chain({k})")
    return Check("oracles", True, f"{trials} signatures, {trials} determinants, 2 cofactor expansions")


def check_round_trip(gs, ns, tol) -> Check:
    for g in gs:
        for n in ns:
            rec = family_record(g, n, tol)
            if FamilyRecord.from_json(rec.to_json()) != rec:
                return Check("round-trip", False, f"FamilyRecord JSON at {(g, n)}")
        rows = family_table(g, max(ns), tol)
        if rows_from_csv(rows_to_csv(rows)) != rows or rows_from_json(rows_to_json(rows)) != rows:
            return Check("round-trip", False, f"table serialization at g={g}")
        d = alexander(seifert_chain(2 * g))
        if LaurentPolynomial.from_pairs(d.to_pairs()) != d:
            return Check("round-trip", False, f"polynomial pairs at g={g}")
    return Check("round-trip", True, "records, tables and polynomials survive their serializers")


def run_verification(g_max: int, n_max: int, tol=thurston.DEFAULT_TOL,
                     seifert: SeifertBuilder = seifert_family, oracle_trials: int = 200) -> VerificationReport:
    if g_max < 2:
        raise ValueError("g_max must be at least 2")
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    tol = Fraction(tol)
    gs = range(2, g_max + 1)
    ns = range(0, n_max + 1)
    pos = range(1, n_max + 1)
    report = VerificationReport()
    add = report.checks.append
    add(check_seifert_theorem(gs, ns, seifert))
    if g_max >= 3:
        add(check_eigenvalue_bounds(range(3, g_max + 1), pos, tol))
    add(check_g2_closed_form(ns, tol))
    add(check_classification(gs, ns, tol))
    if n_max >= 2:
        add(check_distinctness([g for g in (2, 3) if g <= g_max], n_max, tol))
    add(check_signature(gs, ns, seifert))
    add(check_monodromy(gs, ns, seifert))
    add(check_alexander_module(gs, ns, seifert))
    add(check_levine_tristram(gs, ns, seifert))
    add(check_fox_milnor(gs, seifert))
    add(check_oracles(oracle_trials))
    add(check_round_trip(gs, ns, tol))
    return report

