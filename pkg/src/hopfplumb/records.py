"""Per-(g, n) invariant bundles and their JSON / CSV serializations."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .interval import RationalEnclosure
from .invariants import LaurentPolynomial, alexander, homological_monodromy, knot_signature
from .linalg import IntegerMatrix, disc_is_isolated, gershgorin_discs, gram
from .plumbing import build_family_matrix, seifert_chain, seifert_family
from .thurston import DEFAULT_TOL, family_bounds, thurston_classify

__all__ = [
    "FamilyRecord", "family_record", "enclosure_to_dict", "enclosure_from_dict",
    "TABLE_COLUMNS", "table_row", "family_table", "rows_to_csv", "rows_from_csv",
    "rows_to_json", "rows_from_json", "rows_to_pretty", "alexander_to_field", "alexander_from_field",
]


def enclosure_to_dict(e: Optional[RationalEnclosure]):
    if e is None:
        return None
    lo, hi = e.decimal(15)
    return {"lo": lo, "hi": hi, "lo_exact": str(e.lo), "hi_exact": str(e.hi)}


def enclosure_from_dict(d) -> Optional[RationalEnclosure]:
    if d is None:
        return None
    return RationalEnclosure(Fraction(d["lo_exact"]), Fraction(d["hi_exact"]))


@dataclass(frozen=True)
class FamilyRecord:
    g: int
    n: int
    convention: int
    N: IntegerMatrix
    seifert: IntegerMatrix
    mu: RationalEnclosure
    classification: str
    trace: RationalEnclosure
    lambda_abs: Optional[RationalEnclosure]
    signature: int
    alexander: LaurentPolynomial
    monodromy_order: Optional[int]
    gershgorin_centers: tuple[int, ...]
    gershgorin_radii: tuple[int, ...]
    gershgorin_index: int
    gershgorin_isolated: bool
    bounds_lower: Optional[int]
    bounds_upper: Optional[int]
    bounds_ok: Optional[bool]
    seifert_equals_chain: bool
    filling_assumed: bool = True

    def to_dict(self) -> dict:
        bounds = "n/a" if self.bounds_ok is None else {
            "lower": self.bounds_lower, "upper": self.bounds_upper, "pass": self.bounds_ok}
        return {
            "g": self.g,
            "n": self.n,
            "convention": self.convention,
            "N": self.N.tolist(),
            "seifert": self.seifert.tolist(),
            "mu": enclosure_to_dict(self.mu),
            "classification": self.classification,
            "trace": enclosure_to_dict(self.trace),
            "lambda_abs": enclosure_to_dict(self.lambda_abs),
            "signature": self.signature,
            "alexander": [list(p) for p in self.alexander.to_pairs()],
            "monodromy_order": "exceeds cap" if self.monodromy_order is None else self.monodromy_order,
            "gershgorin_report": {
                "centers": list(self.gershgorin_centers),
                "radii": list(self.gershgorin_radii),
                "disc_index": self.gershgorin_index,
                "isolated": self.gershgorin_isolated,
            },
            "bounds_report": bounds,
            "seifert_equals_chain": self.seifert_equals_chain,
            "filling_assumed": self.filling_assumed,
        }

    @classmethod
    def from_dict(cls, d: dict) -> FamilyRecord:
        b = d["bounds_report"]
        gr = d["gershgorin_report"]
        order = d["monodromy_order"]
        return cls(
            g=d["g"], n=d["n"], convention=d["convention"],
            N=IntegerMatrix(d["N"]), seifert=IntegerMatrix(d["seifert"]),
            mu=enclosure_from_dict(d["mu"]), classification=d["classification"],
            trace=enclosure_from_dict(d["trace"]), lambda_abs=enclosure_from_dict(d["lambda_abs"]),
            signature=d["signature"], alexander=LaurentPolynomial.from_pairs(d["alexander"]),
            monodromy_order=None if order == "exceeds cap" else order,
            gershgorin_centers=tuple(gr["centers"]), gershgorin_radii=tuple(gr["radii"]),
            gershgorin_index=gr["disc_index"], gershgorin_isolated=gr["isolated"],
            bounds_lower=None if b == "n/a" else b["lower"],
            bounds_upper=None if b == "n/a" else b["upper"],
            bounds_ok=None if b == "n/a" else b["pass"],
            seifert_equals_chain=d["seifert_equals_chain"], filling_assumed=d["filling_assumed"],
        )

    def to_json(self, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_json(cls, text: str) -> FamilyRecord:
        return cls.from_dict(json.loads(text))

    def to_pretty(self) -> str:
        d = self.to_dict()
        width = max(len(k) for k in d)
        lines = []
        for k, v in d.items():
            if isinstance(v, dict) and "lo_exact" in v:
                v = f"[{v['lo']}, {v['hi']}]"
            elif k == "alexander":
                v = str(self.alexander)
            lines.append(f"{k.ljust(width)}  {v if isinstance(v, str) else json.dumps(v)}")
        return "\n".join(lines)


def family_record(g: int, n: int, tol=DEFAULT_TOL, convention: int = -1) -> FamilyRecord:
    N = build_family_matrix(g, n)
    A = seifert_family(g, n, convention)
    th = thurston_classify(N, tol)
    discs = gershgorin_discs(gram(N))
    if n >= 1:
        rep = family_bounds(g, n, tol)
        b_lower, b_upper, b_ok = rep.lower_bound, rep.upper_bound, rep.bounds_ok
        index, isolated = rep.disc_index, rep.isolated_disc_ok
    else:
        b_lower = b_upper = b_ok = None
        index = max(range(len(discs)), key=lambda i: discs[i].center)
        isolated = disc_is_isolated(discs, index)
    return FamilyRecord(
        g=g, n=n, convention=convention, N=N, seifert=A.matrix,
        mu=th.mu, classification=th.classification, trace=th.trace, lambda_abs=th.lambda_abs,
        signature=knot_signature(A), alexander=alexander(A),
        monodromy_order=homological_monodromy(A).order,
        gershgorin_centers=tuple(d.center for d in discs),
        gershgorin_radii=tuple(d.radius for d in discs),
        gershgorin_index=index, gershgorin_isolated=isolated,
        bounds_lower=b_lower, bounds_upper=b_upper, bounds_ok=b_ok,
        seifert_equals_chain=A.matrix == seifert_chain(2 * g, convention).matrix,
    )


# tables

TABLE_COLUMNS = ("g", "n", "mu_lo", "mu_hi", "lambda_abs_lo", "lambda_abs_hi", "classification",
                 "signature", "alexander", "monodromy_order", "bounds_ok", "seifert_equal")
_INT_COLUMNS = {"g", "n", "signature"}


def alexander_to_field(p: LaurentPolynomial) -> str:
    """``exp:coeff`` pairs joined by ``;`` in increasing exponent (comma-free for CSV)."""
    return ";".join(f"{e}:{a}" for e, a in p.to_pairs())


def alexander_from_field(s: str) -> LaurentPolynomial:
    if not s:
        return LaurentPolynomial([])
    return LaurentPolynomial.from_pairs([tuple(int(x) for x in item.split(":")) for item in s.split(";")])


def table_row(rec: FamilyRecord) -> dict:
    mu_lo, mu_hi = rec.mu.decimal(15)
    lam = rec.lambda_abs.decimal(15) if rec.lambda_abs is not None else ("n/a", "n/a")
    return {
        "g": rec.g, "n": rec.n, "mu_lo": mu_lo, "mu_hi": mu_hi,
        "lambda_abs_lo": lam[0], "lambda_abs_hi": lam[1],
        "classification": rec.classification, "signature": rec.signature,
        "alexander": alexander_to_field(rec.alexander),
        "monodromy_order": "exceeds cap" if rec.monodromy_order is None else rec.monodromy_order,
        "bounds_ok": "n/a" if rec.bounds_ok is None else rec.bounds_ok,
        "seifert_equal": rec.seifert_equals_chain,
    }


def family_table(g: int, n_max: int, tol=DEFAULT_TOL, convention: int = -1) -> list[dict]:
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    return [table_row(family_record(g, n, tol, convention)) for n in range(n_max + 1)]


def _cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def _parse_cell(col: str, s: str):
    if col in _INT_COLUMNS:
        return int(s)
    if col == "monodromy_order":
        return s if s == "exceeds cap" else int(s)
    if col in ("bounds_ok", "seifert_equal"):
        return {"true": True, "false": False}.get(s, s)
    return s


def rows_to_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n", quoting=csv.QUOTE_MINIMAL)
    w.writerow(TABLE_COLUMNS)
    for r in rows:
        w.writerow([_cell(r[c]) for c in TABLE_COLUMNS])
    return buf.getvalue()


def rows_from_csv(text: str) -> list[dict]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if tuple(header) != TABLE_COLUMNS:
        raise ValueError(f"unexpected header {header}")
    return [{c: _parse_cell(c, s) for c, s in zip(header, row)} for row in reader]


def rows_to_json(rows: list[dict]) -> str:
    return json.dumps([{c: r[c] for c in TABLE_COLUMNS} for r in rows], indent=2)


def rows_from_json(text: str) -> list[dict]:
    return json.loads(text)


def rows_to_pretty(rows: list[dict]) -> str:
    cells = [list(TABLE_COLUMNS)] + [[_cell(r[c]) for c in TABLE_COLUMNS] for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(TABLE_COLUMNS))]
    return "\n".join("  ".join(v.rjust(w) for v, w in zip(row, widths)).rstrip() for row in cells)

