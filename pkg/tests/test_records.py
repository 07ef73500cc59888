import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfplumb.interval import RationalEnclosure
from hopfplumb.invariants import LaurentPolynomial
from hopfplumb.records import (TABLE_COLUMNS, FamilyRecord, alexander_from_field, alexander_to_field,
                               enclosure_from_dict, enclosure_to_dict, family_record, family_table,
                               rows_from_csv, rows_from_json, rows_to_csv, rows_to_json, rows_to_pretty)


@pytest.mark.parametrize("g, n", [(2, 0), (2, 1), (3, 4), (5, 10)])
def test_record_json_round_trip(g, n):
    rec = family_record(g, n)
    assert FamilyRecord.from_json(rec.to_json()) == rec
    assert rec.to_json() == family_record(g, n).to_json()


def test_record_contents():
    rec = family_record(3, 1)
    assert rec.bounds_lower == 12 and rec.bounds_upper == 24 and rec.bounds_ok
    assert rec.gershgorin_isolated and rec.gershgorin_radii[rec.gershgorin_index] == 6
    d = rec.to_dict()
    assert d["mu"]["lo"] <= d["mu"]["hi"]
    assert Fraction(d["mu"]["lo_exact"]) == rec.mu.lo


def test_bounds_report_only_for_twisted_members():
    assert family_record(3, 0).to_dict()["bounds_report"] == "n/a"
    assert family_record(2, 3).to_dict()["bounds_report"] == {"lower": 132, "upper": 160, "pass": True}


fracs = st.fractions(min_value=-10 ** 6, max_value=10 ** 6, max_denominator=10 ** 9)


@given(fracs, fracs)
def test_enclosure_dict_round_trip(a, b):
    e = RationalEnclosure(min(a, b), max(a, b))
    d = enclosure_to_dict(e)
    assert enclosure_from_dict(json.loads(json.dumps(d))) == e
    assert Fraction(d["lo"]) <= e.lo and e.hi <= Fraction(d["hi"])


@given(st.lists(st.integers(-9, 9), min_size=1, max_size=8), st.integers(-5, 5))
def test_alexander_field_round_trip(coeffs, low):
    p = LaurentPolynomial(coeffs, low)
    s = alexander_to_field(p)
    assert "," not in s
    assert alexander_from_field(s) == p


@settings(deadline=None, max_examples=5)
@given(st.integers(2, 4), st.integers(0, 4))
def test_table_round_trips(g, n_max):
    rows = family_table(g, n_max)
    assert rows_from_csv(rows_to_csv(rows)) == rows
    assert rows_from_json(rows_to_json(rows)) == rows
    assert len(rows_to_pretty(rows).split("\n")) == n_max + 2


def test_csv_header_and_types():
    text = rows_to_csv(family_table(2, 1))
    assert text.split("\n")[0] == ",".join(TABLE_COLUMNS)
    rows = rows_from_csv(text)
    assert rows[0]["monodromy_order"] == 10 and rows[1]["seifert_equal"] is True
    with pytest.raises(ValueError):
        rows_from_csv("a,b\n1,2\n")


def test_family_table_guard():
    with pytest.raises(ValueError):
        family_table(2, -1)
