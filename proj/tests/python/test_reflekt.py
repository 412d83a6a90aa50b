import json
import os
from fractions import Fraction
from pathlib import Path

import pytest

import reflekt

DATA = Path(os.environ.get("REFLEKT_TEST_DATA_DIR", Path(__file__).resolve().parents[2] / "data"))


def test_canonical_spec():
    assert reflekt.canonical_spec("I2(6)") == "G(6,6,2)"
    assert reflekt.canonical_spec(" G( 3, 1, 2 ) ") == "G(3,1,2)"
    with pytest.raises(reflekt.ParseError):
        reflekt.canonical_spec("H4")


def test_g26_numerology():
    g = reflekt.group("G26")
    assert g.order == 1296
    assert g.coxeter_number == 18
    assert [(o["reflections"], o["hyperplanes"], o["multiplicity"]) for o in g.orbits] == [(24, 12, 2), (9, 9, 1)]
    assert g.row == "(e^{12x} - e^{-6x})^2 (e^{9y} - e^{-9y})"


def test_counts_match_series():
    g = reflekt.group("G(3,1,2)")
    counts = g.counts(6)
    series = g.series(6)
    for exps, value in counts.items():
        factorial = 1
        for e in exps:
            for k in range(2, e + 1):
                factorial *= k
        assert series.get(exps, Fraction(0)) * factorial == value
    assert g.count([1, 2]) == counts[(1, 1)]


def test_rank_one():
    g = reflekt.group("G(2,1,1)")
    assert g.counts_by_length(3) == [0, 1, 0, 1]


def test_bad_label():
    with pytest.raises(reflekt.DomainError):
        reflekt.group("I2(4)").count([3])


def test_verify_report():
    report = reflekt.verify("I2(6)", degree=8, chartable=DATA / "chartables" / "I2_6.json")
    assert report["passed"]
    assert {c["name"]: c["status"] for c in report["checks"]}["frobenius"] == "pass"


def test_hurwitz():
    h = reflekt.group("G5").hurwitz()
    assert h["transitive"] and h["multiplicities_constant"]
    assert h["factorizations"] == h["closure_size"]


def test_recover():
    assert reflekt.recover(reflekt.exp_minus_one_product([Fraction(1, 2), 3], 6)) == [Fraction(1, 2), 3]
    text = json.dumps({"vars": 1, "degree": 4, "terms": [{"exps": [2], "coeff": "6"}, {"exps": [3], "coeff": "15"},
                                                         {"exps": [4], "coeff": "22"}]})
    assert reflekt.recover_json(text) == [2, 3]
    with pytest.raises(reflekt.DataError):
        reflekt.recover([0, 0, 2, 4, 5])


def test_unknown_group_and_missing_dir(tmp_path):
    with pytest.raises(reflekt.DomainError):
        reflekt.group("G7")
    with pytest.raises(reflekt.DataError):
        reflekt.group("G5", data_dir=tmp_path / "nowhere")
