from collections import Counter
from fractions import Fraction

import pytest

from uqbench.deligne import es
from uqbench.deligne import ev
from uqbench.deligne import LabelType
from uqbench.fusion import braiding_scalars
from uqbench.fusion import check_intro_table
from uqbench.fusion import classify_scalar
from uqbench.fusion import fuse_ext
from uqbench.fusion import fuse_sums
from uqbench.fusion import fusion_json
from uqbench.fusion import intro_table
from uqbench.fusion import ScalarMatch
from uqbench.fusion import tensor_ext


def test_intro_table_p2():
    report = check_intro_table(2)
    assert report.passed, report.first_failure()


def test_intro_table_p3_discrepancies():
    report = check_intro_table(3)
    failed = [row for row in report.rows if not row["status"]]
    assert all(" scalar on " in row["check"] for row in failed)
    assert Counter(row["witness"] for row in failed) == {
        "relocated": 6,
        "weight_space_trace": 12,
    }
    assert report.n_failed == 18


def test_listed_scalar_on_another_summand():
    entries = intro_table(3)
    entry = next(e for e in entries if e.rule == "ES1 x ES1")
    unit_like, exponents = entry.scalars[1]
    assert unit_like == es(-2, 0, 0, 3)
    value = entry.listed_scalar(exponents)
    assert classify_scalar(entry, unit_like, value) == ScalarMatch.RELOCATED

    entry = next(e for e in entries if e.rule == "EV x EV, a+b = 3l")
    typical, exponents = entry.scalars[1]
    assert typical == ev(-4, 0, 3)
    value = entry.listed_scalar(exponents)
    assert classify_scalar(entry, typical, value) != ScalarMatch.MATCHED


def test_intro_table_needs_small_p():
    with pytest.raises(ValueError, match="`p` must be 2 or 3"):
        intro_table(4)
    assert len(intro_table(2)) >= 3


def test_fuse_with_unit():
    p = 3
    unit = es(0, 0, 0, p)
    x = ev(Fraction(-1, 3), Fraction(1, 3), p)
    assert fuse_ext(unit, x) == [(x, 1)]
    data = braiding_scalars(unit, x)
    assert len(data) == 1
    assert data[0].monodromy == 1
    assert not data[0].nilpotent


def test_fuse_sums_is_bilinear():
    p = 3
    unit = es(0, 0, 0, p)
    x = ev(Fraction(-1, 3), Fraction(1, 3), p)
    assert fuse_sums([(unit, 2)], [(x, 3)]) == [(x, 6)]


def test_projective_summands_carry_nilpotent_parts():
    # V_0 (x) V_0 at p = 2 is projective
    x = ev(1, 0, 2)
    summands = braiding_scalars(x, x)
    assert [d.label.kind for d in summands] == [LabelType.QP]
    assert summands[0].nilpotent


def test_tensor_ext_requires_same_p():
    with pytest.raises(ValueError, match="labels must share the same `p`"):
        tensor_ext(es(0, 0, 0, 2), es(0, 0, 0, 3))


def test_fusion_json():
    p = 3
    x = ev(Fraction(-1, 3), Fraction(1, 3), p)
    payload = fusion_json(es(0, 0, 0, p), x)
    assert payload["lhs"] == str(es(0, 0, 0, p))
    assert [row["label"] for row in payload["summands"]] == [str(x)]
    assert payload["summands"][0]["mult"] == 1
