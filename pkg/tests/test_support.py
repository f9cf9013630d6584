import math
from fractions import Fraction as F

import numpy as np
import pytest

from expsubdiv import certify
from expsubdiv.scalar import (
    coerce,
    exact_sqrt,
    format_scalar,
    is_zero,
    load_scalar,
    parse_scalar,
    scalars_equal,
)
from expsubdiv.svg import project, render_svg


def test_coerce_and_zero():
    assert coerce(3) == F(3) and isinstance(coerce(3), F)
    assert isinstance(coerce(0.5), float)
    assert is_zero(F(0)) and not is_zero(F(1, 10**30))
    assert is_zero(1e-13) and not is_zero(1e-11)


def test_scalar_equality_contract():
    assert scalars_equal(F(1, 3), F(2, 6))
    assert not scalars_equal(F(1, 3), F(1, 3) + F(1, 10**20))
    assert scalars_equal(1.0, 1.0 + 5e-13)
    assert scalars_equal(1e6, 1e6 * (1 + 5e-13))
    assert not scalars_equal(1.0, 1.0 + 1e-9)


def test_parse_and_format_round_trip():
    assert parse_scalar("7/3") == F(7, 3)
    assert parse_scalar("0.25") == F(1, 4)
    assert parse_scalar("7/4", exact=False) == 1.75
    assert format_scalar(F(-9, 16)) == "-9/16"
    assert format_scalar(F(4)) == "4"
    assert format_scalar(0.5) == 0.5
    assert load_scalar("-9/16") == F(-9, 16)
    assert load_scalar(0.5) == 0.5


def test_exact_sqrt():
    assert exact_sqrt(F(9, 16)) == F(3, 4)
    assert exact_sqrt(F(2)) is None


def test_identity_record():
    rec = certify.IdentityRecord("demo", 1, F(2), F(4, 5), F(4, 5))
    assert rec.passed() and rec.residual == 0
    assert rec.to_json_obj() == {"identity": "demo", "n": 1, "t": "2", "lhs": "4/5", "rhs": "4/5", "pass": True}
    bad = certify.IdentityRecord("demo", 1, 2.0, float("nan"), 1.0)
    assert bad.residual == math.inf and not bad.passed()


def test_run_all_rational():
    results = certify.run_all(4, saalschutz_count=20)
    assert set(results) == {"prop1", "main_result1", "remark2", "lemma3", "prop4", "q_saalschutz"}
    assert all(r.passed() for records in results.values() for r in records)


def test_remark2_suite_float_small_t():
    records = list(certify.remark2_suite(6, [0.8, 1.25]))
    assert all(r.residual < 1e-12 for r in records)


def test_saalschutz_tuples_deterministic():
    assert certify.random_saalschutz_tuples(5, seed=3) == certify.random_saalschutz_tuples(5, seed=3)


def test_project_shapes():
    pts2 = np.array([[0.0, 1.0], [2.0, 3.0]])
    assert np.array_equal(project(pts2), pts2)
    assert project(np.zeros((4, 3))).shape == (4, 2)
    with pytest.raises(ValueError):
        project(np.zeros((3, 4)))


def test_render_svg_viewbox_margin():
    square = np.array([[0.0, 0.0], [10.0, 0.0], [10.0, 10.0], [0.0, 10.0]])
    text = render_svg(square)
    assert 'viewBox="-0.5 -10.5 11 11"' in text
    assert text.count("<polyline") == 1
