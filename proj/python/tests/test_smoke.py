from fractions import Fraction

import pytest

import cmint


def test_validate_admissible_and_not():
    assert cmint.validate(5, -13, 1, 0, 1) == []
    codes = cmint.validate(6, -13, 1, 0, 1)
    assert len(codes) == 2


def test_intersect_small_fields():
    assert cmint.intersect(5, -13, 1, 0, 1) == {2: Fraction(1)}
    assert cmint.intersect(5, -18, 4, 1, 0, jobs=2) == {3: Fraction(1)}
    assert cmint.intersect(5, -5, -1, 1, 1) == {}


def test_invalid_field_raises():
    with pytest.raises(cmint.CmFieldError):
        cmint.intersect(5, -13, 1, 0, 0)


def test_b1_comparison_holds():
    rows = cmint.b1_comparison(5, -13, 1, 0, 1)
    assert all(r["ok"] for r in rows)
    assert any(r["p"] == 2 and r["b1"] == 2 for r in rows)


def test_degenerate_case_matches_oracle():
    import math

    coeffs = cmint.gz_total(-3, -7)
    assert coeffs == {3: Fraction(1), 5: Fraction(1)}
    formula = sum(float(c) * math.log(p) for p, c in coeffs.items())
    assert abs(float(cmint.singular_moduli_log(-3, -7, 40)) - formula) < 1e-12


def test_enumerate_fields():
    fields = cmint.enumerate_fields(5, 100)
    assert len(fields) == 5
    assert {f["Dtilde"] for f in fields} == {5, 41, 61}
