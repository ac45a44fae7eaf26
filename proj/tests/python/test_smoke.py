from fractions import Fraction

import pytest

import mgnet


def test_wyner_closed_form():
    cf = mgnet.closed_form("wyner", "both-rx", 6, 3)
    assert cf["s_f"] == Fraction(3, 2)
    assert cf["s_s"] == Fraction(9, 8)
    assert cf["mu_rx"] == Fraction(21, 8)


def test_region_vertices():
    verts = mgnet.region("wyner", 6, 3, "9/8", "21/8")
    assert set(verts) == {
        (Fraction(0), Fraction(0)),
        (Fraction(0), Fraction(21, 8)),
        (Fraction(3, 2), Fraction(9, 8)),
        (Fraction(3, 2), Fraction(0)),
    }


def test_hex_loads_match():
    rep = mgnet.loads("hex", "both-rx", 8, 3)
    assert rep["valid"]
    assert rep["per_subnet_mu_tx"] == Fraction(5, 8)
    assert rep["per_subnet_mu_rx"] == Fraction(7, 4)


def test_precondition():
    with pytest.raises(ValueError, match="mod 3"):
        mgnet.closed_form("hex", "both-rx", 6, 3)


def test_figure_csv():
    assert mgnet.figure_ids() == ["fig5a", "fig5b", "fig8", "fig10"]
    text = mgnet.figure_csv("fig10")
    assert text.splitlines()[0].startswith("figure,series")
    assert mgnet.figure_csv("fig10") == text
