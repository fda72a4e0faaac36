import json
from fractions import Fraction

import numpy as np
import pytest

import addspec


def test_l_space_onb_is_orthonormal():
    pts = addspec.l_space_onb(8)
    assert len(pts) == 17
    assert pts[1] == (Fraction(1, 2), Fraction(-1, 2))
    g = addspec.gram_matrix(addspec.AdditiveSpace.l_space(), pts)
    assert g.shape == (17, 17)
    assert np.abs(g - np.eye(17)).max() < 1e-12


def test_rational_inputs():
    space = addspec.AdditiveSpace.symmetric(Fraction(-1, 3))
    assert space.name.startswith("Symmetric")
    same = addspec.AdditiveSpace.symmetric("-1/3")
    p, q = (0, 0), ("3/2", "-3/2")
    assert abs(space.inner(p, q)) < 1e-15
    assert space.inner(p, q) == same.inner(p, q)
    with pytest.raises(TypeError):
        addspec.AdditiveSpace.symmetric(0.5)


def test_measure_transform():
    m = addspec.Measure.unit_interval(0)
    assert m.fourier_transform(0.0) == 1.0
    assert abs(m.fourier_transform(3.0)) < 1e-15
    assert abs(m.fourier_transform(0.5) - 2j / np.pi) < 1e-15


def test_rectangle_loop_is_degenerate():
    rect = [(1, 1), (1, 3), (3, 3), (3, 1)]
    loop = addspec.find_zigzag_loop(rect)
    assert loop is not None and len(loop) == 5 and loop[0] == loop[-1]
    assert addspec.max_zigzag_length(rect)["unbounded_by_loop"]
    space = addspec.AdditiveSpace.plus_space()
    cert = addspec.section_certificate(space, rect, [4])
    assert cert["verdict"] == "degenerate"
    assert cert["null_quadratic_form"] < 1e-10
    assert addspec.alternating_zigzag_norm(space, loop) < 1e-12


def test_lev_set_bound():
    pts = addspec.lev_style_set(2, 7)
    z = addspec.max_zigzag_length(pts)
    assert z["length"] == 8
    lo, hi = addspec.extremal_eigenvalues(addspec.AdditiveSpace.l_space(), pts)
    assert 0 <= lo <= 2 / 8 and hi >= 1


def test_nonoverlap_and_m_tau():
    m = addspec.Measure.uniform([(-2, -1), (1, 2)])
    s = addspec.nonoverlap_riesz_spectrum(m, addspec.centered_lattice(Fraction(1, 2), 3))
    assert s["tau"] == Fraction(1, 4) and s["epsilon"] == Fraction(1, 4)
    assert len(s["pairs"]) == 14
    lo, hi = addspec.m_tau_eigenvalues(Fraction(1, 4), 2.0)
    assert abs(lo - 2) < 1e-15 and abs(hi - 2) < 1e-15
    with pytest.raises(addspec.AddspecError, match="overlapping-support"):
        addspec.nonoverlap_riesz_spectrum(addspec.Measure.unit_interval(0), [0])


def test_orthogonality_equation():
    assert addspec.residual(0, 0, 0.5, -0.5) < 1e-15
    with pytest.raises(addspec.AddspecError, match="multiplicity-one"):
        addspec.residual(0, 0, 0.0, 1.0)
    fam = addspec.solve_families(0, 0)
    assert fam["case"] == "L"
    assert [f["kind"] for f in fam["families"]] == ["integer-lattice", "antidiagonal-half-integer"]
    scan = addspec.scan_residual(0, 0, (-4, 4, -4, 4), 201)
    assert scan["roots_outside_families"] == 0
    assert scan["grid_roots_outside"] == 0
    report = addspec.classify_spectrum_candidates(Fraction(-1, 3), 50.0)
    assert report["verdict"] == "fails-landau"
    assert abs(report["density_exact"] - 2 / 3) < 1e-15


def test_collinear_demo():
    r = addspec.collinear_failure_demo(Fraction(1, 2), 16)
    assert r["ratio"] < 1e-10 and r["slope"] == Fraction(1, 2)
    with pytest.raises(addspec.AddspecError):
        addspec.collinear_failure_demo(2, 4)


def test_cli_in_process():
    status, out, err = addspec.run_cli(["construct", "l-onb", "--N", "2"])
    assert status == 0 and err == ""
    assert json.loads(out) == [["0/1", "0/1"], ["1/2", "-1/2"], ["-1/2", "1/2"], ["1/1", "-1/1"], ["-1/1", "1/1"]]
    status, _, err = addspec.run_cli(["bogus"])
    assert status == 2
    assert json.loads(err)["error"]["code"] == "usage"
