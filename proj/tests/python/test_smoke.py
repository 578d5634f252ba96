"""Smoke tests for the python module (built by CMake or scikit-build-core)."""

import math

import numpy as np
import pytest

import spinent


def test_table_one_anchors():
    assert spinent.report(100, 10, 0.0).e_param == pytest.approx(1440000.0, rel=1e-9)
    assert spinent.report(100, 20, 0.1).e_param == pytest.approx(19162.98, rel=5e-3)
    assert spinent.report(100, 40, 0.2).e_param == pytest.approx(1470.5, rel=5e-3)


def test_stretched_state_is_unentangled():
    for xi in (0.0, 0.7, 3.0):
        assert abs(spinent.report(100, 50, xi).e_param) < 1e-10


def test_closed_form_matches_dense_oracle():
    closed = spinent.report(100, 10, 1.0)
    dense = spinent.report(100, 10, 1.0, oracle=True)
    assert dense.var_xp == pytest.approx(closed.var_xp, rel=1e-8)
    assert dense.var_yp == pytest.approx(closed.var_yp, rel=1e-8)
    assert dense.e_param == pytest.approx(closed.e_param, rel=1e-8)


def test_degenerate_point_raises():
    with pytest.raises(spinent.DegenerateFrameError):
        spinent.report(100, 0, 0.0)


def test_wigner_matrix_is_orthogonal():
    d = spinent.wigner_d_matrix(10, 0.77)
    assert np.max(np.abs(d @ d.T - np.eye(11))) < 1e-13


def test_state_amplitudes_are_numpy():
    state = spinent.build_state(4, 1, 0.5)
    amps = np.asarray(state.amplitudes)
    assert amps.shape == (5,)
    assert np.linalg.norm(amps) == pytest.approx(1.0, abs=1e-12)
    assert spinent.lambda_residual(4, 1, 0.5) < 1e-12


def test_sweep_rows_follow_grid_order():
    rows = spinent.sweep_xi(100, [10, 20], [0.0, 0.1])
    assert [(r.two_m, r.xi) for r in rows] == [
        (20, 0.0),
        (20, 0.1),
        (40, 0.0),
        (40, 0.1),
    ]
    assert rows[0].e_param == pytest.approx(1440000.0, rel=1e-9)
    assert rows[3].e_param == pytest.approx(19162.98, rel=5e-3)


def test_moments_casimir():
    st = spinent.build_state(30, 3, 0.9)
    t = spinent.moments(st)
    j = 15.0
    assert t.jx2 + t.jy2 + t.jz2 == pytest.approx(j * (j + 1), rel=1e-12)
    cf = spinent.closed_form_moments(30, 3, 0.9)
    assert cf.jx == pytest.approx(t.jx, rel=1e-10)
    assert cf.jz2 == pytest.approx(t.jz2, rel=1e-10)


def test_log_factorial():
    assert spinent.log_factorial(5) == pytest.approx(math.log(120.0), rel=1e-15)
