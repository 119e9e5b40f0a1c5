import math

import numpy as np
import pytest
import scipy.integrate

from baselftc.core import HALF_PI, eval_dfdt, gprime_closed
from baselftc.leibniz import (
    StepSizeError,
    check_domination,
    check_endpoint_continuity,
    check_leibniz,
    endpoint_dense_grid,
    endpoint_gaps,
)
from baselftc.quadrature import QuadConfig

CFG = QuadConfig(1e-10)


def test_domination_pointwise_examples():
    assert abs(eval_dfdt(math.pi / 4, 1.0)) * 2 * 1.0 == 1.0
    assert abs(eval_dfdt(math.pi / 4, 0.25)) * 2 * 0.25 == pytest.approx(0.8, abs=1e-15)


def test_domination_equality_curve():
    # AM-GM is tight on t = tan^2 x
    for t in np.linspace(0.01, 1.0, 50):
        x = math.atan(math.sqrt(t))
        assert abs(eval_dfdt(x, t)) * 2 * t == pytest.approx(1.0, abs=1e-12)


def test_domination_full_grid():
    rep = check_domination(0.01, 200, 200)
    assert rep.passed
    assert rep.max_violation <= 0.0
    assert len(rep.grid) == 200 * 200
    assert all(0.0 < x < HALF_PI and 0.01 < t < 1.0 for x, t in rep.grid)
    assert rep.all_finite
    # brute-force: independent sweep with the naive tan formula on the same points
    brute = max(abs(math.tan(x) / (math.sqrt(t) * (t + math.tan(x) ** 2))) - 1 / (2 * t) for x, t in rep.grid)
    assert brute <= 1e-12


def test_grid_is_endpoint_dense():
    xs = endpoint_dense_grid(200)
    assert np.all(np.diff(xs) > 0)
    assert xs[0] < 1e-5 and HALF_PI - xs[-1] < 1e-5
    assert 0 < xs[0] and xs[-1] < HALF_PI


@pytest.mark.parametrize("args", [(0.0, 10, 10), (1.0, 10, 10), (0.5, 1, 10), (0.5, 10, 1)])
def test_domination_bad_args(args):
    with pytest.raises(ValueError):
        check_domination(*args)


@pytest.mark.parametrize("t, expected", [(0.5, -0.9802581434685471), (0.25, -1.8483924814931874)])
def test_leibniz_examples(t, expected):
    chk = check_leibniz(t, 1e-5, CFG, 1e-6)
    assert chk.passed
    assert chk.closed_form == pytest.approx(expected, rel=1e-15)
    for v in (chk.fd_value, chk.quad_of_dfdt):
        assert abs(v - expected) <= 1e-6


def test_leibniz_quad_leg_matches_scipy():
    # independent quadrature engine as an oracle for the middle leg
    t = 0.3
    ref, _ = scipy.integrate.quad(lambda x: eval_dfdt(x, t), 0, HALF_PI, epsabs=1e-13, epsrel=0)
    assert check_leibniz(t, 1e-5, CFG).quad_of_dfdt == pytest.approx(ref, abs=1e-11)


@pytest.mark.parametrize("t, h", [(0.999999, 1e-5), (1e-6, 1e-5), (0.5, 0.0), (0.5, 0.6)])
def test_leibniz_step_error(t, h):
    with pytest.raises(StepSizeError):
        check_leibniz(t, h, CFG)


@pytest.mark.parametrize("t", [round(0.1 * k, 1) for k in range(1, 10)])
def test_three_way_agreement(t):
    assert check_leibniz(t, 1e-5, CFG, 1e-6).passed


def test_fd_error_is_second_order():
    cfg = QuadConfig(1e-13)
    devs = [check_leibniz(0.5, h, cfg).fd_value - gprime_closed(0.5) for h in (2e-2, 1e-2, 5e-3)]
    for a, b in zip(devs, devs[1:]):
        assert a / b == pytest.approx(4.0, abs=0.5)


def test_continuity_at_zero_spec_sequence():
    # g(t) - g(0) ~ sqrt(t) (log t - 2): the gap at t = 1e-3 is about 0.28, not < 0.05
    gaps = endpoint_gaps(0, [0.1, 0.01, 0.001], CFG)
    assert gaps[-1] < gaps[0]
    assert gaps[-1] == pytest.approx(0.2817678428782324, abs=1e-8)
    assert not check_endpoint_continuity(0, [0.1, 0.01, 0.001], CFG, 0.05)


def test_continuity_at_zero_longer_sequence():
    seq = [10.0**-k for k in range(1, 6)]
    assert check_endpoint_continuity(0, seq, CFG, 0.05)


def test_continuity_at_zero_rate():
    for t in (1e-4, 1e-6, 1e-8):
        gap = endpoint_gaps(0, [t], QuadConfig(1e-12))[0]
        leading = -math.sqrt(t) * (math.log(t) - 2)
        assert gap == pytest.approx(leading, rel=0.05)


def test_continuity_at_one():
    seq = [0.9, 0.99, 0.999]
    assert check_endpoint_continuity(1, seq, CFG, 0.05)
    gaps = endpoint_gaps(1, seq, CFG)
    # g(1 - s) - g(1) ~ s / 2
    assert gaps[-1] == pytest.approx(0.0005, rel=1e-2)


def test_continuity_single_far_point():
    assert not check_endpoint_continuity(0, [0.5], CFG, 1e-9)


@pytest.mark.parametrize("end, seq", [(0, [0.01, 0.1]), (1, [0.99, 0.9]), (2, [0.5]), (0, []), (0, [0.0])])
def test_continuity_bad_sequences(end, seq):
    with pytest.raises(ValueError):
        endpoint_gaps(end, seq, CFG)
