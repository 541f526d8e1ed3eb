import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ratbern.generators import InstanceSpec, gen_batch
from ratbern.norms import NormConfig, NormEstimate, norm_pair, sup_norm_circle
from ratbern.poly import Polynomial, poly_from_roots
from ratbern.rational import DomainError, make_rational

from oracles import brute_sup


@pytest.mark.parametrize(
    "p, expected",
    [
        (Polynomial([0, 0, 0, 1]), 1.0),
        (poly_from_roots([-1] * 3), 8.0),
        (poly_from_roots([-2] * 3), 27.0),
        (Polynomial([1, 1]), 2.0),
    ],
)
def test_closed_form_polynomials(p, expected):
    assert sup_norm_circle(p).value == pytest.approx(expected, rel=1e-12)


def test_single_pole_rational():
    # |(z + 1)/(z - 2)| peaks at z = 1 with value 2
    r = make_rational(poly_from_roots([-1]), [2])
    est = sup_norm_circle(r)
    assert est.value == pytest.approx(2.0, rel=1e-12)
    assert min(est.argmax_theta, 2 * math.pi - est.argmax_theta) < 1e-5


def test_off_grid_peak_is_refined():
    # a narrow peak at an angle that is not a grid node
    a = 1.02 * np.exp(1j * 0.123456789)
    f = lambda z: 1.0 / (z - a)
    est = sup_norm_circle(f, NormConfig(coarse_samples=256))
    assert est.refined
    assert est.value == pytest.approx(1 / 0.02, rel=1e-9)


def test_no_refinement():
    est = sup_norm_circle(Polynomial([1, 1]), NormConfig(refine_top=0))
    assert not est.refined
    assert est.samples_used == 4096


def test_config_validation():
    with pytest.raises(ValueError):
        NormConfig(coarse_samples=8)


def test_nonfinite_raises():
    with pytest.raises(DomainError), np.errstate(divide="ignore", invalid="ignore"):
        sup_norm_circle(lambda z: 1.0 / (z - 1.0))


def test_against_brute_force():
    insts = gen_batch(InstanceSpec(n=6, seed=7), 10, vary_n=True)
    for r in insts:
        est = sup_norm_circle(r)
        ref = brute_sup(r, 200_000)
        assert est.value >= ref * (1 - 1e-12)
        assert abs(est.value - ref) / ref < 1e-6


def test_norm_pair():
    r = make_rational(poly_from_roots([-2] * 2), [3, 3])
    nr, npoly = norm_pair(r)
    assert npoly.value == pytest.approx(9)
    assert nr.value == pytest.approx(9 / 4)


def test_estimate_json():
    est = NormEstimate(1.5, 0.25, 100, True)
    assert NormEstimate.from_json(est.to_json()) == est


@settings(max_examples=60, deadline=None)
@given(
    st.lists(st.complex_numbers(max_magnitude=3, allow_nan=False, allow_infinity=False), min_size=1, max_size=6),
    st.floats(0.1, 10),
)
def test_norm_scales_linearly(coeffs, c):
    p = Polynomial(coeffs)
    if p.is_zero:
        return
    a = sup_norm_circle(p).value
    b = sup_norm_circle(Polynomial(np.asarray(coeffs) * c)).value
    assert b == pytest.approx(c * a, rel=1e-9)


@settings(max_examples=60, deadline=None)
@given(
    st.lists(st.complex_numbers(max_magnitude=3, allow_nan=False, allow_infinity=False), min_size=1, max_size=6),
    st.floats(0, 2 * math.pi),
)
def test_norm_rotation_invariant(coeffs, phi):
    p = Polynomial(coeffs)
    rotated = Polynomial(np.asarray(p.coeffs) * np.exp(1j * phi * np.arange(len(p.coeffs))))
    a = sup_norm_circle(p).value
    b = sup_norm_circle(rotated).value
    assert b == pytest.approx(a, rel=1e-9, abs=1e-12)
