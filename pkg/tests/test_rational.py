import json
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ratbern.generators import gen_poleset
from ratbern.poly import Polynomial, poly_from_roots
from ratbern.rational import (
    CirclePoint,
    DomainError,
    HypothesisError,
    PoleSet,
    RationalFn,
    blaschke_as_rational,
    blaschke_derivative,
    blaschke_derivative_modulus,
    blaschke_eval,
    conjugate_transform,
    denominator_eval,
    make_rational,
    rational_derivative_eval,
    rational_eval,
)

from oracles import (
    blaschke_derivative_modulus_additive,
    blaschke_direct,
    central_difference,
    factored_rational,
    random_roots,
)

CIRCLE = np.exp(2j * np.pi * np.arange(64) / 64)


def test_poleset_rejects_inside_and_margin():
    with pytest.raises(HypothesisError):
        PoleSet([0.5])
    with pytest.raises(HypothesisError):
        PoleSet([1.0 + 1e-6])
    assert PoleSet([1.0 + 1e-5]).n == 1


def test_circle_point_wraps():
    assert CirclePoint(2 * math.pi + 0.5).theta == pytest.approx(0.5)
    assert CirclePoint(math.pi).z == pytest.approx(-1)


def test_make_rational_degree_and_collision():
    with pytest.raises(ValueError):
        make_rational(Polynomial([1, 1, 1]), [2])
    with pytest.raises(ValueError):
        make_rational(poly_from_roots([2.0]), [2.0])


def test_one_pole_example():
    r = make_rational(poly_from_roots([-1]), [2])
    assert rational_eval(r, 1) == pytest.approx(-2)
    # r' = -3/(z-2)^2
    assert rational_derivative_eval(r, 1) == pytest.approx(-3)


def test_pole_guard_reports_index():
    ps = PoleSet([3, 2])
    with pytest.raises(DomainError) as info:
        denominator_eval(ps, 2 + 1e-14)
    assert info.value.pole_index == 1


def test_blaschke_single_pole_closed_form():
    # B = (1 - 2z)/(z - 2); at z=1: B = 1, B' = 3/(z-2)^2 = 3
    assert blaschke_eval([2], 1) == pytest.approx(1)
    assert blaschke_derivative([2], 1) == pytest.approx(3)
    assert blaschke_derivative_modulus([2], 1) == pytest.approx(3)


def test_blaschke_unimodular_and_additive_modulus():
    rng = np.random.default_rng(1)
    for _ in range(100):
        ps = gen_poleset(int(rng.integers(1, 9)), rng)
        b = blaschke_eval(ps, CIRCLE)
        np.testing.assert_allclose(np.abs(b), 1, atol=1e-12)
        np.testing.assert_allclose(b, blaschke_direct(ps.poles, CIRCLE), rtol=1e-12)
        np.testing.assert_allclose(
            blaschke_derivative_modulus(ps, CIRCLE),
            blaschke_derivative_modulus_additive(ps.poles, CIRCLE),
            rtol=1e-11,
        )


def test_blaschke_derivative_against_finite_difference():
    rng = np.random.default_rng(2)
    for _ in range(30):
        ps = gen_poleset(int(rng.integers(1, 7)), rng)
        fd = central_difference(lambda z: blaschke_direct(ps.poles, z), CIRCLE)
        np.testing.assert_allclose(blaschke_derivative(ps, CIRCLE), fd, rtol=1e-6, atol=1e-7)


def test_rational_eval_matches_factored_form():
    rng = np.random.default_rng(3)
    for _ in range(100):
        n = int(rng.integers(1, 9))
        m = int(rng.integers(0, n + 1))
        roots = random_roots(rng, m, 0.2, 3)
        poles = random_roots(rng, n, 1.5, 2.5)
        lead = complex(np.exp(1j * rng.uniform(0, 6)))
        r = make_rational(poly_from_roots(roots, lead), poles)
        ref = factored_rational(lead, roots, poles, CIRCLE)
        np.testing.assert_allclose(rational_eval(r, CIRCLE), ref, rtol=1e-11)
        fd = central_difference(lambda z: factored_rational(lead, roots, poles, z), CIRCLE)
        scale = np.abs(ref).max() + 1
        np.testing.assert_allclose(rational_derivative_eval(r, CIRCLE), fd, atol=1e-6 * scale * 10)


def test_conjugate_transform_matches_direct_definition():
    rng = np.random.default_rng(4)
    for _ in range(50):
        n = int(rng.integers(1, 8))
        roots = random_roots(rng, int(rng.integers(0, n + 1)), 0.3, 3)
        poles = random_roots(rng, n, 1.5, 2.5)
        r = make_rational(poly_from_roots(roots, 1 + 0.5j), poles)
        direct = blaschke_direct(poles, CIRCLE) * np.conj(rational_eval(r, 1 / np.conj(CIRCLE)))
        np.testing.assert_allclose(rational_eval(conjugate_transform(r), CIRCLE), direct, rtol=1e-10, atol=1e-12)
        np.testing.assert_allclose(
            np.abs(rational_eval(conjugate_transform(r), CIRCLE)),
            np.abs(rational_eval(r, CIRCLE)),
            rtol=1e-11,
        )


def test_blaschke_as_rational_agrees():
    ps = PoleSet([2, -1.5j, 3 + 1j])
    b = blaschke_as_rational(ps)
    np.testing.assert_allclose(rational_eval(b, CIRCLE), blaschke_eval(ps, CIRCLE), rtol=1e-12)
    # B* = 1 for the Blaschke product itself
    np.testing.assert_allclose(rational_eval(conjugate_transform(b), CIRCLE), 1, atol=1e-12)


@settings(max_examples=100, deadline=None)
@given(
    st.lists(
        st.tuples(st.floats(1.01, 5), st.floats(0, 2 * math.pi)), min_size=1, max_size=8
    ),
    st.floats(0, 2 * math.pi),
)
def test_unimodular_property(polar, theta):
    poles = [m * np.exp(1j * a) for m, a in polar]
    assert abs(abs(blaschke_eval(poles, np.exp(1j * theta))) - 1) < 1e-12


def test_json_round_trip():
    r = make_rational(poly_from_roots([1.5j, -2]), [2, 3j, -4])
    data = json.loads(json.dumps(r.to_json()))
    s = RationalFn.from_json(data)
    np.testing.assert_array_equal(s.poles.poles, r.poles.poles)
    np.testing.assert_array_equal(s.numerator.coeffs, r.numerator.coeffs)
    assert PoleSet.from_json(r.poles.to_json()).n == 3


def test_derivative_matches_log_derivative_form():
    rng = np.random.default_rng(8)
    for _ in range(100):
        n = int(rng.integers(1, 9))
        roots = random_roots(rng, n, 1.0, 3)
        poles = random_roots(rng, n, 1.5, 2.5)
        r = make_rational(poly_from_roots(roots, np.exp(1j * rng.uniform(0, 6))), poles)
        val = rational_eval(r, CIRCLE)
        scale = np.abs(val).max()
        ok = np.abs(val) > 1e-10 * scale
        z = CIRCLE[ok]
        log_form = val[ok] * (np.sum(1 / (z[:, None] - roots), 1) - np.sum(1 / (z[:, None] - poles), 1))
        np.testing.assert_allclose(rational_derivative_eval(r, z), log_form, rtol=1e-9)
