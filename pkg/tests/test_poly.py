import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ratbern.poly import (
    Polynomial,
    poly_derivative,
    poly_eval,
    poly_from_roots,
    reverse_conjugate,
)

from oracles import newton_refine, random_roots, root_product

complexes = st.complex_numbers(max_magnitude=10, allow_nan=False, allow_infinity=False)


def test_from_roots_single_factor():
    np.testing.assert_array_equal(poly_from_roots([-2], 1).coeffs, [2, 1])


def test_from_roots_empty_is_constant():
    p = poly_from_roots([], 5)
    np.testing.assert_array_equal(p.coeffs, [5])
    assert p.degree == 0


def test_from_roots_conjugate_pair():
    p = poly_from_roots([1 + 1j, 1 - 1j], 1)
    np.testing.assert_allclose(p.coeffs, [2, -2, 1], atol=0)


def test_from_roots_rejects_zero_leading():
    with pytest.raises(ValueError):
        poly_from_roots([1, 2], 0)


def test_degree_cap():
    with pytest.raises(ValueError):
        poly_from_roots(np.ones(31), 1)
    assert poly_from_roots(np.ones(31), 1, max_degree=40).degree == 31


def test_large_roots_keep_their_degree():
    # |c_0| / |c_n| = 3**30 is far beyond the trimming ratio
    assert poly_from_roots([3.0] * 30).degree == 30


@pytest.mark.parametrize(
    "coeffs, z, expected",
    [([2, -2, 1], 1, 1), ([8, 12, 6, 1], 1, 27)],
)
def test_eval_small(coeffs, z, expected):
    assert poly_eval(Polynomial(coeffs), z) == expected


def test_eval_matches_root_product():
    rng = np.random.default_rng(3)
    for _ in range(100):
        n = int(rng.integers(1, 13))
        roots = random_roots(rng, n, 0.1, 5)
        lead = complex(rng.normal(), rng.normal())
        z = complex(rng.normal(), rng.normal()) * 2
        p = poly_from_roots(roots, lead)
        ref = root_product(lead, roots, z)
        assert abs(poly_eval(p, z) - ref) <= 1e-12 * max(abs(ref), 1e-300) * 10 ** (n / 12)


def test_eval_vectorized():
    p = Polynomial([1, 2, 3])
    z = np.array([0, 1, -1, 1j])
    np.testing.assert_allclose(p(z), 1 + 2 * z + 3 * z**2)


def test_derivative_examples():
    np.testing.assert_array_equal(poly_derivative(Polynomial([8, 12, 6, 1])).coeffs, [12, 12, 3])
    assert poly_derivative(Polynomial([5])).is_zero
    d = poly_derivative(Polynomial([0] * 7 + [1]))
    np.testing.assert_array_equal(d.coeffs, [0] * 6 + [7])


def test_trailing_trim():
    p = Polynomial([1, 2, 1e-16])
    assert p.degree == 1
    assert Polynomial([0, 0]).is_zero


def test_reverse_conjugate_examples():
    np.testing.assert_array_equal(reverse_conjugate(Polynomial([2, 1]), 1).coeffs, [1, 2])
    np.testing.assert_array_equal(reverse_conjugate(Polynomial([0, 0, 0, 1])).coeffs, [1])


def test_reverse_conjugate_pads():
    q = reverse_conjugate(Polynomial([1j, 2]), 3)
    np.testing.assert_array_equal(q.coeffs, [0, 0, 2, -1j])


def test_reverse_conjugate_rejects_small_n():
    with pytest.raises(ValueError):
        reverse_conjugate(Polynomial([1, 2, 3]), 1)


def test_reverse_conjugate_carries_reflected_roots():
    p = poly_from_roots([2, 0.5j, -3 + 1j], 1 - 1j)
    q = reverse_conjugate(p, 4)
    assert q.roots is not None
    np.testing.assert_allclose(poly_eval(q, q.roots), 0, atol=1e-12)


def test_reverse_conjugate_involution_random():
    rng = np.random.default_rng(5)
    for _ in range(50):
        n = int(rng.integers(0, 10))
        c = rng.normal(size=n + 1) + 1j * rng.normal(size=n + 1)
        p = Polynomial(c)
        back = reverse_conjugate(reverse_conjugate(p, n), n)
        np.testing.assert_array_equal(back.coeffs, p.coeffs)


def test_expansion_round_trip_newton():
    rng = np.random.default_rng(11)
    for _ in range(40):
        n = int(rng.integers(1, 13))
        roots = random_roots(rng, n, 0.5, 10)
        # keep roots apart so each Newton start stays in its own basin
        if n > 1 and np.min(np.abs(roots[:, None] - roots[None, :]) + np.eye(n) * 99) < 0.3:
            continue
        p = poly_from_roots(roots, 1)
        for zj in roots:
            assert abs(newton_refine(p.coeffs, zj) - zj) < 1e-6


@settings(max_examples=200, deadline=None)
@given(st.lists(complexes, min_size=0, max_size=12), complexes.filter(lambda c: abs(c) > 1e-3))
def test_vieta_modulus(roots, lead):
    p = poly_from_roots(roots, lead)
    expected = abs(lead) * np.prod(np.abs(roots)) if roots else abs(lead)
    assert abs(p.coeffs[0]) == pytest.approx(expected, rel=1e-10, abs=1e-300)


@settings(max_examples=200, deadline=None)
@given(st.lists(complexes, min_size=1, max_size=12), complexes.filter(lambda c: abs(c) > 1e-3))
def test_coefficients_reproduce_roots(roots, lead):
    p = poly_from_roots(roots, lead)
    z = np.exp(1j * np.linspace(0, 2 * np.pi, 7))
    ref = root_product(lead, roots, z)
    scale = abs(lead) * np.prod([1 + abs(r) for r in roots])
    np.testing.assert_allclose(p(z), ref, atol=1e-12 * scale)


@settings(max_examples=100, deadline=None)
@given(st.lists(complexes, min_size=1, max_size=15))
def test_reverse_conjugate_modulus_on_circle(coeffs):
    p = Polynomial(coeffs)
    q = reverse_conjugate(p, len(coeffs) - 1)
    z = np.exp(2j * np.pi * np.arange(64) / 64)
    a, b = np.abs(p(z)), np.abs(q(z))
    scale = np.sum(np.abs(p.coeffs))
    np.testing.assert_allclose(b, a, rtol=1e-12, atol=1e-13 * scale)


def test_json_round_trip():
    p = poly_from_roots([1 + 2j, -0.5], 2 - 1j)
    data = json.loads(json.dumps(p.to_json()))
    q = Polynomial.from_json(data)
    np.testing.assert_array_equal(q.coeffs, p.coeffs)
    np.testing.assert_array_equal(q.roots, p.roots)
    assert Polynomial.from_json({"coeffs": [[1, 0]], "roots": None}).roots is None


def test_immutable():
    p = poly_from_roots([1, 2])
    with pytest.raises(ValueError):
        p.coeffs[0] = 3
