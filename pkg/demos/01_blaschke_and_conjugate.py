"""Blaschke products and the conjugate transform.

Build a small pole set, check that B is unimodular on the circle, that
|B'| has the additive form, and that r* = p*/w has the same modulus as r
on |z| = 1 although the two functions differ.
"""

import numpy as np

from ratbern import (
    PoleSet,
    blaschke_derivative_modulus,
    blaschke_eval,
    conjugate_transform,
    make_rational,
    poly_from_roots,
    rational_eval,
)

poles = PoleSet([2.0, -1.5j, 2.5 * np.exp(2.2j)])
z = np.exp(1j * np.linspace(0, 2 * np.pi, 7, endpoint=False))

print("|B(z)| on seven circle points:", np.round(np.abs(blaschke_eval(poles, z)), 15))

additive = sum((abs(a) ** 2 - 1) / np.abs(z - a) ** 2 for a in poles.poles)
print("max | |B'| - sum (|a|^2-1)/|z-a|^2 |:", np.max(np.abs(blaschke_derivative_modulus(poles, z) - additive)))

r = make_rational(poly_from_roots([1.5, -2 + 1j], 0.5 + 0.5j), poles)
rs = conjugate_transform(r)
print("numerator of r :", np.round(r.numerator.coeffs, 4))
print("numerator of r*:", np.round(rs.numerator.coeffs, 4))
print("max | |r*| - |r| | on the circle:", np.max(np.abs(np.abs(rational_eval(rs, z)) - np.abs(rational_eval(r, z)))))
print("r(0) =", rational_eval(r, 0), "  r*(0) =", rational_eval(rs, 0))
