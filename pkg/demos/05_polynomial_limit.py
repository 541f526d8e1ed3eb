"""Pushing the poles to infinity recovers the polynomial bound.

With all n poles at alpha, r = p/(z - alpha)^n. As alpha grows the
rational coefficient bound, multiplied back by |p(z)|, approaches the
polynomial version. The deviation shrinks like 1/alpha.
"""

import numpy as np

from ratbern import PoleSet, evaluate_check, make_rational, poly_from_roots

p = poly_from_roots([-2.0] * 3)
thetas = np.linspace(0, 2 * np.pi, 64, endpoint=False)
ref, _ = evaluate_check("cor27", p, thetas, k=2.0, beta=0.5)
pz = np.abs(p(np.exp(1j * thetas)))

for alpha in (1e1, 1e2, 1e3, 1e4, 1e5, 1e6):
    got, _ = evaluate_check("cor24", make_rational(p, PoleSet([alpha] * 3)), thetas, k=2.0, beta=0.5)
    dev = max(abs(g.rhs * w - f.rhs) / abs(f.rhs) for g, f, w in zip(got, ref, pz))
    print(f"alpha {alpha:8.0e}: max relative deviation of rhs {dev:.3e}   alpha * dev {alpha * dev:.3f}")
