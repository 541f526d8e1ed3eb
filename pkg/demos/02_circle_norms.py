"""Sup norm on the unit circle: coarse grid versus refined estimate.

A pole just outside the circle gives a sharp peak between grid nodes.
The coarse maximum undershoots; golden-section refinement recovers the
closed-form value 1/(|a| - 1).
"""

import numpy as np

from ratbern import NormConfig, make_rational, poly_from_roots, sup_norm_circle

a = 1.01 * np.exp(0.3141j)
r = make_rational(poly_from_roots([]), [a])
exact = 1 / (abs(a) - 1)

for samples in (64, 256, 4096):
    coarse = sup_norm_circle(r, NormConfig(coarse_samples=samples, refine_top=0))
    fine = sup_norm_circle(r, NormConfig(coarse_samples=samples))
    print(
        f"{samples:5d} samples: grid {coarse.value:.10f}  refined {fine.value:.10f}"
        f"  exact {exact:.10f}  argmax {fine.argmax_theta:.6f}"
    )
