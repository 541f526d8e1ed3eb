"""What the free parameter beta does to the main bound.

With beta = 0 the bound holds on random instances and is tight on the
extremal family. For nonzero beta the stated right-hand side can fall
below the left-hand side. The smallest example is r = (z - 2)/(z - 3)
with k = 1 and beta = -1 at z = 1, where lhs = 3/2 and rhs = 13/18.
"""

import cmath

import numpy as np

from ratbern import Case, InstanceSpec, check_rational, gen_batch, make_rational, poly_from_roots, run_suite

r = make_rational(poly_from_roots([2.0]), [3.0])
rep = check_rational("thm21", r, k=1.0, beta=-1.0)
print(f"(z-2)/(z-3), beta=-1: lhs {rep.lhs:.6f}  rhs {rep.rhs:.6f}  passed={rep.passed}")

insts = gen_batch(InstanceSpec(n=6, k=1.5, seed=4), 100, vary_n=True)
print("\nbeta                 failures / points   min slack")
for beta in (0, 0.5, -0.5, 0.5j, 0.7 * cmath.exp(1j * np.pi / 4)):
    suite = run_suite([Case(f, 1.5, beta, i) for i, f in enumerate(insts)], ["thm21"], grid_size=64)
    c = suite.counts
    print(f"{str(np.round(complex(beta), 3)):20s} {c['fail']:6d} / {c['total']:<8d}  {suite.min_slack('thm21'):+.3e}")
