"""Equality in the refined bound for ((z + k)/(z - a))^n at z = 1.

For beta = 0 every member of the extremal family attains the bound at
z = 1. The single-pole case n = 1, k = 2, a = 3 gives 5/6 on both sides.
"""

from ratbern import CirclePoint, check_rational, extremal_instance

print(" n    k    a        lhs                 rhs              slack")
for n in (1, 2, 3):
    for k in (1.0, 2.0):
        for a in (2.0, 3.0):
            rep = check_rational("thm21", extremal_instance(n, k, a), k=k, z=CirclePoint(0.0))
            print(f"{n:2d} {k:4.1f} {a:4.1f}  {rep.lhs:.15f}  {rep.rhs:.15f}  {rep.slack:+.1e}")

rep = check_rational("thm21", extremal_instance(1, 2.0, 3.0), k=2.0)
print("\nn=1, k=2, a=3:", rep.lhs, rep.rhs, "(5/6 =", 5 / 6, ")")
