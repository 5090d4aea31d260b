"""
Hyperplanes of l1^n
===================

Closed form against the linear program, for a few functionals.
"""

from fractions import Fraction

from hyperproj import cross_polytope, is_max_l1, lambda_l1, min_projection_hyperplane

# All-equal coefficients give the worst case 2 - 2/n
for n in range(3, 9):
    lam, trace = lambda_l1([1] * n)
    print(n, lam, trace.branch)

# Two branches of the formula, checked against the LP on the cross-polytope
for f in ([1, Fraction(1, 10), Fraction(1, 10), Fraction(1, 10)], [2, 1, 1], [3, -2, 1, 1, 0]):
    lam, trace = lambda_l1(f)
    lp = min_projection_hyperplane(cross_polytope(len(f)), f).norm
    print(f"f={[str(x) for x in f]}  formula={lam}  lp={lp}  branch={trace.branch}  l={trace.l}")

print(is_max_l1([1, -1, 1]), is_max_l1([1, Fraction(1, 2), Fraction(1, 2)]))
