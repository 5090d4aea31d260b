"""
Near-maximal planes in dimension three
======================================

Rigorous interval enclosures for phi, the two candidate bounds and the
numerical verification at R = 7/10000.
"""

from fractions import Fraction

from hyperproj import l12_threshold, maxmin3_bound, phi, verify_bosz3

for A in (0, Fraction(1, 21), Fraction(1, 10), Fraction(3, 10)):
    t = l12_threshold(A, 20)
    print("r(%s) in" % A, t.r_val.to_json(20))

R = Fraction(7, 10000)
print("phi(R):", phi(R, 30).to_json(30))

rep = maxmin3_bound(R, 30)
print("stated bound:", rep.stated_bound.to_json(12))
print("proof bound: ", rep.proof_bound.to_json(12))

rep = verify_bosz3(50)
print(rep.status, "target", rep.target, "s < 1/3:", rep.s_lt_third, "bound < target:", rep.bound_lt_target)
print("proof variant below target:", rep.proof_bound_lt_target)
