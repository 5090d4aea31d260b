"""
Which hyperplanes are as bad as possible?
=========================================

Certificates, the sandwich picture and a norm-one plane inside each
maximal hyperplane.
"""

from hyperproj import (
    check_bohnenblust_equality,
    cross_polytope,
    cube,
    enumerate_max_hyperplanes,
    parallelogram_section,
    sandwich_check,
)


def show(v):
    return "(" + ", ".join(str(x) for x in v) + ")"


for name, ball in (("cube3", cube(3)), ("cross3", cross_polytope(3)), ("cube4", cube(4))):
    found = enumerate_max_hyperplanes(ball)
    print(f"{name}: {len(found)} maximal hyperplanes")
    for f in found:
        cert = check_bohnenblust_equality(ball, f)
        (x, y), proj = parallelogram_section(ball, cert)
        print(
            "  ker", show(f),
            "witnesses", " ".join(show(w) for w in cert.witnesses),
            "sandwich", sandwich_check(ball, cert.witnesses),
            "plane", show(x), show(y), "norm", proj.norm,
        )

# Witnesses with the wrong sign pattern fail the sandwich test
print(sandwich_check(cube(3), [(1, 1, 1), (1, -1, 1), (-1, 1, 1)]))
