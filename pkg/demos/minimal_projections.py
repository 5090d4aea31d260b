"""
Minimal projections onto planes of 3D polyhedral spaces
=======================================================
"""

from fractions import Fraction

from hyperproj import (
    SymmetricPolytope,
    cube,
    helly_witness,
    min_projection_hyperplane,
    norm_of,
    projection_onto_plane,
    reduce_to_extreme,
)

c = cube(3)
p = min_projection_hyperplane(c, [1, 1, 1])
print("cube, x+y+z=0:", p.norm, "direction", [str(x) for x in p.r])
print("cube, x=0:", min_projection_hyperplane(c, [1, 0, 0]).norm)

# The n vertices that already force the full constant
value, witness = helly_witness(c, [1, 1, 1])
print("helly:", value, [[str(x) for x in v] for v in witness])

# Push one vertex pair of the cube inwards
verts = [v for v in c.vertices if v not in {(1, 1, 1), (-1, -1, -1)}]
verts += [(1, 1, Fraction(9, 10)), (-1, -1, Fraction(-9, 10))]
ball = reduce_to_extreme(SymmetricPolytope(3, tuple(verts)))
print("perturbed cube, x+y+z=0:", min_projection_hyperplane(ball, [1, 1, 1]).norm)

x, y = (1, 1, -1), (1, 1, Fraction(9, 10))
A = 2 - norm_of(ball, [a - b for a, b in zip(x, y)])
plane = projection_onto_plane(ball, x, y, A)
print("A =", A, " plane projection norm", plane.norm, "<=", 1 / (1 - A))
