"""Minimal projections onto hyperplanes and planes of polyhedral-norm spaces.

Every projection onto ``Y = ker f`` has the form ``P(x) = x - f(x) r`` with
``f(r) = 1``.  Since the ball is the hull of its vertices and the norm is the
maximum of the facet functionals, ``||P|| <= t`` is the finite linear system
``g(v) - f(v) g(r) <= t`` over vertices ``v`` and facets ``g``; minimizing
``t`` is an LP whose optimum is the relative projection constant.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InvalidInput, InvariantViolation
from .exact import (
    OPTIMAL,
    LinearProgram,
    Matrix,
    Vector,
    add,
    as_fraction,
    dot,
    matrix_rank,
    matvec,
    scale,
    solve_lp,
    sub,
    vector,
)
from .polytope import Functional, SymmetricPolytope, dual_norm_of, fmt_vec, norm_of


@dataclass(frozen=True)
class HyperplaneProjection:
    """``P(x) = x - f(x) r`` onto ``ker f``, with its exact operator norm."""

    f: Functional
    r: Vector
    norm: Fraction

    def __call__(self, x: Sequence) -> Vector:
        x = vector(x)
        return sub(x, scale(dot(self.f, x), self.r))

    def matrix(self) -> Matrix:
        n = len(self.f)
        return tuple(
            tuple(Fraction(int(i == j)) - self.r[i] * self.f[j] for j in range(n)) for i in range(n)
        )


@dataclass(frozen=True)
class PlaneProjection:
    """``P(v) = p1(v) u + p2(v) w`` onto ``span{x, y}``, ``u = (x+y)/2``, ``w = (x-y)/2``."""

    basis: tuple[Vector, Vector]
    coefficient_functionals: tuple[Functional, Functional]
    norm: Fraction

    def __call__(self, v: Sequence) -> Vector:
        v = vector(v)
        x, y = self.basis
        u = scale(Fraction(1, 2), add(x, y))
        w = scale(Fraction(1, 2), sub(x, y))
        p1, p2 = self.coefficient_functionals
        return add(scale(dot(p1, v), u), scale(dot(p2, v), w))

    def matrix(self) -> Matrix:
        n = len(self.basis[0])
        cols = [self(tuple(Fraction(int(i == j)) for i in range(n))) for j in range(n)]
        return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))


def _check_functional(ball: SymmetricPolytope, f: Sequence) -> Functional:
    f = vector(f)
    if len(f) != ball.dim:
        raise InvalidInput(f"functional of length {len(f)} in a {ball.dim}-dimensional space")
    if all(x == 0 for x in f):
        raise InvalidInput("f must be nonzero")
    return f


def operator_norm(ball: SymmetricPolytope, m: Matrix) -> Fraction:
    """Exact ``max_v ||M v||`` over the vertices of ``ball``."""
    if len(m) != ball.dim or any(len(row) != ball.dim for row in m):
        raise InvalidInput(f"operator must be {ball.dim}x{ball.dim}")
    return max(norm_of(ball, matvec(m, v)) for v in ball.vertices)


def _hyperplane_lp(ball: SymmetricPolytope, f: Functional, points: Sequence[Vector]) -> LinearProgram:
    n = ball.dim
    lhs, rhs = [], []
    for v in points:
        fv = dot(f, v)
        for g in ball.facets:
            lhs.append(tuple(-fv * gi for gi in g) + (Fraction(-1),))
            rhs.append(-dot(g, v))
    objective = (Fraction(0),) * n + (Fraction(1),)
    return LinearProgram(objective, lhs, rhs, (tuple(f) + (Fraction(0),),), (Fraction(1),))


def _solve_hyperplane(ball, f, points) -> tuple[Fraction, Vector]:
    sol = solve_lp(_hyperplane_lp(ball, f, points))
    if sol.status != OPTIMAL:
        raise InvariantViolation(f"projection LP is {sol.status}")
    return sol.value, sol.point[:-1]


def min_projection_hyperplane(ball: SymmetricPolytope, f: Sequence) -> HyperplaneProjection:
    """Minimal projection onto ``ker f``; its norm is the relative projection constant.

    Only one vertex of each antipodal pair is needed since ``||P(-v)|| = ||P(v)||``.
    """
    f = _check_functional(ball, f)
    value, r = _solve_hyperplane(ball, f, ball.vertex_pairs)
    proj = HyperplaneProjection(f, r, value)
    if operator_norm(ball, proj.matrix()) != value:
        raise InvariantViolation("LP optimum differs from the vertex-maximum norm")
    return proj


def transfer_from_l1(
    ball: SymmetricPolytope, f: Sequence, points: Sequence[Sequence], r_l1: Sequence
) -> HyperplaneProjection:
    """Lift a projection of l1^n onto ``ker g``, ``g = (f(x_1), ..., f(x_n))``, to ``X``.

    The lifted direction is ``r~ = sum r_i x_i``; then ``f(r~) = g(r) = 1`` and
    ``||P x_i||`` is bounded by the l1 norm of the image of ``e_i``.
    """
    f = _check_functional(ball, f)
    pts = [vector(p) for p in points]
    r_l1 = vector(r_l1)
    if len(pts) != ball.dim or len(r_l1) != ball.dim:
        raise InvalidInput(f"need exactly {ball.dim} points and {ball.dim} coefficients")
    for p in pts:
        if norm_of(ball, p) != 1:
            raise InvalidInput(f"point {fmt_vec(p)} is not a unit vector")
    g = tuple(dot(f, p) for p in pts)
    if dot(g, r_l1) != 1:
        raise InvalidInput("r_l1 must satisfy g(r_l1) = 1")
    direction = tuple(Fraction(0) for _ in range(ball.dim))
    for ri, p in zip(r_l1, pts):
        direction = add(direction, scale(ri, p))
    proj = HyperplaneProjection(f, direction, Fraction(0))
    proj = HyperplaneProjection(f, direction, operator_norm(ball, proj.matrix()))
    for i, (p, bound) in enumerate(zip(pts, l1_side_bounds(g, r_l1))):
        if norm_of(ball, proj(p)) > bound:
            raise InvariantViolation(f"||P x_{i + 1}|| exceeds its l1 bound {bound}")
    return proj


def l1_side_bounds(g: Sequence[Fraction], r: Sequence[Fraction]) -> list[Fraction]:
    """``|1 - g_i r_i| + sum_{j != i} |g_i r_j|`` for each ``i``."""
    return [
        abs(1 - gi * r[i]) + sum(abs(gi * rj) for j, rj in enumerate(r) if j != i) for i, gi in enumerate(g)
    ]


def helly_witness(ball: SymmetricPolytope, f: Sequence) -> tuple[Fraction, tuple[Vector, ...]]:
    """The ``n`` vertices that are hardest to project simultaneously.

    For every ``n``-subset ``S`` of vertices (one per antipodal pair) the LP
    is restricted to ``S``; the largest restricted optimum equals the full
    projection constant.  Ties keep the lexicographically first subset.
    """
    f = _check_functional(ball, f)
    reps = ball.vertex_pairs
    if len(reps) < ball.dim:
        raise InvalidInput("fewer vertex pairs than the dimension")
    best, witness = None, None
    for subset in itertools.combinations(reps, ball.dim):
        value, _ = _solve_hyperplane(ball, f, subset)
        if best is None or value > best:
            best, witness = value, subset
    return best, witness


def extend_functional(
    ball: SymmetricPolytope, subspace_basis: Sequence[Sequence], values: Sequence, bound
) -> Functional | None:
    """Extension ``p`` with ``p(basis_i) = values_i`` and dual norm ``<= bound``.

    Among admissible extensions the one of least dual norm is returned.  None
    means no extension exists, i.e. the functional already has dual norm
    above ``bound`` on the subspace.
    """
    basis = [vector(b) for b in subspace_basis]
    values = [as_fraction(v) for v in values]
    bound = as_fraction(bound)
    if bound <= 0:
        raise InvalidInput("bound must be positive")
    if len(basis) != len(values):
        raise InvalidInput("basis and values differ in length")
    if matrix_rank(basis) < len(basis):
        raise InvalidInput("subspace basis is linearly dependent")
    n = ball.dim
    lhs, rhs = [], []
    for v in ball.vertex_pairs:
        lhs.append(tuple(v) + (Fraction(-1),))
        lhs.append(tuple(-a for a in v) + (Fraction(-1),))
        rhs += [Fraction(0), Fraction(0)]
    lhs.append((Fraction(0),) * n + (Fraction(1),))
    rhs.append(bound)
    eq = [tuple(b) + (Fraction(0),) for b in basis]
    lp = LinearProgram((Fraction(0),) * n + (Fraction(1),), lhs, rhs, eq, values)
    sol = solve_lp(lp)
    if sol.status != OPTIMAL:
        return None
    p = sol.point[:-1]
    if dual_norm_of(ball, p) > bound:
        raise InvariantViolation("extension exceeds the requested bound")
    return p


def projection_onto_plane(ball: SymmetricPolytope, x: Sequence, y: Sequence, A) -> PlaneProjection:
    """Projection onto ``span{x, y}`` of norm at most ``1 / (1 - A)``.

    Requires unit vectors with ``||x + y||, ||x - y|| >= 2 - A``.  In the frame
    ``x = e1 + e2``, ``y = e1 - e2`` the section of the ball is squeezed
    between the sup-norm square and its ``1/(1-A)`` dilate, so the two
    coordinate functionals extend to ``X`` with norm ``1/(1-A)``.
    """
    x, y = vector(x), vector(y)
    A = as_fraction(A)
    if not 0 <= A < 1:
        raise InvalidInput(f"A = {A} outside [0, 1)")
    if len(x) != ball.dim or len(y) != ball.dim:
        raise InvalidInput("x and y must match the ball dimension")
    if matrix_rank([x, y]) < 2:
        raise InvalidInput("x and y are linearly dependent")
    for name, v in (("x", x), ("y", y)):
        if norm_of(ball, v) != 1:
            raise InvalidInput(f"{name} is not a unit vector")
    for name, v in (("x + y", add(x, y)), ("x - y", sub(x, y))):
        if norm_of(ball, v) < 2 - A:
            raise InvalidInput(f"||{name}|| < 2 - A")
    bound = 1 / (1 - A)
    p1 = extend_functional(ball, [x, y], [1, 1], bound)
    p2 = extend_functional(ball, [x, y], [1, -1], bound)
    if p1 is None or p2 is None:
        raise InvariantViolation("coordinate functional has no extension within 1/(1-A)")
    proj = PlaneProjection((x, y), (p1, p2), Fraction(0))
    norm = operator_norm(ball, proj.matrix())
    if norm > bound:
        raise InvariantViolation(f"plane projection norm {norm} exceeds {bound}")
    if proj(x) != x or proj(y) != y:
        raise InvariantViolation("plane projection does not fix its range")
    return PlaneProjection((x, y), (p1, p2), norm)
