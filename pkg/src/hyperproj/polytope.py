"""Centrally symmetric polytopes as unit balls of polyhedral norms.

A ball is given by its vertex list (V-representation).  Facet functionals
``g`` are normalized so that the facet is ``{x : g(x) = 1}``; the norm of
``x`` is then ``max_g g(x)`` and the dual norm of ``f`` is ``max_v |f(v)|``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .errors import InvalidInput
from .exact import (
    OPTIMAL,
    LinearProgram,
    Matrix,
    Underdetermined,
    NoSolution,
    Vector,
    dot,
    matrix_rank,
    matvec,
    neg,
    solve_linear_system,
    solve_lp,
    vector,
)

Functional = Vector


@dataclass(frozen=True)
class SymmetricPolytope:
    dim: int
    vertices: tuple[Vector, ...]

    def __post_init__(self):
        if self.dim < 2:
            raise InvalidInput(f"dimension must be >= 2, got {self.dim}")
        verts = tuple(vector(v) for v in self.vertices)
        for v in verts:
            if len(v) != self.dim:
                raise InvalidInput(f"vertex {v} does not have dimension {self.dim}")
        present = set(verts)
        missing = [v for v in verts if neg(v) not in present]
        if missing:
            raise InvalidInput(f"vertex list is not closed under negation, e.g. -{fmt_vec(missing[0])} absent")
        if matrix_rank(verts) < self.dim:
            raise InvalidInput("vertices do not span the space (ball is not full-dimensional)")
        object.__setattr__(self, "vertices", verts)

    @classmethod
    def from_points(cls, points: Iterable[Sequence]) -> "SymmetricPolytope":
        pts = [vector(p) for p in points]
        if not pts:
            raise InvalidInput("empty vertex list")
        return cls(len(pts[0]), tuple(pts))

    @cached_property
    def facets(self) -> tuple[Functional, ...]:
        return tuple(facets_from_vertices(self))

    @cached_property
    def vertex_pairs(self) -> tuple[Vector, ...]:
        """One representative of each ``{v, -v}`` pair, skipping the origin."""
        seen, out = set(), []
        for v in sorted(set(self.vertices)):
            if v in seen or all(a == 0 for a in v):
                continue
            seen.add(v)
            seen.add(neg(v))
            out.append(max(v, neg(v)))
        return tuple(sorted(out))

    def transform(self, m: Matrix) -> "SymmetricPolytope":
        return SymmetricPolytope(self.dim, tuple(matvec(m, v) for v in self.vertices))

    def to_json(self) -> dict:
        return {"dim": self.dim, "vertices": [[str(x) for x in v] for v in self.vertices]}

    @classmethod
    def from_json(cls, data: dict) -> "SymmetricPolytope":
        try:
            dim = data["dim"]
            raw = data["vertices"]
        except (KeyError, TypeError) as exc:
            raise InvalidInput("space file needs 'dim' and 'vertices'") from exc
        if not isinstance(dim, int) or isinstance(dim, bool):
            raise InvalidInput("'dim' must be an integer")
        verts = []
        for row in raw:
            for x in row:
                if not isinstance(x, (str, int)) or isinstance(x, bool):
                    raise InvalidInput(f"coordinate {x!r} must be an integer or a 'p/q' string")
            verts.append(vector(row))
        return cls(dim, tuple(verts))


def fmt_vec(v: Sequence[Fraction]) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


def facets_from_vertices(p: SymmetricPolytope) -> list[Functional]:
    """All facet functionals of ``p``, sorted lexicographically.

    Every facet contains ``n`` linearly independent vertices, so each facet
    arises as the solution ``g`` of ``g(v) = 1`` on some independent
    ``n``-subset that also satisfies ``g <= 1`` on every vertex.
    """
    pts = sorted({v for v in p.vertices if any(v)})
    if matrix_rank(pts) < p.dim:
        raise InvalidInput("polytope is not full-dimensional")
    ones = (Fraction(1),) * p.dim
    found = set()
    for subset in itertools.combinations(pts, p.dim):
        try:
            g = solve_linear_system(subset, ones)
        except (Underdetermined, NoSolution):
            continue
        if g in found:
            continue
        if all(dot(g, v) <= 1 for v in pts):
            found.add(g)
    return sorted(found)


def norm_of(p: SymmetricPolytope, x: Sequence) -> Fraction:
    x = vector(x)
    if len(x) != p.dim:
        raise InvalidInput(f"vector of dimension {len(x)} in a {p.dim}-dimensional space")
    return max(dot(g, x) for g in p.facets)


def dual_norm_of(p: SymmetricPolytope, f: Sequence) -> Fraction:
    f = vector(f)
    if len(f) != p.dim:
        raise InvalidInput(f"functional of dimension {len(f)} in a {p.dim}-dimensional space")
    return max(abs(dot(f, v)) for v in p.vertices)


def in_convex_hull(point: Vector, others: Sequence[Vector]) -> bool:
    """Exact membership test by LP feasibility over convex weights."""
    if not others:
        return False
    k = len(others)
    n = len(point)
    eq_lhs = [[others[j][i] for j in range(k)] for i in range(n)] + [[1] * k]
    eq_rhs = list(point) + [1]
    ineq_lhs = [[-1 if j == i else 0 for j in range(k)] for i in range(k)]
    lp = LinearProgram((0,) * k, ineq_lhs, (0,) * k, eq_lhs, eq_rhs)
    sol = solve_lp(lp)
    return sol.status == OPTIMAL


def reduce_to_extreme(p: SymmetricPolytope) -> SymmetricPolytope:
    """Drop every listed point that is a convex combination of the others."""
    pts = list(dict.fromkeys(p.vertices))
    keep = [v for i, v in enumerate(pts) if not in_convex_hull(v, pts[:i] + pts[i + 1 :])]
    return SymmetricPolytope(p.dim, tuple(keep))


def facet_containing(p: SymmetricPolytope, pts: Sequence[Sequence]) -> Functional | None:
    """First facet (lexicographic order) containing every point, or None."""
    pts = [vector(q) for q in pts]
    for q in pts:
        if norm_of(p, q) != 1:
            raise InvalidInput(f"point {fmt_vec(q)} is not on the unit sphere")
    for g in p.facets:
        if all(dot(g, q) == 1 for q in pts):
            return g
    return None


# -- standard balls ------------------------------------------------------------


def cube(n: int) -> SymmetricPolytope:
    """Unit ball of the sup-norm."""
    verts = tuple(tuple(Fraction(s) for s in signs) for signs in itertools.product((1, -1), repeat=n))
    return SymmetricPolytope(n, verts)


def cross_polytope(n: int) -> SymmetricPolytope:
    """Unit ball of the l1-norm."""
    verts = []
    for i in range(n):
        for s in (1, -1):
            verts.append(tuple(Fraction(s if j == i else 0) for j in range(n)))
    return SymmetricPolytope(n, tuple(verts))


def sandwich_parallelotope(n: int) -> SymmetricPolytope:
    """Parallelotope bounded by ``|x_1 + ... - x_i + ... + x_n| <= 1``.

    For a sign pattern ``eps`` the vertex satisfies ``sum(x) - 2 x_i = eps_i``,
    which gives ``sum(x) = sum(eps) / (n - 2)`` and ``x_i = (sum(x) - eps_i) / 2``.
    """
    if n < 3:
        raise InvalidInput("the parallelotope needs n >= 3")
    verts = []
    for eps in itertools.product((1, -1), repeat=n):
        s = Fraction(sum(eps), n - 2)
        verts.append(tuple((s - e) / 2 for e in eps))
    return SymmetricPolytope(n, tuple(verts))


def random_symmetric_polytope(
    dim: int, rng: random.Random, pairs: int | None = None, bound: int = 4, max_tries: int = 100
) -> tuple[SymmetricPolytope, int]:
    """Random extreme-reduced ball from integer point pairs ``±v``.

    Returns the ball and the number of degenerate draws that were resampled.
    """
    rejected = 0
    for _ in range(max_tries):
        k = pairs if pairs is not None else rng.randint(dim, dim + 3)
        pts = []
        while len(pts) < k:
            v = tuple(Fraction(rng.randint(-bound, bound)) for _ in range(dim))
            if any(v) and v not in pts and neg(v) not in pts:
                pts.append(v)
        if matrix_rank(pts) < dim:
            rejected += 1
            continue
        ball = SymmetricPolytope(dim, tuple(pts) + tuple(neg(v) for v in pts))
        return reduce_to_extreme(ball), rejected
    raise InvalidInput(f"no full-dimensional sample in {max_tries} draws")


def random_sandwiched_polytope(dim: int, rng: random.Random, extra: int = 3, denom: int = 4) -> SymmetricPolytope:
    """Ball with cross-polytope inside it and inside the sandwich parallelotope.

    Extra vertices are rational points of the parallelotope; the result is an
    extreme-reduced ball whose hyperplane ``sum(x) = 0`` attains the maximal
    projection constant.
    """
    par = sandwich_parallelotope(dim)
    pts = list(cross_polytope(dim).vertices)
    for _ in range(extra):
        a, b = rng.sample(par.vertices, 2)
        t = Fraction(rng.randint(0, denom), denom)
        u = tuple(t * x + (1 - t) * y for x, y in zip(a, b))
        if any(u) and u not in pts:
            pts += [u, neg(u)]
    return reduce_to_extreme(SymmetricPolytope(dim, tuple(pts)))


def random_invertible(dim: int, rng: random.Random, bound: int = 2) -> Matrix:
    while True:
        m = tuple(tuple(Fraction(rng.randint(-bound, bound)) for _ in range(dim)) for _ in range(dim))
        if matrix_rank(m) == dim:
            return m

