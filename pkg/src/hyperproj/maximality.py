"""Hyperplanes attaining the Bohnenblust bound, and the 3D stability estimates.

A hyperplane ``ker f`` of an n-dimensional polyhedral space has constant
``2 - 2/n`` exactly when some ``n`` independent extreme points share the
same positive ``f``-value and each sign-flipped set
``{x_1, ..., -x_i, ..., x_n}`` lies in a facet.  The certificate found here
records those points, the facets and the change of basis sending ``x_i``
to ``e_i``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence

from .errors import DomainError, Indeterminate, InvalidInput, InvariantViolation
from .exact import (
    Matrix,
    NoSolution,
    Underdetermined,
    Vector,
    add,
    as_fraction,
    dot,
    inverse,
    matrix_rank,
    matvec,
    neg,
    scale,
    solve_linear_system,
    sub,
    transpose,
    vector,
)
from .interval import Interval
from .l1 import MIN_DIGITS, refine, threshold_enclosure
from .polytope import (
    Functional,
    SymmetricPolytope,
    dual_norm_of,
    facet_containing,
    norm_of,
    random_symmetric_polytope,
)
from .projection import PlaneProjection, min_projection_hyperplane, projection_onto_plane


@dataclass(frozen=True)
class MaximalityCertificate:
    f: Functional  # scaled to dual norm 1
    witnesses: tuple[Vector, ...]
    flip_facets: tuple[Functional, ...]
    basis_map: Matrix  # T with T(x_i) = e_i


def _basis_map(witnesses: Sequence[Vector]) -> Matrix:
    return inverse(transpose(tuple(witnesses)))


def check_bohnenblust_equality(ball: SymmetricPolytope, f: Sequence) -> MaximalityCertificate | None:
    """Certificate that ``ker f`` attains ``2 - 2/n``, or None if it does not.

    ``ball.vertices`` are taken to be extreme points (see
    :func:`~hyperproj.polytope.reduce_to_extreme`).
    """
    f = vector(f)
    if len(f) != ball.dim:
        raise InvalidInput(f"functional of length {len(f)} in a {ball.dim}-dimensional space")
    if all(x == 0 for x in f):
        raise InvalidInput("f must be nonzero")
    f = scale(1 / dual_norm_of(ball, f), f)
    n = ball.dim
    cands = []
    for v in ball.vertex_pairs:
        fv = dot(f, v)
        if fv != 0:
            cands.append(v if fv > 0 else neg(v))
    cands.sort()
    value = {v: dot(f, v) for v in cands}
    for subset in itertools.combinations(cands, n):
        if len({value[v] for v in subset}) != 1 or matrix_rank(subset) < n:
            continue
        facets = []
        for i in range(n):
            flipped = [neg(v) if j == i else v for j, v in enumerate(subset)]
            g = facet_containing(ball, flipped)
            if g is None:
                break
            facets.append(g)
        else:
            return MaximalityCertificate(f, tuple(subset), tuple(facets), _basis_map(subset))
    return None


def sandwich_check(ball: SymmetricPolytope, witnesses: Sequence[Sequence]) -> bool:
    """Check ``C ⊂ T(B) ⊂ P`` for the map ``T`` sending ``witnesses[i]`` to ``e_i``.

    ``C`` is the cross-polytope and ``P`` the parallelotope
    ``|sum(w) - 2 w_i| <= 1``.  ``C ⊂ T(B)`` holds because the witnesses are
    unit vectors; the other inclusion is checked on the images of vertices.
    """
    ws = [vector(w) for w in witnesses]
    n = ball.dim
    if len(ws) != n or any(len(w) != n for w in ws):
        raise InvalidInput(f"need {n} witnesses of dimension {n}")
    if matrix_rank(ws) < n:
        raise InvalidInput("witnesses are linearly dependent")
    for w in ws:
        if norm_of(ball, w) != 1:
            raise InvalidInput("witnesses must be unit vectors")
    t = _basis_map(ws)
    for v in ball.vertices:
        w = matvec(t, v)
        total = sum(w)
        if any(abs(total - 2 * wi) > 1 for wi in w):
            return False
    return True


def canonical_functional(f: Sequence[Fraction]) -> Functional:
    """Representative of ``f`` up to nonzero scaling: first nonzero entry is 1."""
    lead = next(x for x in f if x != 0)
    return tuple(x / lead for x in f)


def facet_sum_candidates(ball: SymmetricPolytope) -> list[Functional]:
    """Canonical ``(g_1 + ... + g_n) / (n - 2)`` over all ``n``-subsets of facets."""
    n = ball.dim
    out = set()
    for gs in itertools.combinations(ball.facets, n):
        s = tuple(sum(col) for col in zip(*gs))
        if any(s):
            out.add(canonical_functional(s))
    return sorted(out)


def enumerate_max_hyperplanes(ball: SymmetricPolytope) -> list[Functional]:
    """All hyperplanes ``ker f`` with constant ``2 - 2/n``, as canonical functionals.

    Each facet-sum candidate is confirmed by the full checker; the count is
    at most ``C(N, n)`` for ``N`` facets.
    """
    found = [f for f in facet_sum_candidates(ball) if check_bohnenblust_equality(ball, f) is not None]
    if len(found) > comb(len(ball.facets), ball.dim):
        raise InvariantViolation("more maximal hyperplanes than C(N, n)")
    return found


def parallelogram_section(
    ball: SymmetricPolytope, cert: MaximalityCertificate
) -> tuple[tuple[Vector, Vector], PlaneProjection]:
    """Norm-one projection onto the plane of the first two witnesses."""
    x, y = cert.witnesses[0], cert.witnesses[1]
    if norm_of(ball, add(x, y)) != 2 or norm_of(ball, sub(x, y)) != 2:
        raise InvariantViolation("witness pair does not span a parallelogram section")
    proj = projection_onto_plane(ball, x, y, 0)
    if proj.norm != 1:
        raise InvariantViolation(f"parallelogram projection has norm {proj.norm}")
    return (x, y), proj


# -- stability in dimension three ----------------------------------------------


def _check_R(R) -> Fraction:
    R = as_fraction(R)
    if not 0 <= R < Fraction(1, 3):
        raise DomainError(f"R = {R} outside [0, 1/3)")
    return R


def _phi_enclosure(R: Fraction, work: int) -> Interval:
    _, r = threshold_enclosure(R, work)
    if r.lo <= 0:
        raise Indeterminate("threshold enclosure touches zero")
    return Interval(1 / r.hi - 1, 1 / r.lo - 1).clamp(lo=0)


def phi(R, precision_digits: int = 30) -> Interval:
    """Enclosure of ``1/r(R) - 1``, the stability modulus, of width < 10^-digits."""
    R = _check_R(R)
    if precision_digits < MIN_DIGITS:
        raise InvalidInput(f"precision_digits must be >= {MIN_DIGITS}")
    (out,) = refine(lambda w: (_phi_enclosure(R, w),), precision_digits)
    return out


@dataclass(frozen=True)
class Maxmin3Report:
    R: Fraction
    phi_R: Interval
    s: Interval
    stated_bound: Interval | None
    proof_bound: Interval | None
    domain_ok: bool
    digits: int


THIRD = Fraction(1, 3)


def _bounds(R: Fraction, work: int):
    ph = _phi_enclosure(R, work)
    s = ph + R
    stated = 1 + 9 * s / (4 - 12 * s) if s.hi < THIRD else None
    proof = 1 + 18 * s / (4 - 21 * s) if s.hi < Fraction(4, 21) else None
    return ph, s, stated, proof


def maxmin3_bound(R, precision_digits: int = 30) -> Maxmin3Report:
    """Both candidate upper bounds for the best plane when some plane has ``4/3 - R``.

    ``stated_bound = 1 + 9s/(4-12s)`` and ``proof_bound = 1 + 18s/(4-21s)``
    with ``s = R + phi(R)``; the former is only meaningful when ``s <= 1/3``.
    """
    R = _check_R(R)
    if precision_digits < MIN_DIGITS:
        raise InvalidInput(f"precision_digits must be >= {MIN_DIGITS}")

    def evaluate(work):
        ph, s, stated, proof = _bounds(R, work)
        widest = max((iv.width for iv in (ph, s, stated, proof) if iv is not None))
        return ph, s, stated, proof, Interval(0, widest)

    ph, s, stated, proof, _ = refine(evaluate, precision_digits)
    if s.hi <= THIRD:
        ok = True
    elif s.lo > THIRD:
        ok = False
    else:
        raise Indeterminate("cannot decide R + phi(R) <= 1/3")
    return Maxmin3Report(R, ph, s, stated if ok else None, proof, ok, precision_digits)


VERIFIED = "verified"
REFUTED = "refuted"
INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class Bosz3Report:
    R: Fraction
    target: Fraction  # 4/3 - R
    phi_R: Interval | None
    s: Interval | None
    stated_bound: Interval | None
    proof_bound: Interval | None
    s_lt_third: bool | None
    bound_lt_target: bool | None
    proof_bound_lt_target: bool | None
    status: str
    digits: int
    work_digits: int


def _decide_lt(iv: Interval | None, c: Fraction) -> bool | None:
    if iv is None:
        return None
    if iv.hi < c:
        return True
    if iv.lo >= c:
        return False
    return None


def verify_bosz3(precision_digits: int = 50, R=Fraction(7, 10000), ceiling: int | None = None) -> Bosz3Report:
    """Certify ``R + phi(R) < 1/3`` and ``1 + 9s/(4-12s) < 4/3 - R`` by interval separation.

    Precision rises until every verdict is decided or ``ceiling`` working
    digits are reached (status ``indeterminate``).  The proof-side variant
    ``1 + 18s/(4-21s)`` is compared against the same target and reported.
    """
    if precision_digits < 30:
        raise InvalidInput("precision_digits must be >= 30")
    R = _check_R(R)
    target = Fraction(4, 3) - R
    ceiling = ceiling if ceiling is not None else 8 * precision_digits + 100
    work = precision_digits
    while True:
        ph, s, stated, proof = _bounds(R, work)
        s_ok = _decide_lt(s, THIRD)
        bound_ok = _decide_lt(stated, target) if s_ok else None
        proof_ok = _decide_lt(proof, target)
        decided = s_ok is not None and (s_ok is False or bound_ok is not None) and (
            proof is None or proof_ok is not None
        )
        if decided or work >= ceiling:
            break
        work = min(2 * work, ceiling)
    if not decided:
        status = INDETERMINATE
    elif s_ok and bound_ok:
        status = VERIFIED
    else:
        status = REFUTED
    return Bosz3Report(R, target, ph, s, stated, proof, s_ok, bound_ok, proof_ok, status, precision_digits, work)


# -- heuristic search for the worst space --------------------------------------


@dataclass(frozen=True)
class ExploreEntry:
    ball: SymmetricPolytope
    best_f: Functional
    lam: Fraction
    candidates: int


@dataclass
class ExploreReport:
    dim: int
    seed: int
    entries: list[ExploreEntry] = field(default_factory=list)
    running_max: list[Fraction] = field(default_factory=list)
    resampled: int = 0

    @property
    def best_upper_bound(self) -> Fraction | None:
        return self.running_max[-1] if self.running_max else None


def vertex_hyperplanes(ball: SymmetricPolytope) -> list[Functional]:
    """Canonical normals of hyperplanes spanned by ``n - 1`` vertices."""
    n = ball.dim
    out = set()
    for subset in itertools.combinations(ball.vertex_pairs, n - 1):
        if matrix_rank(subset) < n - 1:
            continue
        for j in range(n):
            e = tuple(Fraction(int(i == j)) for i in range(n))
            try:
                f = solve_linear_system(subset + (e,), (Fraction(0),) * (n - 1) + (Fraction(1),))
            except (NoSolution, Underdetermined):
                continue
            out.add(canonical_functional(f))
            break
    return sorted(out)


def candidate_functionals(
    ball: SymmetricPolytope, rng: random.Random, random_functionals: int = 4, max_facet_sums: int = 12
) -> list[Functional]:
    """Facet normals, vertex-spanned hyperplanes, facet sums and random functionals.

    Facet sums and vertex hyperplanes are each subsampled to ``max_facet_sums``.
    """
    seen = {}
    for g in ball.facets:
        seen.setdefault(canonical_functional(g), None)
    for group in (vertex_hyperplanes(ball), facet_sum_candidates(ball)):
        if len(group) > max_facet_sums:
            group = rng.sample(group, max_facet_sums)
        for g in group:
            seen.setdefault(g, None)
    added = 0
    while added < random_functionals:
        f = tuple(Fraction(rng.randint(-5, 5)) for _ in range(ball.dim))
        if any(f):
            seen.setdefault(canonical_functional(f), None)
            added += 1
    return list(seen)


def explore_infimum(
    dim: int,
    samples: int,
    seed: int,
    balls: Sequence[SymmetricPolytope] | None = None,
    random_functionals: int = 4,
    max_facet_sums: int = 12,
) -> ExploreReport:
    """Upper bounds on ``inf_Y lambda(Y, X)`` over sampled balls ``X``.

    With ``balls`` given, those are evaluated instead of random samples.
    Every per-ball minimum is an upper bound for that ball's infimum; the
    running maximum tracks the worst ball seen so far.
    """
    if dim < 3:
        raise InvalidInput("dim must be >= 3")
    if samples < 1:
        raise InvalidInput("samples must be >= 1")
    rng = random.Random(seed)
    report = ExploreReport(dim, seed)
    for i in range(samples):
        if balls is not None:
            ball = balls[i % len(balls)]
            if ball.dim != dim:
                raise InvalidInput("ball dimension does not match dim")
        else:
            ball, rejected = random_symmetric_polytope(dim, rng)
            report.resampled += rejected
        cands = candidate_functionals(ball, rng, random_functionals, max_facet_sums)
        best_f, best = None, None
        for f in cands:
            lam = min_projection_hyperplane(ball, f).norm
            if best is None or lam < best:
                best_f, best = f, lam
        report.entries.append(ExploreEntry(ball, best_f, best, len(cands)))
        prev = report.running_max[-1] if report.running_max else best
        report.running_max.append(max(prev, best))
    return report
