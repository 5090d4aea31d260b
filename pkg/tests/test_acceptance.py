"""Acceptance gate: one PASS/FAIL line per criterion (see the terminal summary)."""

import random
import time
from fractions import Fraction

import pytest

from hyperproj.l1 import lambda_l1
from hyperproj.maximality import (
    VERIFIED,
    check_bohnenblust_equality,
    enumerate_max_hyperplanes,
    explore_infimum,
    facet_sum_candidates,
    parallelogram_section,
    vertex_hyperplanes,
    verify_bosz3,
)
from hyperproj.polytope import cross_polytope, cube, random_symmetric_polytope
from hyperproj.projection import helly_witness, min_projection_hyperplane

from conftest import LAMBDAS, bohnenblust_violations

pytestmark = pytest.mark.acceptance

BALL_SEED = 2024
R = Fraction(7, 10000)


def bohnenblust(n):
    return 2 - Fraction(2, n)


def random_functional(rng, n):
    while True:
        f = []
        for _ in range(n):
            if rng.random() < 0.15:
                f.append(Fraction(0))
            else:
                f.append(rng.choice((1, -1)) * Fraction(rng.randint(1, 20), rng.randint(1, 20)))
        if any(f):
            return tuple(f)


def seeded_balls(count=25, seed=BALL_SEED):
    rng = random.Random(seed)
    return [random_symmetric_polytope(3, rng)[0] for _ in range(count)]


def test_criterion_01_closed_formula_table(report_criterion):
    start = time.perf_counter()
    bad = [n for n in range(3, 9) if lambda_l1((1,) * n)[0] != bohnenblust(n)]
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 1
    report_criterion(1, "closed formula 2 - 2/n for n = 3..8", ok, f"mismatches={bad} time={elapsed:.3f}s")
    assert ok


def test_criterion_02_oracle_equivalence(report_criterion):
    start = time.perf_counter()
    mismatches, total = [], 0
    for n in (3, 4, 5):
        rng = random.Random(1000 + n)
        ball = cross_polytope(n)
        for _ in range(100):
            f = random_functional(rng, n)
            total += 1
            if lambda_l1(f)[0] != min_projection_hyperplane(ball, f).norm:
                mismatches.append(f)
    elapsed = time.perf_counter() - start
    ok = not mismatches and total == 300 and elapsed < 300
    report_criterion(2, "formula = LP on l1^n, n = 3,4,5", ok, f"{total} cases, {len(mismatches)} mismatches, {elapsed:.1f}s")
    assert ok


def test_criterion_03_helly_equivalence(report_criterion):
    start = time.perf_counter()
    rng = random.Random(303)
    mismatches, sizes = 0, []
    for _ in range(50):
        ball, _ = random_symmetric_polytope(3, rng)
        sizes.append(len(ball.vertices))
        f = random_functional(rng, 3)
        if helly_witness(ball, f)[0] != min_projection_hyperplane(ball, f).norm:
            mismatches += 1
    elapsed = time.perf_counter() - start
    ok = mismatches == 0 and max(sizes) <= 12 and elapsed < 600
    report_criterion(3, "Helly subset value = LP value", ok, f"50 instances, max {max(sizes)} vertices, {mismatches} mismatches, {elapsed:.1f}s")
    assert ok


def test_criterion_04_cube_count(report_criterion):
    start = time.perf_counter()
    cube3 = cube(3)
    found = enumerate_max_hyperplanes(cube3)
    values = {min_projection_hyperplane(cube3, f).norm for f in found}
    cross_count = len(enumerate_max_hyperplanes(cross_polytope(3)))
    elapsed = time.perf_counter() - start
    ok = len(found) == 4 and values == {Fraction(4, 3)} and cross_count == 4 and elapsed < 60
    report_criterion(4, "four maximal planes in cube3 and cross3", ok, f"cube3={len(found)} values={sorted(map(str, values))} cross3={cross_count} {elapsed:.1f}s")
    assert ok


CERTIFICATES = []


def test_criterion_06_equality_biconditional(report_criterion):
    start = time.perf_counter()
    balls = [cross_polytope(3), cube(3), cube(4)] + seeded_balls()
    mismatches, checked = [], 0
    for ball in balls:
        cands = dict.fromkeys(list(ball.facets) + facet_sum_candidates(ball))
        for f in cands:
            lam = min_projection_hyperplane(ball, f).norm
            cert = check_bohnenblust_equality(ball, f)
            checked += 1
            if (cert is not None) != (lam == bohnenblust(ball.dim)):
                mismatches.append((ball, f))
            if cert is not None:
                CERTIFICATES.append((ball, cert))
    elapsed = time.perf_counter() - start
    ok = not mismatches and elapsed < 900
    report_criterion(6, "certificate <=> LP value 2 - 2/n", ok, f"{len(balls)} balls, {checked} hyperplanes, {len(CERTIFICATES)} certificates, {len(mismatches)} mismatches, {elapsed:.1f}s")
    assert ok


def test_criterion_07_parallelogram(report_criterion):
    if not CERTIFICATES:
        pytest.skip("criterion 6 did not run")
    failures = 0
    for ball, cert in CERTIFICATES:
        try:
            if parallelogram_section(ball, cert)[1].norm != 1:
                failures += 1
        except Exception:
            failures += 1
    ok = failures == 0
    report_criterion(7, "norm-one parallelogram projection per certificate", ok, f"{len(CERTIFICATES)} certificates, {failures} failures")
    assert ok


def test_criterion_08_corollary(report_criterion):
    start = time.perf_counter()
    reports = {d: verify_bosz3(d) for d in (50, 30, 80)}
    main = reports[50]
    separated = main.s.hi < Fraction(1, 3) and main.stated_bound.hi < main.target
    verdicts = {(r.s_lt_third, r.bound_lt_target, r.status) for r in reports.values()}
    proof_exceeds = main.proof_bound.lo > Fraction(4, 3)
    elapsed = time.perf_counter() - start
    ok = main.status == VERIFIED and separated and len(verdicts) == 1 and proof_exceeds and elapsed < 10
    report_criterion(
        8,
        "interval verification at R = 7/10000",
        ok,
        f"status={main.status} verdicts_equal={len(verdicts) == 1} proof_bound>4/3={proof_exceeds} {elapsed:.2f}s",
    )
    assert ok


def test_criterion_09_lemma_fuzz(report_criterion):
    start = time.perf_counter()
    rng = random.Random(909)
    violations, bad_equality, equalities = [], [], 0
    for x, y in lemma_samples(rng, 100_000):
        total = abs(x) + abs(y) + abs(x + y - 1)
        if total > 3:
            violations.append((x, y))
        elif total == 3:
            equalities += 1
            if not (x == -1 or y == -1 or x == y == 1):
                bad_equality.append((x, y))
    elapsed = time.perf_counter() - start
    ok = not violations and not bad_equality and equalities > 0 and elapsed < 30
    first = min(violations, default=None, key=lambda p: (p[0] + p[1], p))
    report_criterion(
        9,
        "|x| + |y| + |x + y - 1| <= 3 fuzz",
        ok,
        f"1e5 samples, {len(violations)} violations (e.g. x, y = {fmt_pair(first)}), {equalities} equality cases, "
        f"{len(bad_equality)} off-condition (e.g. {fmt_pair(bad_equality[0] if bad_equality else None)}), {elapsed:.1f}s",
    )
    assert ok


def lemma_samples(rng, count):
    for _ in range(count):
        d, e = rng.randint(1, 6), rng.randint(1, 6)
        yield Fraction(rng.randint(-d, d), d), Fraction(rng.randint(-e, e), e)


def fmt_pair(p):
    return "none" if p is None else f"{p[0]}, {p[1]}"


def test_lemma_holds_off_the_negative_quadrant():
    # The inequality holds iff x + y >= -1; with x, y not both negative the
    # stated equality condition is also exact.
    rng = random.Random(910)
    for x, y in lemma_samples(rng, 100_000):
        total = abs(x) + abs(y) + abs(x + y - 1)
        assert (total <= 3) == (x + y >= -1)
        if x >= 0 or y >= 0:
            assert (total == 3) == (x == -1 or y == -1 or x == y == 1)


def test_criterion_10_facet_normal_below_bound(report_criterion):
    balls = seeded_balls()
    failures = []
    for ball in balls:
        if not any(min_projection_hyperplane(ball, g).norm < bohnenblust(3) for g in ball.facets):
            failures.append(len(ball.vertices))
    ok = not failures
    report_criterion(10, "some facet normal has lambda < 2 - 2/n", ok, f"{len(balls)} balls, {len(failures)} failures (vertex counts {failures})")
    assert ok


def test_non_maximal_plane_exists_among_extended_candidates():
    # Every ball has some plane below 2 - 2/n once vertex-spanned planes are candidates.
    for ball in seeded_balls():
        cands = list(ball.facets) + vertex_hyperplanes(ball)
        assert any(min_projection_hyperplane(ball, g).norm < bohnenblust(3) for g in cands)


def test_octahedra_have_only_maximal_facet_normals():
    # Facet normals of any linear image of the cross-polytope are all maximal.
    ball = cross_polytope(3).transform(((2, 1, 0), (0, 1, 0), (1, 0, 3)))
    assert all(min_projection_hyperplane(ball, g).norm == Fraction(4, 3) for g in ball.facets)


def test_explore_minima_in_range():
    rep = explore_infimum(3, 100, 42)
    assert all(1 <= e.lam < Fraction(4, 3) for e in rep.entries)
    assert rep.best_upper_bound < Fraction(4, 3)


def test_criterion_05_bohnenblust_invariant(report_criterion):
    bad = bohnenblust_violations()
    ok = not bad and len(LAMBDAS) > 0
    report_criterion(5, "1 <= lambda <= 2 - 2/n for every computed lambda", ok, f"{len(LAMBDAS)} lambdas so far, {len(bad)} violations")
    assert ok
