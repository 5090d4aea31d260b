import random
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from hyperproj.errors import DomainError, InvalidInput
from hyperproj.l1 import A_GE, A_LT, K_LE_2, is_max_l1, l12_threshold, lambda_l1
from hyperproj.polytope import cross_polytope
from hyperproj.projection import min_projection_hyperplane

from conftest import F


def random_functional(rng, n):
    out = []
    for _ in range(n):
        if rng.random() < 0.15:
            out.append(Fraction(0))
        else:
            out.append(rng.choice((1, -1)) * Fraction(rng.randint(1, 20), rng.randint(1, 20)))
    if not any(out):
        out[0] = Fraction(1)
    return tuple(out)


@pytest.mark.parametrize(
    "f, lam, branch",
    [
        (F(1, 1, 1), Fraction(4, 3), A_GE),
        (F(1, 1, 0), Fraction(1), K_LE_2),
        (F(1, Fraction(1, 10), Fraction(1, 10), Fraction(1, 10)), Fraction(11, 10), A_LT),
        (F(1, Fraction(1, 2), Fraction(1, 2)), Fraction(9, 7), A_GE),
    ],
)
def test_formula_examples(f, lam, branch):
    value, trace = lambda_l1(f)
    assert value == lam and trace.branch == branch
    # derived examples are confirmed against the minimax LP
    assert min_projection_hyperplane(cross_polytope(len(f)), f).norm == lam


def test_trace_fields():
    _, t = lambda_l1(F(2, -1, 1))
    assert t.f_sorted == F(1, Fraction(1, 2), Fraction(1, 2))
    assert t.k == 3 and t.l == 3
    assert t.a == F(1, Fraction(3, 2), 2)
    assert t.b == F(1, 3, 5)
    assert t.beta == F(5)
    assert t.l_contiguous


def test_formula_errors():
    with pytest.raises(InvalidInput):
        lambda_l1(F(0, 0, 0))
    with pytest.raises(InvalidInput):
        lambda_l1(F(1, 1))
    with pytest.raises(InvalidInput):
        lambda_l1(F(1, 1, 1), n=4)


def test_is_max_examples():
    assert is_max_l1(F(1, -1, 1))
    assert not is_max_l1(F(1, Fraction(1, 2), Fraction(1, 2)))
    assert not is_max_l1(F(1, 1, 0))
    with pytest.raises(InvalidInput):
        is_max_l1(F(0, 0, 0))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_oracle_equivalence_sample(n):
    rng = random.Random(100 + n)
    branches = set()
    for _ in range(25):
        f = random_functional(rng, n)
        lam, trace = lambda_l1(f)
        branches.add(trace.branch)
        assert min_projection_hyperplane(cross_polytope(n), f).norm == lam, f
    assert A_GE in branches


def test_both_nontrivial_branches_hit_lp():
    rng = random.Random(8)
    seen = {}
    while len(seen) < 3:
        f = random_functional(rng, 4)
        lam, trace = lambda_l1(f)
        seen.setdefault(trace.branch, (f, lam))
    for f, lam in seen.values():
        assert min_projection_hyperplane(cross_polytope(4), f).norm == lam


nonzero_f = st.integers(3, 7).flatmap(
    lambda n: st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=9), min_size=n, max_size=n)
).filter(any)


@given(nonzero_f, st.randoms(use_true_random=False))
def test_signed_permutation_invariance(f, rnd):
    g = [x * rnd.choice((1, -1)) for x in f]
    rnd.shuffle(g)
    assert lambda_l1(g)[0] == lambda_l1(f)[0]
    assert lambda_l1([x * 7 for x in f])[0] == lambda_l1(f)[0]


@given(nonzero_f)
def test_bohnenblust_bounds(f):
    lam, _ = lambda_l1(f)
    assert 1 <= lam <= 2 - Fraction(2, len(f))


@given(nonzero_f)
def test_maximal_iff_all_equal(f):
    lam, _ = lambda_l1(f)
    assert (lam == 2 - Fraction(2, len(f))) == is_max_l1(f)


@pytest.mark.parametrize("n", range(3, 9))
def test_all_equal_family(n):
    f = [Fraction((-1) ** i * 3, 2) for i in range(n)]
    assert is_max_l1(f)
    assert lambda_l1(f)[0] == 2 - Fraction(2, n)


def mp_threshold(A):
    A = mpmath.mpf(A.numerator) / A.denominator
    b = 3 * mpmath.sqrt((1 - A) / (1 - 3 * A)) - 1
    return b, ((b - mpmath.sqrt(b * b - 4)) / 2) ** 2


def mp(x):
    return mpmath.mpf(x.numerator) / x.denominator


def test_threshold_at_zero_is_one():
    t = l12_threshold(0)
    assert t.r_val.lo == t.r_val.hi == 1
    assert t.b_val.lo == t.b_val.hi == 2


def test_threshold_matches_mpmath():
    mpmath.mp.dps = 60
    for A in (Fraction(1, 21), Fraction(1, 100), Fraction(3, 10), Fraction(1, 4)):
        t = l12_threshold(A, 40)
        b, r = mp_threshold(A)
        assert mp(t.r_val.lo) <= r <= mp(t.r_val.hi)
        assert mp(t.b_val.lo) <= b <= mp(t.b_val.hi)
        assert t.r_val.width < Fraction(1, 10**40)
    t = l12_threshold(Fraction(1, 21))
    assert t.r_val.width < Fraction(1, 10**15)
    assert abs(float(t.r_val.lo) - 0.449183618962) < 1e-11


def test_threshold_monotone():
    grid = [Fraction(i, 100) for i in range(0, 34)]
    rs = [l12_threshold(A, 20).r_val for A in grid]
    for left, right in zip(rs, rs[1:]):
        assert right.hi < left.lo
    assert rs[-1].lo > 0
    assert l12_threshold(Fraction(3, 10)).r_val.hi < l12_threshold(Fraction(1, 21)).r_val.lo


@pytest.mark.parametrize("A", [Fraction(-1, 10), Fraction(1, 3), Fraction(1, 2)])
def test_threshold_domain(A):
    with pytest.raises(DomainError):
        l12_threshold(A)


def test_threshold_consistent_with_formula():
    rng = random.Random(33)
    margin = Fraction(1, 1000)
    for _ in range(300):
        A = Fraction(rng.randint(0, 329), 1000)
        r = l12_threshold(A, 20).r_val
        f3 = Fraction(rng.randint(0, 1000), 1000) * r.lo * (1 - margin)
        f2 = f3 + (1 - f3) * Fraction(rng.randint(0, 1000), 1000)
        lam, _ = lambda_l1((1, f2, f3))
        assert lam <= Fraction(4, 3) - A, (A, f2, f3)
