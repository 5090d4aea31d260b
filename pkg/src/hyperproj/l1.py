"""Closed-form projection constants for hyperplanes of l1^n.

``lambda_l1`` evaluates the explicit three-branch formula for the minimal
projection onto ``ker f`` in l1^n; ``l12_threshold`` gives the bound ``r(A)``
on the smallest coordinate of ``f`` that keeps the constant of a plane in
l1^3 at or below ``4/3 - A``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DomainError, Indeterminate, InvalidInput, InvariantViolation
from .exact import as_fraction, vector
from .interval import Interval, isqrt_interval

K_LE_2 = "k_le_2"
A_LT = "a_lt"
A_GE = "a_ge"


@dataclass(frozen=True)
class L1FormulaTrace:
    f_sorted: tuple[Fraction, ...]
    k: int
    a: tuple[Fraction, ...]  # a[i-1] = f_1 + ... + f_i
    b: tuple[Fraction, ...]  # b[i-1] = 1/f_1 + ... + 1/f_i
    beta: tuple[Fraction, ...]  # beta[i-3] = b_i / (i - 2)
    l: int | None
    branch: str
    lam: Fraction
    # False when the admissible indices in [3, k] do not form a run ending at l.
    l_contiguous: bool = True


def normalize_l1(f: Sequence) -> tuple[Fraction, ...]:
    """Absolute values, sorted descending, scaled so the first entry is 1."""
    f = vector(f)
    if all(x == 0 for x in f):
        raise InvalidInput("f must be nonzero")
    fs = sorted((abs(x) for x in f), reverse=True)
    top = fs[0]
    return tuple(x / top for x in fs)


def lambda_l1(f: Sequence, n: int | None = None) -> tuple[Fraction, L1FormulaTrace]:
    """Exact projection constant of ``ker f`` in l1^n, with the formula trace.

    Signed coordinate permutations are isometries of l1^n, so ``f`` is first
    reduced to ``1 = f_1 >= ... >= f_n >= 0``.
    """
    f = vector(f)
    if n is None:
        n = len(f)
    if n != len(f):
        raise InvalidInput(f"f has {len(f)} entries but n = {n}")
    if n < 3:
        raise InvalidInput("the formula needs n >= 3")
    fs = normalize_l1(f)
    k = sum(1 for x in fs if x > 0)
    a, b = [], []
    for x in fs[:k]:
        a.append((a[-1] if a else 0) + x)
        b.append((b[-1] if b else 0) + 1 / x)
    a, b = tuple(a), tuple(b)
    beta = tuple(b[i - 1] / (i - 2) for i in range(3, k + 1))
    if k <= 2:
        return Fraction(1), L1FormulaTrace(fs, k, a, b, beta, None, K_LE_2, Fraction(1))

    ok = [l for l in range(3, k + 1) if fs[l - 1] * b[l - 2] > l - 3 and a[l - 2] > l - 3]
    if not ok:
        raise InvariantViolation("no admissible l although l = 3 always qualifies")
    l = ok[-1]
    contiguous = ok == list(range(3, l + 1))
    fl, al, bl = fs[l - 1], a[l - 1], beta[l - 3]
    if al < l - 2:
        branch = A_LT
        x = 2 / ((bl - 1 / fl) * (l - 2) + al / fl - l)
    else:
        branch = A_GE
        x = 2 / (al * bl - l)
    lam = 1 + x
    if not 1 <= lam <= 2 - Fraction(2, n):
        raise InvariantViolation(f"lambda {lam} outside [1, 2 - 2/n]")
    return lam, L1FormulaTrace(fs, k, a, b, beta, l, branch, lam, contiguous)


def is_max_l1(f: Sequence, n: int | None = None) -> bool:
    """True iff ``ker f`` has the maximal constant ``2 - 2/n`` in l1^n."""
    f = vector(f)
    if n is not None and n != len(f):
        raise InvalidInput(f"f has {len(f)} entries but n = {n}")
    if all(x == 0 for x in f):
        raise InvalidInput("f must be nonzero")
    return len({abs(x) for x in f}) == 1


# -- threshold r(A) -------------------------------------------------------------


@dataclass(frozen=True)
class ThresholdTrace:
    A: Fraction
    b_val: Interval
    r_val: Interval
    digits: int


MIN_DIGITS = 15


def _check_A(A, name="A") -> Fraction:
    A = as_fraction(A)
    if not 0 <= A < Fraction(1, 3):
        raise DomainError(f"{name} = {A} outside [0, 1/3)")
    return A


def threshold_enclosure(A: Fraction, work: int) -> tuple[Interval, Interval]:
    """Enclosures of ``b`` and ``r`` with square roots rounded at ``work`` digits.

    ``b = 3 sqrt((1-A)/(1-3A)) - 1`` and ``r = ((b - sqrt(b^2-4)) / 2)^2``.
    Known bounds ``sqrt(...) >= 1``, ``b >= 2`` and ``0 < r <= 1`` are
    intersected in to keep the enclosures tight near ``A = 0``.
    """
    q = (1 - A) / (1 - 3 * A)
    root = isqrt_interval(Interval.point(q), work).clamp(lo=1)
    b = (3 * root - 1).clamp(lo=2)
    disc = (b.square() - 4).clamp(lo=0)
    r = ((b - isqrt_interval(disc, work)) / 2).clamp(lo=0).square().clamp(hi=1)
    return b, r


def refine(evaluate, digits: int, ceiling: int | None = None):
    """Call ``evaluate(work)`` at rising precision until widths drop below 10^-digits.

    ``evaluate`` returns a tuple whose last element is the interval whose
    width is controlled.
    """
    target = Fraction(1, 10 ** digits)
    ceiling = ceiling if ceiling is not None else 8 * digits + 100
    work = digits + 10
    while True:
        out = evaluate(work)
        if out[-1].width < target:
            return out
        if work >= ceiling:
            raise Indeterminate(f"width {float(out[-1].width):.3g} at {work} digits")
        work = min(2 * work, ceiling)


def l12_threshold(A, precision_digits: int = 30) -> ThresholdTrace:
    """Rigorous enclosure of the l1^3 threshold ``r(A)``."""
    A = _check_A(A)
    if precision_digits < MIN_DIGITS:
        raise InvalidInput(f"precision_digits must be >= {MIN_DIGITS}")
    b, r = refine(lambda w: threshold_enclosure(A, w), precision_digits)
    return ThresholdTrace(A, b, r, precision_digits)
