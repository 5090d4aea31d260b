"""Exact rational linear algebra and a rational simplex LP solver.

Scalars are :class:`fractions.Fraction`; vectors are tuples of fractions and
matrices are tuples of row tuples.  Nothing in this module ever rounds.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InvalidInput, InvariantViolation

Vector = tuple[Fraction, ...]
Matrix = tuple[Vector, ...]

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


def as_fraction(x) -> Fraction:
    """Convert an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are refused: they almost always signal an accidental loss of
    exactness upstream.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool) or isinstance(x, float):
        raise InvalidInput(f"refusing inexact scalar {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidInput(f"not a rational: {x!r}") from exc
    raise InvalidInput(f"not a rational: {x!r}")


def vector(xs: Iterable) -> Vector:
    v = tuple(as_fraction(x) for x in xs)
    if not v:
        raise InvalidInput("vectors must have dimension >= 1")
    return v


def matrix(rows: Iterable[Iterable]) -> Matrix:
    m = tuple(vector(r) for r in rows)
    if m and len({len(r) for r in m}) != 1:
        raise InvalidInput("ragged matrix")
    return m


def identity(n: int) -> Matrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def _check_same(u: Sequence, v: Sequence) -> None:
    if len(u) != len(v):
        raise InvalidInput(f"dimension mismatch: {len(u)} vs {len(v)}")


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    _check_same(u, v)
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def add(u: Vector, v: Vector) -> Vector:
    _check_same(u, v)
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Vector, v: Vector) -> Vector:
    _check_same(u, v)
    return tuple(a - b for a, b in zip(u, v))


def scale(c: Fraction, v: Vector) -> Vector:
    return tuple(c * a for a in v)


def neg(v: Vector) -> Vector:
    return tuple(-a for a in v)


def is_zero(v: Sequence[Fraction]) -> bool:
    return all(a == 0 for a in v)


def matvec(m: Matrix, v: Vector) -> Vector:
    return tuple(dot(row, v) for row in m)


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m)) if m else ()


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def _echelon(rows: list[list[Fraction]], ncols: int) -> list[int]:
    """Reduce ``rows`` in place to reduced row echelon form; return pivot columns."""
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def matrix_rank(m: Sequence[Sequence[Fraction]]) -> int:
    rows = [list(map(as_fraction, r)) for r in m]
    if not rows:
        return 0
    return len(_echelon(rows, len(rows[0])))


class NoSolution(InvalidInput):
    """The linear system is inconsistent."""


class Underdetermined(InvalidInput):
    """The linear system has infinitely many solutions."""


def solve_linear_system(a: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> Vector:
    """Return the unique solution of ``a x = b``.

    Raises :class:`NoSolution` or :class:`Underdetermined` when there is no
    unique solution.
    """
    a = matrix(a)
    b = tuple(as_fraction(x) for x in b)
    if len(a) != len(b):
        raise InvalidInput(f"{len(a)} equations but {len(b)} right-hand sides")
    n = len(a[0])
    rows = [list(r) + [rhs] for r, rhs in zip(a, b)]
    pivots = _echelon(rows, n + 1)
    if n in pivots:
        raise NoSolution("inconsistent linear system")
    if len(pivots) < n:
        raise Underdetermined(f"rank {len(pivots)} < {n} unknowns")
    return tuple(rows[i][n] for i in range(n))


def inverse(m: Matrix) -> Matrix:
    n = len(m)
    if any(len(r) != n for r in m):
        raise InvalidInput("inverse of a non-square matrix")
    rows = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(m)]
    pivots = _echelon(rows, n)
    if len(pivots) < n:
        raise InvalidInput("singular matrix")
    return tuple(tuple(r[n:]) for r in rows)


# -- linear programming ------------------------------------------------------


@dataclass(frozen=True)
class LinearProgram:
    """minimize ``objective . x`` s.t. ``ineq_lhs x <= ineq_rhs``, ``eq_lhs x = eq_rhs``.

    All variables are free (unrestricted in sign); add explicit ``-x <= 0``
    rows for nonnegativity.
    """

    objective: Vector
    ineq_lhs: Matrix = ()
    ineq_rhs: Vector = ()
    eq_lhs: Matrix = ()
    eq_rhs: Vector = ()

    def __post_init__(self):
        obj = tuple(as_fraction(x) for x in self.objective)
        n = len(obj)
        blocks = {}
        for name in ("ineq_lhs", "eq_lhs"):
            m = tuple(tuple(as_fraction(x) for x in r) for r in getattr(self, name))
            if any(len(r) != n for r in m):
                raise InvalidInput(f"{name} rows must have {n} columns")
            blocks[name] = m
        for lhs, rhs in (("ineq_lhs", "ineq_rhs"), ("eq_lhs", "eq_rhs")):
            v = tuple(as_fraction(x) for x in getattr(self, rhs))
            if len(v) != len(blocks[lhs]):
                raise InvalidInput(f"{rhs} has {len(v)} entries, {lhs} has {len(blocks[lhs])} rows")
            blocks[rhs] = v
        object.__setattr__(self, "objective", obj)
        for k, v in blocks.items():
            object.__setattr__(self, k, v)

    @property
    def num_vars(self) -> int:
        return len(self.objective)

    def is_feasible_point(self, x: Vector) -> bool:
        return all(dot(r, x) <= b for r, b in zip(self.ineq_lhs, self.ineq_rhs)) and all(
            dot(r, x) == d for r, d in zip(self.eq_lhs, self.eq_rhs)
        )


@dataclass(frozen=True)
class LpSolution:
    status: str
    value: Fraction | None = None
    point: Vector | None = field(default=None)


class _Dictionary:
    """Simplex dictionary ``x_B[i] = beta[i] + sum_j D[i][j] x_N[j]``, all vars >= 0.

    Objective ``z = z0 + sum_j c[j] x_N[j]`` is minimized.  Pivoting follows
    Bland's rule: entering and leaving candidates are chosen by lowest
    variable index.
    """

    def __init__(self, basis, nonbasis, beta, rows):
        self.basis = basis
        self.nonbasis = nonbasis
        self.beta = beta
        self.rows = rows
        self.z0 = Fraction(0)
        self.c = [Fraction(0)] * len(nonbasis)

    def set_objective(self, cost: dict[int, Fraction]) -> None:
        pos = {v: j for j, v in enumerate(self.nonbasis)}
        c = [Fraction(0)] * len(self.nonbasis)
        z0 = Fraction(0)
        for var, w in cost.items():
            if w == 0:
                continue
            if var in pos:
                c[pos[var]] += w
            else:
                i = self.basis.index(var)
                z0 += w * self.beta[i]
                for j, d in enumerate(self.rows[i]):
                    if d:
                        c[j] += w * d
        self.c, self.z0 = c, z0

    def pivot(self, i: int, j: int) -> None:
        row = self.rows[i]
        piv = row[j]
        inv = -1 / piv
        new = [d * inv for d in row]
        new[j] = 1 / piv
        nb = self.beta[i] * inv
        self.rows[i], self.beta[i] = new, nb
        for r, other in enumerate(self.rows):
            if r == i:
                continue
            f = other[j]
            if f == 0:
                continue
            self.beta[r] += f * nb
            for k, d in enumerate(new):
                if d:
                    other[k] = other[k] + f * d if k != j else f * d
        f = self.c[j]
        if f != 0:
            self.z0 += f * nb
            c = self.c
            for k, d in enumerate(new):
                if k == j:
                    c[k] = f * d
                elif d:
                    c[k] += f * d
        self.basis[i], self.nonbasis[j] = self.nonbasis[j], self.basis[i]

    def optimize(self) -> bool:
        """Run Bland-rule pivots to optimality; False means unbounded."""
        while True:
            entering = None
            for j, cj in enumerate(self.c):
                if cj < 0 and (entering is None or self.nonbasis[j] < self.nonbasis[entering]):
                    entering = j
            if entering is None:
                return True
            leave = None
            best = None
            for i, row in enumerate(self.rows):
                d = row[entering]
                if d < 0:
                    ratio = self.beta[i] / -d
                    if (
                        best is None
                        or ratio < best
                        or (ratio == best and self.basis[i] < self.basis[leave])
                    ):
                        best, leave = ratio, i
            if leave is None:
                return False
            self.pivot(leave, entering)

    def drop_row(self, i: int) -> None:
        del self.rows[i], self.beta[i], self.basis[i]

    def drop_columns(self, variables: set[int]) -> None:
        keep = [j for j, v in enumerate(self.nonbasis) if v not in variables]
        self.nonbasis = [self.nonbasis[j] for j in keep]
        self.rows = [[r[j] for j in keep] for r in self.rows]
        self.c = [self.c[j] for j in keep]

    def values(self, nvars: int) -> list[Fraction]:
        out = [Fraction(0)] * nvars
        for v, b in zip(self.basis, self.beta):
            if v < nvars:
                out[v] = b
        return out


def solve_lp(lp: LinearProgram) -> LpSolution:
    """Solve ``lp`` exactly with a two-phase Bland-rule simplex.

    Each free variable ``x_j`` is split as ``x_j = u_j - w_j``.  Phase one
    introduces an artificial variable for every equality row plus a single
    shared auxiliary column for inequality rows with negative right-hand
    side; a positive phase-one optimum means the program is infeasible.
    """
    n = lp.num_vars
    m_in, m_eq = len(lp.ineq_lhs), len(lp.eq_lhs)
    nstruct = 2 * n
    slack0 = nstruct
    art0 = slack0 + m_in
    aux = art0 + m_eq

    def split(row, sign=1):
        out = []
        for a in row:
            out.append(-sign * a)
            out.append(sign * a)
        return out

    basis, beta, rows = [], [], []
    need_aux = any(b < 0 for b in lp.ineq_rhs)
    for i, (row, b) in enumerate(zip(lp.ineq_lhs, lp.ineq_rhs)):
        # s_i = b_i - A_i x (+ aux)
        r = split(row)
        if need_aux:
            r.append(Fraction(1))
        basis.append(slack0 + i)
        beta.append(b)
        rows.append(r)
    for k, (row, d) in enumerate(zip(lp.eq_lhs, lp.eq_rhs)):
        sign = -1 if d < 0 else 1
        r = split(row, sign)
        if need_aux:
            r.append(Fraction(0))
        basis.append(art0 + k)
        beta.append(sign * d)
        rows.append(r)
    nonbasis = list(range(nstruct)) + ([aux] if need_aux else [])
    dic = _Dictionary(basis, nonbasis, beta, rows)
    artificial = set(range(art0, art0 + m_eq)) | ({aux} if need_aux else set())

    if artificial:
        if need_aux:
            worst = min(range(m_in), key=lambda i: (dic.beta[i], i))
            dic.pivot(worst, len(nonbasis) - 1)
        dic.set_objective({v: Fraction(1) for v in artificial})
        if not dic.optimize():
            raise InvariantViolation("phase one cannot be unbounded")
        if dic.z0 != 0:
            return LpSolution(INFEASIBLE)
        i = 0
        while i < len(dic.basis):
            if dic.basis[i] in artificial:
                j = next(
                    (j for j, v in enumerate(dic.nonbasis) if v not in artificial and dic.rows[i][j] != 0),
                    None,
                )
                if j is None:
                    dic.drop_row(i)
                    continue
                dic.pivot(i, j)
            i += 1
        dic.drop_columns(artificial)

    cost = {}
    for j, cj in enumerate(lp.objective):
        cost[2 * j] = cj
        cost[2 * j + 1] = -cj
    dic.set_objective(cost)
    if not dic.optimize():
        return LpSolution(UNBOUNDED)
    vals = dic.values(nstruct)
    point = tuple(vals[2 * j] - vals[2 * j + 1] for j in range(n))
    value = dot(lp.objective, point) if n else Fraction(0)
    if value != dic.z0:
        raise InvariantViolation("objective value disagrees with dictionary")
    return LpSolution(OPTIMAL, value, point)
