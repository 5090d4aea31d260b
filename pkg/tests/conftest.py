import functools
from fractions import Fraction

import pytest
from hypothesis import settings

import hyperproj
from hyperproj import l1, maximality, projection
from hyperproj.polytope import cross_polytope, cube, sandwich_parallelotope

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

# criterion number -> (title, passed, detail); filled by test_acceptance.py
ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}

# (n, lambda) for every projection constant computed during the session
LAMBDAS: list[tuple[int, Fraction]] = []


def _recording(fn, extract):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        out = fn(*args, **kwargs)
        LAMBDAS.append(extract(args, out))
        return out

    return wrapper


# Patched before any test module imports these names.
_min_proj = _recording(projection.min_projection_hyperplane, lambda a, p: (a[0].dim, p.norm))
_lambda_l1 = _recording(l1.lambda_l1, lambda a, out: (len(a[0]), out[0]))
_helly = _recording(projection.helly_witness, lambda a, out: (a[0].dim, out[0]))
for mod in (hyperproj, projection, maximality):
    if hasattr(mod, "min_projection_hyperplane"):
        mod.min_projection_hyperplane = _min_proj
for mod in (hyperproj, l1):
    mod.lambda_l1 = _lambda_l1
for mod in (hyperproj, projection):
    mod.helly_witness = _helly


def bohnenblust_violations() -> list[tuple[int, Fraction]]:
    return [(n, lam) for n, lam in LAMBDAS if not 1 <= lam <= 2 - Fraction(2, n)]


@pytest.fixture
def report_criterion():
    def record(num: int, title: str, ok: bool, detail: str = "") -> None:
        ACCEPTANCE[num] = (title, ok, detail)
        print(f"[criterion {num:2d}] {'PASS' if ok else 'FAIL'}  {title}  {detail}")

    return record


def pytest_sessionfinish(session, exitstatus):
    if LAMBDAS and bohnenblust_violations() and session.exitstatus == 0:
        session.exitstatus = 1


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    bad = bohnenblust_violations()
    if 5 in ACCEPTANCE and LAMBDAS:
        ACCEPTANCE[5] = (
            "Bohnenblust invariant over the whole session",
            not bad,
            f"{len(LAMBDAS)} lambdas recorded, {len(bad)} outside [1, 2 - 2/n]",
        )
    for num in sorted(ACCEPTANCE):
        title, ok, detail = ACCEPTANCE[num]
        terminalreporter.write_line(f"[criterion {num:2d}] {'PASS' if ok else 'FAIL'}  {title}  {detail}")


@pytest.fixture(scope="session")
def cube3():
    return cube(3)


@pytest.fixture(scope="session")
def cross3():
    return cross_polytope(3)


@pytest.fixture(scope="session")
def cube4():
    return cube(4)


@pytest.fixture(scope="session")
def par3():
    return sandwich_parallelotope(3)


def F(*xs):
    return tuple(Fraction(x) for x in xs)
