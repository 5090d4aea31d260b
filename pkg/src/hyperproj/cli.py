"""Command-line front end.

Every subcommand prints one JSON document on stdout.  Rationals are rendered
as ``"p/q"`` strings and intervals as ``{"lo", "hi", "digits"}``.  Exit codes:
0 success, 2 invalid input, 3 numerically indeterminate.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from math import comb
from pathlib import Path

from . import l1, maximality, polytope, projection
from .errors import Indeterminate, InvalidInput
from .exact import as_fraction
from .interval import Interval

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_INDETERMINATE = 3

_NAMED = re.compile(r"@(cube|cross|par)(\d+)$")


def load_space(spec: str) -> polytope.SymmetricPolytope:
    """A ball from ``@cubeN`` / ``@crossN`` / ``@parN`` or a JSON space file."""
    m = _NAMED.match(spec)
    if m:
        kind, n = m.group(1), int(m.group(2))
        if n < 2:
            raise InvalidInput(f"{spec}: dimension must be >= 2")
        build = {"cube": polytope.cube, "cross": polytope.cross_polytope, "par": polytope.sandwich_parallelotope}
        return build[kind](n)
    if spec.startswith("@"):
        raise InvalidInput(f"unknown built-in ball {spec}")
    try:
        data = json.loads(Path(spec).read_text())
    except OSError as exc:
        raise InvalidInput(f"cannot read space file {spec}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"{spec} is not valid JSON: {exc}") from exc
    return polytope.reduce_to_extreme(polytope.SymmetricPolytope.from_json(data))


def parse_csv(text: str) -> tuple[Fraction, ...]:
    return tuple(as_fraction(x) for x in text.split(","))


def rat(x) -> str | None:
    return None if x is None else str(x)


def vec(v) -> list[str] | None:
    return None if v is None else [str(x) for x in v]


def iv(x: Interval | None, digits: int):
    return None if x is None else x.to_json(digits)


def _require(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise InvalidInput(f"--{name.replace('_', '-')} is required for {args.command}")


def _ball(args):
    _require(args, "space")
    return load_space(args.space)


def cmd_lambda_l1(args):
    _require(args, "f")
    lam, trace = l1.lambda_l1(args.f)
    return {
        "lambda": rat(lam),
        "branch": trace.branch,
        "l": trace.l,
        "k": trace.k,
        "f_sorted": vec(trace.f_sorted),
        "l_contiguous": trace.l_contiguous,
    }


def cmd_is_max_l1(args):
    _require(args, "f")
    return {"is_max": l1.is_max_l1(args.f)}


def cmd_l12_threshold(args):
    _require(args, "A")
    t = l1.l12_threshold(args.A, args.digits)
    return {"A": rat(t.A), "b": iv(t.b_val, args.digits), "r": iv(t.r_val, args.digits)}


def cmd_min_proj(args):
    _require(args, "f")
    ball = _ball(args)
    p = projection.min_projection_hyperplane(ball, args.f)
    return {"lambda": rat(p.norm), "r": vec(p.r), "f": vec(p.f)}


def cmd_helly(args):
    _require(args, "f")
    value, witnesses = projection.helly_witness(_ball(args), args.f)
    return {"value": rat(value), "witnesses": [vec(w) for w in witnesses]}


def _cert_json(cert):
    if cert is None:
        return None
    return {
        "f": vec(cert.f),
        "witnesses": [vec(w) for w in cert.witnesses],
        "flip_facets": [vec(g) for g in cert.flip_facets],
        "basis_map": [vec(row) for row in cert.basis_map],
    }


def cmd_check_max(args):
    _require(args, "f")
    cert = maximality.check_bohnenblust_equality(_ball(args), args.f)
    return {"maximal": cert is not None, "certificate": _cert_json(cert)}


def cmd_sandwich(args):
    _require(args, "witnesses")
    ws = [parse_csv(w) for w in args.witnesses.split(";")]
    return {"sandwich": maximality.sandwich_check(_ball(args), ws)}


def cmd_enum_max(args):
    ball = _ball(args)
    found = maximality.enumerate_max_hyperplanes(ball)
    n_facets = len(ball.facets)
    return {
        "count": len(found),
        "hyperplanes": [vec(f) for f in found],
        "facets": n_facets,
        "bound": comb(n_facets, ball.dim),
    }


def cmd_parallelogram(args):
    _require(args, "f")
    ball = _ball(args)
    cert = maximality.check_bohnenblust_equality(ball, args.f)
    if cert is None:
        raise InvalidInput("ker f does not attain 2 - 2/n; no certificate to build from")
    pair, proj = maximality.parallelogram_section(ball, cert)
    return {
        "pair": [vec(v) for v in pair],
        "coefficient_functionals": [vec(p) for p in proj.coefficient_functionals],
        "norm": rat(proj.norm),
    }


def cmd_phi(args):
    _require(args, "R")
    return {"R": rat(args.R), "phi": iv(maximality.phi(args.R, args.digits), args.digits)}


def cmd_maxmin3(args):
    _require(args, "R")
    rep = maximality.maxmin3_bound(args.R, args.digits)
    d = args.digits
    return {
        "R": rat(rep.R),
        "phi": iv(rep.phi_R, d),
        "s": iv(rep.s, d),
        "domain_ok": rep.domain_ok,
        "stated_bound": iv(rep.stated_bound, d),
        "proof_bound": iv(rep.proof_bound, d),
    }


def cmd_verify_bosz3(args):
    rep = maximality.verify_bosz3(args.digits, args.R if args.R is not None else Fraction(7, 10000), args.ceiling)
    d = args.digits
    out = {
        "R": rat(rep.R),
        "target": rat(rep.target),
        "s_lt_third": rep.s_lt_third,
        "bound_lt_target": rep.bound_lt_target,
        "proof_bound_lt_target": rep.proof_bound_lt_target,
        "status": rep.status,
        "phi": iv(rep.phi_R, d),
        "s": iv(rep.s, d),
        "stated_bound": iv(rep.stated_bound, d),
        "proof_bound": iv(rep.proof_bound, d),
        "work_digits": rep.work_digits,
    }
    code = EXIT_INDETERMINATE if rep.status == maximality.INDETERMINATE else EXIT_OK
    return out, code


def cmd_explore(args):
    balls = [_ball(args)] if args.space else None
    dim = balls[0].dim if balls else args.dim
    rep = maximality.explore_infimum(dim, args.samples, args.seed, balls=balls)
    return {
        "dim": rep.dim,
        "seed": rep.seed,
        "resampled": rep.resampled,
        "entries": [
            {"vertices": [vec(v) for v in e.ball.vertices], "best_f": vec(e.best_f), "lambda": rat(e.lam)}
            for e in rep.entries
        ],
        "running_max": [rat(x) for x in rep.running_max],
        "best_upper_bound": rat(rep.best_upper_bound),
    }


COMMANDS = {
    "lambda-l1": cmd_lambda_l1,
    "is-max-l1": cmd_is_max_l1,
    "l12-threshold": cmd_l12_threshold,
    "min-proj": cmd_min_proj,
    "helly": cmd_helly,
    "check-max": cmd_check_max,
    "sandwich": cmd_sandwich,
    "enum-max": cmd_enum_max,
    "parallelogram": cmd_parallelogram,
    "phi": cmd_phi,
    "maxmin3": cmd_maxmin3,
    "verify-bosz3": cmd_verify_bosz3,
    "explore": cmd_explore,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InvalidInput(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hyperproj", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--space", help="JSON space file or @cubeN / @crossN / @parN")
        p.add_argument("--f", type=parse_csv, help="comma-separated rationals")
        p.add_argument("--witnesses", help="witness vectors, ';'-separated, each comma-separated")
        p.add_argument("--A", type=as_fraction)
        p.add_argument("--R", type=as_fraction)
        p.add_argument("--digits", type=int, default=30 if name != "verify-bosz3" else 50)
        p.add_argument("--ceiling", type=int, default=None)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--samples", type=int, default=10)
        p.add_argument("--dim", type=int, default=3)
    return parser


def run(argv: list[str] | None = None, stdout=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    try:
        args = build_parser().parse_args(argv)
        result = COMMANDS[args.command](args)
    except Indeterminate as exc:
        print(f"hyperproj: indeterminate: {exc}", file=sys.stderr)
        return EXIT_INDETERMINATE
    except (InvalidInput, ZeroDivisionError) as exc:
        print(f"hyperproj: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    code = EXIT_OK
    if isinstance(result, tuple):
        result, code = result
    json.dump(result, stdout, indent=2)
    stdout.write("\n")
    return code


def main() -> None:
    sys.exit(run())
