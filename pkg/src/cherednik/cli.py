"""Command-line frontend.

Subcommands: info, classify, gram, sweep, conjecture, selftest.  All
multiplicities enter as exact rational strings ("p/q" or an integer);
there is no floating-point entry point.  Exit codes: 0 success, 1
usage or parse error, 2 internal invariant violation.
"""

from __future__ import annotations

import argparse
import csv
import json
import random
import re
import sys

from .errors import InvariantViolation, NonDivisibleError
from .scalars import ParamPoly, PP_K1, PP_K2, QuadExt, Rat, rat
from .polynomials import MPoly
from .rootsystem import build_root_system
from .wrep import get_irrep, irreps
from .dunkl import dunkl_apply
from .verma import VermaModule, classify as _classify
from .rank2 import (check_kappa_factorization, f_power_image,
                    f_power_image_closed, f_power_image_direct,
                    evaluate_at_couplings, very_singular)

TYPES = ("A1", "A2", "B2", "G2")
ONE_ORBIT = ("A1", "A2")

_RAT_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad usage; this artifact reserves
    2 for invariant violations, so route usage errors to status 1.  Also
    teach the tokenizer that "-1/3" is a value, not an option flag."""

    def __init__(self, *a, **kw):
        super().__init__(*a, **kw)
        self._negative_number_matcher = re.compile(
            r"^-\d+(/\d+)?(:-?\d+(/\d+)?){0,2}$")

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _parse_rat(text: str) -> Rat:
    if not _RAT_RE.match(text.strip()):
        raise UsageError(f"not an exact rational: {text!r} (use p/q or an integer)")
    return rat(text.strip())


def _resolve_couplings(args) -> tuple:
    """Combine --k / --k1 / --k2 into a coupling pair."""
    if args.k is not None:
        if args.k1 is not None or args.k2 is not None:
            raise UsageError("--k conflicts with --k1/--k2")
        v = _parse_rat(args.k)
        return v, v
    if args.k1 is None:
        raise UsageError("need --k, or --k1 (and --k2 for two-orbit types)")
    k1 = _parse_rat(args.k1)
    if args.k2 is not None:
        return k1, _parse_rat(args.k2)
    if args.type in ONE_ORBIT:
        return k1, k1
    raise UsageError(f"{args.type} has two root orbits: give --k2 or use --k")


def _parse_range(text: str):
    """a:b:step with exact rational endpoints, inclusive of b when hit."""
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"range must be a:b:step, got {text!r}")
    a, b, step = (_parse_rat(p) for p in parts)
    if step <= 0:
        raise UsageError("range step must be positive")
    if a > b:
        raise UsageError("range start exceeds range end")
    out = []
    v = a
    while v <= b:
        out.append(v)
        v = v + step
    return out


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2))


# -- subcommands -------------------------------------------------------------------

def _cmd_info(args) -> int:
    rs = build_root_system(args.type)
    reps = irreps(rs)
    _emit_json({
        "type": rs.label,
        "rank": rs.rank,
        "group_order": len(rs.elements),
        "positive_roots": rs.num_positive,
        "orbit_sizes": list(rs.orbit_counts),
        "invariant_degrees": list(rs.degrees),
        "characters": [{"label": r.label, "dim": r.dim} for r in reps],
    })
    return 0


def _classify_dict(res) -> dict:
    return {
        "type": res.label,
        "chi": res.chi,
        "k1": str(res.k1),
        "k2": str(res.k2),
        "finite": res.finite,
        "m": res.m,
        "graded_dims": list(res.dims) if res.finite else None,
        "dim": res.total_dim,
    }


def _csv_row(res) -> list:
    return [res.label, str(res.k1), str(res.k2), res.chi,
            "true" if res.finite else "false",
            "" if res.m is None else res.m,
            "" if res.total_dim is None else res.total_dim]


_CSV_HEADER = ["type", "k1", "k2", "chi", "finite", "m", "dim"]


def _cmd_classify(args) -> int:
    k1, k2 = _resolve_couplings(args)
    res = _classify(args.type, args.chi, k1, k2, scan_bound=args.max_degree)
    if args.format == "json":
        _emit_json(_classify_dict(res))
    elif args.format == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(_CSV_HEADER)
        w.writerow(_csv_row(res))
    else:
        print(f"type:        {res.label}")
        print(f"chi:         {res.chi}")
        print(f"couplings:   ({res.k1}, {res.k2})")
        print(f"finite:      {'yes' if res.finite else 'no'}")
        if res.finite:
            print(f"m:           {res.m}")
            print(f"graded dims: {' '.join(str(d) for d in res.dims)}")
            print(f"total dim:   {res.total_dim}")
        else:
            print(f"scanned dims: {' '.join(str(d) for d in res.dims)} ...")
    return 0


def _cmd_gram(args) -> int:
    rs = build_root_system(args.type)
    rep = get_irrep(rs, args.chi)
    if args.symbolic:
        k1 = k2 = None
        vm = VermaModule(rs, rep, PP_K1, PP_K2)
    else:
        k1, k2 = _resolve_couplings(args)
        vm = VermaModule(rs, rep, k1, k2)
    g = vm.gram(args.degree)
    if args.symbolic:
        entries = [[e.to_str() for e in row] for row in g]
    else:
        entries = [[str(QuadExt.coerce(e)) for e in row] for row in g]
    _emit_json({
        "type": rs.label,
        "chi": rep.label,
        "k1": None if k1 is None else str(k1),
        "k2": None if k2 is None else str(k2),
        "degree": args.degree,
        "size": len(g),
        "layer_rank": None if args.symbolic else vm.layer_rank(args.degree),
        "entries": entries,
    })
    return 0


def _cmd_sweep(args) -> int:
    k1s = _parse_range(args.k1_range)
    # without --k2-range the sweep is diagonal: k2 = k1 at every point
    k2s = _parse_range(args.k2_range) if args.k2_range else None
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(_CSV_HEADER)
    for k1 in k1s:
        for k2 in (k2s if k2s is not None else [k1]):
            res = _classify(args.type, args.chi, k1, k2)
            w.writerow(_csv_row(res))
    return 0


def _cmd_conjecture(args) -> int:
    rep = check_kappa_factorization(args.max_q)
    d = rep.as_dict()
    _emit_json({
        "verified_up_to": d["verified_up_to"],
        "first_failure": d["first_failure"],
        "checked_up_to": d["checked_up_to"],
    })
    return 0


def _cmd_selftest(args) -> int:
    rng = random.Random(args.seed)

    def report(name):
        print(f"ok {name}")

    # exact scalar arithmetic
    s3 = QuadExt(0, 1)
    assert (QuadExt(1) + s3) * (QuadExt(1) - s3) == QuadExt(-2)
    assert (QuadExt(2) + s3).inv() * (QuadExt(2) + s3) == QuadExt(1)
    report("scalars")

    def rand_poly(nvars, maxdeg):
        p = MPoly.zero(nvars)
        for _ in range(4):
            e = tuple(rng.randint(0, maxdeg) for _ in range(nvars))
            if sum(e) > maxdeg:
                continue
            p = p + MPoly(nvars, {e: Rat(rng.randint(-4, 4))})
        return p

    for label in TYPES:
        rs = build_root_system(label)  # builds + structural checks
        n = rs.rank
        k1 = Rat(rng.randint(-5, 5), rng.choice((1, 2, 3)))
        k2 = Rat(rng.randint(-5, 5), rng.choice((1, 2, 3)))
        for _ in range(3):
            y1 = [Rat(rng.randint(-3, 3)) for _ in range(n)]
            y2 = [Rat(rng.randint(-3, 3)) for _ in range(n)]
            p = rand_poly(n, 3)
            a = dunkl_apply(rs, y2, dunkl_apply(rs, y1, p, k1, k2), k1, k2)
            b = dunkl_apply(rs, y1, dunkl_apply(rs, y2, p, k1, k2), k1, k2)
            if a != b:
                raise InvariantViolation(f"{label}: Dunkl operators fail to commute")
        report(f"dunkl commutativity {label}")

    for label in TYPES:
        rs = build_root_system(label)
        rep = get_irrep(rs, "triv")
        k1 = Rat(rng.randint(-4, 4), 2)
        k2 = Rat(rng.randint(-4, 4), 2)
        vm = VermaModule(rs, rep, k1, k2)
        for d in range(1, 4):
            vm.gram(d)  # symmetry is enforced internally
        report(f"gram symmetry {label}")

    for label in ("A2", "B2", "G2"):
        for nn in range(7):
            top = nn // 2 if label == "B2" else nn // 3
            for r in range(top + 1):
                if f_power_image(label, nn, r) != f_power_image_closed(label, nn, r):
                    raise InvariantViolation(
                        f"{label}: recursion/closed-form mismatch at ({nn},{r})")
        k1 = Rat(rng.randint(-4, 4), rng.choice((1, 2, 3)))
        k2 = k1 if label == "A2" else Rat(rng.randint(-4, 4), rng.choice((1, 2, 3)))
        for nn in range(4):
            top = nn // 2 if label == "B2" else nn // 3
            for r in range(top + 1):
                want = QuadExt.coerce(evaluate_at_couplings(
                    label, f_power_image(label, nn, r), k1, k2))
                if f_power_image_direct(label, nn, r, k1, k2) != want:
                    raise InvariantViolation(
                        f"{label}: direct route mismatch at ({nn},{r})")
        report(f"image table {label}")

    rep6 = check_kappa_factorization(3)
    if not rep6.all_verified:
        raise InvariantViolation("kappa factorization failed below index 7")
    report("kappa factorization r <= 7")

    # a known finite and a known infinite point
    res = _classify("A2", "triv", Rat(-1, 3), Rat(-1, 3))
    assert res.finite and res.total_dim == 1
    res = _classify("A2", "triv", Rat(1, 2), Rat(1, 2))
    assert not res.finite
    vs = very_singular("G2", Rat(-1, 2), Rat(-1, 2))
    assert vs.finite and vs.m == 2
    report("classification spot checks")

    print(f"selftest passed (seed {args.seed})")
    return 0


# -- parser ------------------------------------------------------------------------

def _add_k_flags(p):
    p.add_argument("--k", help="coupling for all roots, exact rational")
    p.add_argument("--k1", help="coupling on the short-root orbit")
    p.add_argument("--k2", help="coupling on the long-root orbit")


def build_parser() -> argparse.ArgumentParser:
    top = _Parser(prog="cherednik",
                  description="Exact classification tools for rational "
                              "Cherednik algebras of rank <= 2.")
    sub = top.add_subparsers(dest="subcommand", required=True,
                             parser_class=_Parser)

    p = sub.add_parser("info", help="root-system summary")
    p.add_argument("--type", required=True, choices=TYPES)
    p.set_defaults(fn=_cmd_info)

    p = sub.add_parser("classify",
                       help="finite-dimensionality of one simple quotient")
    p.add_argument("--type", required=True, choices=TYPES)
    p.add_argument("--chi", required=True, help="lowest-weight character label")
    _add_k_flags(p)
    p.add_argument("--max-degree", type=int, default=None,
                   help="scan bound override for the graded-dimension scan")
    p.add_argument("--format", default="json", choices=("json", "csv", "table"))
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("gram", help="contravariant form on one graded layer")
    p.add_argument("--type", required=True, choices=TYPES)
    p.add_argument("--chi", required=True)
    _add_k_flags(p)
    p.add_argument("--degree", required=True, type=int)
    p.add_argument("--symbolic", action="store_true",
                   help="entries as polynomials in k1, k2")
    p.set_defaults(fn=_cmd_gram)

    p = sub.add_parser("sweep", help="classification over a coupling grid (CSV)")
    p.add_argument("--type", required=True, choices=TYPES)
    p.add_argument("--chi", required=True)
    p.add_argument("--k1-range", required=True, metavar="a:b:step")
    p.add_argument("--k2-range", default=None, metavar="a:b:step",
                   help="omit for a diagonal sweep with k2 = k1")
    p.set_defaults(fn=_cmd_sweep)

    p = sub.add_parser("conjecture",
                       help="verify the conjectured kappa-factor root pattern")
    p.add_argument("--max-q", required=True, type=int)
    p.set_defaults(fn=_cmd_conjecture)

    p = sub.add_parser("selftest", help="seeded randomized property suite")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=_cmd_selftest)

    return top


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as e:
        print(f"cherednik: error: {e}", file=sys.stderr)
        return 1
    except ValueError as e:
        # unknown character labels and similar request-level problems
        print(f"cherednik: error: {e}", file=sys.stderr)
        return 1
    except (InvariantViolation, NonDivisibleError, AssertionError) as e:
        print(f"cherednik: invariant violation: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(run())
