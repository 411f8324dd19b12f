"""Command line front end: ``dunwoody {check,classify,word,homology,sweep,two-bridge}``.

Exit codes: 0 success (admissible / all orders match), 1 not admissible or a
mismatch, 2 bad input.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .admissibility import is_admissible
from .classification import auto_s, classify, covering_report
from .diagram import SixTuple
from .homology import first_homology, relation_matrix
from .knots import TwoBridgeKnot, alexander_two_bridge, branched_cover_order
from .presentation import build_presentation, exponent_sum
from .records import SweepConfig, format_records, parse_range, run_sweep

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_sigma(text: str) -> SixTuple:
    """Parse ``a,b,c,n,r,s``; ``s`` may be ``auto`` for ``s = -p q``."""
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 6:
        raise UsageError(f"expected a,b,c,n,r,s, got {text!r}")
    try:
        a, b, c, n, r = (int(x) for x in parts[:5])
        if parts[5] == "auto":
            s = auto_s(a, b, c, r)
        else:
            s = int(parts[5])
        return SixTuple(a, b, c, n, r, s)
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from None


def _emit(payload: dict, fmt: str, lines: list[str]) -> None:
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True))
    elif fmt == "csv":
        keys = list(payload)
        print(",".join(keys))
        print(",".join("" if payload[k] is None else str(payload[k]) for k in keys))
    else:
        print("\n".join(lines))


def cmd_check(args) -> int:
    sigma = parse_sigma(args.sigma)
    report = is_admissible(sigma)
    data = report.as_dict()
    flat = {k: v for k, v in data.items() if k != "sigma"}
    flat = {"sigma": str(sigma), **flat}
    lines = [
        f"sigma        {sigma}  (d = {sigma.d})",
        f"admissible   {'yes' if report.admissible else 'no'}",
        f"m            {report.m_cycles}",
        f"cond (1)     {report.cond1}   (m = n)",
        f"cond (2)     {report.cond2}   (complement of D connected)",
        f"cond (i')    {report.cond_i_prime}",
        f"cond (ii')   {report.cond_ii_prime}",
        f"p            {report.p_sigma}",
        f"q            {report.q_sigma}",
    ]
    _emit(flat if args.format == "csv" else data, args.format, lines)
    return EXIT_OK if report.admissible else EXIT_FAIL


def _not_admissible(sigma, fmt) -> int:
    report = is_admissible(sigma)
    if report.admissible:
        return EXIT_OK
    msg = f"{sigma} is not admissible (m = {report.m_cycles}, complement connected = {report.cond2})"
    if fmt == "json":
        print(json.dumps({"sigma": list(sigma.astuple()), "admissible": False}, sort_keys=True))
    else:
        print(msg)
    return EXIT_FAIL


def cmd_classify(args) -> int:
    sigma = parse_sigma(args.sigma)
    if _not_admissible(sigma, args.format):
        return EXIT_FAIL
    rep = covering_report(sigma)
    group = first_homology(sigma)
    data = rep.as_dict()
    data["manifold"] = classify(sigma).as_dict()
    data["h1"] = str(group)
    data["h1_order"] = str(group.order) if group.rank else group.order
    if sigma.n == 1:
        cover = f"M{sigma} is itself genus one"
    else:
        cover = (
            f"{sigma.n}-fold cyclic cover of {rep.quotient_class} branched over "
            f"K{rep.branch_knot_id}"
        )
    lines = [
        f"sigma          {sigma}",
        f"quotient       M{rep.quotient_tuple} = {rep.quotient_class}",
        f"covering       {cover}",
        f"branch knot    K(a,b,c,r) = K{rep.branch_knot_id}",
        f"p, q           {rep.p_sigma}, {rep.q_sigma}",
        f"H_1            {group}",
        "intermediate   "
        + ", ".join(f"n'={iq.n}: {iq.sigma}" for iq in rep.intermediate_quotients),
    ]
    if args.format == "csv":
        data = {
            "sigma": str(sigma),
            "quotient": str(rep.quotient_class),
            "fold_count": rep.fold_count,
            "branch_knot_id": " ".join(map(str, rep.branch_knot_id)),
            "h1": str(group),
        }
    _emit(data, args.format, lines)
    return EXIT_OK


def cmd_word(args) -> int:
    sigma = parse_sigma(args.sigma)
    if _not_admissible(sigma, args.format):
        return EXIT_FAIL
    pres = build_presentation(sigma)
    data = {
        "sigma": list(sigma.astuple()),
        "word": pres.base_word.to_text(),
        "eps_w": exponent_sum(pres.base_word),
        "relators": [r.to_text() for r in pres.relators],
    }
    if args.format == "table":
        sys.stdout.write(pres.to_text())
    elif args.format == "csv":
        _emit({"sigma": str(sigma), "word": data["word"], "eps_w": data["eps_w"]}, "csv", [])
    else:
        _emit(data, "json", [])
    return EXIT_OK


def cmd_homology(args) -> int:
    sigma = parse_sigma(args.sigma)
    if _not_admissible(sigma, args.format):
        return EXIT_FAIL
    matrix = relation_matrix(build_presentation(sigma))
    group = first_homology(sigma)
    order = str(group.order) if group.rank else group.order
    data = {
        "sigma": list(sigma.astuple()),
        "torsion": list(group.torsion),
        "rank": group.rank,
        "order": order,
        "h1": str(group),
    }
    lines = [" ".join(f"{x:>3}" for x in row) for row in matrix] + [f"H_1 = {group}  (order {order})"]
    if args.format == "csv":
        data = {"sigma": str(sigma), "h1": str(group), "rank": group.rank, "order": order}
    _emit(data, args.format, lines)
    return EXIT_OK


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("DUNWOODY_JOBS", "1")))
    except ValueError:
        return 1


def cmd_sweep(args) -> int:
    try:
        if args.config:
            with open(args.config, encoding="utf-8") as fh:
                config = SweepConfig.from_text(fh.read())
        else:
            config = SweepConfig()
        for key in "abcnrs":
            value = getattr(args, key)
            if value is not None:
                setattr(config, key, parse_range(value, key))
        if args.filter:
            config.filters = tuple(args.filter)
        if args.format_given:
            config.fmt = args.format
        config.jobs = args.jobs or config.jobs or _default_jobs()
    except (OSError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    if config.fmt not in ("table", "json", "csv"):
        raise UsageError(f"unknown format {config.fmt!r}")
    sys.stdout.write(format_records(run_sweep(config), config.fmt))
    return EXIT_OK


def cmd_two_bridge(args) -> int:
    alpha, beta = args.alpha, args.beta
    try:
        knot = TwoBridgeKnot(alpha, beta)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    a, r = (alpha - 1) // 2, knot.beta // 2
    s = auto_s(a, 0, 1, r)
    delta = alexander_two_bridge(knot)
    rows = []
    ok = True
    for n in range(2, args.n_max + 1):
        sigma = SixTuple(a, 0, 1, n, r, s)
        dunwoody = first_homology(sigma).order
        oracle = branched_cover_order(delta, n)
        match = dunwoody == oracle
        ok &= match
        rows.append({"n": n, "sigma": list(sigma.astuple()), "dunwoody": str(dunwoody), "oracle": str(oracle), "match": match})
    if args.format == "json":
        print(json.dumps({"alpha": alpha, "beta": knot.beta, "alexander": str(delta), "rows": rows}, sort_keys=True))
    elif args.format == "csv":
        print("n,sigma,dunwoody,oracle,match")
        for row in rows:
            print(f"{row['n']},{' '.join(map(str, row['sigma']))},{row['dunwoody']},{row['oracle']},{row['match']}")
    else:
        print(f"b({alpha},{knot.beta})  Alexander polynomial {delta}  (a={a}, r={r}, s={s})")
        print(f"{'n':>3}  {'sigma':<22}{'|H_1| Dunwoody':>16}{'|H_1| oracle':>14}  match")
        for row in rows:
            sig = "(" + ",".join(map(str, row["sigma"])) + ")"
            print(f"{row['n']:>3}  {sig:<22}{row['dunwoody']:>16}{row['oracle']:>14}  {'yes' if row['match'] else 'NO'}")
    return EXIT_OK if ok else EXIT_FAIL


class _FormatAction(argparse.Action):
    def __call__(self, parser, namespace, values, option_string=None):
        setattr(namespace, self.dest, values)
        namespace.format_given = True


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dunwoody", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json", "csv"), default="table", action=_FormatAction)
    common.set_defaults(format_given=False)
    sub = parser.add_subparsers(dest="command", required=True)

    for name, func, help_text in (
        ("check", cmd_check, "admissibility report"),
        ("classify", cmd_classify, "quotient manifold and covering structure"),
        ("word", cmd_word, "cyclic presentation (one relator per line)"),
        ("homology", cmd_homology, "relation matrix and first homology"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("sigma", help="a,b,c,n,r,s (s may be 'auto')")
        p.set_defaults(func=func)

    p = sub.add_parser("sweep", parents=[common], help="enumerate a box of tuples")
    p.add_argument("--config", help="key = value file describing the box")
    for key in "abcnrs":
        p.add_argument(f"-{key}", dest=key, help=f"range for {key}: 3, 0..4, 1,3 or all")
    p.add_argument("--filter", action="append", choices=SweepConfig.FILTERS)
    p.add_argument("--jobs", type=int, help="worker processes (default $DUNWOODY_JOBS or 1)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("two-bridge", parents=[common], help="compare Dunwoody covers with the Fox formula")
    p.add_argument("alpha", type=int)
    p.add_argument("beta", type=int)
    p.add_argument("--n-max", type=int, default=6)
    p.set_defaults(func=cmd_two_bridge)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
