"""Command line entry point.

Subcommands:

* ``gen``       print members of a polynomial family
* ``turan``     build a (possibly extended/reflected/shifted) Turan expression
* ``stability`` decide weak Hurwitz stability of a coefficient list
* ``campaign``  sweep a (k, n) grid of extended Turan stability verdicts
* ``verify``    run the named verification suites

Exit code is 0 iff every assertion of the invoked command passed.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import expressions, harness, sequences, stability
from .harness import DEFAULT_SEED, CampaignConfig, TIER_LIMITS
from .polycore import Poly
from .sequences import SequenceSpec


def _parse_spec(args) -> SequenceSpec:
    family = args.family
    kwargs = {}
    if family == "jensen":
        if not args.gamma:
            raise SystemExit("jensen requires --gamma")
        kwargs["gamma"] = [Fraction(v) for v in args.gamma.split(",")]
    elif family in ("type_a", "type_h"):
        if not args.params:
            raise SystemExit(f"{family} requires --params")
        values = [Fraction(v) for v in args.params.split(",")]
        if family == "type_a":
            if len(values) < 3:
                raise SystemExit("type_a params: a,b,c0[,c1,...]")
            kwargs.update(a=values[0], b=values[1], c=values[2:])
        else:
            if len(values) != 3:
                raise SystemExit("type_h params: a,b,c")
            kwargs.update(a=values[0], b=values[1], cscale=values[2])
    return sequences.spec(family, **kwargs)


def _emit_polys(polys, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps([p.to_text() for p in polys]))
    else:
        for i, p in enumerate(polys):
            print(f"P_{i}: {p.pretty()}  [{p.to_text()}]")


def cmd_gen(args) -> int:
    spec = _parse_spec(args)
    polys = sequences.generate(spec, args.k)
    _emit_polys(polys, args.format)
    return 0


def cmd_turan(args) -> int:
    spec = _parse_spec(args)
    n = args.n or 1
    seq = sequences.generate(spec, 2 * n + args.k)
    expr = expressions.extended_turan(seq, args.k, n)
    if args.reflect:
        expr = expr.compose_linear(-1, 0)
    if args.shift:
        expr = expr.compose_linear(1, Fraction(args.shift))
    if args.format == "json":
        print(json.dumps({"family": spec.family, "k": args.k, "n": n,
                          "coeffs": expr.to_text()}))
    else:
        print(f"{expr.pretty()}  [{expr.to_text()}]")
    return 0


def cmd_stability(args) -> int:
    poly = Poly.from_text(args.poly)
    if poly.is_zero:
        raise SystemExit("the zero polynomial has no stability verdict")
    cert = stability.is_weakly_hurwitz(poly)
    if args.certificate:
        print(json.dumps(cert.summary()))
    else:
        print("weakly-hurwitz-stable" if cert.verdict else "unstable")
    return 0


def cmd_campaign(args) -> int:
    spec = _parse_spec(args)
    cfg = CampaignConfig(
        family=spec,
        k_max=args.k_max,
        n_max=args.n_max,
        reflect=args.reflect,
        shift=Fraction(args.shift) if args.shift else Fraction(0),
        jobs=args.jobs,
        tier=args.tier,
    )
    records = harness.run_campaign(cfg)
    harness.emit_reports(records, args.out, with_timing=args.timing)
    flagged = [r for r in records if r.flagged]
    print(f"{len(records)} cells, {len(flagged)} flagged -> {args.out}")
    for rec in flagged:
        print(
            f"!! COUNTEREXAMPLE CANDIDATE: family={rec.family} k={rec.k} "
            f"n={rec.n} verdict={rec.verdict}"
        )
    return 1 if flagged else 0


def cmd_verify(args) -> int:
    seed = args.seed
    suites = {
        "fisk": lambda: harness.verify_fisk_counterexample(),
        "cheby": lambda: harness.verify_chebyshev_closed_forms(20, 6),
        "thm12": lambda: (
            harness.verify_theorem_1_2(sequences.spec("bell"), 25)
            and harness.verify_theorem_1_2(sequences.spec("hermite"), 12)
            and harness.verify_theorem_1_2(harness.polar_unit_sequence(17), 15)
        ),
        "legendre": lambda: harness.verify_legendre_turan(20),
        "wronskian": lambda: harness.verify_wronskian_strip(100, seed=seed),
        "jensen": lambda: harness.verify_jensen_laguerre_relations(25, seed=seed),
    }
    names = list(suites) if args.suite == "all" else [args.suite]
    ok = True
    for name in names:
        passed = suites[name]()
        print(f"{name}: {'PASS' if passed else 'FAIL'}")
        ok = ok and passed
    if args.suite in ("jensen", "all"):
        for k, verdict in harness.question_probe_jensen(10):
            print(f"jensen probe (open question): k={k} stable={verdict}")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="turanstab", description=__doc__)
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED,
                        help="seed for randomized suites")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_family(p):
        p.add_argument("--family", required=True, choices=sequences.FAMILIES)
        p.add_argument("--gamma", help="comma-separated gamma list (jensen)")
        p.add_argument("--params", help="comma-separated recurrence parameters")

    p = sub.add_parser("gen", help="generate family members P_0..P_k")
    add_family(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("turan", help="build a Turan-type expression")
    add_family(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--reflect", action="store_true")
    p.add_argument("--shift", default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_turan)

    p = sub.add_parser("stability", help="weak Hurwitz stability verdict")
    p.add_argument("--poly", required=True,
                   help="ascending comma-separated coefficients, e.g. 0,-8,-2,0,1")
    p.add_argument("--certificate", action="store_true")
    p.set_defaults(func=cmd_stability)

    p = sub.add_parser("campaign", help="sweep extended Turan stability verdicts")
    add_family(p)
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--n-max", type=int, default=1)
    p.add_argument("--reflect", action="store_true")
    p.add_argument("--shift", default=None)
    p.add_argument("--tier", choices=tuple(TIER_LIMITS), default="desk")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timing", action="store_true",
                   help="include per-cell timings (report no longer byte-stable)")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_campaign)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument(
        "--suite",
        required=True,
        choices=("fisk", "cheby", "thm12", "legendre", "wronskian", "jensen", "all"),
    )
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
