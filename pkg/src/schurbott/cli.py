"""Command-line surface for batch verification and exploration.

Weights use the bare comma syntax "a,b" (negative entries allowed, rank
inferred from the length).  Exit codes: 0 on success/pass, 1 on a failed
verification, 2 on usage errors.  Reports go to stdout, diagnostics to
stderr; --format json emits the documented stable schemas.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bundle_calculus as bc
from . import rep_ring as rr
from . import soc, verify
from .bwb import bwb_single
from .partitions import Weight, parse_weight, trivial


def _emit(args: argparse.Namespace, text: str, payload: dict) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _weight_arg(text: str) -> Weight:
    try:
        return parse_weight(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def cmd_schur(args: argparse.Namespace) -> int:
    rank = args.rank
    elements = [rr.RepElement.schur(rank, w.padded(rank)) for w in args.weights]
    if args.operation == "tensor":
        if len(elements) != 2:
            raise SystemExit("schur tensor needs exactly two weights")
        result = rr.tensor(elements[0], elements[1])
    elif args.operation == "dual":
        result = rr.dual(elements[0])
    elif args.operation == "sym":
        result = rr.sym_power(elements[0], args.power)
    elif args.operation == "ext":
        result = rr.ext_power(elements[0], args.power)
    else:  # dim
        dims = {str(w): rr.weyl_dim(w.padded(rank)) for w in args.weights}
        _emit(args, "\n".join(f"dim S{w} = {v}" for w, v in dims.items()), {"dims": dims})
        return 0
    _emit(args, str(result), result.to_json())
    return 0


def cmd_bwb(args: argparse.Namespace) -> int:
    d, k = args.d, args.k
    gamma = args.k_weight if args.k_weight is not None else trivial(d - k)
    outcome = bwb_single(d, k, gamma, args.q_weight)
    _emit(args, str(outcome), outcome.to_json())
    return 0


def cmd_wedge(args: argparse.Namespace) -> int:
    if args.middle:
        result = bc.wedge2_middle()
        label = "wedge^2 of the middle term"
    else:
        result = bc.wedge_nprime(args.q)
        label = f"wedge^{args.q} N'"
    _emit(args, f"{label} = {result} (rank {result.dimension()})", result.to_json())
    return 0


def _report_exit(args: argparse.Namespace, report: soc.VerificationReport) -> int:
    verdict = "pass" if report.verdict else "fail"
    lines = [f"{report.kind}: {verdict} (Hom dimension {report.hom_dimension})"]
    for c in report.failures():
        summand = "(" + ",".join(str(e) for e in c.weight) + ")"
        lines.append(f"  q={c.q} summand {summand}: {c.outcome}")
    _emit(args, "\n".join(lines), report.to_json())
    return 0 if report.verdict else 1


def cmd_check_exc(args: argparse.Namespace) -> int:
    return _report_exit(args, soc.check_exceptional(args.alpha, args.d))


def cmd_check_ff(args: argparse.Namespace) -> int:
    return _report_exit(args, soc.check_fully_faithful(args.alpha, args.d))


def cmd_check_so(args: argparse.Namespace) -> int:
    return _report_exit(args, soc.check_semiorthogonal(args.alpha, args.beta, args.d))


def cmd_enumerate(args: argparse.Namespace) -> int:
    labels = soc.enumerate_sos(args.d) if args.sos else soc.enumerate_ff(args.d)
    text = "\n".join(str(lab.alpha) for lab in labels) + f"\n{len(labels)} labels"
    _emit(
        args,
        text,
        {"d": args.d, "sos": args.sos, "labels": [list(l.alpha.entries) for l in labels]},
    )
    return 0


def cmd_kummer(args: argparse.Namespace) -> int:
    count = soc.kummer_count(args.d)
    _emit(args, str(count), {"d": args.d, "count": str(count)})
    return 0


def cmd_verify_paper(args: argparse.Namespace) -> int:
    results = verify.run_all(args.d_max)
    if args.format == "json":
        print(json.dumps([r.to_json() for r in results]))
    else:
        width = max(len(r.name) for r in results)
        for r in results:
            print(f"{r.name:<{width}}  {'PASS' if r.passed else 'FAIL'}  {r.detail}")
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schurbott",
        description="Exact Schur calculus and cohomology checks on Grassmannians",
    )
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("schur", help="representation ring operations")
    p.add_argument("operation", choices=("tensor", "dual", "sym", "ext", "dim"))
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--power", type=int, default=1, help="power for sym/ext")
    p.add_argument("weights", type=_weight_arg, nargs="+")
    p.set_defaults(func=cmd_schur)

    p = sub.add_parser("bwb", help="cohomology of one homogeneous bundle on G(k,d)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--q-weight", type=_weight_arg, required=True)
    p.add_argument("--k-weight", type=_weight_arg, default=None)
    p.set_defaults(func=cmd_bwb)

    p = sub.add_parser("wedge", help="exterior powers of the restricted normal bundle")
    p.add_argument("--q", type=int, default=1)
    p.add_argument("--middle", action="store_true", help="wedge^2 of the middle SES term")
    p.set_defaults(func=cmd_wedge)

    p = sub.add_parser("check-exc", help="exceptionality of one kernel bundle")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--alpha", type=_weight_arg, required=True)
    p.set_defaults(func=cmd_check_exc)

    p = sub.add_parser("check-ff", help="fibrewise fully-faithfulness conditions")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--alpha", type=_weight_arg, required=True)
    p.set_defaults(func=cmd_check_ff)

    p = sub.add_parser("check-so", help="fibrewise semi-orthogonality conditions")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--alpha", type=_weight_arg, required=True)
    p.add_argument("--beta", type=_weight_arg, required=True)
    p.set_defaults(func=cmd_check_so)

    p = sub.add_parser("enumerate", help="list the admissible kernel labels")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--sos", action="store_true", help="restrict to the semi-orthogonal sequence")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("kummer", help="length of the induced exceptional sequence")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_kummer)

    p = sub.add_parser("verify-paper", help="run the whole verification suite")
    p.add_argument("--d-max", type=int, default=12)
    p.set_defaults(func=cmd_verify_paper)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, rr.DecompositionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
