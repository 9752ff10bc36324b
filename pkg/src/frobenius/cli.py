"""Command-line interface.

Examples::

    frobenius betti --monoid three:1,1,2 --lambda 0,0,4
    frobenius predict --monoid two:2,2 --lambda 1,0
    frobenius recognize 2,1 1,2 1,1
    frobenius poincare --monoid three:2,3,3 --i-max 6
    frobenius verify --suite all

Exit codes: 0 success, 1 a verification suite failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .homology import GF3, RATIONALS, frobenius_complex, local_betti, parse_field
from .interval import open_interval
from .monoid import normalize, parse_coords, parse_spec, recognize_submonoid
from .poincare import default_box, series_closed_form, series_computed, series_diff
from .suites import SUITES, run_suite
from .transition import predicted_homotopy_type

FORMATS = ("json", "csv", "text")


class UsageError(Exception):
    pass


class CheckFailed(Exception):
    pass


def _betti_json(b: dict[int, int]) -> dict[str, int]:
    return {str(i): v for i, v in sorted(b.items())}


def _csv(rows, header) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _spec_and_lambda(args):
    spec = parse_spec(args.monoid)
    if args.lam is None:
        raise UsageError("--lambda is required")
    return spec, normalize(spec, parse_coords(args.lam))


def cmd_interval(args) -> str:
    spec, lam = _spec_and_lambda(args)
    poset = open_interval(spec, lam)
    if args.format == "json":
        return poset.to_json()
    if args.format == "csv":
        rows = [(i, " ".join(map(str, e.coords))) for i, e in enumerate(poset.elements)]
        return _csv(rows, ["index", "coords"])
    lines = [f"{i}: {e}" for i, e in enumerate(poset.elements)]
    lines += [f"{i} < {j}" for i, j in poset.relations()]
    return "\n".join(lines)


def cmd_complex(args) -> str:
    spec, lam = _spec_and_lambda(args)
    cx = frobenius_complex(spec, lam, core=args.core)
    if args.format == "json":
        return cx.to_json()
    if args.format == "csv":
        return _csv([(len(f) - 1, " ".join(map(str, f))) for f in cx.facets()], ["dim", "facet"])
    return cx.to_facet_text()


def cmd_betti(args) -> str:
    spec, lam = _spec_and_lambda(args)
    field = parse_field(args.field)
    betti = local_betti(spec, lam, field, core=args.core)
    if args.cross_check_fields:
        for other in (GF3, RATIONALS):
            if local_betti(spec, lam, other, core=args.core) != betti:
                raise CheckFailed(f"Betti numbers over {field} and {other} disagree")
    if args.format == "csv":
        return _csv(sorted(betti.items()), ["i", "beta"])
    if args.format == "text":
        return " ".join(f"beta_{i}={v}" for i, v in sorted(betti.items())) or "all zero"
    return json.dumps(_betti_json(betti))


def cmd_predict(args) -> str:
    spec, lam = _spec_and_lambda(args)
    if all(v == 0 for v in lam.coords):
        out = {"homotopy_type": None, "sphere_dim": None, "betti": {"0": 1}}
    else:
        t = predicted_homotopy_type(spec, lam)
        out = {
            "homotopy_type": str(t),
            "sphere_dim": t.dim,
            "wedge": t.kind == "wedge",
            "betti": _betti_json(t.betti),
        }
    if args.format == "json":
        return json.dumps(out)
    if args.format == "csv":
        return _csv(sorted((int(i), v) for i, v in out["betti"].items()), ["i", "beta"])
    return f"{out['homotopy_type']} {json.dumps(out['betti'])}"


def _parse_box(text, spec, i_max):
    if text is None:
        return default_box(spec, i_max)
    box = parse_coords(text)
    if len(box) == 2 and spec.arity == 3:
        box = box + (default_box(spec, i_max)[2],)
    return box


def cmd_poincare(args) -> str:
    spec = parse_spec(args.monoid)
    box = _parse_box(args.box, spec, args.i_max)
    computed = series_computed(spec, args.i_max, box, args.mode, parse_field(args.field))
    closed = series_closed_form(spec, args.i_max, box)
    diff = series_diff(computed, closed)
    if args.format == "csv":
        rows = [(i, " ".join(map(str, lam)), c, closed.terms.get((i, lam), 0)) for i, lam, c in computed.sorted_terms()]
        return _csv(rows, ["i", "lambda", "computed", "closed_form"])
    if args.format == "text":
        lines = [f"t^{i} z^{lam}: {c}" for i, lam, c in computed.sorted_terms()]
        lines.append("closed form matches" if not diff else f"{len(diff)} discrepancies: {diff}")
        return "\n".join(lines)
    return json.dumps(
        {
            "box": list(box),
            "computed": json.loads(computed.to_json()),
            "closed_form": json.loads(closed.to_json()),
            "diff": [{"i": i, "lambda": list(lam), "computed": a, "closed_form": b} for i, lam, a, b in diff],
        }
    )


def cmd_recognize(args) -> str:
    gens = [parse_coords(g) for g in args.generators]
    p, q, r, perm = recognize_submonoid(*gens)
    if args.format == "json":
        return json.dumps({"p": p, "q": q, "r": r, "permutation": list(perm)})
    if args.format == "csv":
        return _csv([(p, q, r, " ".join(map(str, perm)))], ["p", "q", "r", "permutation"])
    return f"three:{p},{q},{r} permutation {perm}"


def cmd_verify(args):
    names = list(SUITES) if args.suite == "all" else [args.suite]
    results = [run_suite(n) for n in names]
    if args.format == "json":
        text = json.dumps(
            [{"suite": r.name, "passed": r.passed, "checks": r.checked, "failures": [list(map(str, f)) for f in r.failures]} for r in results]
        )
    else:
        text = "\n".join(r.line() for r in results)
    return text, all(r.passed for r in results)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="frobenius", description="Frobenius complexes of two- and three-generator monoids.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_lambda=True):
        p.add_argument("--format", choices=FORMATS, default=None)
        p.add_argument("--output", "-o", default="-", help="output path, '-' for stdout")
        if with_lambda:
            p.add_argument("--monoid", required=True, help="free:d, two:p,q, three:p,q,r or numsg:p,q")
            p.add_argument("--lambda", dest="lam", help="comma-separated normal-form coordinates")

    def homology_flags(p):
        p.add_argument("--field", default="gf2", help="gf2, gf:p or rational")
        p.add_argument("--full", dest="core", action="store_false", help="skip the beat-point reduction")

    common(sub.add_parser("interval", help="print the open interval (0, lambda)"))
    p = sub.add_parser("complex", help="export the order complex of (0, lambda)")
    common(p)
    p.add_argument("--core", action="store_true", help="export the complex of the beat-point core instead")
    p = sub.add_parser("betti", help="local Betti numbers from homology")
    common(p)
    homology_flags(p)
    p.add_argument("--cross-check-fields", action="store_true", help="also compute over gf:3 and rational")
    common(sub.add_parser("predict", help="homotopy type predicted by the reduction theorems"))
    p = sub.add_parser("poincare", help="truncated Poincare series: computed vs closed form")
    common(p, with_lambda=False)
    p.add_argument("--monoid", required=True)
    p.add_argument("--i-max", type=int, default=6)
    p.add_argument("--box", help="inclusive bounds m,n[,k] on normal-form coordinates")
    p.add_argument("--mode", choices=("homology", "oracle"), default="homology")
    p.add_argument("--field", default="gf2")
    p = sub.add_parser("recognize", help="identify N u + N v + N w in N^2 with three:p,q,r")
    common(p, with_lambda=False)
    p.add_argument("generators", nargs=3, metavar="X,Y")
    p = sub.add_parser("verify", help="run a named verification suite")
    common(p, with_lambda=False)
    p.add_argument("--suite", required=True, choices=list(SUITES) + ["all"])
    return parser


COMMANDS = {
    "interval": cmd_interval,
    "complex": cmd_complex,
    "betti": cmd_betti,
    "predict": cmd_predict,
    "poincare": cmd_poincare,
    "recognize": cmd_recognize,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = "text" if args.command in ("complex", "verify") else "json"
    ok = True
    try:
        if args.command == "verify":
            text, ok = cmd_verify(args)
        else:
            text = COMMANDS[args.command](args)
    except (UsageError, ValueError) as exc:
        print(f"frobenius: error: {exc}", file=sys.stderr)
        return 2
    except CheckFailed as exc:
        print(f"frobenius: check failed: {exc}", file=sys.stderr)
        return 1
    text = text.rstrip("\n")
    if args.output == "-":
        print(text)
    else:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
