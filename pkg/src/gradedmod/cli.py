"""Command line interface.

Exit codes: 0 success, 1 bad input, 2 internal invariant failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import InputError, InvariantError
from .field import parse_field
from .graded_matrix import GradedMatrix
from .persistence import FilteredComplex, barcode_of_module, homology_persistence_module
from .presentation import GradedPresentation, PersistenceModule, decompose, presentation_from_persistence
from .reduction import (
    MINOR_GUARD,
    elementary_divisors_by_minors,
    quotient_signature,
    reduce,
    to_smith_normal_form,
)
from .trivial_grading import (
    TriviallyGradedModule,
    graded_elementary_divisor_decomposition,
    prime_power_decomposition,
    ungraded_elementary_divisors,
)
from . import selftest


def _load(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {path} at line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def _signature_from_input(obj):
    if isinstance(obj, dict) and "dims" in obj:
        pres = presentation_from_persistence(PersistenceModule.from_json(obj))
    else:
        pres = GradedPresentation.from_json(obj)
    return decompose(pres)


def cmd_decompose(args):
    sig = _signature_from_input(_load(args.input))
    return {"signature": sig.to_json()}


def cmd_barcode(args):
    obj = _load(args.input)
    field_override = parse_field(args.field) if args.field else None
    out = {}
    if isinstance(obj, dict) and "simplices" in obj:
        field = field_override or (parse_field(obj) if "field" in obj else parse_field("gf2"))
        complex_ = FilteredComplex.from_json(obj)
        module = homology_persistence_module(complex_, args.degree, field)
        out["degree"] = args.degree
        out.update(field.to_json())
    else:
        module = PersistenceModule.from_json(obj, field_override)
    barcode = barcode_of_module(module)
    out.update(barcode.to_json())
    text = None
    if args.ascii:
        text = barcode.render_ascii()
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(barcode.render_svg())
    return out, text


def _terms(diagonal):
    return [t.to_json() for t in diagonal]


def cmd_snf(args):
    A = GradedMatrix.from_json(_load(args.input))
    result = reduce(A)
    snf = to_smith_normal_form(result.reduced)
    if A.nrows <= MINOR_GUARD and A.ncols <= MINOR_GUARD:
        minors = elementary_divisors_by_minors(A)
        if minors != snf:
            raise InvariantError("elementary divisors from minors disagree with the reduced matrix")
        minors_json = _terms(minors.diagonal)
    else:
        minors_json = None
    return {
        "reduced": result.reduced.to_json(),
        "transform": result.transform.to_json(),
        "low_map": {str(k): v for k, v in result.low_map.items()},
        "smith_normal_form": {"diagonal": _terms(snf.diagonal), "rank": snf.rank},
        "elementary_divisors_by_minors": minors_json,
        "signature": quotient_signature(result.reduced).to_json(),
    }


def cmd_zmod(args):
    M = TriviallyGradedModule.from_json(_load(args.input))
    pp = prime_power_decomposition(M)
    ed = graded_elementary_divisor_decomposition(M)
    if ed.exists:
        graded = {"verdict": "exists", "signature": [[n, str(d)] for n, d in ed.signature]}
    else:
        graded = {"verdict": "nonexistent", "witness": [f"{d}@{n}" for d, n in ed.witness]}
    return {
        "prime_powers": [list(t) for t in pp.torsion],
        "free_ranks": {str(n): r for n, r in sorted(pp.free_ranks.items())},
        "graded_elementary_divisors": graded,
        "ungraded_elementary_divisors": [str(d) for d in ungraded_elementary_divisors(M)],
    }


def cmd_selftest(args):
    checks = selftest.run(seed=args.seed, count=args.count, trials=args.trials)
    out = {"seed": args.seed, "checks": [{"name": n, "passed": ok} for n, ok in checks]}
    out["passed"] = all(ok for _, ok in checks)
    return out


def build_parser():
    parser = argparse.ArgumentParser(prog="gradedmod", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="graded presentation or persistence module -> signature")
    p.add_argument("input")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("barcode", help="persistence module or filtration -> barcode")
    p.add_argument("input")
    p.add_argument("--degree", type=int, default=0, help="homology degree for filtration inputs")
    p.add_argument("--field", help="coefficient field: gf2, gf3, gf5, ..., or q")
    p.add_argument("--ascii", action="store_true", help="also print one text line per bar")
    p.add_argument("--svg", metavar="PATH", help="write an SVG rendering")
    p.set_defaults(func=cmd_barcode)

    p = sub.add_parser("snf", help="graded matrix -> reduced matrix, Smith normal form")
    p.add_argument("input")
    p.set_defaults(func=cmd_snf)

    p = sub.add_parser("zmod", help="trivially graded Z-module -> prime powers and ED verdict")
    p.add_argument("input")
    p.set_defaults(func=cmd_zmod)

    p = sub.add_parser("selftest", help="run randomized oracle checks")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=25, help="random instances per check")
    p.add_argument("--trials", type=int, default=10, help="basis changes per uniqueness instance")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        result = args.func(args)
    except InvariantError as exc:
        print(f"internal invariant failure: {exc}", file=sys.stderr)
        return 2
    except (InputError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (KeyError, TypeError, ValueError) as exc:
        print(f"error: malformed input: {exc!r}", file=sys.stderr)
        return 1
    text = None
    if isinstance(result, tuple):
        result, text = result
    json.dump(result, sys.stdout, indent=2)
    sys.stdout.write("\n")
    if text:
        sys.stdout.write(text + "\n")
    if args.command == "selftest" and not result["passed"]:
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
