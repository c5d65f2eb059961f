"""Command-line front end.

Subcommands: check, dual, hat, vee, share, expand, entropy.  All I/O is
JSON (see quantoid.documents for the formats).  Exit codes: 0 on success
(for `share`, the dealer is ideal; for `expand --verify-lemma52`, the
cross-check holds), 1 for an analyzable-but-negative verdict, 2 on any
input or validation error.  Outputs are deterministic byte for byte.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import documents
from .correspondence import to_polymatroid, to_polyquantoid
from .duality import dual
from .entropic import shannon_entropy_function, snap_to_rational, von_neumann_entropy_function
from .errors import QuantoidError
from .expansion import (
    DEFAULT_EXPANSION_CAP,
    expansion_correspondence_holds,
    free_expand_polymatroid,
    free_expand_polyquantoid,
    two_factor,
)
from .setfn import POLYMATROID, POLYQUANTOID, classify
from .sharing import analyze_sharing

EXPANSION_CAP_ENV = "QUANTOID_EXPANSION_CAP"

_TRANSFORMS = {
    "dual": dual,
    "hat": to_polymatroid,
    "vee": to_polyquantoid,
}


def _read_json(path: str):
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def _emit(text: str, outfile: str | None):
    if outfile:
        with open(outfile, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _expansion_cap() -> int:
    raw = os.environ.get(EXPANSION_CAP_ENV)
    return int(raw) if raw else DEFAULT_EXPANSION_CAP


def _cmd_check(args) -> int:
    f = documents.set_function_from_doc(_read_json(args.file))
    _emit(documents.dumps(classify(f).as_dict()), None)
    return 0


def _cmd_transform(args) -> int:
    f = documents.set_function_from_doc(_read_json(args.file))
    result = _TRANSFORMS[args.op](f)
    _emit(documents.dumps(documents.set_function_to_doc(result)), args.out)
    return 0


def _cmd_share(args) -> int:
    f = documents.set_function_from_doc(_read_json(args.file))
    report = analyze_sharing(f, args.dealer, args.kind)
    _emit(documents.dumps(documents.sharing_report_to_doc(report)), args.out)
    return 0 if report.ideal else 1


def _cmd_expand(args) -> int:
    f = documents.set_function_from_doc(_read_json(args.file))
    cap = _expansion_cap()
    if args.verify_lemma52:
        verdict = expansion_correspondence_holds(f, cap=cap)
        _emit(documents.dumps({"lemma52": verdict}), args.out)
        return 0 if verdict else 1
    if args.mode is None:
        raise QuantoidError("expand requires --mode or --verify-lemma52")
    builder = {
        "matroid": free_expand_polymatroid,
        "quantoid": free_expand_polyquantoid,
        "two-factor": two_factor,
    }[args.mode]
    expansion = builder(f, cap=cap)
    _emit(documents.dumps(documents.expansion_to_doc(expansion)), args.out)
    return 0


def _cmd_entropy(args) -> int:
    if args.classical:
        dist = documents.distribution_from_doc(_read_json(args.classical))
        fn = shannon_entropy_function(dist)
    else:
        state = documents.pure_state_from_doc(_read_json(args.quantum))
        fn = von_neumann_entropy_function(state)
    if args.snap is not None:
        exact = snap_to_rational(fn, args.snap)
        doc = documents.set_function_to_doc(exact)
    else:
        doc = documents.approx_set_function_to_doc(fn)
    _emit(documents.dumps(doc), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quantoid",
        description="Classify and transform rank functions of polymatroids and polyquantoids.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="print the axiom classification of a set-function document")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_check)

    for op, blurb in [
        ("dual", "apply the singleton-preserving duality mapping"),
        ("hat", "add the singleton sum (polyquantoid to polymatroid direction)"),
        ("vee", "subtract half the singleton sum (polymatroid to polyquantoid direction)"),
    ]:
        p = sub.add_parser(op, help=blurb)
        p.add_argument("file")
        p.add_argument("out", nargs="?", default=None)
        p.set_defaults(handler=_cmd_transform, op=op)

    p = sub.add_parser("share", help="per-dealer secret-sharing analysis")
    p.add_argument("file")
    p.add_argument("--dealer", required=True)
    p.add_argument("--kind", choices=[POLYMATROID, POLYQUANTOID], default=POLYMATROID)
    p.add_argument("-o", "--out", default=None)
    p.set_defaults(handler=_cmd_share)

    p = sub.add_parser("expand", help="free expansions and 2-factors")
    p.add_argument("file")
    p.add_argument("--mode", choices=["matroid", "quantoid", "two-factor"], default=None)
    p.add_argument("--verify-lemma52", action="store_true",
                   help="cross-check the two expansion routes of an integer polyquantoid")
    p.add_argument("-o", "--out", default=None)
    p.set_defaults(handler=_cmd_expand)

    p = sub.add_parser("entropy", help="entropy function of a distribution or pure state")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--classical", metavar="DIST_JSON")
    group.add_argument("--quantum", metavar="STATE_JSON")
    p.add_argument("--snap", type=int, default=None, metavar="D",
                   help="snap values to rationals with denominator at most D")
    p.add_argument("-o", "--out", default=None)
    p.set_defaults(handler=_cmd_entropy)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except QuantoidError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except json.JSONDecodeError as exc:
        print(f"MalformedDocument: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
