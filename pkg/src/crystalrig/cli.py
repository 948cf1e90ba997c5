"""Command line interface.

Exit codes: 0 success, 1 invalid input or failed check, 2 the operators
produced zero, 3 the node limit was exceeded.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import documents, rigged, tableaux
from .bijection import seq_from_rc
from .cascading import CascadingError
from .growth import GrowthRejection, enumerate_next, validate
from .oracle import NodeLimitExceeded, cross_check, mlt_graph, rc_graph
from .rigged import RiggedConfiguration, RiggedError, RiggedPartition
from .tableaux import TableauError

OK, INVALID, ZERO, LIMIT = 0, 1, 2, 3
INPUT_ERRORS = (ValueError, KeyError, TypeError, TableauError, CascadingError, RiggedError)


def _read(path):
    if path in (None, "-"):
        return json.load(sys.stdin)
    with open(path) as fh:
        return json.load(fh)


def _emit(data, pretty_obj=None, pretty=False):
    if pretty and pretty_obj is not None:
        print(pretty_obj.pretty())
    else:
        print(json.dumps(data, indent=2 if pretty else None))


def parse_ops(text):
    """'f2 f1 e3' -> [('f', 2), ('f', 1), ('e', 3)]."""
    ops = []
    for tok in text.replace(",", " ").split():
        m = re.fullmatch(r"([ef])(\d+)", tok)
        if not m:
            raise ValueError(f"bad operator {tok!r}")
        ops.append((m.group(1), int(m.group(2))))
    return ops


def apply_ops(obj, ops):
    """Apply operators in the order written; None once one of them gives zero."""
    kind = documents.kind_of(obj)
    x = documents.convert(obj, "mlt") if kind == "seq" else obj
    mod = rigged if kind == "rc" else tableaux
    for op, a in ops:
        x = mod.apply_f(x, a) if op == "f" else mod.apply_e(x, a)
        if x is None:
            return None
    return documents.convert(x, "seq") if kind == "seq" else x


def cmd_convert(args):
    obj = documents.load(_read(args.file))
    out = documents.convert(obj, args.to)
    _emit(documents.dump(out), out, args.pretty)
    return OK


def cmd_check(args):
    try:
        obj = documents.load(_read(args.file))
    except (TableauError, CascadingError, RiggedError) as exc:
        _emit({"valid": False, "error": str(exc)})
        return INVALID
    if documents.kind_of(obj) == "rc":
        try:
            cert = validate(obj)
        except GrowthRejection as exc:
            _emit(exc.to_json())
            return INVALID
        _emit(cert.to_json(), pretty=args.pretty)
    else:
        _emit({"valid": True}, pretty=args.pretty)
    return OK


def cmd_apply(args):
    obj = documents.load(_read(args.file))
    out = apply_ops(obj, parse_ops(args.ops))
    if out is None:
        _emit(documents.ZERO)
        return ZERO
    _emit(documents.dump(out), out, args.pretty)
    return OK


def cmd_verify(args):
    g_mlt = mlt_graph(args.n, args.depth)
    g_rc = rc_graph(args.n, args.depth)
    report = cross_check(g_mlt, g_rc)
    print(f"cross-check: {report.summary()}")
    failures = 0 if report.ok else 1
    for kind, *rest in report.mismatches:
        print(f"  mismatch {kind}: {rest}")
    rejected = 0
    for r in g_rc.nodes:
        try:
            seq = seq_from_rc(r)
        except GrowthRejection:
            rejected += 1
            continue
        if documents.convert(seq, "rc") != r:
            rejected += 1
    print(f"growth round trip: {len(g_rc) - rejected}/{len(g_rc)} nodes")
    if rejected:
        failures += 1
    if args.dump:
        with open(args.dump, "w") as fh:
            fh.write(g_rc.dump(lambda x: json.dumps(x.to_json()["partitions"])) + "\n")
    return OK if not failures else INVALID


def cmd_enumerate(args):
    data = _read(args.suffix)
    n = int(data["n"])
    suffix = [RiggedPartition(tuple(tuple(s) for s in p)) for p in data["partitions"]]
    try:
        found = enumerate_next(n, suffix, args.budget)
    except GrowthRejection as exc:
        _emit(exc.to_json())
        return INVALID
    _emit([p.to_json() for p in found], pretty=args.pretty)
    return OK


def build_parser():
    parser = argparse.ArgumentParser(prog="crystal-rig", description=__doc__.splitlines()[0])
    parser.add_argument("--pretty", action="store_true", help="human readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convert", help="convert a document to another model")
    p.add_argument("--to", required=True, choices=documents.KINDS)
    p.add_argument("file", nargs="?", help="input JSON (default stdin)")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("check", help="validate a document")
    p.add_argument("file", nargs="?")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("apply", help="apply crystal operators, in the order written")
    p.add_argument("--ops", required=True, help='for example "f2 f1 e3"')
    p.add_argument("file", nargs="?")
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("verify", help="compare both crystal graphs up to a depth")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--dump", help="write the rigged configuration graph here")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="list admissible next partitions of a suffix")
    p.add_argument("--suffix", required=True, help='JSON {"n": n, "partitions": [lambda_n, ...]}')
    p.add_argument("--budget", type=int, required=True, help="most boxes to add")
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NodeLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return LIMIT
    except GrowthRejection as exc:
        print(json.dumps(exc.to_json()))
        return INVALID
    except INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INVALID


if __name__ == "__main__":
    sys.exit(main())
