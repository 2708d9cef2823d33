"""Command-line front end.

Subcommands: ``table``, ``qpoly``, ``symbolic``, ``enumerate``, ``verify``.
Exit statuses: 0 success, 1 verification failure, 2 usage or mode error,
3 enumeration guard exceeded.
"""

from __future__ import annotations

import argparse
import sys

from . import family as fam
from . import serialize as ser
from . import verify as ver
from .algebra import ShiftPoly, UniPoly
from .errors import DEFAULT_GUARD, GuardError, UsageError
from .oracles import cycles, partitions, sequences

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3
FORMATS = ("json", "csv", "text")
INTERPS = ("fpart", "fperm", "rpart", "rperm", "hrel", "at", "seq", "mono")


# -- argument handling -----------------------------------------------------------


def _shift_vector(text):
    return fam.ShiftVector.parse(text)


def _partition(text):
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise UsageError(f"malformed partition {text!r}") from None


def _need(args, *names):
    missing = [f"--{name.replace('_', '-')}" for name in names if getattr(args, name, None) is None]
    if missing:
        raise UsageError(f"{args.command} needs {', '.join(missing)}")


def _request(args):
    """Echo of the request with every value as a string, keys sorted."""
    out = {}
    for key, value in sorted(vars(args).items()):
        if key == "func" or value is None or value is False:
            continue
        out[key] = value if isinstance(value, str) else str(value)
    return out


# -- documents ----------------------------------------------------------------------


def _lift(value, kind, fv=None, r=None):
    """Give every entry of a table the ring of its kind."""
    if isinstance(value, (UniPoly, ShiftPoly)):
        return value
    if kind in ("qH", "qE"):
        return UniPoly.constant(value, "q")
    if kind in ("JS", "Jc") or (fv is not None and fv.symbolic):
        return UniPoly.constant(value, "z")
    if kind in ("symbolicH", "symbolicE"):
        return ShiftPoly.constant(r, value)
    return value


def _table_doc(args, kind, cells, fv=None, r=None):
    entries = [(n, j, _lift(v, kind, fv, r)) for n, j, v in cells]
    return {
        "request": _request(args),
        "kind": kind,
        "entries": [{"n": n, "j": j, "value": ser.value_json(v)} for n, j, v in entries],
    }, entries


def _render_table(fmt, doc, entries):
    if fmt == "json":
        return ser.dump_json(doc)
    if fmt == "csv":
        return ser.dump_csv(["n", "j", "value"], [(n, j, ser.value_text(v)) for n, j, v in entries])
    return "".join(f"{doc['kind']}(n={n}, j={j}) = {ser.value_text(v)}\n" for n, j, v in entries)


def _cells_of(table, n=None, j=None):
    if n is None:
        return list(table.cells())
    return [(n, j, table.entry(j, n))]


def _single_or_table(args):
    if args.max_n is not None:
        return args.max_n, None, None
    _need(args, "n", "j")
    if args.n < 0 or args.j < 0:
        raise UsageError("indices must be nonnegative")
    return max(args.n, args.j), args.n, args.j


def cmd_table(args):
    kind = args.kind
    fv = _shift_vector(args.f) if args.f is not None else None
    table = fam.build_triangle(kind, args.max_n, fv=fv, r=args.r)
    doc, entries = _table_doc(args, kind, table.cells(), fv, args.r)
    return _render_table(args.format, doc, entries), EXIT_OK


def cmd_qpoly(args):
    _need(args, "f")
    fv = _shift_vector(args.f)
    size, n, j = _single_or_table(args)
    table = fam.q_table(args.which, size, fv)
    doc, entries = _table_doc(args, table.kind, _cells_of(table, n, j), fv)
    return _render_table(args.format, doc, entries), EXIT_OK


def cmd_symbolic(args):
    _need(args, "r")
    if args.r < 1:
        raise UsageError("--r must be positive")
    size, n, j = _single_or_table(args)
    table = fam.symbolic_table(args.which, size, args.r)
    doc, entries = _table_doc(args, table.kind, _cells_of(table, n, j), r=args.r)
    return _render_table(args.format, doc, entries), EXIT_OK


def _symbolic_vector(args):
    if args.f is not None:
        return _shift_vector(args.f)
    _need(args, "r")
    return fam.ShiftVector((0,) * args.r)


def _run_enumeration(args):
    kw = {"witnesses": args.witnesses, "guard": args.guard}
    tag = args.interp
    if tag in ("fpart", "fperm"):
        _need(args, "n", "j", "f")
        fn = partitions.enum_f_stirling_partitions if tag == "fpart" else cycles.enum_f_stirling_perm_tuples
        return fn(args.n, args.j, _shift_vector(args.f), **kw)
    if tag in ("rpart", "rperm"):
        _need(args, "n", "j", "r")
        if args.r < 1:
            raise UsageError("--r must be positive")
        fn = partitions.enum_r_stirling_partitions if tag == "rpart" else cycles.enum_r_stirling_perm_tuples
        return fn(args.n, args.j, args.r, **kw)
    fv = _symbolic_vector(args) if args.symbolic else None
    if fv is None:
        _need(args, "f")
        fv = _shift_vector(args.f)
    kw["symbolic"] = args.symbolic
    if tag in ("hrel", "at"):
        _need(args, "n", "k", "t")
        fn = cycles.enum_hrel_cycle_tuples if tag == "hrel" else cycles.enum_a_t_cycle_tuples
        return fn(args.n, args.k, args.t, fv, **kw)
    if tag == "seq":
        _need(args, "n", "k")
        return sequences.enum_ordered_sequences(args.n, args.k, fv, **kw)
    _need(args, "lam", "k")
    return sequences.enum_monomial_sequences(_partition(args.lam), args.k, fv, **kw)


def cmd_enumerate(args):
    result = _run_enumeration(args)
    hist = result.histogram
    doc = {
        "request": _request(args),
        "kind": "enumeration",
        "interp": args.interp,
        "total": str(result.total),
        "entries": [{"stat": ser.stat_json(s), "count": str(hist[s])} for s in hist],
    }
    if args.witnesses:
        doc["witnesses"] = [{"stat": ser.stat_json(w.stat), "object": w.serialize()} for w in result.witnesses]
    if args.format == "json":
        return ser.dump_json(doc), EXIT_OK
    if args.format == "csv":
        return ser.dump_csv(["stat", "count"], [(ser.stat_text(s), hist[s]) for s in hist]), EXIT_OK
    lines = [f"{args.interp}: {result.total} witnesses"]
    lines += [f"  stat {ser.stat_text(s)}: {hist[s]}" for s in hist]
    if args.witnesses:
        lines += [f"  {ser.stat_text(w.stat)}  {w.serialize()}" for w in result.witnesses]
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_verify(args):
    report = ver.run_suite(args.suite, args.max_n)
    status = EXIT_OK if report.ok else EXIT_FAILED
    if args.format == "json":
        doc = {
            "request": _request(args),
            "kind": "verify",
            "suite": args.suite,
            "ok": report.ok,
            "entries": [
                {"name": r.name, "status": "pass" if r.ok else "fail", "detail": r.detail} for r in report.results
            ],
        }
        return ser.dump_json(doc), status
    if args.format == "csv":
        rows = [(r.name, "pass" if r.ok else "fail", r.detail or "") for r in report.results]
        return ser.dump_csv(["name", "status", "detail"], rows), status
    lines = [f"{'PASS' if r.ok else 'FAIL'} {r.name}" + (f": {r.detail}" if r.detail else "") for r in report.results]
    lines.append(f"{len(report.results) - len(report.failures)}/{len(report.results)} checks passed")
    return "\n".join(lines) + "\n", status


# -- parser ----------------------------------------------------------------------------


def _nonneg(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def build_parser():
    parser = argparse.ArgumentParser(
        prog="fstirling",
        description="Exact Stirling-type triangles, their q- and shift-symbolic forms, and enumeration checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=FORMATS, default="json")
        return p

    p = common(sub.add_parser("table", help="a whole triangle of one kind"))
    p.add_argument("--kind", required=True, choices=fam.KINDS)
    p.add_argument("--max-n", type=_nonneg, required=True)
    p.add_argument("--f", help="shift vector, e.g. 0,1 or 1/2,2 or 0,z")
    p.add_argument("--r", type=_nonneg, help="arity for the symbolic kinds")
    p.set_defaults(func=cmd_table)

    for name, help_text in (("qpoly", "q-analogue polynomials"), ("symbolic", "polynomials in the shifts")):
        p = common(sub.add_parser(name, help=help_text))
        p.add_argument("--which", choices=("H", "E"), default="H")
        p.add_argument("--n", type=_nonneg)
        p.add_argument("--j", type=_nonneg)
        p.add_argument("--max-n", type=_nonneg, help="emit the whole triangle instead of one entry")
        if name == "qpoly":
            p.add_argument("--f", help="integer shift vector, e.g. 1,2")
            p.set_defaults(func=cmd_qpoly)
        else:
            p.add_argument("--r", type=_nonneg)
            p.set_defaults(func=cmd_symbolic)

    p = common(sub.add_parser("enumerate", help="count witnesses by their statistic"))
    p.add_argument("--interp", required=True, choices=INTERPS)
    for flag in ("--n", "--j", "--k", "--t", "--r"):
        p.add_argument(flag, type=_nonneg)
    p.add_argument("--f", help="integer shift vector")
    p.add_argument("--lambda", dest="lam", help="partition for mono, e.g. 2,1")
    p.add_argument("--symbolic", action="store_true", help="histogram over shift exponents (hrel, at, seq, mono)")
    p.add_argument("--witnesses", action="store_true", help="also list every witness")
    p.add_argument("--guard", type=_nonneg, default=DEFAULT_GUARD, help="maximum number of visited objects")
    p.set_defaults(func=cmd_enumerate)

    p = common(sub.add_parser("verify", help="run a verification suite"))
    p.add_argument("--suite", choices=ver.SUITES, default="all")
    p.add_argument("--max-n", type=_nonneg)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, status = args.func(args)
    except GuardError as exc:
        print(f"fstirling: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except UsageError as exc:
        print(f"fstirling: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
