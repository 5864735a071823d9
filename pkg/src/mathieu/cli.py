"""Command-line access to the toolbox.

Three subcommands::

    mathieu eval --fn S --kf 1 --q 5 --v 0.3 [--nmax 5] [--format json]
    mathieu table T2
    mathieu verify [--tolerance-abs 1e-10] [--reference FILE]

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .angular import DEFAULT_DIM
from .tables import (FUNCTIONS, TABLE_IDS, EvalResult, OrderRecord, evaluate,
                     load_reference, regenerate_table, verify)

__all__ = ["main", "format_csv", "format_json", "parse_csv", "parse_json"]

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _num(x: float) -> str:
    return format(x + 0.0, ".15g")  # + 0.0 folds -0.0 into 0.0


def _round(x: float) -> float:
    return float(_num(x))


def _is_complex(result: EvalResult) -> bool:
    return any(isinstance(r.value, complex) for r in result.orders)


def format_csv(result: EvalResult) -> str:
    """One line per order: ``t,value[,derivative]``; complex values split re/im."""
    cplx = _is_complex(result)
    has_d = any(r.derivative is not None for r in result.orders)
    cols = ["t"]
    for name in ("value", "derivative") if has_d else ("value",):
        cols += [f"{name}_re", f"{name}_im"] if cplx else [name]
    lines = [",".join(cols)]
    for rec in result.orders:
        cells = [str(rec.t)]
        for x in (rec.value, rec.derivative) if has_d else (rec.value,):
            if cplx:
                x = complex(x)
                cells += [_num(x.real), _num(x.imag)]
            else:
                cells.append(_num(x))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def parse_csv(text: str) -> EvalResult:
    """Inverse of :func:`format_csv` (metadata fields come back as None)."""
    reader = csv.DictReader(io.StringIO(text))
    cols = reader.fieldnames or []
    cplx = "value_re" in cols
    orders = []
    for row in reader:
        def get(name):
            if cplx:
                if f"{name}_re" not in row:
                    return None
                return complex(float(row[f"{name}_re"]), float(row[f"{name}_im"]))
            return float(row[name]) if name in row else None
        orders.append(OrderRecord(int(row["t"]), get("value"), get("derivative")))
    return EvalResult(None, None, None, None, orders)


def _json_value(x):
    if x is None:
        return None
    if isinstance(x, complex):
        return [_round(x.real), _round(x.imag)]
    return _round(x)


def format_json(result: EvalResult) -> str:
    """JSON document ``{"fn", "kf", "q", "arg", "orders": [...]}``.

    Raises
    ------
    ValueError
        If any value is NaN or infinite.
    """
    doc = {"fn": result.fn, "kf": result.kf, "q": result.q, "arg": result.arg}
    if result.qprime is not None:
        doc["qprime"] = result.qprime
    orders = []
    for rec in result.orders:
        item = {"t": rec.t, "value": _json_value(rec.value)}
        if rec.derivative is not None:
            item["derivative"] = _json_value(rec.derivative)
        orders.append(item)
    doc["orders"] = orders
    return json.dumps(doc, allow_nan=False) + "\n"


def parse_json(text: str) -> EvalResult:
    """Inverse of :func:`format_json`."""
    doc = json.loads(text)

    def val(x):
        if isinstance(x, list):
            return complex(x[0], x[1])
        return x

    orders = [OrderRecord(o["t"], val(o["value"]), val(o.get("derivative")))
              for o in doc["orders"]]
    return EvalResult(doc["fn"], doc["kf"], doc["q"], doc["arg"], orders, doc.get("qprime"))


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mathieu", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", help="evaluate one function for the first nmax orders")
    ev.add_argument("--fn", required=True, choices=list(FUNCTIONS))
    ev.add_argument("--kf", required=True, type=int, choices=[1, 2, 3, 4])
    ev.add_argument("--q", required=True, type=float)
    ev.add_argument("--u", type=float)
    ev.add_argument("--v", type=float)
    ev.add_argument("--nmax", type=int, default=DEFAULT_DIM)
    ev.add_argument("--qprime", type=float)
    ev.add_argument("--format", choices=["csv", "json"], default="csv")

    tb = sub.add_parser("table", help="regenerate a reference table as CSV")
    tb.add_argument("table_id", choices=list(TABLE_IDS))

    vf = sub.add_parser("verify", help="check computed values against the reference tables")
    vf.add_argument("--tolerance-abs", type=float, default=1e-10)
    vf.add_argument("--reference", help="alternate reference data file")
    return parser


def _cmd_eval(args, parser, out) -> int:
    need = FUNCTIONS[args.fn]
    other = {"u": "v", "v": "u"}
    if need is not None:
        if getattr(args, need) is None:
            parser.error(f"--fn {args.fn} needs --{need}")
        if getattr(args, other[need]) is not None:
            parser.error(f"--fn {args.fn} takes --{need}, not --{other[need]}")
    elif args.u is not None or args.v is not None:
        parser.error(f"--fn {args.fn} takes neither --u nor --v")
    if (args.qprime is not None) != (args.fn == "C"):
        parser.error("--qprime goes with --fn C, and only with it")
    if not 0 <= args.nmax <= DEFAULT_DIM:
        parser.error(f"--nmax must lie in [0, {DEFAULT_DIM}]")
    arg = getattr(args, need) if need else None
    try:
        result = evaluate(args.fn, args.kf, args.q, arg, args.nmax, args.qprime)
        text = format_json(result) if args.format == "json" else format_csv(result)
    except (ValueError, ArithmeticError) as exc:
        print(f"mathieu: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out.write(text)
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    rows = load_reference(args.reference)
    report = verify(args.tolerance_abs, rows)
    out.write("table,rows,max_abs_dev,max_rel_dev\n")
    for rep in report.tables.values():
        out.write(f"{rep.table},{rep.rows},{rep.max_abs:.3e},{rep.max_rel:.3e}\n")
    if report.ok:
        out.write("PASS\n")
        return EXIT_OK
    out.write("FAIL\n")
    for row, got, dev in report.failures:
        out.write(
            f"  {row.table} kf={row.kf} t={row.t} q={_num(row.q)} {row.column}: "
            f"reference {_num(row.value)} computed {_num(got)} deviation {dev:.3e}\n"
        )
    return EXIT_FAIL


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "eval":
            return _cmd_eval(args, parser, out)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "table":
        out.write(regenerate_table(args.table_id))
        return EXIT_OK
    return _cmd_verify(args, out)


if __name__ == "__main__":
    sys.exit(main())
