"""Evaluation records, reference tables, and their verification.

This is the layer between the numerical modules and the command line:
:func:`evaluate` turns a function name into per-order records,
:func:`regenerate_table` recomputes a reference table through the same
path, and :func:`verify` compares everything against the embedded data.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

import numpy as np

from . import angular, radial
from .angular import Category, DEFAULT_DIM, order_index

__all__ = [
    "FUNCTIONS",
    "TABLE_IDS",
    "TABLE_U",
    "OrderRecord",
    "EvalResult",
    "ReferenceRow",
    "TableReport",
    "VerifyReport",
    "evaluate",
    "load_reference",
    "reference_value",
    "regenerate_table",
    "verify",
]

#: Function names accepted by :func:`evaluate`, and the argument each needs.
FUNCTIONS = {
    "eig": None, "S": "v", "dS": "v", "N": None, "C": None, "g": None,
    "J": "u", "dJ": "u", "Y": "u", "dY": "u",
    "H1": "u", "dH1": "u", "H2": "u", "dH2": "u", "Shyp": "u",
}

TABLE_IDS = ("T2", "T3", "T4", "T5", "T6")

#: Radial coordinate of the imaginary-argument tables.
TABLE_U = 0.5

_COLUMNS = {
    "T2": ("a", "S0", "Shalf"),
    "T3": ("a", "S0", "dShalf"),
    "T4": {3: ("a", "dS0", "dShalf"), 4: ("a", "dS0", "Shalf")},
    "T5": ("Shyp", "ref9"),
    "T6": ("Shyp", "ref9"),
}

_UNVERIFIED = {"ref9"}


@dataclass
class OrderRecord:
    t: int
    value: float | complex
    derivative: float | complex | None = None


@dataclass
class EvalResult:
    fn: str | None
    kf: int | None
    q: float | None
    arg: float | None
    orders: list[OrderRecord] = field(default_factory=list)
    qprime: float | None = None


def working_dim(nmax: int) -> int:
    """Truncation size used when ``nmax`` orders are requested."""
    return max(DEFAULT_DIM, nmax + 10)


@functools.lru_cache(maxsize=256)
def _spectral(kf: int, q: float, dim: int) -> angular.SpectralData:
    return angular.eig_spm(kf, q, dim)


def evaluate(fn: str, kf, q: float, arg: float | None = None, nmax: int = DEFAULT_DIM,
             qprime: float | None = None) -> EvalResult:
    """Evaluate one toolbox function for the first ``nmax`` orders.

    Functions with a natural pair (``S``, ``J``, ``Y``, ``H1``, ``H2``)
    also fill in the derivative.

    Raises
    ------
    ValueError
        For unknown names, missing arguments, or out-of-domain inputs.
    """
    if fn not in FUNCTIONS:
        raise ValueError(f"unknown function {fn!r}")
    cat = Category(int(kf))
    if not 0 <= nmax <= DEFAULT_DIM:
        raise ValueError(f"nmax must lie in [0, {DEFAULT_DIM}]")
    if FUNCTIONS[fn] is not None and arg is None:
        raise ValueError(f"{fn} needs --{FUNCTIONS[fn]}")
    if fn == "C" and qprime is None:
        raise ValueError("C needs --qprime")

    dim = working_dim(nmax)
    spec = _spectral(int(cat), float(q), dim)
    deriv = None
    if fn == "eig":
        value = spec.char_values[:nmax]
    elif fn == "S":
        value = angular.spm(spec, arg, nmax)
        deriv = angular.dspm(spec, arg, nmax)
    elif fn == "dS":
        value = angular.dspm(spec, arg, nmax)
    elif fn == "N":
        value = angular.npm(spec, nmax)
    elif fn == "C":
        value = angular.cpm(spec, _spectral(int(cat), float(qprime), dim), nmax)
    elif fn == "g":
        value = radial.gpm(spec, nmax)
    elif fn == "Shyp":
        value = radial.spm_hyperbolic(spec, arg, nmax)
    else:
        kind = {"J": 1, "Y": 2, "H1": 3, "H2": 4}[fn.lstrip("d")]
        ev = radial.radial_eval(kind, spec, arg, nmax)
        if fn.startswith("d"):
            value = ev.derivative
        else:
            value, deriv = ev.value, ev.derivative

    orders = []
    for n in range(nmax):
        d = None if deriv is None else _scalar(deriv[n])
        orders.append(OrderRecord(int(spec.true_orders[n]), _scalar(value[n]), d))
    return EvalResult(fn, int(cat), float(q), None if arg is None else float(arg),
                      orders, None if qprime is None else float(qprime))


def _scalar(x):
    if np.iscomplexobj(x):
        return complex(x)
    return float(x)


@dataclass(frozen=True)
class ReferenceRow:
    table: str
    kf: int
    t: int
    q: float
    column: str
    value: float
    digits: int

    @property
    def verified(self) -> bool:
        return self.column not in _UNVERIFIED

    def bound(self, tolerance_abs: float) -> float:
        """Allowed deviation given the number of printed digits."""
        return max(tolerance_abs, 10.0 ** (1 - self.digits) * abs(self.value))


def _default_reference() -> Path:
    return Path(str(resources.files("mathieu") / "data" / "reference_tables.txt"))


def load_reference(path: str | Path | None = None) -> list[ReferenceRow]:
    """Read reference rows from the whitespace-separated data file."""
    path = Path(path) if path is not None else _default_reference()
    rows = []
    for lineno, line in enumerate(path.read_text().splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 7:
            raise ValueError(f"{path}:{lineno}: expected 7 fields, got {len(parts)}")
        table, kf, t, q, column, value, digits = parts
        row = ReferenceRow(table, int(kf), int(t), float(q), column, float(value), int(digits))
        if row.table not in TABLE_IDS:
            raise ValueError(f"{path}:{lineno}: unknown table {row.table}")
        order_index(row.kf, row.t)  # raises on a parity mismatch
        rows.append(row)
    return rows


def _gamma(kf: int, q: float, n: int) -> float:
    norm = evaluate("N", kf, q, nmax=n + 1).orders[n].value
    return math.sqrt(math.pi / norm)


def reference_value(kf: int, t: int, q: float, column: str) -> float:
    """Compute one tabulated quantity, scaled as in the tables."""
    n = order_index(kf, t)
    nmax = n + 1
    if column == "a":
        return evaluate("eig", kf, q, nmax=nmax).orders[n].value
    if column == "Shyp":
        g = evaluate("g", kf, q, nmax=nmax).orders[n].value
        j = evaluate("J", kf, q, TABLE_U, nmax=nmax).orders[n].value
        return _gamma(kf, q, n) * math.sqrt(2.0 * math.pi) * g * j
    fn, v = {
        "S0": ("S", 0.0), "Shalf": ("S", 0.5 * math.pi),
        "dS0": ("dS", 0.0), "dShalf": ("dS", 0.5 * math.pi),
    }[column]
    return _gamma(kf, q, n) * evaluate(fn, kf, q, v, nmax=nmax).orders[n].value


def _fmt(x: float) -> str:
    return format(x, ".15g")


def regenerate_table(table_id: str, rows: list[ReferenceRow] | None = None) -> str:
    """Recompute a reference table and return it as CSV text."""
    if table_id not in TABLE_IDS:
        raise ValueError(f"unknown table {table_id!r}, expected one of {TABLE_IDS}")
    rows = load_reference() if rows is None else rows
    rows = [r for r in rows if r.table == table_id]
    keys = list(dict.fromkeys((r.kf, r.t, r.q) for r in rows))
    stored = {(r.kf, r.t, r.q, r.column): r.value for r in rows}

    lines = []
    header = None
    for kf, t, q in keys:
        cols = _COLUMNS[table_id]
        if isinstance(cols, dict):
            cols = cols[kf]
        if cols != header:
            header = cols
            lines.append(",".join(("kf", "t", "q") + cols))
        cells = [str(kf), str(t), _fmt(q)]
        for col in cols:
            if col in _UNVERIFIED:
                cells.append(_fmt(stored[(kf, t, q, col)]))
            else:
                cells.append(_fmt(reference_value(kf, t, q, col)))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


@dataclass
class TableReport:
    table: str
    rows: int = 0
    max_abs: float = 0.0
    max_rel: float = 0.0


@dataclass
class VerifyReport:
    tables: dict[str, TableReport]
    failures: list[tuple[ReferenceRow, float, float]]

    @property
    def ok(self) -> bool:
        return not self.failures


def verify(tolerance_abs: float = 1e-10, rows: list[ReferenceRow] | None = None) -> VerifyReport:
    """Recompute every verified reference row and collect deviations.

    A row fails when ``|computed - value| > max(tolerance_abs,
    10**(1 - digits) * |value|)``.
    """
    rows = load_reference() if rows is None else rows
    tables = {tid: TableReport(tid) for tid in TABLE_IDS}
    failures = []
    for row in rows:
        if not row.verified:
            continue
        got = reference_value(row.kf, row.t, row.q, row.column)
        dev = abs(got - row.value)
        rep = tables[row.table]
        rep.rows += 1
        rep.max_abs = max(rep.max_abs, dev)
        if row.value != 0.0:
            rep.max_rel = max(rep.max_rel, dev / abs(row.value))
        if not dev <= row.bound(tolerance_abs):
            failures.append((row, got, dev))
    return VerifyReport(tables, failures)
