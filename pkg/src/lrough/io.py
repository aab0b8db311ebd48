"""Reading covering files and writing reports.

Covering files are JSON objects

    {"lattice": {...}, "beta": 0.6, "universe": ["x1", ...],
     "covering": {"C1": [0.7, ...], ...}, "targets": {"X": [...]}}

or CSV tables with a header row of member names and one row per universe
element (label first).  A CSV file carries no lattice or beta; those come
from the command line.
"""

from __future__ import annotations

import csv
import io as _io
import json
import math
from dataclasses import dataclass, field

from .covering import validate_covering
from .errors import ForeignValue, ParseError
from .fuzzy_set import FuzzySet, Universe
from .lattice import ResiduatedLattice, build_lattice


@dataclass
class Problem:
    lattice: ResiduatedLattice
    universe: Universe
    names: list
    members: list
    beta: object = None
    targets: dict = field(default_factory=dict)

    def covering(self):
        beta = self.beta
        if beta is None:
            from .covering import max_beta

            beta = max_beta(self.members)
        return validate_covering(self.members, beta, self.names)

    def target(self, name) -> FuzzySet:
        if name not in self.targets:
            raise ParseError(f"no target named {name!r}; available: {sorted(self.targets)}")
        return self.targets[name]


def _vector(L, U, raw, where):
    if isinstance(raw, dict):
        missing = [x for x in U.labels if x not in raw]
        if missing:
            raise ParseError(f"{where}: no value for {missing[0]!r}")
        raw = [raw[x] for x in U.labels]
    if not isinstance(raw, list):
        raise ParseError(f"{where}: expected a list of {len(U)} values")
    if len(raw) != len(U):
        raise ParseError(f"{where}: expected {len(U)} values, got {len(raw)}")
    try:
        return FuzzySet(U, L, tuple(L.parse(v) for v in raw))
    except ForeignValue as exc:
        raise ParseError(f"{where}: {exc}") from None


def parse_lattice_arg(text, eq_tolerance=None):
    """A lattice from a preset name or an inline JSON descriptor."""
    text = text.strip()
    if text.startswith("{"):
        try:
            desc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"--lattice: invalid JSON ({exc})") from None
    else:
        desc = text
        if ":" in text:
            kind, n = text.split(":", 1)
            try:
                desc = {"kind": kind, "n": int(n)}
            except ValueError:
                raise ParseError(f"--lattice: cannot read {text!r}") from None
    return build_lattice(desc, eq_tolerance=eq_tolerance)


def load_json(text, eq_tolerance=None, lattice=None, beta=None) -> Problem:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise ParseError("the covering file must be a JSON object")
    for key in ("universe", "covering"):
        if key not in doc:
            raise ParseError(f"missing field {key!r}")
    if lattice is None:
        if "lattice" not in doc:
            raise ParseError("missing field 'lattice'")
        lattice = build_lattice(doc["lattice"], eq_tolerance=eq_tolerance)
    try:
        U = Universe(tuple(doc["universe"]))
    except (TypeError, ValueError) as exc:
        raise ParseError(f"field 'universe': {exc}") from None
    cov = doc["covering"]
    if not isinstance(cov, dict) or not cov:
        raise ParseError("field 'covering' must be a non-empty object of name -> vector")
    names = [str(k) for k in cov]
    members = [_vector(lattice, U, v, f"covering.{k}") for k, v in cov.items()]
    targets = {}
    for k, v in (doc.get("targets") or {}).items():
        targets[str(k)] = _vector(lattice, U, v, f"targets.{k}")
    if beta is None and "beta" in doc:
        try:
            beta = lattice.parse(doc["beta"])
        except ForeignValue as exc:
            raise ParseError(f"field 'beta': {exc}") from None
    return Problem(lattice, U, names, members, beta, targets)


def load_csv(text, lattice, beta=None) -> Problem:
    if lattice is None:
        raise ParseError("CSV input needs --lattice")
    rows = [r for r in csv.reader(_io.StringIO(text)) if r and any(c.strip() for c in r)]
    if len(rows) < 2:
        raise ParseError("CSV input needs a header row and at least one data row")
    header = [c.strip() for c in rows[0]]
    names = header[1:]
    if not names:
        raise ParseError("CSV header row names no members")
    labels, cols = [], [[] for _ in names]
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != len(header):
            raise ParseError(f"CSV line {lineno}: expected {len(header)} cells, got {len(row)}")
        labels.append(row[0].strip())
        for j, cell in enumerate(row[1:]):
            cols[j].append(cell.strip())
    try:
        U = Universe(tuple(labels))
    except ValueError as exc:
        raise ParseError(f"CSV first column: {exc}") from None
    members = [_vector(lattice, U, col, f"CSV column {name!r}") for name, col in zip(names, cols)]
    return Problem(lattice, U, names, members, beta, {})


def load_problem(path, eq_tolerance=None, lattice=None, beta=None) -> Problem:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    if str(path).lower().endswith(".csv"):
        return load_csv(text, lattice, beta)
    return load_json(text, eq_tolerance, lattice, beta)


# ---------------------------------------------------------------- output


def _fmt_number(v, digits):
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if math.isnan(v) or math.isinf(v):
        raise ValueError("non-finite number in report")
    return f"{v:.{digits}f}"


def dump_json(obj, digits=9, indent=2) -> str:
    """JSON with every float written with a fixed number of decimals."""

    def emit(o, level):
        pad = " " * (indent * (level + 1))
        end = " " * (indent * level)
        if isinstance(o, dict):
            if not o:
                return "{}"
            items = [f"{pad}{json.dumps(str(k))}: {emit(v, level + 1)}" for k, v in o.items()]
            return "{\n" + ",\n".join(items) + "\n" + end + "}"
        if isinstance(o, (list, tuple)):
            if not o:
                return "[]"
            if all(not isinstance(v, (dict, list, tuple)) for v in o):
                return "[" + ", ".join(emit(v, level + 1) for v in o) + "]"
            items = [pad + emit(v, level + 1) for v in o]
            return "[\n" + ",\n".join(items) + "\n" + end + "]"
        if o is None:
            return "null"
        if isinstance(o, (bool, int, float)):
            return _fmt_number(o, digits)
        return json.dumps(str(o))

    return emit(obj, 0) + "\n"


def cell(L, v, digits):
    if L.is_finite:
        return L.names[int(v)]
    return f"{float(v):.{digits}f}"


def matrix_csv(L, row_labels, col_labels, rows, corner="", digits=9) -> str:
    buf = _io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([corner] + list(col_labels))
    for label, row in zip(row_labels, rows):
        w.writerow([label] + [cell(L, v, digits) for v in row])
    return buf.getvalue()


def matrix_table(L, row_labels, col_labels, rows, digits=4) -> str:
    body = [[""] + list(col_labels)]
    for label, row in zip(row_labels, rows):
        body.append([label] + [cell(L, v, digits) for v in row])
    widths = [max(len(r[j]) for r in body) for j in range(len(body[0]))]
    lines = ["  ".join(c.rjust(wd) for c, wd in zip(r, widths)).rstrip() for r in body]
    return "\n".join(lines) + "\n"
