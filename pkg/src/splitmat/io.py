"""The ``.gfp`` matrix file format and run reports.

A ``.gfp`` file looks like::

    # comment lines and blank lines are ignored
    p 3
    rows 4
    cols 8
    labels 1 2 3 4 5 6 7 8      (optional; defaults to 1..n)
    1 0 0 0 2 1 1 1
    ...

Reports render either as a plain table (sets in brace style) or as JSON.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import DimensionMismatch, EntryOutOfRange, NotPrime, ParseError
from .ff import FieldMatrix, PrimeModulus, default_labels


@dataclass(frozen=True)
class MatrixDocument:
    modulus: PrimeModulus
    rows: int
    cols: int
    labels: tuple[str, ...] | None
    entries: tuple[tuple[int, ...], ...]

    def to_matrix(self) -> FieldMatrix:
        return FieldMatrix(self.modulus, self.entries, self.labels or default_labels(self.cols))

    @classmethod
    def from_matrix(cls, A: FieldMatrix) -> MatrixDocument:
        labels = None if A.col_labels == default_labels(A.ncols) else A.col_labels
        return cls(A.modulus, A.nrows, A.ncols, labels, A.entries)


def _header(lines, key):
    try:
        lineno, text = next(lines)
    except StopIteration:
        raise ParseError("EOF", f"missing '{key}' line") from None
    parts = text.split()
    if len(parts) != 2 or parts[0] != key:
        raise ParseError(lineno, f"expected '{key} <integer>', got {text!r}")
    try:
        return lineno, int(parts[1])
    except ValueError:
        raise ParseError(lineno, f"'{parts[1]}' is not an integer") from None


def parse_matrix_file(text: str | bytes, reduce: bool = False) -> MatrixDocument:
    """Parse a ``.gfp`` document.

    Entries outside [0, p-1] are rejected unless ``reduce`` is set, in which
    case they are reduced mod p.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    body = ((i, ln.strip()) for i, ln in enumerate(text.splitlines(), 1))
    lines = ((i, ln) for i, ln in body if ln and not ln.startswith("#"))

    lineno, p = _header(lines, "p")
    try:
        modulus = PrimeModulus(p)
    except NotPrime as e:
        raise NotPrime(f"line {lineno}: {e}") from None
    lineno, m = _header(lines, "rows")
    if m < 1:
        raise ParseError(lineno, "rows must be at least 1")
    lineno, n = _header(lines, "cols")
    if n < 1:
        raise ParseError(lineno, "cols must be at least 1")

    labels = None
    entries = []
    for lineno, text_line in lines:
        tokens = text_line.split()
        if tokens[0] == "labels":
            if labels is not None or entries:
                raise ParseError(lineno, "labels line must come right after the header")
            labels = tuple(tokens[1:])
            if len(labels) != n:
                raise DimensionMismatch(f"line {lineno}: {len(labels)} labels, cols is {n}")
            if len(set(labels)) != n:
                raise ParseError(lineno, "labels must be distinct")
            continue
        if len(entries) == m:
            raise DimensionMismatch(f"line {lineno}: more than {m} matrix rows")
        if len(tokens) != n:
            raise DimensionMismatch(f"line {lineno}: row has {len(tokens)} entries, cols is {n}")
        row = []
        for col, tok in enumerate(tokens, 1):
            try:
                v = int(tok)
            except ValueError:
                raise ParseError(lineno, f"column {col}: '{tok}' is not an integer") from None
            if not 0 <= v < p:
                if not reduce:
                    raise EntryOutOfRange(f"line {lineno}, column {col}: {v} not in [0, {p - 1}]")
                v %= p
            row.append(v)
        entries.append(tuple(row))
    if len(entries) != m:
        raise DimensionMismatch(f"found {len(entries)} matrix rows, rows is {m}")
    return MatrixDocument(modulus, m, n, labels, tuple(entries))


def emit_matrix_file(doc: MatrixDocument | FieldMatrix) -> str:
    if isinstance(doc, FieldMatrix):
        doc = MatrixDocument.from_matrix(doc)
    out = [f"p {doc.modulus.p}", f"rows {doc.rows}", f"cols {doc.cols}"]
    if doc.labels is not None:
        out.append("labels " + " ".join(doc.labels))
    out += [" ".join(str(v) for v in row) for row in doc.entries]
    return "\n".join(out) + "\n"


def load_matrix(path, reduce: bool = False) -> FieldMatrix:
    with open(path, "rb") as fh:
        return parse_matrix_file(fh.read(), reduce=reduce).to_matrix()


@dataclass
class RunReport:
    """Result of one command.

    ``result`` is an ordered mapping whose values are scalars, lists of
    label lists (set families), lists of int lists (matrix rows) or nested
    mappings.
    """

    command: str
    inputs: dict = field(default_factory=dict)
    result: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"command": self.command, "inputs": self.inputs, "result": self.result}

    @classmethod
    def from_json(cls, data: dict) -> RunReport:
        return cls(data["command"], data.get("inputs", {}), data.get("result", {}))


def brace(labels) -> str:
    return "{" + ", ".join(str(x) for x in labels) + "}"


def _is_family(v) -> bool:
    return isinstance(v, list) and all(
        isinstance(x, list) and all(isinstance(y, str) for y in x) for x in v)


def _is_int_rows(v) -> bool:
    return isinstance(v, list) and v and all(
        isinstance(x, list) and all(isinstance(y, int) for y in x) for x in v)


def _scalar(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, list) and all(isinstance(x, str) for x in v):
        return brace(v)
    return str(v)


def _render(d: dict, indent: int, out: list[str]):
    pad = "  " * indent
    for key, v in d.items():
        if isinstance(v, dict) and not v:
            out.append(f"{pad}{key}: (none)")
        elif isinstance(v, dict):
            out.append(f"{pad}{key}:")
            _render(v, indent + 1, out)
        elif _is_int_rows(v):
            out.append(f"{pad}{key}:")
            out += [pad + "  " + " ".join(str(x) for x in row) for row in v]
        elif _is_family(v):
            out.append(f"{pad}{key} ({len(v)}):")
            out += [pad + "  " + brace(x) for x in v] or [pad + "  (none)"]
        elif isinstance(v, list) and v and all(isinstance(x, dict) for x in v):
            out.append(f"{pad}{key} ({len(v)}):")
            for item in v:
                _render(item, indent + 1, out)
                out.append(pad + "  --")
            out.pop()
        else:
            out.append(f"{pad}{key}: {_scalar(v)}")


def emit_report(report: RunReport, fmt: str = "table") -> bytes:
    if fmt == "json":
        return (json.dumps(report.to_json(), indent=2) + "\n").encode()
    if fmt != "table":
        raise ValueError(f"unknown format {fmt!r}")
    out = [f"command: {report.command}"]
    _render(report.inputs, 0, out)
    _render(report.result, 0, out)
    return ("\n".join(out) + "\n").encode()


def load_report(data: bytes | str) -> RunReport:
    return RunReport.from_json(json.loads(data))
