"""Text forms for multipartitions, multicharges and labeled matrices."""

from __future__ import annotations

import csv
import io
import json
from typing import Dict, Sequence

from .charge import Multicharge
from .laurent import LaurentPoly
from .matrix import LabeledMatrix
from .partitions import Multipartition, Partition

__all__ = [
    "ParseError",
    "format_charge",
    "format_multipartition",
    "matrix_from_json",
    "matrix_to_csv",
    "matrix_to_json",
    "matrix_to_latex",
    "parse_charge",
    "parse_multipartition",
    "parse_partition",
]


class ParseError(ValueError):
    pass


def _check_parts(parts, what: str) -> Partition:
    if not isinstance(parts, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in parts):
        raise ParseError(f"{what} must be a list of integers")
    if any(x < 0 for x in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        raise ParseError(f"{what} {parts} is not weakly decreasing and nonnegative")
    return Partition(parts)


def parse_partition(text: str) -> Partition:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed partition {text!r}: {exc.msg}") from None
    return _check_parts(data, "partition")


def parse_multipartition(text: str, l: int | None = None) -> Multipartition:
    """Parse ``[[2,1],[]]`` style text."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed multipartition {text!r}: {exc.msg}") from None
    if not isinstance(data, list):
        raise ParseError(f"multipartition must be a list of lists, got {text!r}")
    mp = Multipartition(_check_parts(c, "component") for c in data)
    if l is not None and len(mp) != l:
        raise ParseError(f"multipartition {text!r} has {len(mp)} components, expected {l}")
    return mp


def format_multipartition(mp: Multipartition) -> str:
    return json.dumps(Multipartition(mp).to_list(), separators=(",", ":"))


def parse_charge(text: str, l: int | None = None) -> Multicharge:
    try:
        mc = Multicharge(int(x) for x in text.replace("−", "-").split(","))
    except ValueError:
        raise ParseError(f"malformed multicharge {text!r}; expected e.g. 1,0") from None
    if l is not None and len(mc) != l:
        raise ParseError(f"multicharge {text!r} has length {len(mc)}, expected {l}")
    return mc


def format_charge(mc: Sequence[int]) -> str:
    return ",".join(str(x) for x in mc)


def _entry_text(v) -> str:
    return str(v)


def matrix_to_json(M: LabeledMatrix, params: Dict) -> str:
    keys = {k: format_multipartition(k) for k in M.order}
    entries = {}
    for r in M.order:
        for c in M.order:
            v = M[r, c]
            if v:
                entries[f"{keys[r]}|{keys[c]}"] = _entry_text(v)
    doc = {"params": params, "order": [keys[k] for k in M.order], "entries": entries}
    return json.dumps(doc, indent=1) + "\n"


def matrix_from_json(text: str, integer: bool = False) -> LabeledMatrix:
    doc = json.loads(text)
    order = [parse_multipartition(k) for k in doc["order"]]
    if integer:
        M = LabeledMatrix(order, zero=0)
        conv = int
    else:
        M = LabeledMatrix(order)
        conv = LaurentPoly.parse
    for key, v in doc["entries"].items():
        r, c = key.split("|")
        M[parse_multipartition(r), parse_multipartition(c)] = conv(v)
    return M


def matrix_to_csv(M: LabeledMatrix) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["row", "col", "value"])
    for r in M.order:
        for c in M.order:
            v = M[r, c]
            if v:
                w.writerow([format_multipartition(r), format_multipartition(c), _entry_text(v)])
    return buf.getvalue()


def _latex_mp(mp: Multipartition) -> str:
    comps = []
    for p in mp:
        comps.append(r"\emptyset" if not p else "(" + ",".join(map(str, p)) + ")")
    return r"\bigl(" + ",".join(comps) + r"\bigr)"


def _latex_entry(v) -> str:
    if isinstance(v, LaurentPoly):
        return v.to_latex()
    return str(v)


def matrix_to_latex(M: LabeledMatrix, name: str = "") -> str:
    """Lower-triangular array with dots above the diagonal and row labels."""
    lines = [f"% key: row/column i is the i-th label below ({len(M)} total)"]
    for i, k in enumerate(M.order, 1):
        lines.append(f"% {i}: {format_multipartition(k)}")
    size = len(M)
    head = f"{name} = " if name else ""
    lines.append(r"\[" + head + r"\begin{array}{ll}")
    lines.append(r"\left(\begin{array}{" + "c" * size + "}")
    for i, r in enumerate(M.order):
        cells = []
        for j, c in enumerate(M.order):
            v = M[r, c]
            if j > i and not v:
                cells.append(".")
            else:
                cells.append(_latex_entry(v) if v else "0")
        lines.append(" & ".join(cells) + r" \\")
    lines.append(r"\end{array}\right)")
    lines.append("&")
    lines.append(r"\begin{array}{l}")
    for k in M.order:
        lines.append(_latex_mp(k) + r" \\")
    lines.append(r"\end{array}")
    lines.append(r"\end{array}\]")
    return "\n".join(lines) + "\n"
