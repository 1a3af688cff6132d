"""Byte-stable CSV output for tables, density profiles and scan reports.

Reals are written with 17 significant digits (enough to round-trip a
double), complex values as two columns ``<name>_re`` and ``<name>_im``,
``None`` as an empty cell.  Quoting follows RFC 4180 through :mod:`csv`.
"""

from __future__ import annotations

import csv
import enum
import io
from dataclasses import dataclass
from typing import Any, Sequence, Tuple

__all__ = ["Table", "emit_csv", "parse_csv"]


@dataclass(frozen=True)
class Table:
    """Column names plus rows of plain Python values."""

    columns: Tuple[str, ...]
    rows: Tuple[Tuple[Any, ...], ...] = ()

    def column(self, name: str):
        idx = self.columns.index(name)
        return [row[idx] for row in self.rows]


def _format(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, enum.Enum):
        return str(value.value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def _complex_columns(table: Table) -> Sequence[bool]:
    flags = []
    for i in range(len(table.columns)):
        flags.append(any(isinstance(row[i], complex) for row in table.rows))
    return flags


def _as_table(obj) -> Table:
    if isinstance(obj, Table):
        return obj
    to_table = getattr(obj, "to_table", None)
    if callable(to_table):
        return to_table()
    raise TypeError(f"cannot write {type(obj).__name__} as CSV")


def emit_csv(obj) -> str:
    """Render a :class:`Table` (or anything with ``to_table()``) as CSV text.

    >>> emit_csv(Table(("a", "z"), ((1.0, 2 + 1j),)))
    'a,z_re,z_im\\r\\n1,2,1\\r\\n'
    """
    table = _as_table(obj)
    is_complex = _complex_columns(table)
    header = []
    for name, cplx in zip(table.columns, is_complex):
        header.extend((f"{name}_re", f"{name}_im") if cplx else (name,))
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(header)
    for row in table.rows:
        cells = []
        for value, cplx in zip(row, is_complex):
            if cplx:
                if value is None:
                    cells.extend(("", ""))
                else:
                    z = complex(value)
                    cells.extend((_format(z.real), _format(z.imag)))
            else:
                cells.append(_format(value))
        writer.writerow(cells)
    return buf.getvalue()


def _parse_cell(text: str):
    if text == "":
        return None
    if text in ("true", "false"):
        return text == "true"
    try:
        return float(text)
    except ValueError:
        return text


def parse_csv(text: str) -> Table:
    """Inverse of :func:`emit_csv` for the numeric payload.

    Adjacent ``<name>_re`` / ``<name>_im`` columns are merged back into one
    complex column; numeric cells come back as ``float``.
    """
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        return Table(())
    raw_rows = [row for row in reader]
    columns, plan = [], []
    i = 0
    while i < len(header):
        name = header[i]
        if (name.endswith("_re") and i + 1 < len(header)
                and header[i + 1] == name[:-3] + "_im"):
            columns.append(name[:-3])
            plan.append((i, True))
            i += 2
        else:
            columns.append(name)
            plan.append((i, False))
            i += 1
    rows = []
    for raw in raw_rows:
        row = []
        for idx, cplx in plan:
            if cplx:
                re_, im_ = _parse_cell(raw[idx]), _parse_cell(raw[idx + 1])
                row.append(None if re_ is None else complex(re_, im_))
            else:
                row.append(_parse_cell(raw[idx]))
        rows.append(tuple(row))
    return Table(tuple(columns), tuple(rows))
