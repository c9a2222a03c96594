"""CSV/JSON table output shared by the CLI subcommands.

Floats are written with 17 significant digits so every double round-trips.
CSV tables start with a ``# generated-by`` comment line.
"""

import csv
import io
import json
import numbers

import numpy as np

from vmtaper.windows import SampledWindow


def fmt(value):
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, numbers.Integral):
        return str(int(value))
    if isinstance(value, numbers.Real):
        return f"{float(value):.17g}"
    return str(value)


def _json_value(value):
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, numbers.Integral):
        return int(value)
    if isinstance(value, numbers.Real):
        return float(f"{float(value):.17g}")
    return value


class Table:
    def __init__(self, columns, rows, name=None, meta=None):
        self.columns = list(columns)
        self.rows = [list(r) for r in rows]
        self.name = name
        self.meta = dict(meta or {})
        for r in self.rows:
            if len(r) != len(self.columns):
                raise ValueError("row length does not match the columns")

    def to_records(self):
        return [{c: _json_value(v) for c, v in zip(self.columns, r)} for r in self.rows]


def render_csv(tables, generated_by):
    buf = io.StringIO()
    buf.write(f"# generated-by {generated_by}\n")
    for i, table in enumerate(tables):
        if i:
            buf.write("\n")
        for key, value in table.meta.items():
            buf.write(f"# {key}={fmt(value)}\n")
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(table.columns)
        for r in table.rows:
            writer.writerow([fmt(v) for v in r])
    return buf.getvalue()


def render_json(tables, generated_by):
    doc = {"generated_by": generated_by}
    for table in tables:
        body = {"columns": table.columns, "rows": table.to_records()}
        body.update({k: _json_value(v) for k, v in table.meta.items()})
        doc[table.name or "table"] = body
    return json.dumps(doc, indent=1, allow_nan=False) + "\n"


def render(tables, generated_by, fmt_name="csv"):
    if fmt_name == "csv":
        return render_csv(tables, generated_by)
    if fmt_name == "json":
        return render_json(tables, generated_by)
    raise ValueError(f"unknown format {fmt_name!r}")


def window_table(w):
    return Table(["index", "value"], zip(w.indices.tolist(), w.coefficients.tolist()),
                 name="window")


def spectrum_table(spectrum):
    v = spectrum.values
    rows = zip(spectrum.omega, v.real, v.imag, np.abs(v), spectrum.db())
    return Table(["omega", "re", "im", "abs", "db"], rows, name="spectrum")


def read_csv_rows(text):
    """Header and rows of the first table in a CSV produced by :func:`render_csv`."""
    lines = []
    for line in text.splitlines():
        if line.startswith("#"):
            continue
        if not line.strip():
            if lines:
                break
            continue
        lines.append(line)
    reader = csv.reader(lines)
    header = next(reader)
    return header, list(reader)


def read_window_csv(text):
    """Parse a ``index,value`` table back into a :class:`SampledWindow`."""
    header, rows = read_csv_rows(text)
    if header != ["index", "value"]:
        raise ValueError(f"expected header index,value, got {','.join(header)}")
    idx = [int(r[0]) for r in rows]
    if idx != list(range(idx[0], idx[0] + len(idx))):
        raise ValueError("indices must be consecutive")
    return SampledWindow(idx[0], [float(r[1]) for r in rows])
