"""Typed report rows and deterministic JSON/CSV emission.

Reports must be byte-identical for identical (config, seed) regardless of
thread count, so floats are always rendered with 17 significant digits and
no timestamps or timings ever enter a report file.
"""

import dataclasses
import io
from dataclasses import dataclass


@dataclass(frozen=True)
class SieveCheckRow:
    check: str
    s: int
    detail: str
    lhs: float
    term1: float
    term2: float
    residual: float
    support_ok: bool
    passed: bool


@dataclass(frozen=True)
class BoundCheckRow:
    check: str
    params: str
    value: float
    bound: float
    ratio: float
    passed: bool


@dataclass(frozen=True)
class ResidualRow:
    u: int
    p: int
    q: int
    s: int
    gamma: int
    delta: int
    sign: int
    residual: float
    passed: bool


@dataclass(frozen=True)
class ConstantRow:
    s: int
    plimit: int
    value: float
    tail: float
    series_value: float
    series_tail: float
    abs_diff: float
    passed: bool


@dataclass(frozen=True)
class ExponentRow:
    s: int
    carlitz: str
    new: str
    aux: str
    carlitz_value: float
    new_value: float
    aux_value: float


@dataclass(frozen=True)
class HenselRow:
    s: int
    u: int
    k: int
    sign: int
    count: int
    oracle: int
    bound_applies: bool
    bound: int
    passed: bool


@dataclass(frozen=True)
class SuiteRow:
    suite: str
    cases: int
    failures: int
    detail: str
    passed: bool


def format_number(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        if v != v or v in (float("inf"), float("-inf")):
            raise ValueError(f"non-finite value {v} has no place in a report")
        return format(v + 0.0, ".17g")
    raise TypeError(f"not a number: {v!r}")


def _json_scalar(v) -> str:
    if isinstance(v, str):
        out = v.replace("\\", "\\\\").replace('"', '\\"')
        return f'"{out}"'
    return format_number(v)


def render_json(rows: list) -> str:
    _require_homogeneous(rows)
    lines = []
    for row in rows:
        fields = dataclasses.asdict(row)
        body = ",".join(f'"{k}":{_json_scalar(v)}' for k, v in fields.items())
        lines.append("{" + body + "}")
    if not lines:
        return "[]\n"
    return "[\n" + ",\n".join(lines) + "\n]\n"


def render_csv(rows: list) -> str:
    _require_homogeneous(rows)
    buf = io.StringIO()
    if not rows:
        return ""
    names = [f.name for f in dataclasses.fields(rows[0])]
    buf.write(",".join(names) + "\n")
    for row in rows:
        vals = []
        for k in names:
            v = getattr(row, k)
            if isinstance(v, str):
                if "," in v or '"' in v or "\n" in v:
                    v = '"' + v.replace('"', '""') + '"'
                vals.append(v)
            else:
                vals.append(format_number(v))
        buf.write(",".join(vals) + "\n")
    return buf.getvalue()


def _require_homogeneous(rows: list) -> None:
    if rows:
        head = type(rows[0])
        for r in rows:
            if type(r) is not head:
                raise TypeError(
                    f"mixed row types in one report: {head.__name__} vs {type(r).__name__}"
                )


def emit_report(rows: list, fmt: str, path: str | None) -> None:
    """Write rows to path (or stdout when path is None) as JSON or CSV."""
    if fmt == "json":
        text = render_json(rows)
    elif fmt == "csv":
        text = render_csv(rows)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    if path is None:
        print(text, end="")
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
