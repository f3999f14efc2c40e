"""Deterministic report rendering.

Structured mode flattens a report tree into sorted ``path = value`` lines:
dictionary keys become dotted path segments, list items get 1-based numeric
segments, and scalar lists render inline as ``[a,b,c]``.  The encoding is
stable byte-for-byte for equal data, which is what the golden-file tests
and the determinism checks rely on.
"""

from __future__ import annotations


def _is_scalar(v) -> bool:
    return v is None or isinstance(v, (str, int, bool))


def _scalar(v) -> str:
    if v is None:
        return "none"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, str):
        return v.replace("\\", "\\\\").replace("\n", "\\n")
    return str(v)


def _flatten(value, path: tuple[str, ...], out: list):
    if isinstance(value, dict):
        if not value:
            out.append((path, "{}"))
            return
        for k, v in value.items():
            _flatten(v, path + (str(k),), out)
    elif isinstance(value, (list, tuple)):
        if all(_is_scalar(v) for v in value):
            out.append((path, "[" + ",".join(_scalar(v) for v in value) + "]"))
        else:
            for i, v in enumerate(value, start=1):
                _flatten(v, path + (str(i),), out)
    else:
        out.append((path, _scalar(value)))


def _segment_key(seg: str):
    return (0, int(seg), "") if seg.isdigit() else (1, 0, seg)


def render_structured(data: dict) -> str:
    """Flat ``path = value`` lines with deterministically sorted paths."""
    rows: list = []
    _flatten(data, (), rows)
    rows.sort(key=lambda r: tuple(_segment_key(s) for s in r[0]))
    return "".join(".".join(path) + " = " + value + "\n" for path, value in rows)
