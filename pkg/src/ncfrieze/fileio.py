"""JSON file formats for friezes and quiddity cycles.

Frieze file::

    {"ring": "quaternion", "m": 6, "entries": {"0,1": "1", "0,2": "i", ...}}

Seed / quiddity file::

    {"ring": "quaternion", "m": 6, "boundary_fwd": [...], "boundary_bwd": [...],
     "quiddity": [...], "meta": {...}}

Values are expression strings; matrix-ring values may also be nested arrays
of rational strings.  Output is deterministic (fixed key order, 2-space indent,
trailing newline).
"""

from __future__ import annotations

import json

from .frieze import Frieze
from .quiddity import QuiddityCycle
from .rings import parse_ring


class FormatError(ValueError):
    pass


def _load(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc})") from exc


def _dump(obj, path=None):
    text = json.dumps(obj, indent=2, ensure_ascii=False) + "\n"
    if path is not None:
        with open(path, "w") as fh:
            fh.write(text)
    return text


def _header(data):
    if not isinstance(data, dict):
        raise FormatError("top level must be an object")
    for key in ("ring", "m"):
        if key not in data:
            raise FormatError(f"missing field {key!r}")
    try:
        ring = parse_ring(data["ring"])
    except ValueError as exc:
        raise FormatError(str(exc)) from exc
    m = data["m"]
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise FormatError("m must be a positive integer")
    return ring, m


def _value(ring, raw, where):
    if not isinstance(raw, (str, list)):
        raise FormatError(f"{where}: expected a string or nested array")
    try:
        return ring.parse(raw)
    except (ValueError, TypeError) as exc:
        raise FormatError(f"{where}: {exc}") from exc


def frieze_to_dict(fr):
    return {
        "ring": fr.ring.spec,
        "m": fr.m,
        "entries": {f"{i},{j}": fr.ring.render(v) for (i, j), v in fr.items()},
    }


def frieze_from_dict(data, check=True):
    ring, m = _header(data)
    if m < 3:
        raise FormatError("a frieze needs m >= 3")
    raw = data.get("entries")
    if not isinstance(raw, dict):
        raise FormatError("missing or malformed 'entries'")
    entries = {}
    for key, val in raw.items():
        try:
            i, j = (int(t) for t in key.split(","))
        except ValueError:
            raise FormatError(f"bad entry key {key!r}") from None
        if not (0 <= i < m and 0 <= j < m and i != j):
            raise FormatError(f"entry key {key!r} out of range")
        entries[i, j] = _value(ring, val, f"entry {key}")
    missing = [f"{i},{j}" for i in range(m) for j in range(m) if i != j and (i, j) not in entries]
    if missing:
        raise FormatError(f"missing entries: {', '.join(missing[:5])}"
                          + (" ..." if len(missing) > 5 else ""))
    return Frieze(m, ring, entries, check=check)


def load_frieze(path, check=True):
    return frieze_from_dict(_load(path), check=check)


def save_frieze(fr, path=None):
    return _dump(frieze_to_dict(fr), path)


def cycle_to_dict(q):
    r = q.ring.render
    out = {
        "ring": q.ring.spec,
        "m": q.m,
        "boundary_fwd": [r(x) for x in q.d],
        "boundary_bwd": [r(x) for x in q.dprime],
        "quiddity": [r(x) for x in q.c],
    }
    if q.meta:
        out["meta"] = q.meta
    return out


def cycle_from_dict(data):
    ring, m = _header(data)
    vals = {}
    for key in ("boundary_fwd", "boundary_bwd", "quiddity"):
        seq = data.get(key)
        if not isinstance(seq, list) or len(seq) != m:
            raise FormatError(f"{key!r} must be an array of length {m}")
        vals[key] = [_value(ring, x, f"{key}[{n}]") for n, x in enumerate(seq)]
    return QuiddityCycle(ring, vals["boundary_fwd"], vals["boundary_bwd"], vals["quiddity"],
                         meta=dict(data.get("meta") or {}))


def load_cycle(path):
    return cycle_from_dict(_load(path))


def save_cycle(q, path=None):
    return _dump(cycle_to_dict(q), path)
