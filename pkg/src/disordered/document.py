"""JSON description files for finite sets, line sets and trajectories.

Rationals are written as ``"num/den"`` strings so nothing is lost to binary
floating point.  Every document carries ``"format": 1``, a ``kind``, a
``name`` and the body field matching its kind::

    {"format": 1, "kind": "line_set", "name": "unit W",
     "segments": [{"lo": "0/1", "hi": "1/1",
                   "series": {"ordinal": "0/1", "label": "W"},
                   "mode": "doubled"}]}
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .core import FiniteTaggedSet, SeriesTag, TaggedPoint
from .errors import DocumentError
from .line import Mode, TaggedLineSet, TaggedSegment
from .trajectory import Phase, Trajectory

FORMAT_VERSION = 1
KINDS = ("finite_set", "line_set", "trajectory")
BODY_FIELD = {"finite_set": "points", "line_set": "segments", "trajectory": "phases"}


@dataclass(frozen=True)
class Document:
    kind: str
    name: str
    body: object
    description: str = ""

    def __post_init__(self):
        expected = {"finite_set": FiniteTaggedSet, "line_set": TaggedLineSet, "trajectory": Trajectory}
        if self.kind not in expected:
            raise ValueError(f"unknown document kind {self.kind!r}")
        if not isinstance(self.body, expected[self.kind]):
            raise TypeError(f"{self.kind} document needs a {expected[self.kind].__name__} body")


def encode_rational(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _encode_series(tag: SeriesTag) -> dict:
    return {"ordinal": encode_rational(tag.ordinal), "label": tag.label}


def to_json(doc: Document) -> dict:
    out = {"format": FORMAT_VERSION, "kind": doc.kind, "name": doc.name}
    if doc.description:
        out["description"] = doc.description
    body = doc.body
    if doc.kind == "finite_set":
        out["dimension"] = body.dimension
        out["points"] = [{"coords": [encode_rational(c) for c in p.value],
                          "series": _encode_series(p.series)} for p in body.points]
    elif doc.kind == "line_set":
        segs = []
        for s in body.segments:
            d = {"lo": encode_rational(s.lo), "hi": encode_rational(s.hi),
                 "series": _encode_series(s.series), "mode": s.mode.value}
            if s.lo_open:
                d["lo_open"] = True
            if s.hi_open:
                d["hi_open"] = True
            segs.append(d)
        out["segments"] = segs
    else:
        out["phases"] = [{"tag": ph.tag,
                          "breakpoints": [[encode_rational(t), encode_rational(x)] for t, x in ph.breakpoints]}
                         for ph in body.phases]
    return out


def serialize(doc: Document) -> str:
    return json.dumps(to_json(doc), indent=2, ensure_ascii=False) + "\n"


# ---------------------------------------------------------------------------
# parsing


def _fail(path: str, msg: str):
    raise DocumentError(f"{path}: {msg}")


def _field(obj, key: str, path: str):
    if not isinstance(obj, dict):
        _fail(path, "expected an object")
    if key not in obj:
        _fail(path, f"missing field {key!r}")
    return obj[key]


def _list(obj, path: str) -> list:
    if not isinstance(obj, list):
        _fail(path, "expected a list")
    return obj


def _rational(obj, path: str) -> Fraction:
    if not isinstance(obj, str):
        _fail(path, f"rationals are written as 'num/den' strings, got {obj!r}")
    try:
        return Fraction(obj)
    except (ValueError, ZeroDivisionError):
        _fail(path, f"not a rational: {obj!r}")


def _series(obj, path: str) -> SeriesTag:
    label = _field(obj, "label", path)
    if not isinstance(label, str):
        _fail(f"{path}.label", "expected a string")
    return SeriesTag(_rational(_field(obj, "ordinal", path), f"{path}.ordinal"), label)


def _bool(obj, key: str, path: str) -> bool:
    v = obj.get(key, False)
    if not isinstance(v, bool):
        _fail(f"{path}.{key}", "expected true or false")
    return v


def _points(data: dict) -> FiniteTaggedSet:
    dim = _field(data, "dimension", "$")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        _fail("$.dimension", "expected a positive integer")
    pts = []
    for i, p in enumerate(_list(_field(data, "points", "$"), "$.points")):
        path = f"$.points[{i}]"
        coords = _list(_field(p, "coords", path), f"{path}.coords")
        if len(coords) != dim:
            _fail(f"{path}.coords", f"expected {dim} coordinates, got {len(coords)}")
        value = tuple(_rational(c, f"{path}.coords[{j}]") for j, c in enumerate(coords))
        pts.append(TaggedPoint(value, _series(_field(p, "series", path), f"{path}.series")))
    return FiniteTaggedSet(dim, tuple(pts))


def _segments(data: dict) -> TaggedLineSet:
    segs = []
    for i, s in enumerate(_list(_field(data, "segments", "$"), "$.segments")):
        path = f"$.segments[{i}]"
        mode = _field(s, "mode", path)
        if mode not in (m.value for m in Mode):
            _fail(f"{path}.mode", f"expected 'single' or 'doubled', got {mode!r}")
        try:
            segs.append(TaggedSegment(
                _rational(_field(s, "lo", path), f"{path}.lo"),
                _rational(_field(s, "hi", path), f"{path}.hi"),
                _series(_field(s, "series", path), f"{path}.series"),
                Mode(mode), _bool(s, "lo_open", path), _bool(s, "hi_open", path)))
        except ValueError as e:
            _fail(path, str(e))
    try:
        return TaggedLineSet(tuple(segs))
    except ValueError as e:
        _fail("$.segments", str(e))


def _phases(data: dict) -> Trajectory:
    phases = []
    for i, p in enumerate(_list(_field(data, "phases", "$"), "$.phases")):
        path = f"$.phases[{i}]"
        tag = _field(p, "tag", path)
        if not isinstance(tag, str):
            _fail(f"{path}.tag", "expected a string")
        bps = []
        for j, bp in enumerate(_list(_field(p, "breakpoints", path), f"{path}.breakpoints")):
            bpath = f"{path}.breakpoints[{j}]"
            if not isinstance(bp, list) or len(bp) != 2:
                _fail(bpath, "expected a [parameter, position] pair")
            bps.append((_rational(bp[0], bpath), _rational(bp[1], bpath)))
        try:
            phases.append(Phase(tag, tuple(bps)))
        except ValueError as e:
            _fail(path, str(e))
    try:
        return Trajectory(tuple(phases))
    except ValueError as e:
        _fail("$.phases", str(e))


def parse(text: str) -> Document:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(e.msg, e.lineno, e.colno) from None
    if not isinstance(data, dict):
        _fail("$", "expected a top-level object")
    if data.get("format") != FORMAT_VERSION:
        _fail("$.format", f"unsupported format {data.get('format')!r}, expected {FORMAT_VERSION}")
    kind = _field(data, "kind", "$")
    if kind not in KINDS:
        _fail("$.kind", f"expected one of {', '.join(KINDS)}, got {kind!r}")
    name = _field(data, "name", "$")
    desc = data.get("description", "")
    if not isinstance(name, str) or not isinstance(desc, str):
        _fail("$", "name and description must be strings")
    body = {"finite_set": _points, "line_set": _segments, "trajectory": _phases}[kind](data)
    return Document(kind, name, body, desc)


def load(path) -> Document:
    with open(path, encoding="utf-8") as f:
        return parse(f.read())


def dump(doc: Document, path) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(serialize(doc))
