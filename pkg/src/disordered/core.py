"""Tagged points and finite tagged sets.

A tagged point pairs a *value* (a vector of exact rationals giving its
position) with a *series* tag (an ordered label giving its belonging).  Two
points may share a value while differing in series; such pairs are kept
apart rather than merged, which is what makes a set *disordered*.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, NamedTuple, Union

from .errors import DimensionMismatchError

Rational = Union[int, str, Fraction]
Value = tuple  # tuple[Fraction, ...]


def rational(x: Rational) -> Fraction:
    """Coerce ``x`` to an exact :class:`Fraction`, rejecting floats."""
    if isinstance(x, float):
        raise TypeError(f"floats are not exact; pass a Fraction or 'num/den' string, got {x!r}")
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    return Fraction(x)


def make_value(coords) -> Value:
    """Normalize a scalar or a sequence of rationals to a value tuple."""
    if isinstance(coords, (int, str, Fraction, float)):
        coords = (coords,)
    value = tuple(rational(c) for c in coords)
    if not value:
        raise ValueError("a value needs at least one coordinate")
    return value


def format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_value(value: Value) -> str:
    if len(value) == 1:
        return format_rational(value[0])
    return "(" + ", ".join(format_rational(c) for c in value) + ")"


@dataclass(frozen=True, order=True)
class SeriesTag:
    """Totally ordered belonging label: by ``ordinal`` first, then ``label``."""

    ordinal: Fraction
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "ordinal", rational(self.ordinal))
        if not isinstance(self.label, str):
            raise TypeError("series label must be a string")

    def __str__(self):
        if self.ordinal == 0:
            return self.label or "0"
        if not self.label:
            return format_rational(self.ordinal)
        return f"{self.label}@{format_rational(self.ordinal)}"


def series(label: str, ordinal: Rational = 0) -> SeriesTag:
    return SeriesTag(rational(ordinal), label)


@dataclass(frozen=True, order=True)
class TaggedPoint:
    value: Value
    series: SeriesTag

    def __post_init__(self):
        object.__setattr__(self, "value", make_value(self.value))
        if not isinstance(self.series, SeriesTag):
            raise TypeError("series must be a SeriesTag")

    @property
    def dimension(self) -> int:
        return len(self.value)

    def __str__(self):
        return f"{format_value(self.value)}_{self.series}"


def make_point(value, tag: SeriesTag | str) -> TaggedPoint:
    if isinstance(tag, str):
        tag = series(tag)
    return TaggedPoint(make_value(value), tag)


def value_of(p: TaggedPoint) -> Value:
    return p.value


def series_of(p: TaggedPoint) -> SeriesTag:
    return p.series


class Relation(NamedTuple):
    equal_value: bool
    equal_series: bool
    equal: bool

    @property
    def unequal(self) -> bool:
        return not self.equal


def _check_dims(d1: int, d2: int) -> None:
    if d1 != d2:
        raise DimensionMismatchError(f"incomparable: dimension {d1} vs {d2}")


def relate(u: TaggedPoint, v: TaggedPoint) -> Relation:
    _check_dims(u.dimension, v.dimension)
    ev = u.value == v.value
    es = u.series == v.series
    return Relation(ev, es, ev and es)


@dataclass(frozen=True)
class FiniteTaggedSet:
    """A finite set of tagged points of one dimension.

    Points are stored sorted by ``(value, series)`` with exact duplicates
    removed, so two sets are equal exactly when they hold the same points.
    Points that share only their value are both kept.
    """

    dimension: int
    points: tuple = field(default=())

    def __post_init__(self):
        if not isinstance(self.dimension, int) or self.dimension < 1:
            raise ValueError(f"dimension must be a positive integer, got {self.dimension!r}")
        pts = []
        for p in self.points:
            if not isinstance(p, TaggedPoint):
                raise TypeError(f"expected TaggedPoint, got {type(p).__name__}")
            _check_dims(self.dimension, p.dimension)
            pts.append(p)
        object.__setattr__(self, "points", tuple(sorted(set(pts))))

    @classmethod
    def of(cls, points: Iterable[TaggedPoint], dimension: int | None = None) -> "FiniteTaggedSet":
        points = list(points)
        if dimension is None:
            if not points:
                raise ValueError("cannot infer the dimension of an empty set")
            dimension = points[0].dimension
        return cls(dimension, tuple(points))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[TaggedPoint]:
        return iter(self.points)

    def __contains__(self, p) -> bool:
        return p in set(self.points)

    @property
    def value_source(self) -> frozenset:
        return frozenset(p.value for p in self.points)

    @property
    def series_source(self) -> tuple:
        return tuple(sorted({p.series for p in self.points}))

    def __str__(self):
        return "{" + ", ".join(str(p) for p in self.points) + "}"


def superpose(a: FiniteTaggedSet, b: FiniteTaggedSet) -> FiniteTaggedSet:
    """Union that keeps equal-value points of different series apart."""
    _check_dims(a.dimension, b.dimension)
    return FiniteTaggedSet(a.dimension, a.points + b.points)


class Disorder(NamedTuple):
    disordered: bool
    witness: tuple | None = None

    def __bool__(self):
        return self.disordered


def is_disordered(s: FiniteTaggedSet) -> Disorder:
    """Find two distinct points of ``s`` that share a value, if any."""
    seen: dict = {}
    for p in s.points:
        q = seen.get(p.value)
        if q is not None:
            return Disorder(True, (q, p))
        seen[p.value] = p
    return Disorder(False)


def is_ordered_bijective(s: FiniteTaggedSet) -> bool:
    """True iff the pairs ``(value, series)`` of ``s`` form a one-to-one map."""
    by_value: dict = {}
    by_series: dict = {}
    for p in s.points:
        if by_value.setdefault(p.value, p.series) != p.series:
            return False
        if by_series.setdefault(p.series, p.value) != p.value:
            return False
    return True


def _classes(s: FiniteTaggedSet, key) -> list:
    groups: dict = {}
    for p in s.points:
        groups.setdefault(key(p), []).append(p)
    return [FiniteTaggedSet(s.dimension, tuple(g)) for _, g in sorted(groups.items())]


def value_classes(s: FiniteTaggedSet) -> list:
    """Partition ``s`` into equal-value classes, ordered by value."""
    return _classes(s, value_of)


def series_classes(s: FiniteTaggedSet) -> list:
    """Partition ``s`` into equal-series classes, ordered by series."""
    return _classes(s, series_of)
