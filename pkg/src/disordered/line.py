"""One-dimensional tagged segment unions, cuts and continuity checks.

A :class:`TaggedLineSet` is a finite union of tagged segments on the rational
line.  A *doubled* segment hosts two points at every position, a lower copy
and an upper copy with distinct series; this split-point construction is
what lets a cut hand one copy to each side so that both sides own a point
at the cut position.

Segments are closed unless built with ``lo_open``/``hi_open``; open ends only
arise on the sides produced by :func:`cut`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import groupby
from typing import NamedTuple

from .core import FiniteTaggedSet, SeriesTag, TaggedPoint, format_rational, rational
from .errors import CutError, EmptySetError, FourthTypeError, ScopeError


class Mode(str, enum.Enum):
    SINGLE = "single"
    DOUBLED = "doubled"


class CutMode(str, enum.Enum):
    LEFT_CLOSED = "left_closed"
    RIGHT_CLOSED = "right_closed"
    DISORDERED = "disordered"


class CutType(str, enum.Enum):
    TYPE1 = "Type1"  # left has a largest value point, right has no smallest
    TYPE2 = "Type2"  # mirror of TYPE1
    TYPE3 = "Type3"  # both extreme points exist, equal in value


def lower_copy(tag: SeriesTag) -> SeriesTag:
    return SeriesTag(tag.ordinal, tag.label + "/L")


def upper_copy(tag: SeriesTag) -> SeriesTag:
    return SeriesTag(tag.ordinal, tag.label + "/R")


class Span(NamedTuple):
    """An interval of rationals; ends are closed unless flagged open."""

    lo: Fraction
    hi: Fraction
    lo_open: bool = False
    hi_open: bool = False

    def contains(self, x: Fraction) -> bool:
        if x < self.lo or x > self.hi:
            return False
        if x == self.lo and self.lo_open:
            return False
        if x == self.hi and self.hi_open:
            return False
        return True

    def intersect(self, other: "Span") -> "Span | None":
        if self.lo > other.lo:
            lo, lo_open = self.lo, self.lo_open
        elif self.lo < other.lo:
            lo, lo_open = other.lo, other.lo_open
        else:
            lo, lo_open = self.lo, self.lo_open or other.lo_open
        if self.hi < other.hi:
            hi, hi_open = self.hi, self.hi_open
        elif self.hi > other.hi:
            hi, hi_open = other.hi, other.hi_open
        else:
            hi, hi_open = self.hi, self.hi_open or other.hi_open
        if lo > hi or (lo == hi and (lo_open or hi_open)):
            return None
        return Span(lo, hi, lo_open, hi_open)

    def some_point(self) -> Fraction:
        """A point of the span: its lower end when closed, else its midpoint."""
        return self.lo if not self.lo_open else (self.lo + self.hi) / 2

    @property
    def closed(self) -> bool:
        return not (self.lo_open or self.hi_open)

    def __str__(self):
        left = "(" if self.lo_open else "["
        right = ")" if self.hi_open else "]"
        return f"{left}{format_rational(self.lo)}, {format_rational(self.hi)}{right}"


@dataclass(frozen=True, order=True)
class TaggedSegment:
    lo: Fraction
    hi: Fraction
    series: SeriesTag
    mode: Mode = Mode.SINGLE
    lo_open: bool = False
    hi_open: bool = False

    def __post_init__(self):
        object.__setattr__(self, "lo", rational(self.lo))
        object.__setattr__(self, "hi", rational(self.hi))
        object.__setattr__(self, "mode", Mode(self.mode))
        if self.lo > self.hi:
            raise ValueError(f"segment lo {self.lo} exceeds hi {self.hi}")
        if self.lo == self.hi and (self.lo_open or self.hi_open):
            raise ValueError("a degenerate segment cannot have an open end")

    @property
    def span(self) -> Span:
        return Span(self.lo, self.hi, self.lo_open, self.hi_open)

    def point_series(self) -> tuple:
        if self.mode is Mode.DOUBLED:
            return (lower_copy(self.series), upper_copy(self.series))
        return (self.series,)

    def contains(self, x: Fraction) -> bool:
        return self.span.contains(x)

    def points_at(self, x: Fraction) -> list:
        if not self.contains(x):
            return []
        return [TaggedPoint((x,), s) for s in self.point_series()]

    def __str__(self):
        suffix = "×2" if self.mode is Mode.DOUBLED else ""
        return f"{self.span}_{self.series}{suffix}"


@dataclass(frozen=True)
class TaggedLineSet:
    """Finite union of tagged segments, kept sorted by ``(lo, hi, series)``.

    Segments sharing a series tag may only touch at endpoints; segments of
    different series may overlap freely.
    """

    segments: tuple = field(default=())

    def __post_init__(self):
        for s in self.segments:
            if not isinstance(s, TaggedSegment):
                raise TypeError(f"expected TaggedSegment, got {type(s).__name__}")
        segs = sorted(set(self.segments), key=lambda s: (s.lo, s.hi, s.series, s.mode, s.lo_open, s.hi_open))
        by_series = sorted(segs, key=lambda s: (s.series, s.lo, s.hi))
        for tag, group in groupby(by_series, key=lambda s: s.series):
            group = list(group)
            for prev, nxt in zip(group, group[1:]):
                if nxt.lo < prev.hi:
                    raise ValueError(f"segments {prev} and {nxt} of series {tag} overlap")
        object.__setattr__(self, "segments", tuple(segs))

    dimension = 1

    def __len__(self) -> int:
        return len(self.segments)

    def __iter__(self):
        return iter(self.segments)

    @property
    def is_empty(self) -> bool:
        return not self.segments

    @property
    def is_closed(self) -> bool:
        return all(s.span.closed for s in self.segments)

    def hull(self) -> tuple:
        if not self.segments:
            raise EmptySetError("empty line set has no hull")
        return min(s.lo for s in self.segments), max(s.hi for s in self.segments)

    def __str__(self):
        return " ∪ ".join(str(s) for s in self.segments) or "∅"


def line_set(*segments: TaggedSegment) -> TaggedLineSet:
    return TaggedLineSet(tuple(segments))


def points_at(z: TaggedLineSet, x) -> list:
    """Distinct tagged points of ``z`` at position ``x``, sorted by series."""
    x = rational(x)
    pts = set()
    for s in z.segments:
        pts.update(s.points_at(x))
    return sorted(pts)


def multiplicity_at(z: TaggedLineSet, x) -> int:
    return len(points_at(z, x))


def merge_spans(spans) -> list:
    """Merge overlapping or touching spans into disjoint ascending spans."""
    out: list = []
    for s in sorted(spans, key=lambda s: (s.lo, s.lo_open)):
        if out:
            cur = out[-1]
            if s.lo < cur.hi or (s.lo == cur.hi and not (s.lo_open and cur.hi_open)):
                if s.hi > cur.hi:
                    out[-1] = Span(cur.lo, s.hi, cur.lo_open, s.hi_open)
                elif s.hi == cur.hi:
                    out[-1] = Span(cur.lo, cur.hi, cur.lo_open, cur.hi_open and s.hi_open)
                continue
        out.append(s)
    return out


def value_projection(z: TaggedLineSet) -> list:
    """The value source of ``z`` as disjoint ascending spans."""
    return merge_spans(s.span for s in z.segments)


def boundary(z: TaggedLineSet) -> FiniteTaggedSet:
    """Boundary points of ``z``.

    Neighbourhoods are taken within a series: a point is on the boundary when
    its own series leaves ``z`` arbitrarily close to it.  Each series'
    segments are merged and the ends of the merged spans are reported, with
    both copies for doubled segments.
    """
    pts = []
    by_series = sorted(z.segments, key=lambda s: s.series)
    for _, group in groupby(by_series, key=lambda s: s.series):
        group = list(group)
        for span in merge_spans(s.span for s in group):
            for x in {span.lo, span.hi}:
                for s in group:
                    if s.lo <= x <= s.hi:
                        pts.extend(TaggedPoint((x,), t) for t in s.point_series())
    return FiniteTaggedSet(1, tuple(pts))


# ---------------------------------------------------------------------------
# cuts


@dataclass(frozen=True)
class CutResult:
    position: Fraction
    left: TaggedLineSet
    right: TaggedLineSet
    cut_type: CutType

    def largest_left(self) -> list:
        """Points of the left side at its largest value, if attained."""
        return _extreme_points(self.left, largest=True)

    def smallest_right(self) -> list:
        return _extreme_points(self.right, largest=False)


def _extreme_points(side: TaggedLineSet, largest: bool) -> list:
    lo, hi = side.hull()
    return points_at(side, hi if largest else lo)


def partition_at(z: TaggedLineSet, c, mode: CutMode | str) -> tuple:
    """Split ``z`` at position ``c`` into (left, right) line sets.

    Points below ``c`` go left and points above go right.  Points at ``c``
    go left for ``left_closed``, right for ``right_closed``; for
    ``disordered`` the lower half by series order goes left and the rest
    right, so both sides own a point at ``c``.
    """
    c = rational(c)
    mode = CutMode(mode)
    if z.is_empty:
        raise EmptySetError("cannot cut an empty line set")
    lo, hi = z.hull()
    if not lo < c < hi:
        raise CutError(f"cut position {format_rational(c)} is not strictly inside "
                       f"[{format_rational(lo)}, {format_rational(hi)}]")
    at_c = points_at(z, c)
    if mode is CutMode.LEFT_CLOSED:
        to_left, to_right = at_c, []
    elif mode is CutMode.RIGHT_CLOSED:
        to_left, to_right = [], at_c
    else:
        # no points at all means c sits in a gap; classification reports it
        if len(at_c) == 1:
            raise CutError(f"disordered cut needs at least two points at {format_rational(c)}, "
                           f"found {len(at_c)}")
        k = len(at_c) // 2
        to_left, to_right = at_c[:k], at_c[k:]

    left, right = [], []
    for s in z.segments:
        if s.hi < c or (s.hi == c and s.hi_open):
            left.append(s)
        elif s.lo > c or (s.lo == c and s.lo_open):
            right.append(s)
        else:
            if s.lo < c:
                left.append(replace(s, hi=c, hi_open=True))
            if s.hi > c:
                right.append(replace(s, lo=c, lo_open=True))
    left += [TaggedSegment(c, c, p.series) for p in to_left]
    right += [TaggedSegment(c, c, p.series) for p in to_right]
    return TaggedLineSet(tuple(left)), TaggedLineSet(tuple(right))


def classify_cut(r: CutResult) -> CutType:
    """Recompute the type of a cut from its two sides.

    Raises :class:`FourthTypeError` when neither side attains its extreme
    value or when the sides' extremes differ, i.e. positions between the
    sides belong to neither: a gap in the value projection.
    """
    if r.left.is_empty or r.right.is_empty:
        raise CutError("both sides of a cut must be nonempty")
    left_sup = max(s.hi for s in r.left.segments)
    right_inf = min(s.lo for s in r.right.segments)
    has_largest = any(s.hi == left_sup and not s.hi_open for s in r.left.segments)
    has_smallest = any(s.lo == right_inf and not s.lo_open for s in r.right.segments)
    if left_sup > right_inf:
        raise CutError(f"left side reaches {format_rational(left_sup)} beyond the right side's "
                       f"{format_rational(right_inf)}")
    if left_sup < right_inf or not (has_largest or has_smallest):
        gap = Span(left_sup, right_inf, has_largest, has_smallest)
        raise FourthTypeError(f"neither side reaches the other: gap {gap}", gap)
    if has_largest and has_smallest:
        return CutType.TYPE3
    return CutType.TYPE1 if has_largest else CutType.TYPE2


def cut(z: TaggedLineSet, c, mode: CutMode | str) -> CutResult:
    c = rational(c)
    left, right = partition_at(z, c, mode)
    provisional = CutResult(c, left, right, CutType.TYPE3)
    return replace(provisional, cut_type=classify_cut(provisional))


# ---------------------------------------------------------------------------
# continuity


class CantorVerdict(NamedTuple):
    continuous: bool
    gap: Span | None = None


class PoincareVerdict(NamedTuple):
    continuous: bool
    counterexample: Fraction | None = None


def cantor_continuous(z: TaggedLineSet) -> CantorVerdict:
    """Gap-freeness: the value projection is a single interval."""
    if z.is_empty:
        raise EmptySetError("continuity of an empty set is undefined")
    spans = value_projection(z)
    if len(spans) == 1:
        return CantorVerdict(True)
    a, b = spans[0], spans[1]
    return CantorVerdict(False, Span(a.hi, b.lo, not a.hi_open, not b.lo_open))


def _probe_positions(z: TaggedLineSet) -> list:
    # multiplicity is constant between consecutive endpoints, so endpoints
    # and the midpoints between them see every value it takes
    events = sorted({s.lo for s in z.segments} | {s.hi for s in z.segments})
    probes = list(events)
    probes += [(a + b) / 2 for a, b in zip(events, events[1:])]
    return sorted(probes)


def poincare_continuous(z: TaggedLineSet) -> PoincareVerdict:
    """Contact everywhere: every interior position hosts at least two points.

    Then the disordered cut at any interior position leaves both sides
    owning an equal-value point, so the sides are in contact.  The
    counterexample is the leftmost position where this fails.
    """
    if z.is_empty:
        raise EmptySetError("continuity of an empty set is undefined")
    lo, hi = z.hull()
    for c in _probe_positions(z):
        if lo < c < hi and multiplicity_at(z, c) < 2:
            return PoincareVerdict(False, c)
    return PoincareVerdict(True)


class ContinuityEquivalence(NamedTuple):
    cantor: bool
    poincare: bool

    @property
    def equivalent(self) -> bool:
        return self.cantor == self.poincare


def verify_continuity_equivalence(z: TaggedLineSet) -> ContinuityEquivalence:
    """Check that gap-freeness and contact-everywhere agree on a doubled set."""
    single = [s for s in z.segments if s.mode is not Mode.DOUBLED]
    if single:
        raise ScopeError(f"segment {single[0]} is not doubled; the equivalence only "
                         f"covers sets built from doubled segments")
    return ContinuityEquivalence(cantor_continuous(z).continuous, poincare_continuous(z).continuous)
