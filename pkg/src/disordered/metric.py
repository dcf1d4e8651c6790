"""Exact distances between tagged sets and the contact predicate.

Distances are carried squared so every comparison stays in exact rationals;
square roots only appear in display strings.  Series tags never affect a
distance: two points at the same position are at distance zero whatever
they belong to.

Operands may be :class:`~disordered.core.FiniteTaggedSet` (any dimension) or
:class:`~disordered.line.TaggedLineSet` (dimension 1), mixed freely in 1-D.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import NamedTuple, Union

from .core import FiniteTaggedSet, TaggedPoint, format_rational, relate
from .errors import DimensionMismatchError, EmptySetError, OverlapError, PreconditionError
from .line import Span, TaggedLineSet, merge_spans, value_projection

TaggedSet = Union[FiniteTaggedSet, TaggedLineSet]

DISPLAY_DIGITS = 12


@dataclass(frozen=True, order=True)
class SquaredDistance:
    value: Fraction

    def __post_init__(self):
        if self.value < 0:
            raise ValueError("squared distance cannot be negative")

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    @property
    def approx(self) -> str:
        return self.root(DISPLAY_DIGITS)

    def root(self, digits: int) -> str:
        """Decimal approximation of the (unsquared) distance."""
        with localcontext() as ctx:
            ctx.prec = digits
            r = (Decimal(self.value.numerator) / Decimal(self.value.denominator)).sqrt()
        return format(r, "f")

    def __str__(self):
        return format_rational(self.value)


def point_distance_sq(u: TaggedPoint, v: TaggedPoint) -> SquaredDistance:
    relate(u, v)  # dimension check
    return SquaredDistance(sum(((a - b) ** 2 for a, b in zip(u.value, v.value)), Fraction(0)))


def _is_empty(s: TaggedSet) -> bool:
    return len(s) == 0


def _validate(a: TaggedSet, b: TaggedSet) -> int:
    if _is_empty(a) or _is_empty(b):
        raise EmptySetError("distance and contact need nonempty operands")
    if a.dimension != b.dimension:
        raise DimensionMismatchError(f"dimension {a.dimension} vs {b.dimension}")
    return a.dimension


def _pieces(s: TaggedSet) -> list:
    """1-D operand as (span, series-of-points) pieces, unmerged."""
    if isinstance(s, TaggedLineSet):
        return [(seg.span, seg.point_series()) for seg in s.segments]
    return [(Span(p.value[0], p.value[0]), (p.series,)) for p in s.points]


def _spans(s: TaggedSet) -> list:
    if isinstance(s, TaggedLineSet):
        return value_projection(s)
    return merge_spans(Span(v[0], v[0]) for v in s.value_source)


def set_distance_sq(a: TaggedSet, b: TaggedSet) -> SquaredDistance:
    """Infimum of squared pointwise distances between ``a`` and ``b``.

    For closed operands the infimum is attained.  Open ends, which only
    occur on cut sides, are ignored: the infimum is that of the closures.
    """
    if _validate(a, b) == 1:
        return SquaredDistance(_gap_1d(_spans(a), _spans(b)) ** 2)
    return SquaredDistance(_nearest_pair_nd(a, b))


def _gap_1d(spans_a: list, spans_b: list) -> Fraction:
    # sweep by left end; a span's nearest predecessor from the other operand
    # is the one reaching furthest right
    events = sorted([(s.lo, s.hi, 0) for s in spans_a] + [(s.lo, s.hi, 1) for s in spans_b])
    reach = [None, None]
    best = None
    for lo, hi, side in events:
        other = reach[1 - side]
        if other is not None:
            gap = max(Fraction(0), lo - other)
            if best is None or gap < best:
                best = gap
                if best == 0:
                    return best
        if reach[side] is None or hi > reach[side]:
            reach[side] = hi
    return best


def _nearest_pair_nd(a: FiniteTaggedSet, b: FiniteTaggedSet) -> Fraction:
    if not isinstance(a, FiniteTaggedSet) or not isinstance(b, FiniteTaggedSet):
        raise TypeError("only finite sets are supported above dimension 1")
    bvals = sorted(b.value_source)
    firsts = [v[0] for v in bvals]
    best = None
    for u in sorted(a.value_source):
        i = bisect.bisect_left(firsts, u[0])
        # scan outward from u's first coordinate, stopping once that
        # coordinate alone already exceeds the best distance
        for rng in (range(i, len(bvals)), range(i - 1, -1, -1)):
            for j in rng:
                v = bvals[j]
                dx = (v[0] - u[0]) ** 2
                if best is not None and dx >= best:
                    break
                d = sum(((p - q) ** 2 for p, q in zip(u, v)), Fraction(0))
                if best is None or d < best:
                    best = d
        if best == 0:
            break
    return best


def _shared_point(a: TaggedSet, b: TaggedSet) -> TaggedPoint | None:
    if isinstance(a, FiniteTaggedSet) and isinstance(b, FiniteTaggedSet):
        common = set(a.points) & set(b.points)
        return min(common) if common else None
    for sa, ta in _pieces(a):
        for sb, tb in _pieces(b):
            tags = set(ta) & set(tb)
            if tags:
                both = sa.intersect(sb)
                if both is not None:
                    return TaggedPoint((both.some_point(),), min(tags))
    return None


class Contact(NamedTuple):
    contact: bool
    witness: tuple | None = None

    def __bool__(self):
        return self.contact


def in_contact(a: TaggedSet, b: TaggedSet) -> Contact:
    """Whether disjoint ``a`` and ``b`` own a pair of equal-value points.

    The witness ``(p, q)`` has ``p`` in ``a``, ``q`` in ``b``, equal values
    and, since the operands are disjoint, unequal series.
    """
    dim = _validate(a, b)
    shared = _shared_point(a, b)
    if shared is not None:
        raise OverlapError(f"operands overlap as tagged sets at {shared}")
    if dim > 1 or (isinstance(a, FiniteTaggedSet) and isinstance(b, FiniteTaggedSet)):
        first: dict = {}
        for p in a.points:
            first.setdefault(p.value, p)
        for q in b.points:
            p = first.get(q.value)
            if p is not None:
                return Contact(True, (p, q))
        return Contact(False)
    for sa, ta in _pieces(a):
        for sb, tb in _pieces(b):
            both = sa.intersect(sb)
            if both is not None:
                x = both.some_point()
                return Contact(True, (TaggedPoint((x,), ta[0]), TaggedPoint((x,), tb[0])))
    return Contact(False)


def value_sources_intersect(a: TaggedSet, b: TaggedSet) -> bool:
    if _validate(a, b) > 1:
        return bool(a.value_source & b.value_source)
    spans_b = _spans(b)
    return any(sa.intersect(sb) is not None for sa in _spans(a) for sb in spans_b)


def _require_closed(*sets: TaggedSet) -> None:
    for s in sets:
        if isinstance(s, TaggedLineSet) and not s.is_closed:
            raise PreconditionError(f"operand {s} is not closed")


class ContactEquivalence(NamedTuple):
    contact: bool
    value_intersect: bool
    zero_distance: bool

    @property
    def consistent(self) -> bool:
        return self.contact == self.value_intersect == self.zero_distance


def verify_contact_equivalence(a: TaggedSet, b: TaggedSet) -> ContactEquivalence:
    """Compute contact, shared value and zero distance each on its own route."""
    _require_closed(a, b)
    return ContactEquivalence(
        in_contact(a, b).contact,
        value_sources_intersect(a, b),
        set_distance_sq(a, b).is_zero,
    )


def check_positive_distance(a: TaggedSet, b: TaggedSet) -> bool:
    """Verdict that operands with disjoint value sources are a positive distance apart.

    Both representations are bounded by construction, so the boundedness
    requirement always holds.
    """
    _validate(a, b)
    _require_closed(a, b)
    if value_sources_intersect(a, b):
        raise PreconditionError("value sources intersect; positive distance is not claimed")
    return set_distance_sq(a, b).value > 0
