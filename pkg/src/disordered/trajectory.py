"""Motion trajectories as ordered phases of piecewise-linear paths.

Each phase maps a series parameter (time-like, exact rational) to a 1-D
position.  A point of the trajectory is tagged with the series
``SeriesTag(parameter, phase_tag)``, so the end of one phase and the start
of the next are distinct points even when they share both position and
parameter.  That pair is the contact between consecutive phases.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from .core import FiniteTaggedSet, SeriesTag, TaggedPoint, format_rational, rational
from .errors import TrajectoryError


@dataclass(frozen=True)
class Phase:
    """A tagged piecewise-linear path ``parameter -> position``.

    ``breakpoints`` are ``(parameter, position)`` pairs with strictly
    increasing parameters; the path is linear between consecutive ones.
    """

    tag: str
    breakpoints: tuple

    def __post_init__(self):
        bps = tuple((rational(t), rational(x)) for t, x in self.breakpoints)
        if not bps:
            raise TrajectoryError(f"phase {self.tag!r} has no breakpoints")
        for (t0, _), (t1, _) in zip(bps, bps[1:]):
            if not t0 < t1:
                raise TrajectoryError(f"phase {self.tag!r}: parameters must strictly increase "
                                      f"({format_rational(t0)} then {format_rational(t1)})")
        object.__setattr__(self, "breakpoints", bps)

    @property
    def param_lo(self) -> Fraction:
        return self.breakpoints[0][0]

    @property
    def param_hi(self) -> Fraction:
        return self.breakpoints[-1][0]

    @property
    def start(self) -> Fraction:
        return self.breakpoints[0][1]

    @property
    def end(self) -> Fraction:
        return self.breakpoints[-1][1]

    def pieces(self) -> list:
        return list(zip(self.breakpoints, self.breakpoints[1:]))

    def position_at(self, t) -> Fraction:
        t = rational(t)
        if not self.param_lo <= t <= self.param_hi:
            raise TrajectoryError(f"parameter {format_rational(t)} outside phase {self.tag!r}")
        for (t0, x0), (t1, x1) in self.pieces():
            if t0 <= t <= t1:
                return x0 + (x1 - x0) * (t - t0) / (t1 - t0)
        return self.start

    def series_at(self, t) -> SeriesTag:
        return SeriesTag(rational(t), self.tag)

    def point_at(self, t) -> TaggedPoint:
        return TaggedPoint((self.position_at(t),), self.series_at(t))

    def restrict(self, lo, hi) -> "Phase":
        """The same path on the parameter range ``[lo, hi]``."""
        lo, hi = rational(lo), rational(hi)
        inner = [(t, x) for t, x in self.breakpoints if lo < t < hi]
        bps = [(lo, self.position_at(lo))] + inner
        if hi > lo:
            bps.append((hi, self.position_at(hi)))
        return Phase(self.tag, tuple(bps))


class Junction(NamedTuple):
    index: int
    parameter: Fraction
    from_tag: str
    to_tag: str
    end_position: Fraction
    start_position: Fraction

    @property
    def in_contact(self) -> bool:
        return self.end_position == self.start_position


@dataclass(frozen=True)
class Trajectory:
    phases: tuple = field(default=())

    def __post_init__(self):
        phases = tuple(self.phases)
        if not phases:
            raise TrajectoryError("a trajectory needs at least one phase")
        for k, (p, q) in enumerate(zip(phases, phases[1:])):
            if p.param_hi != q.param_lo:
                raise TrajectoryError(
                    f"phases {k} ({p.tag}) and {k + 1} ({q.tag}) do not abut: "
                    f"{format_rational(p.param_hi)} != {format_rational(q.param_lo)}")
        object.__setattr__(self, "phases", phases)

    @property
    def param_lo(self) -> Fraction:
        return self.phases[0].param_lo

    @property
    def param_hi(self) -> Fraction:
        return self.phases[-1].param_hi

    def junctions(self) -> list:
        return [Junction(k, p.param_hi, p.tag, q.tag, p.end, q.start)
                for k, (p, q) in enumerate(zip(self.phases, self.phases[1:]))]

    @property
    def contact_everywhere(self) -> bool:
        return all(j.in_contact for j in self.junctions())


def build_trajectory(phases) -> tuple:
    """Assemble phases into a trajectory and report contact at each junction.

    A junction whose positions differ is a jump; it is reported, not
    rejected.
    """
    traj = Trajectory(tuple(phases))
    return traj, traj.junctions()


def value_fiber(traj: Trajectory, x) -> FiniteTaggedSet:
    """All tagged points of ``traj`` at position ``x``.

    Each linear piece is inverted exactly.  A constant piece at ``x``
    contributes its two breakpoints rather than its whole range.
    """
    x = rational(x)
    pts = []
    for ph in traj.phases:
        if len(ph.breakpoints) == 1 and ph.start == x:
            pts.append(ph.point_at(ph.param_lo))
        for (t0, x0), (t1, x1) in ph.pieces():
            if x0 == x1:
                if x0 == x:
                    pts += [ph.point_at(t0), ph.point_at(t1)]
            elif min(x0, x1) <= x <= max(x0, x1):
                t = t0 + (x - x0) * (t1 - t0) / (x1 - x0)
                pts.append(TaggedPoint((x,), ph.series_at(t)))
    return FiniteTaggedSet(1, tuple(pts))


class Apex(NamedTuple):
    position: Fraction
    fiber: FiniteTaggedSet
    phases: tuple

    def answer(self) -> str:
        n = len(self.fiber)
        return (f"apex {format_rational(self.position)} belongs to phases: "
                f"{', '.join(self.phases)} ({n} point{'s' if n != 1 else ''})")


def apex_query(traj: Trajectory) -> Apex:
    """Which phases own the highest position: every phase that attains it."""
    top = max(x for ph in traj.phases for _, x in ph.breakpoints)
    fiber = value_fiber(traj, top)
    owners = {p.series.label for p in fiber}
    tags = tuple(dict.fromkeys(ph.tag for ph in traj.phases if ph.tag in owners))
    return Apex(top, fiber, tags)


class SeriesCut(NamedTuple):
    parameter: Fraction
    before: Trajectory
    after: Trajectory
    s: TaggedPoint
    t: TaggedPoint

    @property
    def values_equal(self) -> bool:
        return self.s.value == self.t.value


def series_cut(traj: Trajectory, y) -> SeriesCut:
    """Split ``traj`` at parameter ``y`` into a before and an after part.

    ``s`` closes the before part and ``t`` opens the after part; both carry
    parameter ``y``.  Their positions agree unless the motion jumps at ``y``.
    """
    y = rational(y)
    if not traj.param_lo < y < traj.param_hi:
        raise TrajectoryError(f"series {format_rational(y)} is not strictly inside "
                              f"[{format_rational(traj.param_lo)}, {format_rational(traj.param_hi)}]")
    before = [ph.restrict(ph.param_lo, min(y, ph.param_hi)) for ph in traj.phases if ph.param_lo < y]
    after = [ph.restrict(max(y, ph.param_lo), ph.param_hi) for ph in traj.phases if ph.param_hi > y]
    s = before[-1].point_at(y)
    t = after[0].point_at(y)
    return SeriesCut(y, Trajectory(tuple(before)), Trajectory(tuple(after)), s, t)


class ValueChange(NamedTuple):
    tag: str
    param_from: Fraction
    param_to: Fraction
    position_from: Fraction
    position_to: Fraction

    @property
    def changes(self) -> bool:
        return self.position_from != self.position_to

    def describe(self) -> str:
        if not self.changes:
            return f"no value change: at {format_rational(self.position_from)} under {self.tag}"
        return (f"value {format_rational(self.position_from)}→{format_rational(self.position_to)} "
                f"under {self.tag}")


class SeriesChange(NamedTuple):
    parameter: Fraction
    from_tag: str
    to_tag: str
    position_from: Fraction
    position_to: Fraction

    @property
    def position_fixed(self) -> bool:
        return self.position_from == self.position_to

    def describe(self) -> str:
        text = f"series {self.from_tag}→{self.to_tag} at {format_rational(self.position_from)}"
        if not self.position_fixed:
            text += f" (jump to {format_rational(self.position_to)})"
        return text


def describe_motion(traj: Trajectory) -> list:
    """Value changes along each linear piece, series changes at each junction."""
    entries: list = []
    for k, ph in enumerate(traj.phases):
        if k:
            prev = traj.phases[k - 1]
            entries.append(SeriesChange(ph.param_lo, prev.tag, ph.tag, prev.end, ph.start))
        entries += [ValueChange(ph.tag, t0, t1, x0, x1) for (t0, x0), (t1, x1) in ph.pieces()]
    return entries
