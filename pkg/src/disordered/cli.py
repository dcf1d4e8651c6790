"""Command-line front end.

Exit codes: 0 when no check fails, 1 when at least one fails, 2 on usage
or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import document
from .core import format_rational, format_value, is_disordered, is_ordered_bijective, value_classes
from .errors import (CutError, DimensionMismatchError, DocumentError, FourthTypeError, OverlapError,
                     TrajectoryError)
from .line import (CutMode, CutType, Mode, cantor_continuous, cut, poincare_continuous,
                   verify_continuity_equivalence)
from .metric import in_contact, set_distance_sq, verify_contact_equivalence
from .trajectory import apex_query, build_trajectory, series_cut, value_fiber

PASS, FAIL, WARN = "pass", "fail", "warning"

UL = "̲"  # combining low line: a̲ is the value of a


@dataclass
class Verdict:
    check: str
    status: str
    witness: str = ""


@dataclass
class Report:
    command: str
    verdicts: list = field(default_factory=list)

    def add(self, check: str, status: str, witness: str = "") -> None:
        self.verdicts.append(Verdict(check, status, witness))

    @property
    def exit_code(self) -> int:
        return 1 if any(v.status == FAIL for v in self.verdicts) else 0

    def to_json(self) -> dict:
        return {"command": self.command,
                "verdicts": [{"check": v.check, "status": v.status, "witness": v.witness}
                             for v in self.verdicts],
                "exit_code": self.exit_code}

    def render(self) -> str:
        width = max((len(v.check) for v in self.verdicts), default=0)
        return "\n".join(f"{v.check:<{width}}  {v.status.upper():<7}  {v.witness}".rstrip()
                         for v in self.verdicts)


class UsageError(Exception):
    pass


def _load(path: str, *kinds: str) -> document.Document:
    try:
        doc = document.load(path)
    except OSError as e:
        raise UsageError(f"{path}: {e.strerror}") from None
    except DocumentError as e:
        raise UsageError(f"{path}:{e}") from None
    if kinds and doc.kind not in kinds:
        raise UsageError(f"{path}: expected a {' or '.join(kinds)} document, got {doc.kind}")
    return doc


def _rational_arg(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from None


def _points_text(points) -> str:
    return ", ".join(str(p) for p in points)


# ---------------------------------------------------------------------------
# commands


def _check_finite(report: Report, s) -> None:
    d = is_disordered(s)
    bijective = is_ordered_bijective(s)
    if bijective and d.disordered:
        report.add("order-structure", FAIL, f"one-to-one yet equal-value pair {_points_text(d.witness)}")
    elif d.disordered:
        report.add("order-structure", PASS, f"disordered: {_points_text(d.witness)} share a value")
    else:
        report.add("order-structure", PASS, "ordered" + (" (one-to-one value/series)" if bijective else ""))
    classes = value_classes(s)
    covered = sum(len(c) for c in classes) == len(s)
    report.add("value-classes", PASS if covered else FAIL, f"{len(classes)} equal-value classes")


def _check_line(report: Report, z) -> None:
    if z.is_empty:
        report.add("cantor-continuity", FAIL, "empty set")
        return
    c = cantor_continuous(z)
    if c.continuous:
        report.add("cantor-continuity", PASS, "no gaps")
    else:
        report.add("cantor-continuity", FAIL, f"gap {c.gap}")
    p = poincare_continuous(z)
    if p.continuous:
        report.add("poincare-continuity", PASS, "in contact everywhere")
    else:
        x = format_rational(p.counterexample)
        report.add("poincare-continuity", FAIL, f"cut at {x} leaves sides out of contact")
    if all(s.mode is Mode.DOUBLED for s in z.segments):
        eq = verify_continuity_equivalence(z)
        report.add("continuity-equivalence", PASS if eq.equivalent else FAIL,
                   f"cantor={str(eq.cantor).lower()} poincare={str(eq.poincare).lower()}")


def _check_trajectory(report: Report, traj) -> None:
    _, junctions = build_trajectory(traj.phases)
    if not junctions:
        report.add("junction-contact", PASS, "single phase, no junctions")
    for j in junctions:
        where = f"{j.from_tag}→{j.to_tag} at series {format_rational(j.parameter)}"
        if j.in_contact:
            report.add("junction-contact", PASS, f"{where}, position {format_rational(j.end_position)}")
        else:
            report.add("junction-contact", WARN, f"{where} jumps "
                       f"{format_rational(j.end_position)}→{format_rational(j.start_position)}")
    report.add("apex", PASS, apex_query(traj).answer())


def cmd_check(args) -> Report:
    doc = _load(args.file)
    report = Report("check")
    {"finite_set": _check_finite, "line_set": _check_line,
     "trajectory": _check_trajectory}[doc.kind](report, doc.body)
    return report


MODES = {"left": CutMode.LEFT_CLOSED, "right": CutMode.RIGHT_CLOSED, "disordered": CutMode.DISORDERED}


def cmd_cut(args) -> Report:
    z = _load(args.file, "line_set").body
    report = Report("cut")
    try:
        r = cut(z, args.at, MODES[args.mode])
    except FourthTypeError as e:
        report.add("cut-type", FAIL, f"fourth-type configuration: gap {e.gap}")
        return report
    except CutError as e:
        raise UsageError(str(e)) from None
    a, b = r.largest_left(), r.smallest_right()
    c = format_rational(r.position)
    if r.cut_type is CutType.TYPE3:
        text = f"Type3; a{UL} = b{UL} = {c}; a ≠ b"
    elif r.cut_type is CutType.TYPE1:
        text = f"Type1; a{UL} = {c}; B has no smallest value point"
    else:
        text = f"Type2; b{UL} = {c}; A has no largest value point"
    report.add("cut-type", PASS, text)
    report.add("left-largest", PASS, _points_text(a) if a else f"none (supremum {c})")
    report.add("right-smallest", PASS, _points_text(b) if b else f"none (infimum {c})")
    return report


def cmd_distance(args) -> Report:
    a = _load(args.file_a, "finite_set", "line_set").body
    b = _load(args.file_b, "finite_set", "line_set").body
    report = Report("distance")
    try:
        d = set_distance_sq(a, b)
    except DimensionMismatchError as e:
        raise UsageError(f"dimension mismatch: {e}") from None
    except ValueError as e:
        raise UsageError(str(e)) from None
    report.add("distance", PASS, f"distance² = {d}; distance ≈ {d.approx}")
    try:
        contact = in_contact(a, b)
    except OverlapError as e:
        report.add("contact", WARN, str(e))
        return report
    if contact:
        report.add("contact", PASS, f"in contact: {_points_text(contact.witness)}")
    else:
        report.add("contact", PASS, "not in contact")
    if a.dimension == 1 and not all(getattr(s, "is_closed", True) for s in (a, b)):
        report.add("contact-equivalence", WARN, "operands not closed; equivalence not claimed")
        return report
    eq = verify_contact_equivalence(a, b)
    legs = (f"contact={str(eq.contact).lower()} shared-value={str(eq.value_intersect).lower()} "
            f"zero-distance={str(eq.zero_distance).lower()}")
    report.add("contact-equivalence", PASS if eq.consistent else FAIL,
               ("consistent: " if eq.consistent else "inconsistent: ") + legs)
    return report


def cmd_fiber(args) -> Report:
    traj = _load(args.file, "trajectory").body
    report = Report("fiber")
    if args.apex:
        report.add("apex", PASS, apex_query(traj).answer())
    elif args.value is not None:
        fiber = value_fiber(traj, args.value)
        if len(fiber):
            report.add("value-fiber", PASS, f"{len(fiber)} points: {_points_text(fiber)}")
        else:
            report.add("value-fiber", PASS, "no points")
    else:
        try:
            sc = series_cut(traj, args.series)
        except TrajectoryError as e:
            raise UsageError(str(e)) from None
        y = format_rational(sc.parameter)
        sv, tv = format_value(sc.s.value), format_value(sc.t.value)
        if sc.values_equal:
            text = f"s_# = t_# = {y}; s{UL} = t{UL} = {sv}"
        else:
            text = f"s_# = t_# = {y}; s{UL} = {sv} ≠ t{UL} = {tv}"
        report.add("series-cut", PASS, f"{text}; s = {sc.s}, t = {sc.t}")
    return report


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="disordered", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="run every check applicable to a document")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("cut", help="cut a line set at a position")
    p.add_argument("file")
    p.add_argument("--at", type=_rational_arg, required=True)
    p.add_argument("--mode", choices=sorted(MODES), required=True)
    p.set_defaults(func=cmd_cut)

    p = sub.add_parser("distance", help="distance and contact between two sets")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("fiber", help="points of a trajectory at a position or series")
    p.add_argument("file")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--value", type=_rational_arg)
    g.add_argument("--series", type=_rational_arg)
    g.add_argument("--apex", action="store_true")
    p.set_defaults(func=cmd_fiber)

    for p in sub.choices.values():
        p.add_argument("--json", action="store_true", help="emit one JSON object")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report = args.func(args)
    except UsageError as e:
        if args.json:
            print(json.dumps({"command": args.command, "error": str(e), "exit_code": 2}))
        print(f"error: {e}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(report.to_json(), ensure_ascii=False))
    else:
        print(report.render())
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
