from fractions import Fraction as F

import pytest

from disordered import (CutError, CutMode, CutResult, CutType, EmptySetError, FourthTypeError, Mode,
                        ScopeError, TaggedLineSet, TaggedPoint, TaggedSegment, boundary,
                        cantor_continuous, classify_cut, cut, in_contact, line_set, multiplicity_at,
                        partition_at, poincare_continuous, points_at, series, value_projection,
                        verify_continuity_equivalence)
from disordered.line import Span

from gen import gapped, interior_position, line_set as rand_line_set, make_rng, window
from oracles import boundary_by_neighbourhood, probes, projection_by_probing, segment_multiplicity

D = Mode.DOUBLED


def seg(lo, hi, tag, mode=Mode.SINGLE):
    return TaggedSegment(F(lo), F(hi), series(tag), mode)


UNIT = line_set(seg(0, 1, "P"))
W = line_set(seg(0, 1, "W", D))
GLUED = line_set(seg(0, 1, "P"), seg(1, 2, "Q"))
GAPPED = line_set(seg(0, 1, "P"), seg(2, 3, "Q"))


def pt(x, tag):
    return TaggedPoint((F(x),), series(tag))


class TestSegments:
    def test_bad_bounds(self):
        with pytest.raises(ValueError):
            seg(1, 0, "P")

    def test_same_series_overlap_rejected(self):
        with pytest.raises(ValueError):
            line_set(seg(0, 2, "P"), seg(1, 3, "P"))

    def test_same_series_may_touch(self):
        assert len(line_set(seg(0, 1, "P"), seg(1, 2, "P"))) == 2

    def test_superposed_series_may_overlap(self):
        assert multiplicity_at(line_set(seg(0, 2, "P"), seg(1, 3, "Q")), F(3, 2)) == 2

    def test_sorted(self):
        z = line_set(seg(2, 3, "Q"), seg(0, 1, "P"))
        assert [s.lo for s in z] == [0, 2]


class TestProjection:
    def test_touching_merge(self):
        assert value_projection(GLUED) == [Span(F(0), F(2))]

    def test_gap_kept(self):
        assert value_projection(GAPPED) == [Span(F(0), F(1)), Span(F(2), F(3))]

    def test_doubled(self):
        assert value_projection(W) == [Span(F(0), F(1))]

    def test_empty(self):
        assert value_projection(TaggedLineSet()) == []

    def test_random_against_probing(self):
        rng = make_rng(21)
        for _ in range(300):
            z = rand_line_set(rng, "S", n=rng.randint(1, 6))
            got = [(s.lo, s.hi) for s in value_projection(z)]
            assert got == projection_by_probing(list(z.segments))

    def test_open_ends(self):
        r = cut(UNIT, F(1, 2), "left_closed")
        assert value_projection(r.right) == [Span(F(1, 2), F(1), True, False)]
        joined = TaggedLineSet(r.left.segments + r.right.segments)
        assert value_projection(joined) == [Span(F(0), F(1))]


class TestBoundary:
    def test_segment(self):
        assert set(boundary(UNIT)) == {pt(0, "P"), pt(1, "P")}

    def test_glued(self):
        assert set(boundary(GLUED)) == {pt(0, "P"), pt(1, "P"), pt(1, "Q"), pt(2, "Q")}

    def test_point_segment(self):
        assert set(boundary(line_set(seg(1, 1, "P")))) == {pt(1, "P")}

    def test_doubled_reports_both_copies(self):
        assert set(boundary(W)) == {pt(0, "W/L"), pt(0, "W/R"), pt(1, "W/L"), pt(1, "W/R")}

    def test_random_against_neighbourhood(self):
        rng = make_rng(22)
        for _ in range(300):
            z = rand_line_set(rng, "S", n=rng.randint(1, 5))
            segs = list(z.segments)
            expected = set()
            for x, tag, n in boundary_by_neighbourhood(segs):
                if n == 1:
                    expected.add(pt(x, tag.label))
                else:
                    expected |= {pt(x, tag.label + "/L"), pt(x, tag.label + "/R")}
            got = set(boundary(z))
            assert got == expected
            ends = {s.lo for s in segs} | {s.hi for s in segs}
            assert all(p.value[0] in ends for p in got)


class TestMultiplicity:
    def test_doubled(self):
        assert multiplicity_at(W, F(1, 2)) == 2

    def test_outside(self):
        assert multiplicity_at(UNIT, 2) == 0

    def test_glued_junction(self):
        assert multiplicity_at(GLUED, 1) == 2
        assert points_at(GLUED, 1) == [pt(1, "P"), pt(1, "Q")]

    def test_same_series_touching_counts_once(self):
        assert multiplicity_at(line_set(seg(0, 1, "P"), seg(1, 2, "P")), 1) == 1

    def test_random_against_segment_count(self):
        rng = make_rng(23)
        for _ in range(200):
            z = rand_line_set(rng, "S", n=rng.randint(1, 5))
            for x in probes(list(z.segments)):
                assert multiplicity_at(z, x) == segment_multiplicity(z.segments, x)


class TestCut:
    def test_right_closed(self):
        r = cut(UNIT, F(1, 2), "right_closed")
        assert r.cut_type is CutType.TYPE2
        assert r.smallest_right() == [pt("1/2", "P")]
        assert points_at(r.left, F(1, 2)) == []
        assert points_at(r.left, F(49, 100)) == [pt("49/100", "P")]

    def test_left_closed(self):
        r = cut(UNIT, F(1, 2), CutMode.LEFT_CLOSED)
        assert r.cut_type is CutType.TYPE1
        assert r.largest_left() == [pt("1/2", "P")]

    def test_disordered(self):
        r = cut(W, F(1, 2), "disordered")
        assert r.cut_type is CutType.TYPE3
        (a,), (b,) = r.largest_left(), r.smallest_right()
        assert a.value == b.value == (F(1, 2),)
        assert a != b and a.series < b.series

    def test_glued_junction_disordered(self):
        r = cut(GLUED, 1, "disordered")
        assert r.cut_type is CutType.TYPE3
        assert r.largest_left() == [pt(1, "P")] and r.smallest_right() == [pt(1, "Q")]

    def test_outside_rejected(self):
        for c in (0, 1, 2, F(-1)):
            with pytest.raises(CutError):
                cut(UNIT, c, "left_closed")

    def test_disordered_needs_two_points(self):
        with pytest.raises(CutError) as e:
            cut(UNIT, F(1, 2), "disordered")
        assert not isinstance(e.value, FourthTypeError)

    def test_gap_is_fourth_type_in_every_mode(self):
        for mode in CutMode:
            with pytest.raises(FourthTypeError) as e:
                cut(GAPPED, F(3, 2), mode)
            assert (e.value.gap.lo, e.value.gap.hi) == (1, 2)

    def test_empty(self):
        with pytest.raises(EmptySetError):
            cut(TaggedLineSet(), 0, "left_closed")

    def test_soundness_random(self):
        rng = make_rng(24)
        for _ in range(200):
            z = window(rng)
            c = interior_position(rng, z)
            modes = [m for m in CutMode if m is not CutMode.DISORDERED or multiplicity_at(z, c) >= 2]
            for mode in modes:
                r = cut(z, c, mode)
                assert not r.left.is_empty and not r.right.is_empty
                for x in probes(list(z.segments)) + [c]:
                    left, right, whole = (set(points_at(s, x)) for s in (r.left, r.right, z))
                    assert not left & right
                    assert left | right == whole
                    if left:
                        assert x <= c
                    if right:
                        assert x >= c


class TestClassify:
    def test_recomputes(self):
        r = cut(UNIT, F(1, 2), "left_closed")
        assert classify_cut(r) is CutType.TYPE1
        corrupted = CutResult(r.position, r.left, r.right, CutType.TYPE3)
        assert classify_cut(corrupted) is CutType.TYPE1

    def test_disordered(self):
        assert classify_cut(cut(W, F(1, 3), "disordered")) is CutType.TYPE3

    def test_gapped_fourth_type(self):
        left, right = partition_at(GAPPED, F(3, 2), "left_closed")
        with pytest.raises(FourthTypeError) as e:
            classify_cut(CutResult(F(3, 2), left, right, CutType.TYPE1))
        assert e.value.gap == Span(F(1), F(2), True, True)

    def test_neither_extreme_is_fourth_type(self):
        left = line_set(TaggedSegment(0, 1, series("P"), hi_open=True))
        right = line_set(TaggedSegment(1, 2, series("P"), lo_open=True))
        with pytest.raises(FourthTypeError) as e:
            classify_cut(CutResult(F(1), left, right, CutType.TYPE3))
        assert e.value.gap == Span(F(1), F(1))

    def test_random_gapped(self):
        rng = make_rng(25)
        for _ in range(100):
            z, c = gapped(rng)
            left, right = partition_at(z, c, "right_closed")
            with pytest.raises(FourthTypeError):
                classify_cut(CutResult(c, left, right, CutType.TYPE2))

    def test_type_table_random(self):
        rng = make_rng(26)
        expected = {CutMode.LEFT_CLOSED: CutType.TYPE1, CutMode.RIGHT_CLOSED: CutType.TYPE2,
                    CutMode.DISORDERED: CutType.TYPE3}
        for _ in range(200):
            z = window(rng, mode=rng.choice([None, D]))
            c = interior_position(rng, z)
            for mode, want in expected.items():
                if mode is CutMode.DISORDERED and multiplicity_at(z, c) < 2:
                    continue
                assert cut(z, c, mode).cut_type is want


def _contact_everywhere_oracle(z):
    """Cut at every probe position and ask in_contact of the sides."""
    lo, hi = z.hull()
    for c in probes(list(z.segments)):
        if not lo < c < hi:
            continue
        mode = "disordered" if segment_multiplicity(z.segments, c) >= 2 else "left_closed"
        left, right = partition_at(z, c, mode)
        if not in_contact(left, right):
            return False, c
    return True, None


class TestContinuity:
    def test_cantor_examples(self):
        assert cantor_continuous(GLUED).continuous
        v = cantor_continuous(GAPPED)
        assert not v.continuous and v.gap == Span(F(1), F(2), True, True)
        assert str(v.gap) == "(1, 2)"
        assert cantor_continuous(W).continuous

    def test_cantor_point_gap(self):
        r = cut(UNIT, F(1, 2), "left_closed")
        z = TaggedLineSet(tuple(s for s in r.left.segments if s.lo != s.hi) + r.right.segments)
        v = cantor_continuous(z)
        assert not v.continuous and v.gap == Span(F(1, 2), F(1, 2))

    def test_poincare_examples(self):
        assert poincare_continuous(W).continuous
        v = poincare_continuous(UNIT)
        assert not v.continuous and 0 < v.counterexample < 1
        v = poincare_continuous(GLUED)
        assert not v.continuous and v.counterexample != 1
        assert cut(GLUED, 1, "disordered").cut_type is CutType.TYPE3

    def test_poincare_against_cut_oracle(self):
        rng = make_rng(27)
        for _ in range(200):
            z = window(rng) if rng.random() < 0.5 else gapped(rng)[0]
            got = poincare_continuous(z)
            ok, c = _contact_everywhere_oracle(z)
            assert got.continuous == ok
            assert got.counterexample == c

    def test_empty(self):
        with pytest.raises(EmptySetError):
            cantor_continuous(TaggedLineSet())
        with pytest.raises(EmptySetError):
            poincare_continuous(TaggedLineSet())

    def test_equivalence_examples(self):
        assert verify_continuity_equivalence(W) == (True, True)
        r = verify_continuity_equivalence(line_set(seg(0, 1, "W", D), seg(2, 3, "V", D)))
        assert r == (False, False) and r.equivalent
        r = verify_continuity_equivalence(line_set(seg(0, 1, "W", D), seg(1, 2, "V", D)))
        assert r == (True, True) and r.equivalent

    def test_equivalence_scope(self):
        with pytest.raises(ScopeError):
            verify_continuity_equivalence(GLUED)

    def test_poincare_implies_cantor_random(self):
        rng = make_rng(28)
        for _ in range(300):
            z = rand_line_set(rng, "S", n=rng.randint(1, 6))
            if poincare_continuous(z).continuous:
                assert cantor_continuous(z).continuous
