"""Exact tagged point sets: superposition, contact, cuts and continuity.

Points carry a value (their position, exact rationals) and a series tag
(their belonging).  Equal-value points of different series coexist, which
lets two disjoint closed sets touch at distance zero.
"""

from .core import (FiniteTaggedSet, Relation, SeriesTag, TaggedPoint, is_disordered,
                   is_ordered_bijective, make_point, make_value, relate, series, series_classes,
                   series_of, superpose, value_classes, value_of)
from .errors import (CutError, DimensionMismatchError, DocumentError, EmptySetError, FourthTypeError,
                     OverlapError, PreconditionError, ScopeError, TaggedSetError, TrajectoryError)
from .line import (CutMode, CutResult, CutType, Mode, Span, TaggedLineSet, TaggedSegment, boundary,
                   cantor_continuous, classify_cut, cut, line_set, multiplicity_at, partition_at,
                   poincare_continuous, points_at, value_projection, verify_continuity_equivalence)
from .metric import (SquaredDistance, check_positive_distance, in_contact, point_distance_sq,
                     set_distance_sq, value_sources_intersect, verify_contact_equivalence)
from .trajectory import (Phase, Trajectory, apex_query, build_trajectory, describe_motion, series_cut,
                         value_fiber)

__version__ = "0.1.0"
