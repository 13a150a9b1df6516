"""Exact computation and verification of GIT-fans for the diagonal SO(V)
and SL(V) actions on products of projective spaces."""

from .actions import (
    SL,
    SO,
    ActionSpec,
    DegreeVector,
    WitnessPoint,
    completion_witnesses,
    degrees,
    git_fan,
    hyperplanes,
    sl_degrees,
    sl_hyperplanes,
    sl_weight_cone,
    sl_witnesses,
    so_degrees,
    so_hyperplanes,
    so_weight_cone,
    so_witnesses,
    weight_cone,
    witnesses,
)
from .arrangement import ClassHistogram, Fan, class_histogram, cut_cone, fan_is_valid, locate
from .configs import PointConfig
from .document import FanDocument
from .errors import (
    DegenerateInput,
    DimensionMismatch,
    GitFanError,
    InsufficientWitnessSet,
    InvalidSpec,
    NotInSupport,
    UnsupportedInput,
    UnsupportedPlot,
)
from .exact import GaussRat, Rat
from .geometry import (
    Cone,
    Hyperplane,
    cone_dim,
    cone_from_constraints,
    cone_from_rays,
    cones_equal,
    contains,
    faces,
    in_relative_interior,
    intersect,
    relint_point,
)
from .oracle import (
    SOGraph,
    VerificationReport,
    eval_sl_invariants,
    eval_so_invariants,
    git_cone,
    orbit_cone,
    random_configs,
    so_stabilizer_dim,
    verify_fan,
)
from .plot import SlicePlot, slice_fan

__version__ = "0.1.0"
