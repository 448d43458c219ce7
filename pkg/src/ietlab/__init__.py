"""Exact computation with interval exchange transformations over real number fields."""

from .dynamics import (
    ComponentReport,
    GrowthTrace,
    bp_growth,
    decompose,
    orbit,
    periodic_points_up_to,
    pl_normalize,
    rate_estimate,
)
from .gn import GnElem, gn_compose, gn_embed, gn_order, gn_periodic_point_free, gn_recognize
from .groups import (
    GeneratorSet,
    Word,
    ball_growth,
    builtin,
    commutator,
    commute_check,
    ell_morphism,
    free_up_to,
    local_permutation,
    relation_check,
    word_evaluate,
    wreath_embedding,
)
from .iet import (
    Iet,
    IetError,
    break_points,
    compose,
    evaluate,
    fixed_set,
    inverse,
    power,
    product_of_restricted_rotations,
    restricted_rotation,
    rotation,
    translation_set,
)
from .intervals import IntervalSet
from .numfield import (
    AlgebraicNumber,
    FieldError,
    NumberField,
    floor_frac,
    parse_number,
    preset,
    q_linear_rank,
)
from .plmap import PLMap
from .saf import SafValue, saf_distinguish, saf_invariant

__version__ = "0.1.0"
