"""Exact decision procedures for two-sided Pompeiu sets in finite groups and in Z."""
from .algebra import (
    GroupRingElement,
    augmentation,
    char_fn,
    convolve,
    inner_product,
    star,
    tilde,
    translate_left,
    translate_right,
)
from .engine import (
    PompeiuVerdict,
    SolutionSpace,
    central_idempotent,
    classify_subsets,
    dft_oracle,
    ideal_span_rank,
    is_l2_pompeiu_group,
    is_pompeiu_set,
    normal_subgroup_witness,
    one_sided_solution_space,
    translate_sum,
)
from .groups import (
    FiniteGroup,
    Subset,
    cyclic,
    dihedral,
    direct_product,
    fleet,
    from_cayley_table,
    from_permutation_generators,
    make_group,
    quaternion8,
    subset,
    symmetric,
)
from .lattice import LaurentPoly, energy_profile, is_pompeiu_subset_Z, laurent_multiply, recurrence_witness
from .scalar import Scalar
from .structure import center_dimension, class_sums, conjugacy_classes, delta_subgroup, is_central, normal_subgroups

__version__ = "0.1.0"
