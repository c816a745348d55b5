"""Exact computation with nonfree measured actions of finite groups."""

__version__ = "0.1.0"

from .perm import Permutation, FiniteGroup, Subgroup, generate_group, group_from_json
from .lattice import (
    SubgroupLattice,
    enumerate_subgroups,
    normalizer,
    is_abnormal,
    normalization_tower,
    weak_distance,
    lattice_report,
)
from .measures import (
    InvariantMeasure,
    orbit_uniform,
    ergodic_decomposition,
    normalization_pushforward,
    en_measure_report,
    tnf_measure_report,
    tnf_measure_test,
    reducely_en_test,
    measure_to_json,
    measure_from_json,
)
from .actions import (
    MeasuredAction,
    adjoint_action,
    action_from_json,
    fixed_set,
    fixed_mass,
    stabilizer,
    algebra_fixed_sets,
    algebra_stabilizers,
    classify_action,
    pushforward_measure,
    iso_test,
    koopman_rank,
)
from .characters import (
    Character,
    character_table,
    character_from_action,
    measure_character,
    decompose_character,
    check_character_axioms,
)
from .groupoid import (
    GroupoidSpace,
    matrix_coefficient,
    diagonal_span_report,
    cyclic_dimension,
)
from .thoma import (
    ColoringModel,
    fixing_probability,
    mc_fixing_probability,
    coloring_stabilizer,
    young_pushforward,
    young_report,
    cycle_type_character,
)
from .registry import (
    named_group,
    group_names,
    symmetric_group,
    transitive_actions,
    adjoint_orbit_actions,
    ergodic_lattice_measures,
    ACCEPTANCE_GROUPS,
)
from .errors import (
    NonfreeError,
    InputError,
    DegreeMismatch,
    ResourceBoundError,
    MathPreconditionError,
    NonInvariantMeasure,
    NotExtremelyNonfree,
    NegativeWeight,
)
