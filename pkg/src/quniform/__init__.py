"""Continuity spaces, quasi-uniform filter bases and the topologies they induce.

Everything is exact and finite: distances are rationals (or {0, inf}
functions), relations are boolean matrices over a small carrier, and
filters are given by finite bases.
"""

from .continuity import (
    ContinuitySpace,
    EntourageSample,
    canonical_sample,
    check_axioms,
    distinct_entourages,
    entourage,
    metric_closure,
    min_entourage,
    random_space,
    same_quasi_uniformity,
)
from .errors import CarrierMismatch, CarrierTooLarge, FilterBaseError, ParseError, ValidationError
from .induced import (
    Topology,
    alexandrov_from_preorder,
    enumerate_topologies,
    is_topology,
    left_topology,
    partition_topology,
    right_topology,
    specialization_preorder,
    topology_equal,
)
from .kopperman import (
    RealizationResult,
    realize,
    roundtrip_check,
    scaling_witness,
    symmetrized_realization_topology,
    weil_base,
    weil_entourage,
)
from .quasiuniform import (
    FilterBase,
    filter_minimum,
    from_continuity_space,
    inverse_base,
    is_quasi_uniform_base,
    same_filter,
    satisfies_S,
    symmetrize,
)
from .relations import Relation, compose, intersect, inverse, is_preorder, union
from .report import Clause, Report
from .values import (
    EREAL,
    INF,
    ExtRational,
    ProductSemigroup,
    ValueSemigroup,
    ZeroInfFn,
    check_value_axioms,
    scale,
)

__version__ = "0.1.0"
