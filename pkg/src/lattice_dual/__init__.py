"""Dualization of monotone Boolean functions on lattices given by formal
contexts: minimal-hypothesis enumeration, the frequency-based duality test
on distributive lattices, and the constructive reductions between them."""

from .context import (
    Concept,
    FormalContext,
    contranominal_scale,
    parse_cxt,
    reduce_context,
    write_cxt,
)
from .duality import (
    DualityInstance,
    DualityVerdict,
    brute_force_dual,
    check_star,
    decompose,
    dualize_brute,
    easy_test,
    test_duality,
    test_duality_stats,
)
from .hypotheses import (
    TrainingContext,
    classify,
    decide_amh,
    enumerate_hypotheses,
    find_new_min_h,
    is_hypothesis,
    minimal_hypotheses,
    training_from_json,
    training_to_json,
)
from .implications import (
    Implication,
    contraordinal_context,
    dci_to_mibr,
    distributive_min_base,
    imp_closure,
    is_base,
    is_valid,
)
from .poset import (
    Poset,
    freq,
    freq_complement,
    is_antichain,
    maximal_members,
    minimal_members,
    poset_from_json,
    poset_from_pairs,
    poset_to_json,
)
from .reductions import (
    Cnf,
    ExplicitLattice,
    assignment_from_hypothesis,
    hypothesis_from_assignment,
    irreducibles,
    literal_attributes,
    minvals_to_training,
    parse_dimacs,
    product_context,
    sat_to_amh,
    training_to_monotone,
    write_dimacs,
)
from .util import GuardExceeded

__all__ = [
    "Concept",
    "Cnf",
    "DualityInstance",
    "DualityVerdict",
    "ExplicitLattice",
    "FormalContext",
    "GuardExceeded",
    "Implication",
    "Poset",
    "TrainingContext",
    "assignment_from_hypothesis",
    "brute_force_dual",
    "check_star",
    "classify",
    "contranominal_scale",
    "contraordinal_context",
    "dci_to_mibr",
    "decide_amh",
    "decompose",
    "distributive_min_base",
    "dualize_brute",
    "easy_test",
    "enumerate_hypotheses",
    "find_new_min_h",
    "freq",
    "freq_complement",
    "hypothesis_from_assignment",
    "imp_closure",
    "irreducibles",
    "literal_attributes",
    "is_antichain",
    "is_base",
    "is_hypothesis",
    "is_valid",
    "maximal_members",
    "minimal_hypotheses",
    "minimal_members",
    "minvals_to_training",
    "parse_cxt",
    "parse_dimacs",
    "poset_from_json",
    "poset_from_pairs",
    "poset_to_json",
    "product_context",
    "reduce_context",
    "sat_to_amh",
    "test_duality",
    "test_duality_stats",
    "training_from_json",
    "training_to_json",
    "training_to_monotone",
    "write_cxt",
    "write_dimacs",
]
