"""Pile shuffle as a sorting device.

Deal a labeled deck into queue-like and stack-like piles, collect the
piles in order, repeat if needed: this package decides what that process
can sort, constructs minimal sorting shuffles (fixed types or dealer's
choice), reduces multi-round shuffles to single-round shuffles on virtual
piles, and computes exact and Monte Carlo sortability probabilities for
random decks.
"""

from .engine import (
    PileAssignment,
    PileType,
    ShuffleTableau,
    TypeSchedule,
    apply_shuffle,
    check_sort,
    reduce_to_sort,
    render_tableau,
    shift_shuffle,
)
from .kernels import BACKEND as KERNEL_BACKEND
from .permutation import (
    InvalidPermutationError,
    Permutation,
    compose,
    parse_labels,
    readings,
)
from .probability import (
    EulerianTable,
    McEstimate,
    eulerian,
    normal_approx_probability,
    sortable_probability_exact,
    sortable_probability_mc,
)
from .rounds import (
    BudgetExceeded,
    MultiRoundPlan,
    RoundTypes,
    VirtualShuffle,
    apply_multiround,
    dealer_search,
    embed_hetero_rounds,
    embed_queue_rounds,
    extract_digits,
    feasible_fixed,
    minimal_multiround_sort,
    to_single_round,
    unembed_hetero,
    virtual_type_schedule,
)
from .sorting import (
    Infeasible,
    SortMode,
    SortPlan,
    dealer_choice_minimal_sort,
    feasible,
    minimal_queue_sort,
    minimal_sort_on_types,
    minimal_stack_sort,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "EulerianTable",
    "Infeasible",
    "InvalidPermutationError",
    "KERNEL_BACKEND",
    "McEstimate",
    "MultiRoundPlan",
    "Permutation",
    "PileAssignment",
    "PileType",
    "RoundTypes",
    "ShuffleTableau",
    "SortMode",
    "SortPlan",
    "TypeSchedule",
    "VirtualShuffle",
    "apply_multiround",
    "apply_shuffle",
    "check_sort",
    "compose",
    "dealer_choice_minimal_sort",
    "dealer_search",
    "embed_hetero_rounds",
    "embed_queue_rounds",
    "eulerian",
    "extract_digits",
    "feasible",
    "feasible_fixed",
    "minimal_multiround_sort",
    "minimal_queue_sort",
    "minimal_sort_on_types",
    "minimal_stack_sort",
    "normal_approx_probability",
    "parse_labels",
    "readings",
    "reduce_to_sort",
    "render_tableau",
    "shift_shuffle",
    "sortable_probability_exact",
    "sortable_probability_mc",
    "to_single_round",
    "unembed_hetero",
    "virtual_type_schedule",
]
