"""Product-basis bookkeeping and state operations for N qudits"""

from darkstates.hilbert.basis import (
    index_of,
    label_of,
    label_sum_sector,
    level_labels,
    level_of,
    total_label_sum,
    weight_sector,
)
from darkstates.hilbert.serialization import (
    density_from_json,
    density_to_json,
    state_from_json,
    state_to_json,
)
from darkstates.hilbert.states import (
    apply,
    apply_local_product,
    basis_state,
    collapse,
    conjugate_density,
    inner,
    permute_sites,
    state_from_terms,
    swap_sites,
    tensor,
)

__all__ = [
    "index_of",
    "label_of",
    "label_sum_sector",
    "level_labels",
    "level_of",
    "total_label_sum",
    "weight_sector",
    "density_from_json",
    "density_to_json",
    "state_from_json",
    "state_to_json",
    "apply",
    "apply_local_product",
    "basis_state",
    "collapse",
    "conjugate_density",
    "inner",
    "permute_sites",
    "state_from_terms",
    "swap_sites",
    "tensor",
]
