from .posets import (
    FinitePoset,
    SubsetPoset,
    PrefixFreeSet,
    prefix_order_poset,
    prefix_free_poset,
)
from .lattice import (
    InferenceLattice,
    validate_inference_lattice,
    interpret_observation_q,
    interpret_observation_p,
)
from .sequences import sequence_lattice, merged_sequence_lattice
from .bridge import galois_as_inference_lattice
