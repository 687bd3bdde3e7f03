from .poset import (
    LabeledPoset,
    GaloisLattice,
    doubly_labeled_poset,
    galois_lattice,
    lattice_length,
    poset_length,
)
from .chains import maximal_chains, count_maximal_chains
from .release import (
    is_informative,
    iars_from_chain,
    chain_from_iars,
    longest_iars,
    release_profile,
)
from .isotropy import (
    is_isotropic,
    is_minimally_identifying,
    sphere_condition_holds,
    isotropic_sets,
    r_fast,
    r_slow,
    r_slow_by_chains,
)
