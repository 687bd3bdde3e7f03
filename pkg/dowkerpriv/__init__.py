from .complex import (
    dowker_attribute_complex,
    dowker_association_complex,
    free_faces,
    link,
    deletion,
    join,
    boundary_complex,
    strip_cone_apexes,
    conditional_attribute_relation,
    conditional_association_relation,
    restricted_link_relation,
    enumerate_embeddings,
)
from .galois import (
    doubly_labeled_poset,
    galois_lattice,
    maximal_chains,
    count_maximal_chains,
    is_informative,
    longest_iars,
    release_profile,
    is_isotropic,
    isotropic_sets,
    r_fast,
    r_slow,
)
from .homology import (
    reduced_betti,
    kbit_relation,
    verify_chain_lower_bound,
    link_survey,
    scatter_measures,
)
from .inference import (
    InferenceLattice,
    galois_as_inference_lattice,
    interpret_observation_p,
    interpret_observation_q,
    sequence_lattice,
    merged_sequence_lattice,
)
from .models import (
    Action,
    ActionKind,
    LabeledPair,
    Relation,
    RelationMorphism,
    SearchLimits,
    SimplicialComplex,
    UncertainGraph,
)
from .morphism import (
    validate_morphism,
    induced_simplicial_maps,
    g_morphisms,
    lattice_generate_from_image,
)
from .relation import (
    build_relation,
    phi,
    psi,
    attribute_closure,
    association_closure,
    preserves_attribute_privacy,
    preserves_association_privacy,
    uniquely_identifiable,
    classify_privacy_shape,
    suggest_disinformation,
    min_identifying_set,
)
from .strategy import (
    maximal_strategies,
    strategy_complex,
    action_relation,
    fully_controllable,
    strategy_iars,
    goal_delay_sequence,
    hamiltonian_iars,
)
from .utils.interfaces.relations import parse_relation, serialize_relation, read_relation
