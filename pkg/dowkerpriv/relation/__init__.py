from .closure import (
    build_relation,
    identity_relation,
    transpose,
    phi,
    psi,
    attribute_closure,
    association_closure,
)
from .privacy import (
    preserves_attribute_privacy,
    preserves_association_privacy,
    preserves_attribute_privacy_for,
    preserves_group_attribute_privacy,
    uniquely_identifiable,
    check_square_symmetry,
    max_attribute_restriction,
)
from .structure import (
    is_tight,
    is_connected,
    components,
    classify_privacy_shape,
    compose,
    incidence_graph,
    cyclic_staircase,
    spherical_boundary,
)
from .editing import (
    add_entry,
    remove_entry,
    suggest_disinformation,
    random_relation,
)
from .mininf import (
    min_identifying_set,
    mininf_decision,
    setcover_to_mininf,
)
