from .dowker import dowker_attribute_complex, dowker_association_complex
from .operations import (
    contains,
    faces,
    face_masks,
    free_faces,
    link,
    deletion,
    closed_star,
    join,
    boundary_complex,
    minimal_nonfaces,
    strip_cone_apexes,
)
from .links import (
    LinkRelation,
    conditional_attribute_relation,
    conditional_association_relation,
    restricted_link_relation,
    deletion_relation,
)
from .embeddings import Embedding, enumerate_embeddings
