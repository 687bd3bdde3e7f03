from ..models import Relation
from ..models import SimplicialComplex


def dowker_attribute_complex(r: Relation) -> SimplicialComplex:
    """
    Attribute complex Φ_R: the attribute sets shared by at least one individual.

    Its maximal simplices are the maximal rows. A void relation gives the void complex.
    """

    if r.is_void:
        return SimplicialComplex.void(r.attributes)
    return SimplicialComplex(r.attributes, r.rows)


def dowker_association_complex(r: Relation) -> SimplicialComplex:
    """
    Association complex Ψ_R: the individual sets sharing at least one attribute.

    Its maximal simplices are the maximal columns. A void relation gives the void complex.
    """

    if r.is_void:
        return SimplicialComplex.void(r.individuals)
    return SimplicialComplex(r.individuals, r.cols)
