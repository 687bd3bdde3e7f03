import logging

from .lattice import InferenceLattice
from .posets import SubsetPoset
from ..galois.poset import doubly_labeled_poset
from ..models import Relation

logger = logging.getLogger(__name__)


def galois_as_inference_lattice(r: Relation) -> InferenceLattice:
    """
    Views the Galois lattice of a relation as an inference lattice.

    P and Q are the subsets of individuals and of attributes; the proper elements are the
    pairs (σ, γ) of the doubly-labeled poset. The empty attribute set is read as the top and the empty individual
    set as the bottom, so that observations reproduce the closures of the relation.

    Parameters
    ----------
    r: Relation
        Nonvoid relation

    Returns
    -------
        InferenceLattice
    """

    poset = doubly_labeled_poset(r)
    proper = [(p.sigma, p.gamma) for p in poset]
    logger.debug("Galois inference lattice with %s proper elements", len(proper))
    return InferenceLattice(
        SubsetPoset(r.individuals),
        SubsetPoset(r.attributes),
        proper,
        top_designations=[frozenset()],
        bottom_designations=[frozenset()],
    )
