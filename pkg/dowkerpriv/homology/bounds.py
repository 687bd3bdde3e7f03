import logging

from math import factorial

from .chain_complex import reduced_betti
from ..complex.dowker import dowker_attribute_complex
from ..galois.chains import count_maximal_chains
from ..galois.poset import doubly_labeled_poset
from ..models import ChainBoundEntry
from ..models import ChainBoundReport
from ..models import Relation
from ..models import SearchLimits

logger = logging.getLogger(__name__)


def verify_chain_lower_bound(r: Relation, limits: SearchLimits = None) -> ChainBoundReport:
    """
    Checks that holes in a relation force many long maximal chains.

    The order complex of the doubly-labeled poset has the homology of Φ_R. For every dimension k >= 0 with
    β_k != 0, the poset must have at least (k + 2)! maximal chains of length at least k.

    Parameters
    ----------
    r: Relation
        Nonvoid relation
    limits: SearchLimits (optional)
        Bounds the face enumeration of Φ_R

    Returns
    -------
    report: ChainBoundReport
        One entry (k, bound, actual) per nonzero Betti number; no entries for acyclic complexes
    """

    betti = reduced_betti(dowker_attribute_complex(r), limits=limits)
    poset = doubly_labeled_poset(r)

    entries = []
    for k in betti.nonzero_dimensions():
        entry = ChainBoundEntry(k=k, bound=factorial(k + 2), actual=count_maximal_chains(poset, k))
        if not entry.holds:
            logger.error(
                "Chain lower bound violated in dimension %s: %s chains, expected at least %s",
                k,
                entry.actual,
                entry.bound,
            )
        entries.append(entry)

    return ChainBoundReport(betti=betti, entries=tuple(entries))
