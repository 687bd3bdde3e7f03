import itertools
import logging
import networkx as nx

from typing import Dict
from typing import Iterable
from typing import List

from .poset import doubly_labeled_poset
from .poset import galois_lattice
from .poset import poset_length
from ..complex.links import restricted_link_relation
from ..complex.operations import boundary_complex
from ..models import AttributeSet
from ..models import Relation
from ..models import SearchLimits
from ..models.limits import resolve_limits
from ..relation.mininf import min_identifying_set
from ..utils.exceptions import CapExceededError
from ..utils.exceptions import NotStableError
from ..utils.exceptions import PreconditionViolatedError
from ..utils.various import is_subset
from ..utils.various import iter_bits
from ..utils.various import popcount

logger = logging.getLogger(__name__)


def _orderings_informative(r: Relation, gamma: int) -> bool:
    indices = list(iter_bits(gamma))
    for ordering in itertools.permutations(indices):
        released = 0
        for j in ordering:
            if r.attribute_closure_bits(released) >> j & 1:
                return False
            released |= 1 << j
    return True


def _sphere_condition(r: Relation, gamma: int) -> bool:
    """
    Isotropy through the shape of the restricted link.

    For γ in Φ_R the link of σ = ψ(γ) restricted to γ must be the boundary of γ;
    for γ outside Φ_R, γ must be a minimal nonface.
    """

    sigma = r.psi_bits(gamma)
    if sigma == 0:
        return all(r.psi_bits(gamma & ~(1 << j)) != 0 for j in iter_bits(gamma))
    if sigma == r.full_individuals:
        return False

    others = 0
    for j in iter_bits(gamma):
        others |= r.cols[j]
    others &= ~sigma

    if popcount(gamma) == 1:
        return others == 0

    traces = {r.rows[i] & gamma for i in iter_bits(others)}
    return all(
        any(is_subset(gamma & ~(1 << j), trace) for trace in traces)
        for j in iter_bits(gamma)
    )


def _minimally_identifying(r: Relation, gamma: int) -> bool:
    sigma = r.psi_bits(gamma)
    return all(r.psi_bits(gamma & ~(1 << j)) != sigma for j in iter_bits(gamma))


def is_isotropic(r: Relation, gamma: Iterable[str], limits: SearchLimits = None) -> bool:
    """
    Whether every ordering of gamma is an informative release sequence.

    Up to `limits.factorial_cap` attributes all orderings are checked and compared against
    the sphere condition on the restricted link; larger sets use the sphere condition alone.

    Parameters
    ----------
    r: Relation
    gamma: iterable of str
        Nonempty attribute set
    limits: SearchLimits (optional)

    Returns
    -------
        bool
    """

    limits = resolve_limits(limits)
    gamma_bits = r.attribute_bits(gamma)
    if gamma_bits == 0:
        raise PreconditionViolatedError("Isotropy is defined for nonempty attribute sets")

    sphere = _sphere_condition(r, gamma_bits)
    if popcount(gamma_bits) <= limits.factorial_cap:
        orderings = _orderings_informative(r, gamma_bits)
        if orderings != sphere:
            raise RuntimeError(
                f"Isotropy checks disagree on {sorted(r.attributes_of(gamma_bits))}: "
                f"orderings {orderings}, sphere {sphere}"
            )
    return sphere


def is_minimally_identifying(r: Relation, gamma: Iterable[str]) -> bool:
    """Whether gamma singles out ψ(γ) while no proper subset does"""
    gamma_bits = r.attribute_bits(gamma)
    if gamma_bits == 0:
        raise PreconditionViolatedError("Minimal identification is defined for nonempty attribute sets")
    return _minimally_identifying(r, gamma_bits)


def sphere_condition_holds(r: Relation, gamma: Iterable[str]) -> bool:
    """
    Whether the link of ψ(γ) restricted to γ is the boundary of γ, built from link relations.

    Only meaningful for γ in Φ_R; used to cross-check isotropy.
    """

    gamma = frozenset(gamma)
    sigma = r.individuals_of(r.psi_bits(r.attribute_bits(gamma)))
    link = restricted_link_relation(r, sigma, gamma)

    return link.attribute_complex() == boundary_complex(r.ordered_attributes(gamma))


def isotropic_sets(
    r: Relation,
    max_size: int = None,
    limits: SearchLimits = None,
) -> Dict[int, List[AttributeSet]]:
    """
    Enumerates isotropic attribute sets by size.

    Isotropic sets are closed under taking subsets, so candidates of size k are unions of
    isotropic sets of size k - 1 whose every (k-1)-subset is isotropic.

    Parameters
    ----------
    r: Relation
    max_size: int (optional)
        Largest size enumerated. Default = None (no bound)
    limits: SearchLimits (optional)

    Returns
    -------
    sets: dict
        Size -> isotropic sets of that size, sorted by attribute order
    """

    limits = resolve_limits(limits)
    found = {}
    total = 0

    level = [1 << j for j in range(r.n_attributes) if _sphere_condition(r, 1 << j)]
    size = 1
    while level and (max_size is None or size <= max_size):
        found[size] = [r.attributes_of(m) for m in sorted(level, key=lambda m: list(iter_bits(m)))]
        total += len(level)
        if total > limits.isotropic_cap:
            raise CapExceededError(
                f"More than {limits.isotropic_cap} isotropic sets", cap=limits.isotropic_cap, best=found
            )

        members = set(level)
        candidates = set()
        for a in level:
            for b in level:
                union = a | b
                if a < b and popcount(union) == size + 1:
                    candidates.add(union)

        level = [
            c
            for c in candidates
            if all(c & ~(1 << j) in members for j in iter_bits(c)) and _sphere_condition(r, c)
        ]
        size += 1

    return found


def _stable_sigma(r: Relation, sigma: Iterable[str]) -> int:
    sigma_bits = r.individual_bits(sigma)
    if r.association_closure_bits(sigma_bits) != sigma_bits:
        raise NotStableError("The individual set is not closed under association")
    return sigma_bits


def r_fast(r: Relation, sigma: Iterable[str], limits: SearchLimits = None) -> int:
    """Fewest released attributes identifying sigma"""
    sigma = frozenset(sigma)
    _stable_sigma(r, sigma)
    return len(min_identifying_set(r, sigma, limits=limits))


def r_slow(r: Relation, sigma: Iterable[str]) -> int:
    """
    Most informatively released attributes before sigma is identified.

    Computed from the length of the doubly-labeled poset of the restricted link Q of σ,
    taken as -1 when the link is void or empty: the length plus 2 when no attribute is
    shared by everybody, plus 1 otherwise. The whole universe needs no release.

    Parameters
    ----------
    r: Relation
    sigma: iterable of str
        Nonempty individual set closed under association

    Returns
    -------
        int
    """

    sigma = frozenset(sigma)
    sigma_bits = _stable_sigma(r, sigma)
    if sigma_bits == 0:
        raise PreconditionViolatedError("The individual set must be nonempty")
    if sigma_bits == r.full_individuals:
        return 0

    gamma = r.attributes_of(r.phi_bits(sigma_bits))
    link = restricted_link_relation(r, sigma, gamma)
    if link.is_void or link.is_empty or link.relation.is_void:
        length = -1
    else:
        length = poset_length(doubly_labeled_poset(link.relation))

    shared = r.phi_bits(r.full_individuals)
    return length + 2 if shared == 0 else length + 1


def r_slow_by_chains(r: Relation, sigma: Iterable[str]) -> int:
    """Longest path in the Hasse diagram of the Galois lattice from the top down to (σ, φ(σ))"""

    sigma_bits = _stable_sigma(r, sigma)
    lattice = galois_lattice(r)
    target = lattice.element(sigma_bits, r.phi_bits(sigma_bits))
    above = nx.ancestors(lattice.hasse, target) | {target}
    return nx.dag_longest_path_length(lattice.hasse.subgraph(above))
