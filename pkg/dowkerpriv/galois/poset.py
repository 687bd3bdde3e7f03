import logging
import networkx as nx

from typing import Dict
from typing import Iterable
from typing import List
from typing import Tuple

from ..models import LabeledPair
from ..models import Relation
from ..utils.exceptions import UnknownElementError
from ..utils.exceptions import VoidRelationError
from ..utils.various import is_subset
from ..utils.various import iter_bits
from ..utils.various import popcount

logger = logging.getLogger(__name__)


def concept_masks(r: Relation) -> List[Tuple[int, int]]:
    """
    All pairs (σ, γ) fixed by both closures, as bitmasks.

    Intents are the intersections of any family of rows (the empty family giving Y),
    built by intersecting each new row with the intents found so far.

    Parameters
    ----------
    r: Relation

    Returns
    -------
    concepts: list of tuple
        (sigma bits, gamma bits), the largest sigma first
    """

    intents = {r.full_attributes}
    for row in set(r.rows):
        intents |= {intent & row for intent in intents}

    concepts = [(r.psi_bits(gamma), gamma) for gamma in intents]
    concepts.sort(key=lambda c: (-popcount(c[0]), sorted(iter_bits(c[0]))))
    return concepts


class LabeledPoset:
    """
    Poset of labeled pairs ordered by inclusion of their individual sets.

    The Hasse diagram is a networkx DiGraph with an edge from each element to each of
    the elements it covers, so edges point downward.

    Parameters
    ----------
    relation: Relation
        Relation the pairs belong to
    pairs: iterable of tuple
        (sigma bits, gamma bits) of the elements
    """

    def __init__(self, relation: Relation, pairs: Iterable[Tuple[int, int]]):
        self.relation = relation
        self._masks: Dict[LabeledPair, Tuple[int, int]] = {}
        self._by_masks: Dict[Tuple[int, int], LabeledPair] = {}

        for sigma, gamma in pairs:
            element = LabeledPair(relation.individuals_of(sigma), relation.attributes_of(gamma))
            self._masks[element] = (sigma, gamma)
            self._by_masks[(sigma, gamma)] = element

        self.elements: List[LabeledPair] = list(self._masks)

        order = nx.DiGraph()
        order.add_nodes_from(self.elements)
        for p in self.elements:
            for q in self.elements:
                if p != q and is_subset(self._masks[q][0], self._masks[p][0]):
                    order.add_edge(p, q)
        self.hasse: nx.DiGraph = nx.transitive_reduction(order)
        self.hasse.add_nodes_from(self.elements)

        logger.debug("Built poset with %s elements and %s covers", len(self.elements), self.hasse.number_of_edges())

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, item) -> bool:
        return item in self._masks

    def masks(self, p: LabeledPair) -> Tuple[int, int]:
        try:
            return self._masks[p]
        except KeyError:
            raise UnknownElementError(f"{p} is not an element of the poset") from None

    def element(self, sigma: int, gamma: int) -> LabeledPair:
        try:
            return self._by_masks[(sigma, gamma)]
        except KeyError:
            raise UnknownElementError("No element with these labels") from None

    def find(self, sigma: Iterable[str]) -> LabeledPair:
        """Element whose individual set is sigma"""
        sigma_bits = self.relation.individual_bits(sigma)
        for p, (s, _) in self._masks.items():
            if s == sigma_bits:
                return p
        raise UnknownElementError(f"No element with individuals {sorted(sigma)}")

    def leq(self, p: LabeledPair, q: LabeledPair) -> bool:
        return is_subset(self.masks(p)[0], self.masks(q)[0])

    def covers(self, p: LabeledPair) -> List[LabeledPair]:
        """Elements covered by p"""
        return sorted(self.hasse.successors(p), key=self.elements.index)

    def upper_covers(self, p: LabeledPair) -> List[LabeledPair]:
        return sorted(self.hasse.predecessors(p), key=self.elements.index)

    def maximal_elements(self) -> List[LabeledPair]:
        return [p for p in self.elements if self.hasse.in_degree(p) == 0]

    def minimal_elements(self) -> List[LabeledPair]:
        return [p for p in self.elements if self.hasse.out_degree(p) == 0]

    def topological_order(self) -> List[LabeledPair]:
        """Elements from top to bottom, ties broken by construction order"""
        index = {p: i for i, p in enumerate(self.elements)}
        return list(nx.lexicographical_topological_sort(self.hasse, key=index.__getitem__))


class GaloisLattice(LabeledPoset):
    """
    Doubly-labeled poset with its extremes, closed under meet and join.

    The top is (X, φ(X)) and the bottom (ψ(Y), Y); they are the adjoined elements
    (X, ∅) and (∅, Y) when no proper pair takes their place.
    """

    def __init__(self, relation: Relation, pairs: Iterable[Tuple[int, int]]):
        super().__init__(relation, pairs)
        self.top = self.element(relation.full_individuals, relation.phi_bits(relation.full_individuals))
        self.bottom = self.element(relation.psi_bits(relation.full_attributes), relation.full_attributes)

    @property
    def proper_elements(self) -> List[LabeledPair]:
        return [p for p in self.elements if p.sigma and p.gamma]

    def join(self, p: LabeledPair, q: LabeledPair) -> LabeledPair:
        """(ψφ(σ1 ∪ σ2), γ1 ∩ γ2)"""
        gamma = self.masks(p)[1] & self.masks(q)[1]
        return self.element(self.relation.psi_bits(gamma), gamma)

    def meet(self, p: LabeledPair, q: LabeledPair) -> LabeledPair:
        """(σ1 ∩ σ2, φψ(γ1 ∪ γ2))"""
        sigma = self.masks(p)[0] & self.masks(q)[0]
        return self.element(sigma, self.relation.phi_bits(sigma))


def _require_nonvoid(r: Relation):
    if r.is_void:
        raise VoidRelationError(f"Operation needs a nonvoid relation, got {r!r}")


def doubly_labeled_poset(r: Relation) -> LabeledPoset:
    """
    Doubly-labeled poset of the pairs (σ, γ) with σ = ψ(γ), γ = φ(σ) and both sets nonempty.

    Each element records an inference: observing any subset of γ that still singles out
    σ lets an observer infer all of γ.

    Parameters
    ----------
    r: Relation

    Returns
    -------
        LabeledPoset
    """

    _require_nonvoid(r)
    return LabeledPoset(r, [(s, g) for s, g in concept_masks(r) if s and g])


def galois_lattice(r: Relation) -> GaloisLattice:
    """Galois lattice: the doubly-labeled poset together with its top and bottom"""
    _require_nonvoid(r)
    return GaloisLattice(r, concept_masks(r))


def poset_length(p: LabeledPoset) -> int:
    """Length of the longest chain; -1 for the empty poset"""
    if len(p) == 0:
        return -1
    return nx.dag_longest_path_length(p.hasse)


def lattice_length(lattice: GaloisLattice) -> int:
    return poset_length(lattice)
