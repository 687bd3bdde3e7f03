import logging
import networkx as nx

from typing import Hashable
from typing import Iterable
from typing import List
from typing import Tuple
from typing import Union

from .posets import FinitePoset
from ..models import Interpretation
from ..models import LatticeExtreme
from ..models import Outcome
from ..models import ProperElement
from ..utils.exceptions import PreconditionViolatedError
from ..utils.exceptions import UnknownElementError

logger = logging.getLogger(__name__)

LatticeElement = Union[ProperElement, LatticeExtreme]


class InferenceLattice:
    """
    Bounded lattice whose proper elements pair an element of P with an element of Q.

    Without an explicit order, (p1, q1) <= (p2, q2) exactly when p1 <= p2 in P and q2 <= q1
    in Q. An explicit order (generating pairs e1 <= e2) is kept as given, so that it can be
    checked against the posets by `validate_inference_lattice`.

    Parameters
    ----------
    p_poset: FinitePoset
    q_poset: FinitePoset
    proper: iterable of tuple
        Proper elements (p, q)
    order: iterable of tuple (optional)
        Generating pairs (e1, e2) of proper elements with e1 <= e2. Default = None
    top_designations: iterable (optional)
        Elements of Q interpreted as the top. Default = ()
    bottom_designations: iterable (optional)
        Elements of P interpreted as the bottom. Default = ()
    """

    def __init__(
        self,
        p_poset: FinitePoset,
        q_poset: FinitePoset,
        proper: Iterable[ProperElement],
        order: Iterable[Tuple[ProperElement, ProperElement]] = None,
        top_designations: Iterable[Hashable] = (),
        bottom_designations: Iterable[Hashable] = (),
    ):
        self.p_poset = p_poset
        self.q_poset = q_poset
        self.proper: List[ProperElement] = [tuple(e) for e in proper]
        if len(set(self.proper)) != len(self.proper):
            raise PreconditionViolatedError("Inference lattice lists a proper element twice")

        for p, q in self.proper:
            if p not in p_poset:
                raise UnknownElementError(f"{p!r} is not an element of P")
            if q not in q_poset:
                raise UnknownElementError(f"{q!r} is not an element of Q")

        self.top_designations = frozenset(top_designations)
        self.bottom_designations = frozenset(bottom_designations)
        for q in self.top_designations:
            q_poset.leq(q, q)
        for p in self.bottom_designations:
            p_poset.leq(p, p)

        self._closure = None
        self.explicit_order = order is not None
        if order is not None:
            graph = nx.DiGraph()
            graph.add_nodes_from(self.proper)
            for a, b in order:
                a, b = tuple(a), tuple(b)
                for e in (a, b):
                    if e not in graph:
                        raise UnknownElementError(f"{e!r} is not a proper element")
                if a != b:
                    graph.add_edge(a, b)
            if not nx.is_directed_acyclic_graph(graph):
                raise PreconditionViolatedError("Lattice order pairs contain a cycle")
            self._closure = nx.transitive_closure_dag(graph)

    def __contains__(self, item) -> bool:
        return item in self.proper

    def derived_leq(self, e1: ProperElement, e2: ProperElement) -> bool:
        """Order induced by P and Q"""
        (p1, q1), (p2, q2) = e1, e2
        return self.p_poset.leq(p1, p2) and self.q_poset.leq(q2, q1)

    def leq(self, e1: LatticeElement, e2: LatticeElement) -> bool:
        if e1 == LatticeExtreme.BOTTOM or e2 == LatticeExtreme.TOP:
            return True
        if e1 == LatticeExtreme.TOP or e2 == LatticeExtreme.BOTTOM:
            return False
        if self._closure is None:
            return self.derived_leq(e1, e2)
        return e1 == e2 or self._closure.has_edge(tuple(e1), tuple(e2))

    def maximal(self, items: Iterable[ProperElement]) -> List[ProperElement]:
        items = list(items)
        return [a for a in items if not any(a != b and self.leq(a, b) for b in items)]

    def minimal(self, items: Iterable[ProperElement]) -> List[ProperElement]:
        items = list(items)
        return [a for a in items if not any(a != b and self.leq(b, a) for b in items)]

    def join(self, e1: LatticeElement, e2: LatticeElement) -> LatticeElement:
        """Least upper bound; the top when no proper element lies above both"""

        if self.leq(e1, e2):
            return e2
        if self.leq(e2, e1):
            return e1

        upper = [e for e in self.proper if self.leq(e1, e) and self.leq(e2, e)]
        if not upper:
            return LatticeExtreme.TOP
        least = [e for e in upper if all(self.leq(e, f) for f in upper)]
        if len(least) != 1:
            raise PreconditionViolatedError(f"{e1} and {e2} have no least upper bound")
        return least[0]

    def meet(self, e1: LatticeElement, e2: LatticeElement) -> LatticeElement:
        """Greatest lower bound; the bottom when no proper element lies below both"""

        if self.leq(e1, e2):
            return e1
        if self.leq(e2, e1):
            return e2

        lower = [e for e in self.proper if self.leq(e, e1) and self.leq(e, e2)]
        if not lower:
            return LatticeExtreme.BOTTOM
        greatest = [e for e in lower if all(self.leq(f, e) for f in lower)]
        if len(greatest) != 1:
            raise PreconditionViolatedError(f"{e1} and {e2} have no greatest lower bound")
        return greatest[0]


def validate_inference_lattice(l: InferenceLattice) -> Tuple[bool, List[str]]:
    """
    Checks the defining conditions of an inference lattice on every pair of proper elements.

    The order must agree with P and Q, every pair must have a join and a meet, a proper join
    must bound both P components from above and both Q components from below, and dually
    for a proper meet.

    Parameters
    ----------
    l: InferenceLattice

    Returns
    -------
    valid: bool
    violations: list of str
    """

    violations = []
    for e1 in l.proper:
        for e2 in l.proper:
            if l.explicit_order and l.leq(e1, e2) != l.derived_leq(e1, e2):
                violations.append(f"order between {e1} and {e2} disagrees with P and Q")

            try:
                join = l.join(e1, e2)
            except PreconditionViolatedError as e:
                violations.append(str(e))
            else:
                if join != LatticeExtreme.TOP:
                    p, q = join
                    if not all(l.p_poset.leq(x[0], p) and l.q_poset.leq(q, x[1]) for x in (e1, e2)):
                        violations.append(f"join of {e1} and {e2} is not a bound in P and Q")

            try:
                meet = l.meet(e1, e2)
            except PreconditionViolatedError as e:
                violations.append(str(e))
            else:
                if meet != LatticeExtreme.BOTTOM:
                    p, q = meet
                    if not all(l.p_poset.leq(p, x[0]) and l.q_poset.leq(x[1], q) for x in (e1, e2)):
                        violations.append(f"meet of {e1} and {e2} is not a bound in P and Q")

    if violations:
        logger.debug("Inference lattice has %s violations", len(violations))
    return not violations, violations


def interpret_observation_q(l: InferenceLattice, q: Hashable) -> Interpretation:
    """
    Interprets an observation in Q by the maximal proper elements whose Q component lies
    above it.

    Parameters
    ----------
    l: InferenceLattice
    q: element of Q

    Returns
    -------
    interpretation: Interpretation
        Top for designated observations, inconsistent when no proper element lies above q
    """

    if q not in l.q_poset:
        raise UnknownElementError(f"{q!r} is not an element of Q")
    if q in l.top_designations:
        return Interpretation.top()

    gamma = [e for e in l.proper if l.q_poset.leq(q, e[1])]
    if not gamma:
        return Interpretation.inconsistent()
    return Interpretation(Outcome.ELEMENTS, l.maximal(gamma))


def interpret_observation_p(l: InferenceLattice, p: Hashable) -> Interpretation:
    """
    Interprets an observation in P by the minimal proper elements whose P component lies
    above it.

    Parameters
    ----------
    l: InferenceLattice
    p: element of P

    Returns
    -------
    interpretation: Interpretation
        Inconsistent for designated observations, top when no proper element lies above p
    """

    if p not in l.p_poset:
        raise UnknownElementError(f"{p!r} is not an element of P")
    if p in l.bottom_designations:
        return Interpretation.inconsistent()

    sigma = [e for e in l.proper if l.p_poset.leq(p, e[0])]
    if not sigma:
        return Interpretation.top()
    return Interpretation(Outcome.ELEMENTS, l.minimal(sigma))
