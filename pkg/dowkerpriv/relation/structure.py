import logging
import networkx as nx
import numpy as np

from networkx.algorithms.isomorphism import GraphMatcher
from networkx.algorithms.isomorphism import categorical_node_match
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components
from typing import List
from typing import Tuple

from ..models import PrivacyShape
from ..models import Relation
from ..utils.exceptions import NotTightError
from ..utils.exceptions import UniverseMismatchError
from ..utils.exceptions import VoidRelationError
from ..utils.various import bits_from_indices
from ..utils.various import popcount

logger = logging.getLogger(__name__)


def _require_nonvoid(r: Relation):
    if r.is_void:
        raise VoidRelationError(f"Operation needs a nonvoid relation, got {r!r}")


def is_tight(r: Relation) -> bool:
    """Whether the relation has no blank rows and no blank columns"""
    _require_nonvoid(r)
    return all(row != 0 for row in r.rows) and all(col != 0 for col in r.cols)


def _component_labels(r: Relation) -> Tuple[int, np.ndarray]:
    biadjacency = r.matrix.astype(np.int8)
    adjacency = np.block(
        [
            [np.zeros((r.n_individuals, r.n_individuals), dtype=np.int8), biadjacency],
            [biadjacency.T, np.zeros((r.n_attributes, r.n_attributes), dtype=np.int8)],
        ]
    )
    return connected_components(csr_matrix(adjacency), directed=False)


def is_connected(r: Relation) -> bool:
    """Whether the bipartite incidence graph of the relation is connected"""
    _require_nonvoid(r)
    n_components, _ = _component_labels(r)
    return n_components == 1


def components(r: Relation) -> List[Relation]:
    """
    Splits a tight relation into its connected components.

    Parameters
    ----------
    r: Relation
        Tight relation

    Returns
    -------
    components: list of Relation
        Tight, connected subrelations partitioning the individuals and attributes,
        ordered by their first individual
    """

    if not is_tight(r):
        raise NotTightError("Components are only defined for tight relations")

    n_components, labels = _component_labels(r)
    x_labels = labels[: r.n_individuals]
    y_labels = labels[r.n_individuals :]

    order = []
    for label in x_labels:
        if label not in order:
            order.append(label)

    result = []
    for label in order:
        individuals = bits_from_indices(np.flatnonzero(x_labels == label).tolist())
        attributes = bits_from_indices(np.flatnonzero(y_labels == label).tolist())
        result.append(r.restrict(individuals, attributes))

    logger.debug("Relation %r has %s connected components", r, n_components)
    return result


def incidence_graph(r: Relation) -> nx.Graph:
    """Bipartite graph with one node per individual and attribute, tagged by `kind`"""

    graph = nx.Graph()
    graph.add_nodes_from((("x", x) for x in r.individuals), kind="individual")
    graph.add_nodes_from((("y", y) for y in r.attributes), kind="attribute")
    graph.add_edges_from((("x", x), ("y", y)) for x, y in r.pairs())
    return graph


def cyclic_staircase(n: int) -> Relation:
    """Square relation whose row i holds attributes i and i+1, wrapping around"""
    ids = [str(i + 1) for i in range(n)]
    rows = [(1 << i) | (1 << ((i + 1) % n)) for i in range(n)]
    return Relation(ids, [f"y{i}" for i in ids], rows)


def spherical_boundary(n: int) -> Relation:
    """Square relation holding every pair except the diagonal"""
    ids = [str(i + 1) for i in range(n)]
    full = (1 << n) - 1
    return Relation(ids, [f"y{i}" for i in ids], [full & ~(1 << i) for i in range(n)])


def _isomorphic(r: Relation, template: Relation) -> bool:
    matcher = GraphMatcher(
        incidence_graph(r),
        incidence_graph(template),
        node_match=categorical_node_match("kind", None),
    )
    return matcher.is_isomorphic()


def _classify_component(r: Relation) -> PrivacyShape:
    n = r.n_individuals
    if n == 1 and r.n_attributes == 1:
        return PrivacyShape.SINGLETON
    if n != r.n_attributes:
        return PrivacyShape.OTHER

    degrees = {popcount(row) for row in r.rows} | {popcount(col) for col in r.cols}
    if degrees == {n - 1} and _isomorphic(r, spherical_boundary(n)):
        return PrivacyShape.SPHERICAL_BOUNDARY
    if n >= 3 and degrees == {2} and _isomorphic(r, cyclic_staircase(n)):
        return PrivacyShape.CYCLIC_STAIRCASE
    return PrivacyShape.OTHER


def classify_privacy_shape(r: Relation) -> List[Tuple[Relation, PrivacyShape]]:
    """
    Classifies each connected component of a tight relation.

    Components are matched, up to row and column permutations, against the shapes that
    combine privacy with identifiability: a single nonblank entry, a cyclic staircase or
    the complement of a permutation (a spherical boundary). The 3x3 case, where the last
    two coincide, is reported as a spherical boundary.

    Parameters
    ----------
    r: Relation
        Tight relation

    Returns
    -------
    shapes: list of tuple
        (component, PrivacyShape) for each connected component
    """

    return [(c, _classify_component(c)) for c in components(r)]


def compose(c: Relation, s: Relation) -> Relation:
    """
    Boolean matrix product of two relations.

    Parameters
    ----------
    c: Relation
        Relation on X x Y
    s: Relation
        Relation on Y x Z, with the same ordered Y

    Returns
    -------
        Relation on X x Z containing (x, z) iff some y has (x, y) in c and (y, z) in s
    """

    if c.attributes != s.individuals:
        raise UniverseMismatchError("Attributes of the first relation must be the individuals of the second")

    product = c.matrix.astype(np.int64) @ s.matrix.astype(np.int64)
    return Relation.from_matrix(c.individuals, s.attributes, product > 0, allow_void=True)
