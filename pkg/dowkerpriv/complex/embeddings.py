import logging
import networkx as nx

from dataclasses import dataclass
from networkx.algorithms.isomorphism import GraphMatcher
from networkx.algorithms.isomorphism import categorical_node_match
from typing import Dict
from typing import List

from ..models import SearchLimits
from ..models import Simplex
from ..models import SimplicialComplex
from ..models.limits import resolve_limits
from ..utils.exceptions import PreconditionViolatedError
from ..utils.exceptions import TooLargeError
from ..utils.various import iter_bits

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Embedding:
    """
    Injective placement of a pattern complex inside a host complex.

    Parameters
    ----------
    vertex_map: dict
        Pattern vertex id -> host vertex id
    facet_map: dict
        Pattern maximal simplex -> host maximal simplex containing the images of its vertices
    """

    vertex_map: Dict[str, str]
    facet_map: Dict[Simplex, Simplex]

    @property
    def vertex_image(self) -> frozenset:
        return frozenset(self.vertex_map.values())


def _facet_incidence_graph(s: SimplicialComplex) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from((("v", v) for v in s.universe), kind="vertex")
    for k, f in enumerate(s.facet_masks):
        if f == 0:
            continue
        graph.add_node(("f", k), kind="facet")
        graph.add_edges_from((("v", s.universe[i]), ("f", k)) for i in iter_bits(f))
    return graph


def enumerate_embeddings(
    pattern: SimplicialComplex,
    host: SimplicialComplex,
    limits: SearchLimits = None,
) -> List[Embedding]:
    """
    Finds every embedding of a small pattern complex into a host complex.

    Vertices go injectively to vertices and maximal simplices injectively to distinct
    maximal simplices, so that incidence is preserved. The search is a subgraph
    monomorphism of the vertex-facet incidence graphs. Placements that differ only in the
    choice of host facets are reported once per vertex map, with the smallest facet map.
    Automorphisms of the pattern are not factored out.

    Parameters
    ----------
    pattern: SimplicialComplex
        Nonvoid complex with at most `limits.embedding_vertex_cap` vertices in its universe
    host: SimplicialComplex
        Nonvoid complex
    limits: SearchLimits (optional)

    Returns
    -------
    embeddings: list of Embedding
        Sorted by vertex map
    """

    if pattern.is_void or host.is_void:
        raise PreconditionViolatedError("Embeddings need nonvoid complexes")

    limits = resolve_limits(limits)
    if len(pattern.universe) > limits.embedding_vertex_cap:
        raise TooLargeError(
            f"Pattern has {len(pattern.universe)} vertices, more than {limits.embedding_vertex_cap}",
            size=len(pattern.universe),
            limit=limits.embedding_vertex_cap,
        )

    matcher = GraphMatcher(
        _facet_incidence_graph(host),
        _facet_incidence_graph(pattern),
        node_match=categorical_node_match("kind", None),
    )

    # One embedding per vertex map; the facet map is the first in sorted order
    by_vertex_map = {}
    n_matches = 0
    for mapping in matcher.subgraph_monomorphisms_iter():
        n_matches += 1
        inverse = {p: h for h, p in mapping.items()}
        vertex_map = {v: inverse[("v", v)][1] for v in pattern.universe}
        facet_map = {
            pattern.ids_of(pattern.facet_masks[k]): host.ids_of(host.facet_masks[inverse[("f", k)][1]])
            for k, f in enumerate(pattern.facet_masks)
            if f != 0
        }
        key = tuple(sorted(vertex_map.items()))
        facet_key = sorted((sorted(p), sorted(h)) for p, h in facet_map.items())
        current = by_vertex_map.get(key)
        if current is None or facet_key < current[0]:
            by_vertex_map[key] = (facet_key, Embedding(vertex_map=vertex_map, facet_map=facet_map))

    embeddings = [by_vertex_map[key][1] for key in sorted(by_vertex_map)]
    logger.debug("Found %s embeddings from %s incidence matches", len(embeddings), n_matches)
    return embeddings
