from dataclasses import dataclass


@dataclass(frozen=True)
class SearchLimits:
    """
    Caps shared by the exact combinatorial searches.

    Parameters
    ----------
    node_cap: int
        Branch-and-bound nodes explored by the identifying set searches
    face_budget: int
        Faces a complex may have before homology refuses to enumerate them
    chain_cap: int
        Maximal chains (or release sequences) enumerated before truncation
    action_budget: int
        Actions a graph may have for maximal strategy enumeration
    factorial_cap: int
        Largest attribute set whose orderings are checked one by one in the isotropy test
    embedding_vertex_cap: int
        Largest pattern (in vertices) accepted by the embedding search
    isotropic_cap: int
        Isotropic sets enumerated before truncation
    """

    node_cap: int = 2**20
    face_budget: int = 2**22
    chain_cap: int = 100000
    action_budget: int = 24
    factorial_cap: int = 7
    embedding_vertex_cap: int = 8
    isotropic_cap: int = 100000

    def __post_init__(self):
        """Perform certain attribute quality assertions"""

        for name in self.__dataclass_fields__:
            assert getattr(self, name) >= 0, f"Limit {name} must be non-negative"


DEFAULT_LIMITS = SearchLimits()


def resolve_limits(limits: SearchLimits = None) -> SearchLimits:
    return DEFAULT_LIMITS if limits is None else limits
