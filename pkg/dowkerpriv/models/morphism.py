from dataclasses import dataclass
from dataclasses import field
from enum import Enum
from typing import Dict
from typing import FrozenSet
from typing import Mapping

from .lattice import LabeledPair
from .relation import Relation


class ImageKind(str, Enum):
    """
    Induced G-morphism whose image generates the codomain lattice:

    - "fxg": the map built from the attribute side, generated by meets of joins.
    - "fyg": the map built from the individual side, generated by joins of meets.
    """

    FXG = "fxg"
    FYG = "fyg"

    @classmethod
    def from_str(cls, value):
        for k, v in cls.__members__.items():
            if v == value:
                return cls[k]

        raise ValueError(f"Invalid image kind: {value}")


@dataclass(frozen=True, eq=False)
class RelationMorphism:
    """
    Pair of maps between the universes of two relations.

    Two morphisms are equal when they agree on the images of the domain's pairs.

    Parameters
    ----------
    domain: Relation
    codomain: Relation
    fx: mapping
        Individual map, domain individual id -> codomain individual id
    fy: mapping
        Attribute map, domain attribute id -> codomain attribute id
    """

    domain: Relation
    codomain: Relation
    fx: Mapping[str, str]
    fy: Mapping[str, str]

    def __post_init__(self):
        object.__setattr__(self, "fx", dict(self.fx))
        object.__setattr__(self, "fy", dict(self.fy))

    def __eq__(self, other) -> bool:
        if not isinstance(other, RelationMorphism):
            return NotImplemented
        if self.domain != other.domain or self.codomain != other.codomain:
            return False
        return all(
            (self.fx.get(x), self.fy.get(y)) == (other.fx.get(x), other.fy.get(y))
            for x, y in self.domain.pairs()
        )

    def __hash__(self) -> int:
        return hash((self.domain, self.codomain))

    @classmethod
    def identity(cls, relation: Relation) -> "RelationMorphism":
        return cls(
            domain=relation,
            codomain=relation,
            fx={x: x for x in relation.individuals},
            fy={y: y for y in relation.attributes},
        )


@dataclass(frozen=True)
class InducedMaps:
    """
    Surjectivity and injectivity of a morphism at the set, pair and simplicial levels.

    The simplicial maps are Ψ_R -> Ψ_Q (induced by fx) and Φ_R -> Φ_Q (induced by fy);
    their images are reported on maximal simplices.
    """

    fx_surjective: bool
    fx_injective: bool
    fy_surjective: bool
    fy_injective: bool
    pair_surjective: bool
    pair_injective: bool
    fx_simplicial_surjective: bool
    fx_simplicial_injective: bool
    fy_simplicial_surjective: bool
    fy_simplicial_injective: bool
    epimorphism: bool
    psi_facet_images: Dict[FrozenSet[str], FrozenSet[str]] = field(default_factory=dict)
    phi_facet_images: Dict[FrozenSet[str], FrozenSet[str]] = field(default_factory=dict)

    @property
    def is_monomorphism(self) -> bool:
        return self.pair_injective

    @property
    def is_epimorphism(self) -> bool:
        return self.epimorphism


@dataclass(frozen=True)
class GMorphismPair:

    fxg: Dict[LabeledPair, LabeledPair]
    fyg: Dict[LabeledPair, LabeledPair]


@dataclass(frozen=True)
class GeneratedLattice:
    """
    Closure of a G-morphism image under the codomain lattice operations.

    Parameters
    ----------
    kind: ImageKind
    image: frozenset of LabeledPair
        Image of the G-morphism
    reached: frozenset of LabeledPair
        Proper elements of the codomain reached by closing the image under meets and joins
    witnesses: dict
        For every proper codomain element, an expression over image elements evaluating to it
    """

    kind: ImageKind
    image: FrozenSet[LabeledPair]
    reached: FrozenSet[LabeledPair]
    witnesses: Dict[LabeledPair, str]
