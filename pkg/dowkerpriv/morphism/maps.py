import logging

from typing import Dict
from typing import FrozenSet
from typing import Iterable
from typing import List
from typing import Mapping
from typing import Tuple

from ..complex.dowker import dowker_association_complex
from ..complex.dowker import dowker_attribute_complex
from ..models import InducedMaps
from ..models import Relation
from ..models import RelationMorphism
from ..models import SimplicialComplex
from ..utils.exceptions import CapExceededError
from ..utils.exceptions import InvalidMorphismError
from ..utils.exceptions import UnknownIdError
from ..utils.exceptions import VoidRelationError

logger = logging.getLogger(__name__)


def _check_total(mapping: Mapping[str, str], source: Iterable[str], target: Iterable[str], kind: str):
    target = set(target)
    for key in source:
        if key not in mapping:
            raise UnknownIdError(kind, key)
        if mapping[key] not in target:
            raise UnknownIdError(kind, mapping[key])
    extra = set(mapping) - set(source)
    if extra:
        raise UnknownIdError(kind, sorted(extra)[0])


def validate_morphism(m: RelationMorphism) -> Tuple[bool, List[Tuple[str, str]]]:
    """
    Checks that a pair of maps sends related pairs to related pairs.

    Parameters
    ----------
    m: RelationMorphism

    Returns
    -------
    valid: bool
    violations: list of tuple
        Domain pairs (x, y) whose image (fx(x), fy(y)) is not in the codomain
    """

    _check_total(m.fx, m.domain.individuals, m.codomain.individuals, "individual")
    _check_total(m.fy, m.domain.attributes, m.codomain.attributes, "attribute")

    violations = [(x, y) for x, y in m.domain.pairs() if not m.codomain.has_pair(m.fx[x], m.fy[y])]
    if violations:
        logger.debug("Morphism violates %s of %s pairs", len(violations), m.domain.n_pairs())
    return not violations, violations


def require_valid(m: RelationMorphism):
    valid, violations = validate_morphism(m)
    if not valid:
        raise InvalidMorphismError(f"Related pairs are sent outside the codomain: {violations[:5]}")
    if m.domain.is_void or m.codomain.is_void:
        raise VoidRelationError("Morphism operations need nonvoid relations")


def _image(mapping: Mapping[str, str], ids: Iterable[str]) -> FrozenSet[str]:
    return frozenset(mapping[i] for i in ids)


def _injective_on(mapping: Mapping[str, str], ids: Iterable[str]) -> bool:
    ids = list(ids)
    return len({mapping[i] for i in ids}) == len(ids)


def _simplicial_images(
    mapping: Mapping[str, str],
    source: SimplicialComplex,
    target: SimplicialComplex,
) -> Tuple[bool, bool, Dict[FrozenSet[str], FrozenSet[str]]]:
    images = {facet: _image(mapping, facet) for facet in source.facets}
    surjective = all(any(facet <= image for image in images.values()) for facet in target.facets)
    injective = _injective_on(mapping, source.vertices)
    return surjective, injective, images


def induced_simplicial_maps(m: RelationMorphism) -> InducedMaps:
    """
    Set, pair and simplicial properties of a morphism of relations.

    A morphism induces simplicial maps Ψ_R -> Ψ_Q through fx and Φ_R -> Φ_Q through fy.
    A simplicial map is surjective when every maximal simplex of the target lies in the image
    of a maximal simplex of the source, and injective when the vertex map is injective on the
    vertices of the source.

    Morphisms are compared on the images of the domain's pairs, so the morphism is an
    epimorphism exactly when every individual with attributes in the codomain is the image of
    an individual with attributes in the domain, and likewise for attributes.

    Parameters
    ----------
    m: RelationMorphism
        Valid morphism between nonvoid relations

    Returns
    -------
        InducedMaps
    """

    require_valid(m)
    r, q = m.domain, m.codomain

    pair_images = {(m.fx[x], m.fy[y]) for x, y in r.pairs()}
    psi_surjective, psi_injective, psi_images = _simplicial_images(
        m.fx, dowker_association_complex(r), dowker_association_complex(q)
    )
    phi_surjective, phi_injective, phi_images = _simplicial_images(
        m.fy, dowker_attribute_complex(r), dowker_attribute_complex(q)
    )

    nonblank_individuals = {x for x in r.individuals if r.row(x)}
    nonblank_attributes = {y for y in r.attributes if r.col(y)}
    epimorphism = {x for x in q.individuals if q.row(x)} <= _image(m.fx, nonblank_individuals) and {
        y for y in q.attributes if q.col(y)
    } <= _image(m.fy, nonblank_attributes)

    return InducedMaps(
        fx_surjective=_image(m.fx, r.individuals) == set(q.individuals),
        fx_injective=_injective_on(m.fx, r.individuals),
        fy_surjective=_image(m.fy, r.attributes) == set(q.attributes),
        fy_injective=_injective_on(m.fy, r.attributes),
        pair_surjective=pair_images == set(q.pairs()),
        pair_injective=len(pair_images) == r.n_pairs(),
        fx_simplicial_surjective=psi_surjective,
        fx_simplicial_injective=psi_injective,
        fy_simplicial_surjective=phi_surjective,
        fy_simplicial_injective=phi_injective,
        epimorphism=epimorphism,
        psi_facet_images=psi_images,
        phi_facet_images=phi_images,
    )


def random_morphism(domain: Relation, codomain: Relation, rng, max_tries: int = 1000) -> RelationMorphism:
    """
    Draws maps uniformly at random until they form a valid morphism.

    Parameters
    ----------
    domain: Relation
    codomain: Relation
    rng: numpy.random.Generator
    max_tries: int (optional)
        Draws before giving up with a CapExceededError. Default = 1000

    Returns
    -------
        RelationMorphism
    """

    if domain.is_void or codomain.is_void:
        raise VoidRelationError("Random morphisms need nonvoid relations")

    for attempt in range(1, max_tries + 1):
        fx = {x: codomain.individuals[rng.integers(codomain.n_individuals)] for x in domain.individuals}
        fy = {y: codomain.attributes[rng.integers(codomain.n_attributes)] for y in domain.attributes}
        m = RelationMorphism(domain, codomain, fx, fy)
        if validate_morphism(m)[0]:
            logger.debug("Random morphism found after %s draws, rejection rate %.3f", attempt, (attempt - 1) / attempt)
            return m

    logger.debug("No random morphism in %s draws", max_tries)
    raise CapExceededError(f"No valid morphism found in {max_tries} draws", cap=max_tries)
