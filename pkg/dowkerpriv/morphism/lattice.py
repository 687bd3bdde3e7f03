import logging

from typing import Callable
from typing import Dict
from typing import List

from .maps import induced_simplicial_maps
from .maps import require_valid
from ..galois.poset import doubly_labeled_poset
from ..galois.poset import galois_lattice
from ..models import GeneratedLattice
from ..models import GMorphismPair
from ..models import ImageKind
from ..models import LabeledPair
from ..models import RelationMorphism
from ..relation.structure import is_tight
from ..utils.exceptions import NotSurjectiveError
from ..utils.exceptions import NotTightError

logger = logging.getLogger(__name__)


def g_morphisms(m: RelationMorphism) -> GMorphismPair:
    """
    Maps between the doubly-labeled posets of domain and codomain, induced by a morphism of relations.

    For p = (σ, γ) in the domain poset, fxg(p) has individual set ψ_Q(fy(γ)) and fyg(p) has attribute set
    φ_Q(fx(σ)). Both maps preserve the order and fyg(p) <= fxg(p) for every p.

    Parameters
    ----------
    m: RelationMorphism
        Valid morphism between nonvoid relations

    Returns
    -------
        GMorphismPair
    """

    require_valid(m)
    r, q = m.domain, m.codomain
    poset = doubly_labeled_poset(r)

    fxg, fyg = {}, {}
    for p in poset:
        sigma = q.psi_bits(q.attribute_bits(m.fy[y] for y in p.gamma))
        fxg[p] = LabeledPair(q.individuals_of(sigma), q.attributes_of(q.phi_bits(sigma)))

        gamma = q.phi_bits(q.individual_bits(m.fx[x] for x in p.sigma))
        fyg[p] = LabeledPair(q.individuals_of(q.psi_bits(gamma)), q.attributes_of(gamma))

        if not fyg[p].leq(fxg[p]):
            raise RuntimeError(f"Induced maps are not comparable at {p}: {fyg[p]} is not below {fxg[p]}")

    for upper, lower in poset.hasse.edges:
        if not (fxg[lower].leq(fxg[upper]) and fyg[lower].leq(fyg[upper])):
            raise RuntimeError(f"Induced maps do not preserve the order between {lower} and {upper}")

    return GMorphismPair(fxg=fxg, fyg=fyg)


def _close(
    seeds: Dict[LabeledPair, str],
    operands: Dict[LabeledPair, str],
    operation: Callable[[LabeledPair, LabeledPair], LabeledPair],
    symbol: str,
) -> Dict[LabeledPair, str]:
    """Closes seeds under combination with operands, level by level, keeping the first expression found"""

    found = dict(seeds)
    frontier: List[LabeledPair] = list(seeds)
    while frontier:
        next_frontier = []
        for a in frontier:
            for b, expression in operands.items():
                c = operation(a, b)
                if c not in found:
                    found[c] = f"{found[a]} {symbol} {expression}"
                    next_frontier.append(c)
        frontier = next_frontier
    return found


def lattice_generate_from_image(m: RelationMorphism, which: ImageKind = ImageKind.FXG) -> GeneratedLattice:
    """
    Closes the image of an induced poset map under the lattice operations of the codomain Galois lattice.

    When the morphism is surjective on pairs and both relations are tight, every element of the codomain poset
    is a meet of joins of fxg images, and a join of meets of fyg images. The witness of each
    element names the image elements it is built from. Plain meets (joins for fyg) of image
    elements are preferred, and operands are added one at a time, so witnesses are short but
    not necessarily shortest.

    Parameters
    ----------
    m: RelationMorphism
    which: ImageKind (optional)
        Map whose image is closed. Default = ImageKind.FXG

    Returns
    -------
        GeneratedLattice
    """

    which = ImageKind(which)
    require_valid(m)
    if not (is_tight(m.domain) and is_tight(m.codomain)):
        raise NotTightError("Lattice generation needs tight relations")
    if not induced_simplicial_maps(m).pair_surjective:
        raise NotSurjectiveError("The morphism is not surjective on pairs")

    pair = g_morphisms(m)
    table = pair.fxg if which == ImageKind.FXG else pair.fyg
    image = frozenset(table.values())
    lattice = galois_lattice(m.codomain)

    if which == ImageKind.FXG:
        inner, inner_symbol, outer, outer_symbol = lattice.join, "∨", lattice.meet, "∧"
    else:
        inner, inner_symbol, outer, outer_symbol = lattice.meet, "∧", lattice.join, "∨"

    ordered = sorted(image, key=lattice.elements.index)
    atoms = {p: str(p) for p in ordered}
    direct = _close(atoms, atoms, outer, outer_symbol)
    terms = _close(atoms, atoms, inner, inner_symbol)
    terms = {p: e if p in atoms else f"({e})" for p, e in terms.items()}
    expressions = _close({**terms, **direct}, terms, outer, outer_symbol)

    proper = lattice.proper_elements
    reached = frozenset(p for p in proper if p in expressions)
    missing = len(proper) - len(reached)
    if missing:
        logger.warning("%s elements of the codomain poset are not generated by the image", missing)

    return GeneratedLattice(
        kind=which,
        image=image,
        reached=reached,
        witnesses={p: expressions[p] for p in proper if p in expressions},
    )
