import logging

from typing import Iterable
from typing import Sequence
from typing import Tuple

from ..models import AttributeSet
from ..models import IndividualSet
from ..models import Relation
from ..utils.exceptions import UnknownIdError
from ..utils.exceptions import VoidRelationError

logger = logging.getLogger(__name__)


def build_relation(
    pairs: Iterable[Tuple[str, str]],
    individuals: Sequence[str],
    attributes: Sequence[str],
    allow_void: bool = False,
) -> Relation:
    """
    Builds a relation from its incidence pairs.

    Parameters
    ----------
    pairs: iterable of tuple
        (individual id, attribute id) pairs. Repeated pairs are harmless.
    individuals: sequence of str
        Ordered individual universe
    attributes: sequence of str
        Ordered attribute universe
    allow_void: bool (optional)
        Whether an empty universe is accepted. Default = False

    Returns
    -------
        Relation
    """

    x_index = {x: i for i, x in enumerate(individuals)}
    y_index = {y: j for j, y in enumerate(attributes)}
    rows = [0] * len(individuals)

    for x, y in pairs:
        if x not in x_index:
            raise UnknownIdError("individual", x)
        if y not in y_index:
            raise UnknownIdError("attribute", y)
        rows[x_index[x]] |= 1 << y_index[y]

    return Relation(individuals, attributes, rows, allow_void=allow_void)


def identity_relation(ids: Sequence[str]) -> Relation:
    """Diagonal relation on a single universe"""
    return Relation(ids, ids, [1 << i for i in range(len(ids))])


def transpose(r: Relation) -> Relation:
    return r.transpose()


def _require_nonvoid(r: Relation):
    if r.is_void:
        raise VoidRelationError(f"Operation needs a nonvoid relation, got {r!r}")


def phi(r: Relation, sigma: Iterable[str]) -> AttributeSet:
    """
    Attributes shared by all individuals in sigma.

    Parameters
    ----------
    r: Relation
    sigma: iterable of str
        Individual ids

    Returns
    -------
    gamma: frozenset of str
        Intersection of the rows of sigma; all attributes for the empty set
    """

    _require_nonvoid(r)
    return r.attributes_of(r.phi_bits(r.individual_bits(sigma)))


def psi(r: Relation, gamma: Iterable[str]) -> IndividualSet:
    """
    Individuals having all attributes in gamma.

    Parameters
    ----------
    r: Relation
    gamma: iterable of str
        Attribute ids

    Returns
    -------
    sigma: frozenset of str
        Intersection of the columns of gamma; all individuals for the empty set
    """

    _require_nonvoid(r)
    return r.individuals_of(r.psi_bits(r.attribute_bits(gamma)))


def attribute_closure(r: Relation, gamma: Iterable[str]) -> AttributeSet:
    """Attributes inferable from gamma, i.e. φ(ψ(gamma))"""
    _require_nonvoid(r)
    return r.attributes_of(r.attribute_closure_bits(r.attribute_bits(gamma)))


def association_closure(r: Relation, sigma: Iterable[str]) -> IndividualSet:
    """Individuals associated with sigma, i.e. ψ(φ(sigma))"""
    _require_nonvoid(r)
    return r.individuals_of(r.association_closure_bits(r.individual_bits(sigma)))
