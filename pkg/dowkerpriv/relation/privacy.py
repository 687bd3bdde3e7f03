import logging

from typing import Iterable

from ..models import Relation
from ..models import SquareSymmetryReport
from ..utils.exceptions import NotStableError
from ..utils.exceptions import PreconditionViolatedError
from ..utils.exceptions import VoidRelationError
from ..utils.various import iter_bits
from ..utils.various import popcount

logger = logging.getLogger(__name__)


def _require_nonvoid(r: Relation):
    if r.is_void:
        raise VoidRelationError(f"Operation needs a nonvoid relation, got {r!r}")


def _punctured_sets_closed(r: Relation, gamma: int) -> bool:
    # Closed sets are closed under intersection, so every proper subset of a closed
    # gamma is closed as soon as each gamma minus one attribute is
    for j in iter_bits(gamma):
        punctured = gamma & ~(1 << j)
        if r.attribute_closure_bits(punctured) != punctured:
            return False
    return True


def preserves_attribute_privacy_for(r: Relation, x: str) -> bool:
    """
    Whether no attribute of individual x can be inferred from the others it reveals.

    Parameters
    ----------
    r: Relation
    x: str
        Individual id

    Returns
    -------
        True if φ∘ψ fixes every subset of the row of x
    """

    _require_nonvoid(r)
    return _punctured_sets_closed(r, r.rows[r.individual_index(x)])


def preserves_attribute_privacy(r: Relation) -> bool:
    """
    Whether attribute closure is the identity on the attribute complex and the empty set.

    Parameters
    ----------
    r: Relation

    Returns
    -------
        bool
    """

    _require_nonvoid(r)
    if r.phi_bits(r.full_individuals) != 0:
        return False
    return all(_punctured_sets_closed(r, row) for row in set(r.rows))


def preserves_association_privacy(r: Relation) -> bool:
    """Whether association closure is the identity on the association complex and the empty set"""
    _require_nonvoid(r)
    return preserves_attribute_privacy(r.transpose())


def preserves_group_attribute_privacy(r: Relation, sigma: Iterable[str]) -> bool:
    """
    Whether a group of individuals keeps privacy over the attributes it shares.

    Parameters
    ----------
    r: Relation
    sigma: iterable of str
        Individual ids forming, with its shared attributes, an element of the doubly-labeled poset

    Returns
    -------
        True if φ∘ψ fixes every subset of γ = φ(σ)
    """

    _require_nonvoid(r)
    sigma_bits = r.individual_bits(sigma)
    gamma_bits = r.phi_bits(sigma_bits)

    if r.psi_bits(gamma_bits) != sigma_bits:
        raise NotStableError("The individual set is not closed under association")
    if sigma_bits == 0 or gamma_bits == 0:
        raise PreconditionViolatedError("The individual set must share at least one attribute")
    if sigma_bits == r.full_individuals:
        raise PreconditionViolatedError("The individual set cannot be the whole universe")

    return _punctured_sets_closed(r, gamma_bits)


def uniquely_identifiable(r: Relation, x: str) -> bool:
    """Whether the full row of x singles it out, i.e. ψ(Y_x) = {x}"""
    i = r.individual_index(x)
    return r.psi_bits(r.rows[i]) == 1 << i


def check_square_symmetry(r: Relation) -> SquareSymmetryReport:
    """
    Checks the consequences of attribute privacy on a square relation.

    A square relation without blank columns that preserves attribute privacy has no
    blank rows, identifies each individual uniquely and preserves association privacy.
    A report listing counterexamples therefore points at a defect.

    Parameters
    ----------
    r: Relation
        Square relation with more than one individual and no blank columns

    Returns
    -------
        SquareSymmetryReport
    """

    if r.n_individuals != r.n_attributes or r.n_individuals <= 1:
        raise PreconditionViolatedError(
            f"Relation must be square with more than one individual, got {r.n_individuals}x{r.n_attributes}"
        )
    if any(col == 0 for col in r.cols):
        raise PreconditionViolatedError("Relation has blank columns")

    attribute_privacy = preserves_attribute_privacy(r)
    no_blank_rows = all(row != 0 for row in r.rows)
    all_identifiable = all(uniquely_identifiable(r, x) for x in r.individuals)
    association_privacy = preserves_association_privacy(r)

    counterexamples = []
    if attribute_privacy:
        if not no_blank_rows:
            blank = [x for x, row in zip(r.individuals, r.rows) if row == 0]
            counterexamples.append(f"blank rows: {blank}")
        if not all_identifiable:
            hidden = [x for x in r.individuals if not uniquely_identifiable(r, x)]
            counterexamples.append(f"not uniquely identifiable: {hidden}")
        if not association_privacy:
            counterexamples.append("association privacy fails")

    if counterexamples:
        logger.error("Square relation %r violates privacy symmetry: %s", r, counterexamples)

    return SquareSymmetryReport(
        attribute_privacy=attribute_privacy,
        no_blank_rows=no_blank_rows,
        all_identifiable=all_identifiable,
        association_privacy=association_privacy,
        counterexamples=tuple(counterexamples),
    )


def max_attribute_restriction(r: Relation) -> Relation:
    """
    Restricts a relation to its individuals with the most attributes.

    Parameters
    ----------
    r: Relation

    Returns
    -------
        Relation on the individuals with maximal row size, over the union of their rows
    """

    _require_nonvoid(r)
    largest = max(popcount(row) for row in r.rows)

    individuals = 0
    attributes = 0
    for i, row in enumerate(r.rows):
        if popcount(row) == largest:
            individuals |= 1 << i
            attributes |= row

    return r.restrict(individuals, attributes)
