import logging

from dataclasses import dataclass
from typing import Iterable
from typing import Optional
from typing import Tuple

from .dowker import dowker_association_complex
from .dowker import dowker_attribute_complex
from ..models import LinkOverride
from ..models import Relation
from ..models import SimplicialComplex
from ..utils.exceptions import PreconditionViolatedError
from ..utils.exceptions import VoidRelationError
from ..utils.various import is_subset
from ..utils.various import iter_bits

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LinkRelation:
    """
    Subrelation modeling a link or deletion of a Dowker complex.

    Parameters
    ----------
    relation: Relation
        The modeling relation Q (possibly void)
    construction: str
        Name of the construction that produced Q
    arguments: tuple of frozenset
        Arguments of the construction, as id sets
    override: LinkOverride (optional)
        Forces both Dowker complexes of Q to be empty or void. Default = None
    """

    relation: Relation
    construction: str
    arguments: Tuple[frozenset, ...]
    override: Optional[LinkOverride] = None

    def attribute_complex(self) -> SimplicialComplex:
        if self.override == LinkOverride.VOID:
            return SimplicialComplex.void(self.relation.attributes)
        if self.override == LinkOverride.EMPTY:
            return SimplicialComplex.empty(self.relation.attributes)
        return dowker_attribute_complex(self.relation)

    def association_complex(self) -> SimplicialComplex:
        if self.override == LinkOverride.VOID:
            return SimplicialComplex.void(self.relation.individuals)
        if self.override == LinkOverride.EMPTY:
            return SimplicialComplex.empty(self.relation.individuals)
        return dowker_association_complex(self.relation)

    @property
    def is_void(self) -> bool:
        return self.override == LinkOverride.VOID

    @property
    def is_empty(self) -> bool:
        return self.override == LinkOverride.EMPTY


def _require_nonvoid(r: Relation):
    if r.is_void:
        raise VoidRelationError(f"Operation needs a nonvoid relation, got {r!r}")


def _attribute_link(r: Relation, gamma_bits: int, keep_blank_columns: bool):
    """Returns (Q, override) for the link of gamma in Φ_R, over the universes of r"""

    sigma_bits = r.psi_bits(gamma_bits)
    if sigma_bits == 0:
        return r.restrict(0, 0), LinkOverride.VOID

    if keep_blank_columns:
        kept = r.full_attributes & ~gamma_bits
    else:
        kept = 0
        for i in iter_bits(sigma_bits):
            kept |= r.rows[i]
        kept &= ~gamma_bits

    q = r.restrict(sigma_bits, kept)
    if kept == 0:
        return q, LinkOverride.EMPTY
    return q, None


def conditional_attribute_relation(
    r: Relation,
    gamma: Iterable[str],
    keep_blank_columns: bool = False,
) -> LinkRelation:
    """
    Relation Q modeling the link of gamma in the attribute complex.

    Q restricts R to the individuals σ = ψ(γ) and to the attributes they hold outside γ,
    so that Φ_Q = Lk(Φ_R, γ): what an observer can still learn about the individuals
    once it knows they have γ.

    Parameters
    ----------
    r: Relation
    gamma: iterable of str
        Attribute ids
    keep_blank_columns: bool (optional)
        Keep every attribute outside γ instead of only those held by σ. Default = False

    Returns
    -------
    link: LinkRelation
        Void when γ is not a simplex of Φ_R; empty when σ holds no attribute outside γ
    """

    _require_nonvoid(r)
    gamma = frozenset(gamma)
    q, override = _attribute_link(r, r.attribute_bits(gamma), keep_blank_columns)
    return LinkRelation(q, "conditional_attribute", (gamma,), override)


def conditional_association_relation(
    r: Relation,
    sigma: Iterable[str],
    keep_blank_columns: bool = False,
) -> LinkRelation:
    """
    Relation Q modeling the link of sigma in the association complex.

    Q restricts R to the attributes γ = φ(σ) and to the other individuals having some of
    them, so that Ψ_Q = Lk(Ψ_R, σ).

    Parameters
    ----------
    r: Relation
    sigma: iterable of str
        Individual ids
    keep_blank_columns: bool (optional)
        Keep every individual outside σ. Default = False

    Returns
    -------
        LinkRelation
    """

    _require_nonvoid(r)
    sigma = frozenset(sigma)
    t = r.transpose()
    q, override = _attribute_link(t, t.attribute_bits(sigma), keep_blank_columns)
    return LinkRelation(q.transpose(), "conditional_association", (sigma,), override)


def restricted_link_relation(r: Relation, sigma: Iterable[str], gamma: Iterable[str]) -> LinkRelation:
    """
    Link of sigma in the association complex, restricted to the attributes gamma.

    Q(σ, γ) restricts R to γ and to the individuals outside σ having some attribute of γ.

    Parameters
    ----------
    r: Relation
    sigma: iterable of str
        Simplex of the association complex
    gamma: iterable of str
        Attributes shared by all of σ

    Returns
    -------
    link: LinkRelation
        Void when σ is all individuals; empty when no other individual has an attribute of γ
    """

    _require_nonvoid(r)
    sigma = frozenset(sigma)
    gamma = frozenset(gamma)
    sigma_bits = r.individual_bits(sigma)
    gamma_bits = r.attribute_bits(gamma)

    if sigma_bits and not any(is_subset(sigma_bits, col) for col in r.cols):
        raise PreconditionViolatedError("The individual set is not a simplex of the association complex")
    if not is_subset(gamma_bits, r.phi_bits(sigma_bits)):
        raise PreconditionViolatedError("The attribute set is not shared by every individual of the set")

    if sigma_bits == r.full_individuals:
        return LinkRelation(r.restrict(0, gamma_bits), "restricted_link", (sigma, gamma), LinkOverride.VOID)

    others = 0
    for j in iter_bits(gamma_bits):
        others |= r.cols[j]
    others &= ~sigma_bits

    q = r.restrict(others, gamma_bits)
    override = LinkOverride.EMPTY if others == 0 else None
    return LinkRelation(q, "restricted_link", (sigma, gamma), override)


def deletion_relation(r: Relation, gamma: Iterable[str]) -> LinkRelation:
    """
    Relation Q' obtained by removing the columns of gamma, with Φ_Q' = dl(Φ_R, γ).

    Removing every attribute leaves the empty complexes.
    """

    _require_nonvoid(r)
    gamma = frozenset(gamma)
    kept = r.full_attributes & ~r.attribute_bits(gamma)
    q = r.restrict(r.full_individuals, kept)
    override = LinkOverride.EMPTY if kept == 0 else None
    return LinkRelation(q, "deletion", (gamma,), override)
