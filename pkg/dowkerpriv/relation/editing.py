import logging
import numpy as np

from string import ascii_lowercase
from typing import List
from typing import Tuple

from ..complex.operations import free_face_masks
from ..models import Relation
from ..models import SimplicialComplex
from ..utils.exceptions import VoidRelationError

logger = logging.getLogger(__name__)


def add_entry(r: Relation, x: str, y: str) -> Relation:
    """Copy of the relation with the pair (x, y) added"""
    i, j = r.individual_index(x), r.attribute_index(y)
    rows = list(r.rows)
    rows[i] |= 1 << j
    return r.with_rows(rows)


def remove_entry(r: Relation, x: str, y: str) -> Relation:
    """Copy of the relation with the pair (x, y) removed"""
    i, j = r.individual_index(x), r.attribute_index(y)
    rows = list(r.rows)
    rows[i] &= ~(1 << j)
    return r.with_rows(rows)


def _inference_free_faces(r: Relation) -> set:
    complex_ = SimplicialComplex(r.attributes, r.rows)
    rows = set(r.rows)
    return {f for f in free_face_masks(complex_) if f not in rows}


def suggest_disinformation(r: Relation) -> List[Tuple[str, str]]:
    """
    Proposes single pairs whose addition removes an inference mechanism.

    A free face of the attribute complex that is not itself a row lets an observer
    complete a partial observation to its unique maximal simplex. A pair is proposed
    when adding it leaves at least one such face no longer free.

    Parameters
    ----------
    r: Relation

    Returns
    -------
    suggestions: list of tuple
        (individual id, attribute id) pairs absent from r, in universe order
    """

    if r.is_void:
        raise VoidRelationError(f"Operation needs a nonvoid relation, got {r!r}")

    targets = _inference_free_faces(r)
    if not targets:
        return []

    suggestions = []
    for i, x in enumerate(r.individuals):
        for j, y in enumerate(r.attributes):
            if r.rows[i] >> j & 1:
                continue
            edited = list(r.rows)
            edited[i] |= 1 << j
            complex_ = SimplicialComplex(r.attributes, edited)
            if not targets <= set(free_face_masks(complex_)):
                suggestions.append((x, y))

    logger.debug("Found %s disinformation candidates for %r", len(suggestions), r)
    return suggestions


def _attribute_ids(n: int) -> List[str]:
    if n <= len(ascii_lowercase):
        return list(ascii_lowercase[:n])
    return [f"y{j + 1}" for j in range(n)]


def random_relation(
    n_individuals: int,
    n_attributes: int,
    density: float = 0.5,
    rng: np.random.Generator = None,
) -> Relation:
    """
    Draws a relation with independent entries.

    Parameters
    ----------
    n_individuals: int
        Individuals, named "1", "2", ...
    n_attributes: int
        Attributes, named "a", "b", ... (or "y1", "y2", ... beyond 26)
    density: float (optional)
        Probability of each pair. Default = 0.5
    rng: numpy.random.Generator (optional)
        Random generator. Default = a fresh unseeded generator

    Returns
    -------
        Relation
    """

    if rng is None:
        rng = np.random.default_rng()

    matrix = rng.random((n_individuals, n_attributes)) < density
    return Relation.from_matrix(
        [str(i + 1) for i in range(n_individuals)],
        _attribute_ids(n_attributes),
        matrix,
    )
