import string

from typing import Iterable
from typing import List

from ..models import Relation
from ..utils.exceptions import PreconditionViolatedError


def kbit_attributes(k: int) -> List[str]:
    """Attribute ids a, ~a, b, ~b, ... for k bits"""
    ids = []
    for letter in string.ascii_lowercase[:k]:
        ids += [letter, "~" + letter]
    return ids


def kbit_relation(k: int, patterns: Iterable[int] = None) -> Relation:
    """
    Relation of k binary attributes, each individual holding one value per bit.

    Individual j (counting from 0) negates bit t when bit k - 1 - t of j is set, so
    individual 1 has a, b, c, ... and the last individual ~a, ~b, ~c, ...

    Parameters
    ----------
    k: int
        Number of bits, between 1 and 4
    patterns: iterable of int (optional)
        Keep only these individuals, given by their index j. Default = None (all 2^k)

    Returns
    -------
    relation: Relation
        Individuals are the ids str(j + 1)
    """

    if not 1 <= k <= 4:
        raise PreconditionViolatedError(f"k-bit relations are built for 1 <= k <= 4, got {k}")

    patterns = range(2**k) if patterns is None else sorted(set(patterns))
    if any(not 0 <= j < 2**k for j in patterns):
        raise PreconditionViolatedError(f"Bit patterns must lie in [0, {2**k})")

    individuals = [str(j + 1) for j in patterns]
    rows = []
    for j in patterns:
        row = 0
        for t in range(k):
            negated = (j >> (k - 1 - t)) & 1
            row |= 1 << (2 * t + negated)
        rows.append(row)

    return Relation(individuals, kbit_attributes(k), rows)
