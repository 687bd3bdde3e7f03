import logging

from contextlib import contextmanager
from typing import Iterable
from typing import Iterator
from typing import List

logger = logging.getLogger(__name__)


def iter_bits(mask: int) -> Iterator[int]:
    """Yields the indices of the set bits of `mask`, lowest first"""

    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def bits_from_indices(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def full_mask(n: int) -> int:
    return (1 << n) - 1


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def iter_submasks(mask: int) -> Iterator[int]:
    """Yields every submask of `mask`, including `mask` itself and 0"""

    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def antichain(masks: Iterable[int]) -> List[int]:
    """
    Keeps only the inclusion-maximal masks, without duplicates.

    Parameters
    ----------
    masks: iterable of int
        Bitmasks over a common universe

    Returns
    -------
    maximal: list of int
        Inclusion-maximal masks, sorted by decreasing size and then value
    """

    unique = sorted(set(masks), key=lambda m: (-popcount(m), m))
    maximal = []
    for mask in unique:
        if not any(is_subset(mask, kept) for kept in maximal):
            maximal.append(mask)
    return maximal


@contextmanager
def less_logging():
    """
    Silences INFO logging messages. Based on https://gist.github.com/simon-weber/7853144
    """

    if logging.root.manager.disable != logging.DEBUG:
        yield
        return

    try:
        logging.disable(logging.INFO)
        yield
    finally:
        logging.disable(logging.DEBUG)
