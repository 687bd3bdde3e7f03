import logging

from collections import Counter
from typing import Dict
from typing import Iterator

from .poset import LabeledPoset
from ..models import Chain
from ..models import LabeledPair
from ..models import SearchLimits
from ..models.limits import resolve_limits
from ..utils.exceptions import CapExceededError

logger = logging.getLogger(__name__)


def maximal_chains(
    p: LabeledPoset,
    min_length: int = 0,
    cap: int = None,
    limits: SearchLimits = None,
) -> Iterator[Chain]:
    """
    Enumerates the maximal chains of a poset, top first.

    A maximal chain is a path in the Hasse diagram from a maximal to a minimal element.

    Parameters
    ----------
    p: LabeledPoset
    min_length: int (optional)
        Skip chains shorter than this. Default = 0
    cap: int (optional)
        Chains yielded before CapExceededError is raised. Default = limits.chain_cap
    limits: SearchLimits (optional)

    Yields
    ------
        Chain
    """

    limits = resolve_limits(limits)
    cap = limits.chain_cap if cap is None else cap
    yielded = 0

    stack = [[top] for top in reversed(p.maximal_elements())]
    while stack:
        path = stack.pop()
        lower = p.covers(path[-1])
        if lower:
            stack.extend(path + [q] for q in reversed(lower))
            continue

        if len(path) - 1 < min_length:
            continue
        if yielded >= cap:
            raise CapExceededError(f"More than {cap} maximal chains", cap=cap)
        yielded += 1
        yield Chain(tuple(path))


def _paths_down(p: LabeledPoset) -> Dict[LabeledPair, Counter]:
    """For each element, the number of maximal downward paths by length"""

    counts = {}
    for element in reversed(p.topological_order()):
        lower = p.covers(element)
        if not lower:
            counts[element] = Counter({0: 1})
            continue
        total = Counter()
        for q in lower:
            for length, n in counts[q].items():
                total[length + 1] += n
        counts[element] = total
    return counts


def count_maximal_chains(p: LabeledPoset, min_length: int = 0) -> int:
    """
    Counts maximal chains of length at least min_length without enumerating them.

    Parameters
    ----------
    p: LabeledPoset
    min_length: int (optional)
        Default = 0

    Returns
    -------
        Exact count (arbitrary precision)
    """

    counts = _paths_down(p)
    return sum(
        n
        for top in p.maximal_elements()
        for length, n in counts[top].items()
        if length >= min_length
    )
