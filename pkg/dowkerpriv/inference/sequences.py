from .lattice import InferenceLattice
from .posets import PrefixFreeSet
from .posets import SubsetPoset
from .posets import prefix_free_poset
from .posets import prefix_order_poset

INDIVIDUALS = ("1", "2", "3")


def sequence_lattice() -> InferenceLattice:
    """
    Inference lattice of a process emitting a or b for individuals 1 and 2 and c for
    individual 3, where the second symbol tells 1 and 2 apart.

    P is the subsets of {1, 2, 3}; Q is the observed sequences ordered by prefix. The empty
    sequence is read as the top and the empty set of individuals as the bottom.
    """

    q_poset = prefix_order_poset(["", "a", "b", "c", "aa", "ab", "ba", "bb", "cc"])
    proper = [
        (frozenset({"1", "2"}), "a"),
        (frozenset({"1", "2"}), "b"),
        (frozenset({"3"}), "c"),
        (frozenset({"2"}), "aa"),
        (frozenset({"1"}), "ab"),
        (frozenset({"1"}), "ba"),
        (frozenset({"2"}), "bb"),
    ]
    return InferenceLattice(
        SubsetPoset(INDIVIDUALS),
        q_poset,
        proper,
        top_designations=[""],
        bottom_designations=[frozenset()],
    )


def merged_sequence_lattice() -> InferenceLattice:
    """
    The sequence lattice after merging the nodes that identify the same individuals.

    Q is prefix-free sets of sequences.
    """

    empty = PrefixFreeSet([""])
    ab = PrefixFreeSet(["a", "b"])
    c = PrefixFreeSet(["c"])
    first = PrefixFreeSet(["ab", "ba"])
    second = PrefixFreeSet(["aa", "bb"])

    proper = [
        (frozenset({"1", "2"}), ab),
        (frozenset({"3"}), c),
        (frozenset({"1"}), first),
        (frozenset({"2"}), second),
    ]
    return InferenceLattice(
        SubsetPoset(INDIVIDUALS),
        prefix_free_poset([empty, ab, c, first, second]),
        proper,
        top_designations=[empty],
        bottom_designations=[frozenset()],
    )
