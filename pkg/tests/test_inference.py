import itertools

import pytest

from dowkerpriv.inference import FinitePoset
from dowkerpriv.inference import InferenceLattice
from dowkerpriv.inference import PrefixFreeSet
from dowkerpriv.inference import SubsetPoset
from dowkerpriv.inference import galois_as_inference_lattice
from dowkerpriv.inference import interpret_observation_p
from dowkerpriv.inference import interpret_observation_q
from dowkerpriv.inference import merged_sequence_lattice
from dowkerpriv.inference import prefix_order_poset
from dowkerpriv.inference import sequence_lattice
from dowkerpriv.inference import validate_inference_lattice
from dowkerpriv.models import Interpretation
from dowkerpriv.models import LatticeExtreme
from dowkerpriv.models import Outcome
from dowkerpriv.relation import attribute_closure
from dowkerpriv.relation import psi
from dowkerpriv.utils.exceptions import PreconditionViolatedError
from dowkerpriv.utils.exceptions import UnknownElementError


def _ids(s: str) -> frozenset:
    return frozenset(s)


def test_finite_poset_from_pairs():
    poset = FinitePoset.from_pairs("xyz", [("x", "y"), ("y", "z")])
    assert poset.leq("x", "z"), "Order is closed under transitivity"
    assert not poset.leq("z", "x")
    assert poset.maximal("xyz") == ["z"]
    assert poset.minimal(["y", "z"]) == ["y"]

    with pytest.raises(PreconditionViolatedError):
        FinitePoset.from_pairs("xy", [("x", "y"), ("y", "x")])
    with pytest.raises(UnknownElementError):
        FinitePoset.from_pairs("xy", [("x", "w")])
    with pytest.raises(UnknownElementError):
        poset.leq("x", "w")
    with pytest.raises(PreconditionViolatedError):
        FinitePoset("xx", lambda a, b: a == b)


def test_subset_poset():
    poset = SubsetPoset(["1", "2", "3"])
    assert len(poset) == 8
    assert next(iter(poset)) == frozenset()
    assert frozenset({"1", "3"}) in poset
    assert frozenset({"4"}) not in poset
    assert "1" not in poset, "Elements are sets, not universe members"
    assert poset.leq(frozenset({"1"}), frozenset({"1", "2"}))


def test_prefix_orders():
    poset = prefix_order_poset(["", "a", "ab", "b"])
    assert poset.leq("", "b")
    assert poset.leq("a", "ab")
    assert not poset.leq("ab", "a")
    assert not poset.leq("a", "b")

    assert PrefixFreeSet(["a"]).leq(PrefixFreeSet(["ab", "c"]))
    assert not PrefixFreeSet(["ab", "c"]).leq(PrefixFreeSet(["a"]))
    assert PrefixFreeSet([]).leq(PrefixFreeSet(["c"]))
    assert str(PrefixFreeSet(["b", "a"])) == "{a, b}"

    with pytest.raises(PreconditionViolatedError):
        PrefixFreeSet(["a", "ab"])


def test_sequence_lattice_is_valid():
    lattice = sequence_lattice()
    assert validate_inference_lattice(lattice) == (True, [])
    assert validate_inference_lattice(merged_sequence_lattice()) == (True, [])

    a = (_ids("12"), "a")
    aa = (_ids("2"), "aa")
    ab = (_ids("1"), "ab")
    assert lattice.leq(aa, a)
    assert lattice.join(aa, ab) == a
    assert lattice.join(a, (_ids("12"), "b")) == LatticeExtreme.TOP, "Only the empty sequence lies above a and b"
    assert lattice.meet(a, (_ids("3"), "c")) == LatticeExtreme.BOTTOM
    assert lattice.meet(LatticeExtreme.BOTTOM, a) == LatticeExtreme.BOTTOM
    assert lattice.join(a, LatticeExtreme.TOP) == LatticeExtreme.TOP


def test_interpret_sequence_observations():
    lattice = sequence_lattice()

    assert interpret_observation_q(lattice, "a").elements == {(_ids("12"), "a")}
    assert interpret_observation_q(lattice, "ab").elements == {(_ids("1"), "ab")}
    assert interpret_observation_q(lattice, "") == Interpretation.top()
    assert interpret_observation_q(lattice, "cc").outcome == Outcome.INCONSISTENT

    assert interpret_observation_p(lattice, _ids("1")).elements == {(_ids("1"), "ab"), (_ids("1"), "ba")}
    assert interpret_observation_p(lattice, frozenset()) == Interpretation.inconsistent()
    assert interpret_observation_p(lattice, _ids("13")).outcome == Outcome.TOP, "No node speaks for 1 and 3"

    with pytest.raises(UnknownElementError):
        interpret_observation_q(lattice, "zz")
    with pytest.raises(UnknownElementError):
        interpret_observation_p(lattice, _ids("9"))


def test_interpret_merged_observations():
    lattice = merged_sequence_lattice()
    interpretation = interpret_observation_q(lattice, PrefixFreeSet(["a", "b"]))
    assert interpretation.elements == {(_ids("12"), PrefixFreeSet(["a", "b"]))}
    assert str(Interpretation.top()) == "top"


def test_explicit_order_is_checked():
    p_poset = SubsetPoset(["1", "2"])
    q_poset = prefix_order_poset(["", "a", "ab"])
    fine = (_ids("1"), "ab")
    coarse = (_ids("12"), "a")

    lattice = InferenceLattice(p_poset, q_poset, [fine, coarse], order=[(fine, coarse)])
    assert validate_inference_lattice(lattice) == (True, [])

    lattice = InferenceLattice(p_poset, q_poset, [fine, coarse], order=[(coarse, fine)])
    valid, violations = validate_inference_lattice(lattice)
    assert not valid
    assert any("disagrees" in v for v in violations)

    with pytest.raises(PreconditionViolatedError):
        InferenceLattice(p_poset, q_poset, [fine, coarse], order=[(fine, coarse), (coarse, fine)])
    with pytest.raises(UnknownElementError):
        InferenceLattice(p_poset, q_poset, [fine], order=[(fine, coarse)])
    with pytest.raises(UnknownElementError):
        InferenceLattice(p_poset, q_poset, [(_ids("1"), "b")])
    with pytest.raises(PreconditionViolatedError):
        InferenceLattice(p_poset, q_poset, [fine, fine])


def test_galois_lattice_as_inference_lattice(travel):
    lattice = galois_as_inference_lattice(travel)
    assert len(lattice.proper) == 15
    assert validate_inference_lattice(lattice) == (True, [])

    interpretation = interpret_observation_q(lattice, _ids("BD"))
    assert interpretation.elements == {(_ids("3"), _ids("BCD"))}, "B and D together single out author 3"
    assert interpret_observation_q(lattice, frozenset()).outcome == Outcome.TOP
    assert interpret_observation_q(lattice, _ids("ABCDE")).outcome == Outcome.INCONSISTENT

    assert interpret_observation_p(lattice, _ids("13")).elements == {(_ids("123"), _ids("B"))}
    assert interpret_observation_p(lattice, frozenset()).outcome == Outcome.INCONSISTENT


def test_galois_protocol_matches_closures(staircase):
    lattice = galois_as_inference_lattice(staircase)
    for k in range(4):
        for gamma in itertools.combinations("abc", k):
            gamma = frozenset(gamma)
            interpretation = interpret_observation_q(lattice, gamma)
            sigma = psi(staircase, gamma)

            if not gamma:
                assert interpretation.outcome == Outcome.TOP
            elif not sigma:
                assert interpretation.outcome == Outcome.INCONSISTENT, f"Nobody has {sorted(gamma)}"
            else:
                assert interpretation.elements == {(sigma, attribute_closure(staircase, gamma))}
