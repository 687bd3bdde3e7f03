import numpy as np
import pytest

from dowkerpriv.complex import boundary_complex
from dowkerpriv.complex import conditional_association_relation
from dowkerpriv.complex import dowker_association_complex
from dowkerpriv.complex import dowker_attribute_complex
from dowkerpriv.complex import free_faces
from dowkerpriv.homology import ChainComplexZ2
from dowkerpriv.homology import gf2_rank
from dowkerpriv.homology import gf2_rank_dense
from dowkerpriv.homology import kbit_relation
from dowkerpriv.homology import link_survey
from dowkerpriv.homology import reduced_betti
from dowkerpriv.homology import scatter_measures
from dowkerpriv.homology import verify_chain_lower_bound
from dowkerpriv.models import BettiVector
from dowkerpriv.models import LinkRecord
from dowkerpriv.models import SimplicialComplex
from dowkerpriv.relation import preserves_association_privacy
from dowkerpriv.relation import preserves_attribute_privacy
from dowkerpriv.relation import random_relation
from dowkerpriv.utils.exceptions import PreconditionViolatedError


def test_gf2_rank_matches_dense_elimination():
    rng = np.random.default_rng(11)
    for _ in range(20):
        matrix = rng.integers(0, 2, size=(6, 8))
        columns = [sum(int(matrix[i, j]) << i for i in range(6)) for j in range(8)]
        assert gf2_rank(columns) == gf2_rank_dense(matrix)

    assert gf2_rank([0b11, 0b11, 0b10]) == 2
    assert gf2_rank_dense(np.eye(3)) == 3


def test_betti_numbers_of_spheres():
    assert reduced_betti(boundary_complex("abc")).betti == (0, 1), "Circle"
    assert reduced_betti(boundary_complex("abcd")).betti == (0, 0, 1), "2-sphere"
    assert reduced_betti(SimplicialComplex.from_simplices(["a", "b"])).betti == (1,), "Two points"
    assert reduced_betti(SimplicialComplex.from_simplices(["abc"])).is_acyclic


def test_betti_numbers_of_relations(staircase, travel, double_mobius):
    assert reduced_betti(dowker_attribute_complex(staircase)).is_acyclic
    assert reduced_betti(dowker_attribute_complex(travel)).betti == (0, 1), "A Möbius band retracts to a circle"
    assert reduced_betti(dowker_attribute_complex(double_mobius)).betti == (0, 0, 4)


def test_dowker_complexes_share_homology(double_mobius):
    phi_r, psi_r = dowker_attribute_complex(double_mobius), dowker_association_complex(double_mobius)
    assert reduced_betti(phi_r) == reduced_betti(psi_r)

    rng = np.random.default_rng(9)
    for _ in range(100):
        r = random_relation(6, 5, density=0.4, rng=rng)
        assert reduced_betti(dowker_attribute_complex(r)) == reduced_betti(dowker_association_complex(r)), repr(r)


def test_empty_and_void_complexes():
    betti = reduced_betti(SimplicialComplex.empty(["a"]))
    assert betti.empty
    assert betti[-1] == 1
    assert not betti.is_acyclic

    with pytest.raises(PreconditionViolatedError):
        reduced_betti(SimplicialComplex.void())


def test_truncated_homology(double_mobius):
    phi_r = dowker_attribute_complex(double_mobius)
    assert reduced_betti(phi_r, max_dim=1).betti == ()

    cc = ChainComplexZ2(phi_r, max_dim=1)
    with pytest.raises(PreconditionViolatedError):
        cc.betti(2)


def test_chain_complex_invariants(double_mobius):
    cc = ChainComplexZ2(dowker_attribute_complex(double_mobius))
    assert cc.check_boundary_squared()
    assert cc.face_counts() == (5, 10, 10)
    assert cc.euler_characteristic(reduced=True) == 4, "Reduced Euler characteristic equals β_2"


def test_betti_vector():
    betti = BettiVector((0, 2, 0, 0))
    assert betti.betti == (0, 2), "Trailing zeros are trimmed"
    assert betti[5] == 0
    assert betti.nonzero_dimensions() == (1,)
    assert betti.padded(3) == (0, 2, 0)
    assert str(betti) == "(0, 2)"


def test_kbit_relations_are_spheres():
    r = kbit_relation(2)
    assert r.row("1") == {"a", "b"}
    assert r.row("4") == {"~a", "~b"}

    for k in range(1, 5):
        betti = reduced_betti(dowker_attribute_complex(kbit_relation(k)))
        assert betti.betti == (0,) * (k - 1) + (1,), f"{k}-bit relation should be a ({k - 1})-sphere"

    assert kbit_relation(3, patterns=[0, 7]).n_individuals == 2

    with pytest.raises(PreconditionViolatedError):
        kbit_relation(5)


def test_chain_lower_bound(staircase, travel, tetrahedron):
    report = verify_chain_lower_bound(travel)
    assert report.holds
    assert [(e.k, e.bound) for e in report.entries] == [(1, 6)]

    report = verify_chain_lower_bound(tetrahedron)
    assert [(e.k, e.bound, e.actual) for e in report.entries] == [(2, 24, 24)]

    assert verify_chain_lower_bound(staircase).entries == ()


def test_link_survey_of_travel_relation(travel):
    records = link_survey(travel)
    assert [record.individual for record in records] == ["1", "2", "3", "4", "5"]

    record = records[2]
    assert record.raw_betti.is_acyclic, "The link of 3 is a path"
    assert record.betti.betti == (1,), "Stripping the middle vertex leaves two points"
    assert record.longest_iars == 3
    assert record.isotropic_counts == (3, 3)
    assert record.link_individuals == 4
    assert record.link_attributes == 3


def test_link_survey_skips_unidentifiable(staircase):
    records = link_survey(staircase)
    assert [record.individual for record in records] == ["1", "2"]

    records = link_survey(staircase, individuals=["3", "2"])
    assert [record.individual for record in records] == ["2"]


def test_link_survey_in_parallel(travel):
    assert link_survey(travel, n_processes=2) == link_survey(travel)


def test_scatter_measures():
    def record(name, betti, longest, counts):
        return LinkRecord(
            individual=name,
            raw_betti=betti,
            betti=betti,
            longest_iars=longest,
            isotropic_counts=counts,
            link_individuals=3,
            link_attributes=2,
        )

    records = [
        record("a", BettiVector(()), 2, (3, 1)),
        record("b", BettiVector((2,)), 3, (4, 2, 1)),
        record("c", BettiVector((0, 1)), 0, ()),
        record("d", BettiVector((), empty=True), 0, ()),
    ]

    points = scatter_measures(records)
    assert [p.h for p in points] == [1, 2, 3, 0], "Contractible links have h = 1 and empty links h = 0"
    assert [p.i for p in points] == [6, 23, 0, 0]
    assert points[1].h_root == pytest.approx(2**0.25)
    assert points[0].log_i == pytest.approx(np.log(6))
    assert points[2].log_i is None
    assert points[0].link_size == 3

    assert scatter_measures([]) == []


def test_contractible_without_free_faces(dunce_hat, double_mobius):
    phi_d = dowker_attribute_complex(dunce_hat)
    assert free_faces(phi_d) == []
    assert reduced_betti(phi_d).is_acyclic, "No free faces, yet no homology either"
    assert preserves_attribute_privacy(dunce_hat)
    assert not preserves_association_privacy(dunce_hat), "Individuals 1 and 12 only share h, along with four others"

    link = conditional_association_relation(dunce_hat, {"10"})
    assert link.attribute_complex() == boundary_complex("bcg")

    assert free_faces(dowker_attribute_complex(double_mobius)) == []
    assert preserves_attribute_privacy(double_mobius)
