import itertools

import numpy as np
import pytest

from dowkerpriv.complex import boundary_complex
from dowkerpriv.complex import closed_star
from dowkerpriv.complex import conditional_association_relation
from dowkerpriv.complex import conditional_attribute_relation
from dowkerpriv.complex import deletion
from dowkerpriv.complex import deletion_relation
from dowkerpriv.complex import dowker_association_complex
from dowkerpriv.complex import dowker_attribute_complex
from dowkerpriv.complex import enumerate_embeddings
from dowkerpriv.complex import faces
from dowkerpriv.complex import free_faces
from dowkerpriv.complex import join
from dowkerpriv.complex import link
from dowkerpriv.complex import minimal_nonfaces
from dowkerpriv.complex import restricted_link_relation
from dowkerpriv.complex import strip_cone_apexes
from dowkerpriv.homology import reduced_betti
from dowkerpriv.models import Relation
from dowkerpriv.models import SearchLimits
from dowkerpriv.models import SimplicialComplex
from dowkerpriv.relation import build_relation
from dowkerpriv.relation import cyclic_staircase
from dowkerpriv.relation import is_tight
from dowkerpriv.relation import phi
from dowkerpriv.relation import preserves_association_privacy
from dowkerpriv.relation import preserves_attribute_privacy
from dowkerpriv.relation import preserves_attribute_privacy_for
from dowkerpriv.relation import preserves_group_attribute_privacy
from dowkerpriv.relation import psi
from dowkerpriv.relation import random_relation
from dowkerpriv.relation import spherical_boundary
from dowkerpriv.relation import uniquely_identifiable
from dowkerpriv.utils.exceptions import PreconditionViolatedError
from dowkerpriv.utils.exceptions import TooLargeError
from dowkerpriv.utils.exceptions import UniverseOverlapError
from dowkerpriv.utils.interfaces.relations import read_relation


def test_dowker_complexes(staircase):
    phi_r = dowker_attribute_complex(staircase)
    assert set(phi_r.facets) == {frozenset("ab"), frozenset("bc")}, "Row c is absorbed by bc"
    assert phi_r.contains("b")
    assert not phi_r.contains("ac")

    psi_r = dowker_association_complex(staircase)
    assert set(psi_r.facets) == {frozenset("12"), frozenset("234")}


def test_void_relation_gives_void_complex():
    r = build_relation([], [], ["a"], allow_void=True)
    assert dowker_attribute_complex(r).is_void
    assert dowker_association_complex(r).is_void


def test_free_faces(staircase, staircase_variant):
    assert free_faces(dowker_attribute_complex(staircase)) == [frozenset("a"), frozenset("c")]
    assert free_faces(dowker_attribute_complex(staircase_variant)) == [], "The triangle boundary has no free faces"

    with pytest.raises(PreconditionViolatedError):
        free_faces(SimplicialComplex.void())


def test_minimal_nonfaces(staircase):
    assert minimal_nonfaces(dowker_attribute_complex(staircase)) == [frozenset("ac")]
    assert minimal_nonfaces(boundary_complex("abc")) == [frozenset("abc")]
    assert minimal_nonfaces(SimplicialComplex.void()) == [frozenset()]


def test_faces_and_budget():
    triangle_boundary = boundary_complex("abc")
    assert len(faces(triangle_boundary)) == 7, "Empty simplex, three vertices and three edges"
    assert len(faces(triangle_boundary, max_dim=0)) == 4

    with pytest.raises(TooLargeError):
        faces(triangle_boundary, limits=SearchLimits(face_budget=5))


def test_link_and_deletion(staircase):
    sphere = boundary_complex("1234")
    lk = link(sphere, {"1"})
    assert set(lk.facets) == {frozenset("23"), frozenset("24"), frozenset("34")}
    assert "1" not in lk.universe

    assert link(dowker_attribute_complex(staircase), {"a", "c"}).is_void, "A nonface has a void link"
    assert link(dowker_attribute_complex(staircase), {"a", "b"}).is_empty

    dl = deletion(dowker_attribute_complex(staircase), {"b"})
    assert set(dl.facets) == {frozenset("a"), frozenset("c")}


def test_closed_star_and_join():
    s = SimplicialComplex.from_simplices(["ab", "bc", "cd"])
    assert set(closed_star(s, "b").facets) == {frozenset("ab"), frozenset("bc")}
    assert closed_star(s, "ad").is_void

    edge = join(SimplicialComplex.from_simplices(["a"]), SimplicialComplex.from_simplices(["b"]))
    assert edge.facets == [frozenset("ab")]

    with pytest.raises(UniverseOverlapError):
        join(s, s)


def test_boundary_complex_extremes():
    assert boundary_complex("a").is_empty
    assert boundary_complex("").is_void


def test_strip_cone_apexes():
    cone = SimplicialComplex.from_simplices(["ab", "ac"])
    stripped = strip_cone_apexes(cone)
    assert set(stripped.facets) == {frozenset("b"), frozenset("c")}
    assert stripped.universe == ("b", "c")

    simplex = SimplicialComplex.from_simplices(["abc"])
    assert strip_cone_apexes(simplex) == simplex, "A single simplex is left alone"


def test_link_relations_model_links(travel, staircase):
    phi_travel = dowker_attribute_complex(travel)
    q = conditional_attribute_relation(travel, {"B"})
    assert q.attribute_complex() == link(phi_travel, {"B"})
    assert set(q.relation.individuals) == {"1", "2", "3"}

    assert conditional_attribute_relation(staircase, {"a", "c"}).is_void
    assert conditional_attribute_relation(staircase, {"a", "b"}).is_empty

    psi_travel = dowker_association_complex(travel)
    q = conditional_association_relation(travel, {"3"})
    assert q.association_complex() == link(psi_travel, {"3"})

    deleted = deletion_relation(staircase, {"b"})
    assert deleted.attribute_complex() == deletion(dowker_attribute_complex(staircase), {"b"})


def test_restricted_link_relation(staircase):
    q = restricted_link_relation(staircase, {"2"}, {"c"})
    assert set(q.relation.individuals) == {"3", "4"}
    assert q.relation.attributes == ("c",)

    assert restricted_link_relation(staircase, {"1"}, {"a"}).is_empty, "Nobody else has attribute a"

    with pytest.raises(PreconditionViolatedError):
        restricted_link_relation(staircase, {"1"}, {"c"})


def test_embeddings_of_triangle_into_sphere():
    triangle = SimplicialComplex.from_simplices(["pqr"])
    sphere = boundary_complex("1234")

    embeddings = enumerate_embeddings(triangle, sphere)
    assert len(embeddings) == 24, "Four target facets times six vertex orderings"
    for embedding in embeddings:
        assert len(embedding.vertex_image) == 3
        [image] = embedding.facet_map.values()
        assert embedding.vertex_image == image


def test_single_vertex_embeddings():
    point = SimplicialComplex.from_simplices(["p"])
    embeddings = enumerate_embeddings(point, boundary_complex("abc"))
    assert [e.vertex_map for e in embeddings] == [{"p": "a"}, {"p": "b"}, {"p": "c"}], "One per host vertex"

    assert enumerate_embeddings(boundary_complex("abcde"), boundary_complex("abc")) == []


def test_ferry_observations(fixtures_dir):
    crossings = dowker_association_complex(read_relation(fixtures_dir / "ferry.pairs"))
    assert len(crossings.facets) == 12

    square = SimplicialComplex.from_simplices(["wx", "xy", "yz", "zw"])
    embeddings = enumerate_embeddings(square, crossings)

    assert {e.vertex_image for e in embeddings} == {frozenset("CGJK"), frozenset("BFIJ")}
    assert len(embeddings) == 16, "Eight symmetries of the square for each placement"
    for e in embeddings:
        assert len(set(e.facet_map.values())) == 4, "Four different crossings"
        assert all(e.vertex_map[v] in e.facet_map[edge] for edge in e.facet_map for v in edge)


def test_embedding_pattern_cap():
    pattern = boundary_complex("abcdef")
    with pytest.raises(TooLargeError):
        enumerate_embeddings(pattern, pattern, limits=SearchLimits(embedding_vertex_cap=4))


def _private_relations():
    return [spherical_boundary(n) for n in range(2, 6)] + [cyclic_staircase(n) for n in range(3, 7)]


def _brute_free_faces(r: Relation) -> set:
    rows = {frozenset(r.row(x)) for x in r.individuals}
    facets = [f for f in rows if not any(f < g for g in rows)]
    free = set()
    for f in facets:
        for k in range(len(f)):
            for tau in map(frozenset, itertools.combinations(sorted(f), k)):
                if sum(1 for g in facets if tau <= g) == 1:
                    free.add(tau)
    return free


def test_attribute_links_match_brute_force():
    rng = np.random.default_rng(41)
    for _ in range(50):
        r = random_relation(5, 4, density=0.5, rng=rng)
        phi_r = dowker_attribute_complex(r)
        for gamma in faces(phi_r):
            q = conditional_attribute_relation(r, gamma)
            assert set(faces(q.attribute_complex())) == set(faces(link(phi_r, gamma))), f"link of {sorted(gamma)}"
            if q.is_empty:
                continue

            sigma = psi(r, gamma)
            assert set(q.relation.individuals) == sigma
            for k in range(q.relation.n_attributes + 1):
                for xi in itertools.combinations(q.relation.attributes, k):
                    assert psi(q.relation, xi) == psi(r, set(xi) | gamma)
            for k in range(1, len(sigma) + 1):
                for kappa in itertools.combinations(sorted(sigma), k):
                    assert phi(q.relation, kappa) == phi(r, kappa) - gamma


def test_links_and_deletions_keep_privacy():
    rng = np.random.default_rng(43)
    candidates = _private_relations() + [random_relation(4, 4, density=0.6, rng=rng) for _ in range(300)]
    for r in candidates:
        phi_r = dowker_attribute_complex(r)

        if preserves_attribute_privacy(r):
            for gamma in faces(phi_r):
                q = conditional_attribute_relation(r, gamma)
                if not q.is_empty:
                    assert preserves_attribute_privacy(q.relation), f"link of {sorted(gamma)} in {r!r}"
            for k in range(r.n_attributes):
                for gamma in itertools.combinations(r.attributes, k):
                    assert preserves_attribute_privacy(deletion_relation(r, gamma).relation)

        if is_tight(r) and preserves_association_privacy(r):
            for gamma in faces(phi_r):
                q = conditional_attribute_relation(r, gamma)
                if not q.is_empty and q.relation.n_individuals > 1:
                    assert preserves_association_privacy(q.relation), f"link of {sorted(gamma)} in {r!r}"


def test_free_faces_match_brute_force():
    rng = np.random.default_rng(500)
    for _ in range(500):
        r = random_relation(5, 4, density=0.5, rng=rng)
        oracle = _brute_free_faces(r)
        assert set(free_faces(dowker_attribute_complex(r))) == oracle, repr(r)

        private = preserves_attribute_privacy(r)
        if not oracle:
            assert private, "Without free faces nothing can be inferred"
        if private and all(uniquely_identifiable(r, x) for x in r.individuals):
            assert not oracle, "Identifiable individuals in a private relation leave no free faces"


def test_individual_privacy_is_a_boundary_link():
    rng = np.random.default_rng(71)
    for _ in range(100):
        r = random_relation(5, 4, density=0.5, rng=rng)
        for x in r.individuals:
            if not uniquely_identifiable(r, x):
                continue
            row = r.row(x)
            q = conditional_association_relation(r, {x})
            private = preserves_attribute_privacy_for(r, x)

            is_boundary = set(faces(q.attribute_complex())) == set(faces(boundary_complex(sorted(row))))
            assert is_boundary == private, f"individual {x} of {r!r}"

            betti = reduced_betti(q.association_complex())
            if len(row) == 1:
                sphere = betti.empty
            else:
                sphere = not betti.empty and betti.betti == (0,) * (len(row) - 2) + (1,)
            assert sphere == private, f"link homology of {x} in {r!r}"


def test_group_privacy_is_a_boundary_link():
    rng = np.random.default_rng(73)
    for _ in range(100):
        r = random_relation(5, 4, density=0.5, rng=rng)
        for k in range(1, r.n_individuals):
            for sigma in itertools.combinations(r.individuals, k):
                gamma = phi(r, sigma)
                if not gamma or psi(r, gamma) != set(sigma):
                    continue
                q = conditional_association_relation(r, sigma)
                is_boundary = set(faces(q.attribute_complex())) == set(faces(boundary_complex(sorted(gamma))))
                assert is_boundary == preserves_group_attribute_privacy(r, sigma), f"{sigma} in {r!r}"
