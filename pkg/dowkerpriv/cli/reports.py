import json
import logging

from typing import Any
from typing import Dict
from typing import Iterable
from typing import List
from typing import Sequence

from ..complex import dowker_association_complex
from ..complex import dowker_attribute_complex
from ..complex import enumerate_embeddings
from ..complex import free_faces
from ..galois import count_maximal_chains
from ..galois import doubly_labeled_poset
from ..galois import galois_lattice
from ..galois import lattice_length
from ..galois import r_fast
from ..galois import r_slow
from ..galois import release_profile
from ..homology import reduced_betti
from ..homology import verify_chain_lower_bound
from ..inference import InferenceLattice
from ..inference import interpret_observation_q
from ..inference import validate_inference_lattice
from ..models import BettiVector
from ..models import EncodedRelation
from ..models import ImageKind
from ..models import Interpretation
from ..models import LabeledPair
from ..models import LinkRecord
from ..models import Relation
from ..models import RelationMorphism
from ..models import ScatterPoint
from ..models import SearchLimits
from ..models import SimplicialComplex
from ..models import UncertainGraph
from ..morphism import induced_simplicial_maps
from ..morphism import lattice_generate_from_image
from ..morphism import validate_morphism
from ..relation import classify_privacy_shape
from ..relation import is_connected
from ..relation import is_tight
from ..relation import preserves_association_privacy
from ..relation import preserves_attribute_privacy
from ..relation import preserves_attribute_privacy_for
from ..relation import suggest_disinformation
from ..relation import uniquely_identifiable
from ..strategy import fully_controllable
from ..strategy import goal_delay_sequence
from ..strategy import maximal_strategies
from ..strategy import source_complex
from ..strategy import strategy_goals
from ..strategy import strategy_iars
from ..strategy import strategy_names
from ..utils.exceptions import TooLargeError

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1

Report = Dict[str, Any]


def to_json(report: Report) -> str:
    """Deterministic rendering: sorted keys, UTF-8 kept as is"""
    return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _ids(ids: Iterable[str]) -> List[str]:
    return sorted(ids)


def _simplices(simplices: Iterable[Iterable[str]]) -> List[List[str]]:
    return sorted((_ids(s) for s in simplices), key=lambda s: (len(s), s))


def _pair(p: LabeledPair) -> Report:
    return {"individuals": _ids(p.sigma), "attributes": _ids(p.gamma), "label": str(p)}


def _betti(b: BettiVector) -> Report:
    return {"betti": list(b.betti), "empty": b.empty}


def _complex(s: SimplicialComplex) -> Report:
    return {"kind": s.kind.value, "facets": _simplices(s.facets)}


def _relation(r: Relation) -> Report:
    return {
        "individuals": list(r.individuals),
        "attributes": list(r.attributes),
        "pairs": [list(p) for p in r.pairs()],
    }


def _component(value: Any) -> Any:
    if isinstance(value, (set, frozenset)):
        return _ids(str(v) for v in value)
    return str(value)


def _interpretation(i: Interpretation) -> Report:
    elements = [[_component(p), _component(q)] for p, q in i.elements]
    return {"outcome": i.outcome.value, "elements": sorted(elements, key=json.dumps)}


def _base(command: str, inputs: Dict[str, str]) -> Report:
    return {"schema_version": SCHEMA_VERSION, "command": command, "inputs": dict(inputs)}


def analyze_report(r: Relation, inputs: Dict[str, str]) -> Report:
    """Privacy predicates, free faces, identifiability and disinformation suggestions"""

    report = _base("analyze", inputs)
    attribute_complex = dowker_attribute_complex(r)
    tight = is_tight(r)

    report["relation"] = {"individuals": r.n_individuals, "attributes": r.n_attributes, "pairs": r.n_pairs()}
    report["tight"] = tight
    report["connected"] = is_connected(r)
    report["attribute_privacy"] = preserves_attribute_privacy(r)
    report["association_privacy"] = preserves_association_privacy(r)
    report["individual_attribute_privacy"] = {x: preserves_attribute_privacy_for(r, x) for x in r.individuals}
    report["uniquely_identifiable"] = [x for x in r.individuals if uniquely_identifiable(r, x)]
    report["attribute_complex"] = _complex(attribute_complex)
    report["association_complex"] = _complex(dowker_association_complex(r))
    report["free_faces"] = _simplices(free_faces(attribute_complex))
    report["disinformation"] = [list(p) for p in suggest_disinformation(r)]

    if tight:
        report["shapes"] = [
            {"individuals": _ids(c.individuals), "attributes": _ids(c.attributes), "shape": shape.value}
            for c, shape in classify_privacy_shape(r)
        ]
    else:
        logger.info("Relation is not tight, skipping the shape classification")
        report["shapes"] = None

    return report


def lattice_report(r: Relation, inputs: Dict[str, str]) -> Report:
    report = _base("lattice", inputs)
    lattice = galois_lattice(r)

    report["elements"] = [_pair(p) for p in lattice.elements]
    report["covers"] = sorted([str(p), str(q)] for p, q in lattice.hasse.edges)
    report["top"] = str(lattice.top)
    report["bottom"] = str(lattice.bottom)
    report["length"] = lattice_length(lattice)
    report["maximal_chains"] = count_maximal_chains(doubly_labeled_poset(r))
    return report


def inference_report(l: InferenceLattice, observations: Dict[str, Any], inputs: Dict[str, str]) -> Report:
    """Validity of an inference lattice and the interpretation of each observation, keyed by its input text"""

    report = _base("lattice", inputs)
    valid, violations = validate_inference_lattice(l)

    report["proper_elements"] = len(l.proper)
    report["valid"] = valid
    report["violations"] = sorted(violations)
    report["observations"] = {
        label: _interpretation(interpret_observation_q(l, q)) for label, q in observations.items()
    }
    return report


def iars_report(r: Relation, individual: str, limits: SearchLimits, inputs: Dict[str, str]) -> Report:
    """Fast and slow release lengths of one individual, with the longest release sequences"""

    report = _base("iars", inputs)
    profile = release_profile(r, individual, limits=limits)
    sigma = profile.target.sigma

    report["individual"] = individual
    report["target"] = _pair(profile.target)
    report["r_fast"] = r_fast(r, sigma, limits)
    report["r_slow"] = r_slow(r, sigma)
    report["max_length"] = profile.max_length
    report["chains"] = [[str(p) for p in chain] for chain in profile.chains]
    report["sequences"] = sorted(list(s) for s in profile.sequences)
    return report


def homology_report(r: Relation, max_dim: int, limits: SearchLimits, inputs: Dict[str, str]) -> Report:
    report = _base("homology", inputs)
    betti = reduced_betti(dowker_attribute_complex(r), max_dim, limits)
    report.update(_betti(betti))

    try:
        bound = verify_chain_lower_bound(r, limits)
    except TooLargeError as e:
        logger.warning("Skipping the chain bound check: %s", e)
        report["chain_bound"] = None
    else:
        report["chain_bound"] = {
            "holds": bound.holds,
            "entries": [{"k": e.k, "bound": e.bound, "actual": e.actual} for e in bound.entries],
        }
    return report


def link_report(records: Sequence[LinkRecord], points: Sequence[ScatterPoint], inputs: Dict[str, str]) -> Report:
    report = _base("link", inputs)
    report["records"] = [
        {
            "individual": rec.individual,
            "raw": _betti(rec.raw_betti),
            "stripped": _betti(rec.betti),
            "longest_iars": rec.longest_iars,
            "isotropic_counts": list(rec.isotropic_counts),
            "link_individuals": rec.link_individuals,
            "link_attributes": rec.link_attributes,
        }
        for rec in records
    ]
    report["scatter"] = [
        {"individual": p.individual, "h": p.h, "i": p.i, "link_size": p.link_size} for p in points
    ]
    return report


def strategy_report(
    g: UncertainGraph,
    limits: SearchLimits,
    inputs: Dict[str, str],
    goal: str = None,
    strategy: str = None,
) -> Report:
    """Maximal strategies, controllability and, on request, obfuscated release sequences"""

    report = _base("strategy", inputs)
    strategies = maximal_strategies(g, limits)
    names = strategy_names(strategies)
    goals = strategy_goals(g, limits)

    report["strategies"] = [
        {"name": name, "actions": _ids(s), "goals": _ids(goals[name])} for name, s in zip(names, strategies)
    ]
    report["source_complex"] = _complex(source_complex(g, limits))
    report["fully_controllable"] = fully_controllable(g, limits)

    if goal is not None:
        report["goal_delay"] = {"goal": goal, "sequence": list(goal_delay_sequence(g, goal, limits))}

    if strategy is not None:
        by_name = dict(zip(names, strategies))
        if strategy not in by_name:
            raise ValueError(f"Unknown strategy {strategy!r}; expected one of {', '.join(names)}")
        profile = strategy_iars(g, by_name[strategy], limits=limits)
        report["strategy_iars"] = {
            "strategy": strategy,
            "max_length": profile.max_length,
            "sequences": sorted(list(s) for s in profile.sequences),
        }

    return report


def morphism_report(m: RelationMorphism, inputs: Dict[str, str]) -> Report:
    report = _base("morphism", inputs)
    valid, violations = validate_morphism(m)
    report["valid"] = valid
    report["violations"] = [list(v) for v in violations]
    if not valid:
        return report

    maps = induced_simplicial_maps(m)
    report["monomorphism"] = maps.is_monomorphism
    report["epimorphism"] = maps.is_epimorphism
    report["maps"] = {
        "fx": {"surjective": maps.fx_surjective, "injective": maps.fx_injective},
        "fy": {"surjective": maps.fy_surjective, "injective": maps.fy_injective},
        "pairs": {"surjective": maps.pair_surjective, "injective": maps.pair_injective},
        "psi": {"surjective": maps.fx_simplicial_surjective, "injective": maps.fx_simplicial_injective},
        "phi": {"surjective": maps.fy_simplicial_surjective, "injective": maps.fy_simplicial_injective},
    }

    if maps.pair_surjective and is_tight(m.domain) and is_tight(m.codomain):
        report["generated"] = {}
        for kind in ImageKind:
            generated = lattice_generate_from_image(m, kind)
            report["generated"][kind.value] = {
                "image": sorted(str(p) for p in generated.image),
                "reached": len(generated.reached),
                "witnesses": {str(p): w for p, w in generated.witnesses.items()},
            }
    return report


def encode_report(encoded: EncodedRelation, inputs: Dict[str, str]) -> Report:
    report = _base("encode", inputs)
    report["relation"] = _relation(encoded.relation)
    report["multiplicities"] = dict(encoded.multiplicities)
    report["members"] = {k: list(v) for k, v in encoded.members.items()}
    return report


def embed_report(pattern: SimplicialComplex, host: SimplicialComplex, limits: SearchLimits, inputs: Dict[str, str]):
    report = _base("embed", inputs)
    embeddings = enumerate_embeddings(pattern, host, limits)
    report["count"] = len(embeddings)
    report["embeddings"] = sorted(
        ({v: e.vertex_map[v] for v in sorted(e.vertex_map)} for e in embeddings),
        key=lambda m: sorted(m.items()),
    )
    return report
