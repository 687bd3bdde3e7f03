import argparse
import dataclasses
import logging
import sys

from pathlib import Path
from typing import Sequence

from .reports import analyze_report
from .reports import embed_report
from .reports import encode_report
from .reports import homology_report
from .reports import inference_report
from .reports import iars_report
from .reports import lattice_report
from .reports import link_report
from .reports import morphism_report
from .reports import strategy_report
from .reports import to_json
from ..complex import dowker_association_complex
from ..complex import dowker_attribute_complex
from ..homology import link_survey
from ..homology import scatter_measures
from ..inference import SubsetPoset
from ..models import RelationFormat
from ..models import SearchLimits
from ..utils.exceptions import CapExceededError
from ..utils.exceptions import TooLargeError
from ..utils.interfaces.graphs import read_graph
from ..utils.interfaces.hdf5 import save_link_survey
from ..utils.interfaces.lattices import read_inference_lattice
from ..utils.interfaces.morphisms import read_morphism
from ..utils.interfaces.multivalent import encode_multivalent
from ..utils.interfaces.multivalent import read_records
from ..utils.interfaces.relations import read_relation
from ..utils.interfaces.relations import write_relation
from ..utils.interfaces.scatter import write_scatter_csv

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)-5.5s %(name)-20.20s %(levelname)-7.7s %(message)s"
LOG_LEVELS = [logging.WARNING, logging.INFO, logging.DEBUG]


def _common_arguments() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=[f.value for f in RelationFormat],
        help="Relation input format (default: guessed from the file extension)",
    )
    common.add_argument("--out", help="Write the JSON report to this file instead of stdout")
    common.add_argument("--max-dim", type=int, default=None, help="Highest homology dimension to compute")
    common.add_argument(
        "--chain-cap",
        type=int,
        default=SearchLimits.chain_cap,
        help="Chains or sequences enumerated before giving up (default: %(default)s)",
    )
    common.add_argument(
        "--node-cap",
        type=int,
        default=SearchLimits.node_cap,
        help="Search nodes explored by the identifying set searches (default: %(default)s)",
    )
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug output")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_arguments()
    parser = argparse.ArgumentParser(
        prog="dowkerpriv",
        description="Privacy analysis of binary relations through Dowker complexes and Galois lattices",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    analyze = commands.add_parser("analyze", parents=[common], help="Privacy predicates and free faces")
    analyze.add_argument("relation")

    lattice = commands.add_parser("lattice", parents=[common], help="Galois lattice or inference lattice")
    lattice.add_argument("input", help="Relation file, or inference lattice JSON with --inference")
    lattice.add_argument("--inference", action="store_true", help="Read an inference lattice document")
    lattice.add_argument(
        "--observe",
        action="append",
        default=[],
        help="Observation in Q to interpret (comma-separated for subset posets); repeatable",
    )

    iars = commands.add_parser("iars", parents=[common], help="Informative release sequences of an individual")
    iars.add_argument("relation")
    iars.add_argument("--individual", required=True)

    homology = commands.add_parser("homology", parents=[common], help="Reduced Betti numbers of the attribute complex")
    homology.add_argument("relation")

    link = commands.add_parser("link", parents=[common], help="Homology and release survey of individual links")
    link.add_argument("relation")
    link.add_argument("--all", action="store_true", help="Survey every uniquely identifiable individual")
    link.add_argument("--individual", action="append", default=[], help="Individual to survey; repeatable")
    link.add_argument("--processes", type=int, default=1, help="Worker processes (default: %(default)s)")
    link.add_argument("--max-isotropic", type=int, default=None, help="Largest isotropic set size counted")
    link.add_argument("--scatter", help="Write the scatter measures as CSV to this file")
    link.add_argument("--hdf5", help="Save the survey records into this HDF5 file")

    strategy = commands.add_parser("strategy", parents=[common], help="Strategy complex of a graph")
    strategy.add_argument("graph", help="Graph JSON document")
    strategy.add_argument("--goal", help="Goal state whose recognition should be delayed")
    strategy.add_argument("--strategy", help="Maximal strategy name (s1, s2, ...) to release informatively")

    morphism = commands.add_parser("morphism", parents=[common], help="Properties of a relation morphism")
    morphism.add_argument("domain")
    morphism.add_argument("codomain")
    morphism.add_argument("maps", help="Morphism JSON document with individual and attribute maps")

    encode = commands.add_parser("encode", parents=[common], help="Encode multivalent CSV records as a relation")
    encode.add_argument("records", help="CSV file with a header row")
    encode.add_argument("--fields", required=True, help="Comma-separated fields to encode")
    encode.add_argument("--id-field", help="Field holding the record ids")
    encode.add_argument("--save", help="Also write the encoded relation to this file")

    embed = commands.add_parser("embed", parents=[common], help="Embeddings of one complex into another")
    embed.add_argument("pattern", help="Relation whose complex is the pattern")
    embed.add_argument("host", help="Relation whose complex is the host")
    embed.add_argument("--complex", choices=["attribute", "association"], default="attribute")

    return parser


def _limits(args) -> SearchLimits:
    return dataclasses.replace(SearchLimits(), chain_cap=args.chain_cap, node_cap=args.node_cap)


def _observation(poset, value: str):
    if isinstance(poset, SubsetPoset):
        return frozenset(v.strip() for v in value.split(",") if v.strip())
    return value


def _run(args, parser: argparse.ArgumentParser) -> dict:
    limits = _limits(args)

    if args.command == "analyze":
        r = read_relation(args.relation, args.format)
        return analyze_report(r, {"relation": args.relation})

    if args.command == "lattice":
        if args.inference:
            l = read_inference_lattice(args.input)
            observations = {v: _observation(l.q_poset, v) for v in args.observe}
            return inference_report(l, observations, {"lattice": args.input})
        return lattice_report(read_relation(args.input, args.format), {"relation": args.input})

    if args.command == "iars":
        r = read_relation(args.relation, args.format)
        return iars_report(r, args.individual, limits, {"relation": args.relation})

    if args.command == "homology":
        r = read_relation(args.relation, args.format)
        return homology_report(r, args.max_dim, limits, {"relation": args.relation})

    if args.command == "link":
        if not args.all and not args.individual:
            parser.error("link needs --all or at least one --individual")
        r = read_relation(args.relation, args.format)
        records = link_survey(
            r,
            individuals=None if args.all else args.individual,
            max_dim=args.max_dim,
            max_isotropic_size=args.max_isotropic,
            limits=limits,
            n_processes=args.processes,
        )
        points = scatter_measures(records)
        if args.scatter:
            write_scatter_csv(points, args.scatter)
        if args.hdf5:
            save_link_survey(args.hdf5, records, file_override=True)
        return link_report(records, points, {"relation": args.relation})

    if args.command == "strategy":
        g = read_graph(args.graph)
        return strategy_report(g, limits, {"graph": args.graph}, goal=args.goal, strategy=args.strategy)

    if args.command == "morphism":
        domain = read_relation(args.domain, args.format)
        codomain = read_relation(args.codomain, args.format)
        m = read_morphism(args.maps, domain, codomain)
        return morphism_report(m, {"domain": args.domain, "codomain": args.codomain, "maps": args.maps})

    if args.command == "encode":
        fields = [f.strip() for f in args.fields.split(",") if f.strip()]
        encoded = encode_multivalent(read_records(args.records), fields, args.id_field)
        if args.save:
            write_relation(encoded.relation, args.save, args.format)
        return encode_report(encoded, {"records": args.records})

    if args.command == "embed":
        build = dowker_attribute_complex if args.complex == "attribute" else dowker_association_complex
        pattern = build(read_relation(args.pattern, args.format))
        host = build(read_relation(args.host, args.format))
        return embed_report(pattern, host, limits, {"pattern": args.pattern, "host": args.host})

    parser.error(f"Unknown command {args.command}")


def main(argv: Sequence[str] = None) -> int:
    """
    Runs the command line interface.

    Returns 0 on success and 1 on data errors; usage errors exit with code 2.
    """

    parser = build_parser()
    args = parser.parse_args(argv)

    logging.basicConfig(
        format=LOG_FORMAT,
        datefmt="%H:%M",
        level=LOG_LEVELS[min(args.verbose, len(LOG_LEVELS) - 1)],
    )

    try:
        report = _run(args, parser)
    except (ValueError, OSError, CapExceededError, TooLargeError) as e:
        print(f"dowkerpriv: error: {e}", file=sys.stderr)
        return 1

    text = to_json(report)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        logger.info("Report written to %s", args.out)
    else:
        sys.stdout.write(text)
    return 0
