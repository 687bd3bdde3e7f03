import logging

from pathlib import Path
from typing import Any
from typing import Callable
from typing import Tuple
from typing import Union

from dowkerpriv.inference import FinitePoset
from dowkerpriv.inference import InferenceLattice
from dowkerpriv.inference import SubsetPoset
from dowkerpriv.inference import prefix_order_poset
from dowkerpriv.utils.exceptions import ParseError
from dowkerpriv.utils.interfaces.documents import load_json_document

logger = logging.getLogger(__name__)


def _parse_poset(name: str, entry: Any) -> Tuple[FinitePoset, Callable]:
    """Returns the poset and the converter from JSON values to its elements"""

    if not isinstance(entry, dict):
        raise ParseError(f"Poset {name} must be a JSON object")

    if "universe" in entry:
        universe = [str(u) for u in entry["universe"]]
        return SubsetPoset(universe), lambda v: frozenset(str(u) for u in v)

    if "sequences" in entry:
        return prefix_order_poset([str(s) for s in entry["sequences"]]), str

    if "elements" in entry:
        elements = [str(e) for e in entry["elements"]]
        pairs = [(str(a), str(b)) for a, b in entry.get("order", [])]
        return FinitePoset.from_pairs(elements, pairs), str

    raise ParseError(f"Poset {name} needs one of 'universe', 'sequences' or 'elements'")


def parse_inference_lattice(data: Union[bytes, str]) -> InferenceLattice:
    """
    Parses an inference lattice.

    P and Q are each given in one of three forms: {"universe": [...]} for the subsets of a
    universe, {"sequences": [...]} for sequences ordered by prefix, or {"elements": [...],
    "order": [[a, b], ...]} for an explicit poset generated by the pairs a <= b. Proper
    elements are listed as [p, q] pairs under "proper", with subsets written as arrays.

    Optional keys: "order" (pairs [[p1, q1], [p2, q2]] generating the lattice order, derived
    from P and Q otherwise), "top" (elements of Q read as the top) and "bottom" (elements of P
    read as the bottom).

    Parameters
    ----------
    data: bytes or str
        JSON document

    Returns
    -------
        InferenceLattice
    """

    document = load_json_document(data)
    for key in ("P", "Q", "proper"):
        if key not in document:
            raise ParseError(f"Lattice document is missing {key!r}")

    p_poset, p_value = _parse_poset("P", document["P"])
    q_poset, q_value = _parse_poset("Q", document["Q"])

    def element(entry):
        if not isinstance(entry, list) or len(entry) != 2:
            raise ParseError(f"Invalid proper element {entry!r}")
        return p_value(entry[0]), q_value(entry[1])

    proper = [element(e) for e in document["proper"]]
    order = None
    if "order" in document:
        order = [(element(a), element(b)) for a, b in document["order"]]

    lattice = InferenceLattice(
        p_poset,
        q_poset,
        proper,
        order=order,
        top_designations=[q_value(q) for q in document.get("top", [])],
        bottom_designations=[p_value(p) for p in document.get("bottom", [])],
    )
    logger.debug("Parsed inference lattice with %s proper elements", len(lattice.proper))
    return lattice


def read_inference_lattice(path: Union[str, Path]) -> InferenceLattice:
    return parse_inference_lattice(Path(path).read_bytes())
