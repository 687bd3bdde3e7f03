import csv
import io
import json
import logging

from pathlib import Path
from typing import List
from typing import Union

from dowkerpriv.models import Relation
from dowkerpriv.models import RelationFormat
from dowkerpriv.utils.exceptions import ParseError
from dowkerpriv.utils.interfaces.documents import SCHEMA_VERSION
from dowkerpriv.utils.interfaces.documents import load_json_document

logger = logging.getLogger(__name__)

_EXTENSIONS = {
    ".csv": RelationFormat.CSV_MATRIX,
    ".json": RelationFormat.JSON,
    ".pairs": RelationFormat.PAIRS,
    ".txt": RelationFormat.PAIRS,
}


def _as_text(data: Union[bytes, str]) -> str:
    if isinstance(data, bytes):
        try:
            return data.decode("utf-8-sig")
        except UnicodeDecodeError as e:
            raise ParseError(f"Input is not valid UTF-8: {e}") from None
    return data


def _build(individuals: List[str], attributes: List[str], pairs: List[tuple]) -> Relation:
    x_index = {x: i for i, x in enumerate(individuals)}
    y_index = {y: j for j, y in enumerate(attributes)}
    rows = [0] * len(individuals)
    for x, y in pairs:
        rows[x_index[x]] |= 1 << y_index[y]
    return Relation(individuals, attributes, rows)


def _parse_csv_matrix(text: str) -> Relation:
    lines = [line for line in csv.reader(io.StringIO(text))]
    while lines and not any(cell.strip() for cell in lines[-1]):
        lines.pop()
    if not lines:
        raise ParseError("CSV matrix is empty", line=1)

    header = [cell.strip() for cell in lines[0]]
    attributes = header[1:]
    individuals = []
    pairs = []

    for line_no, cells in enumerate(lines[1:], start=2):
        if len(cells) != len(header):
            raise ParseError(f"Expected {len(header)} cells, got {len(cells)}", line=line_no)

        x = cells[0].strip()
        individuals.append(x)
        for col_no, (y, cell) in enumerate(zip(attributes, cells[1:]), start=2):
            cell = cell.strip()
            if cell == "1":
                pairs.append((x, y))
            elif cell not in ("0", ""):
                raise ParseError(f"Invalid cell {cell!r}, expected 0, 1 or blank", line=line_no, column=col_no)

    return _build(individuals, attributes, pairs)


def _serialize_csv_matrix(r: Relation) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow([""] + list(r.attributes))
    for x, row in zip(r.individuals, r.rows):
        writer.writerow([x] + ["1" if row >> j & 1 else "0" for j in range(r.n_attributes)])
    return out.getvalue()


def _split_ids(value: str) -> List[str]:
    return [v.strip() for v in value.split(",") if v.strip()]


def _parse_pairs(text: str) -> Relation:
    individuals, attributes = None, None
    seen_x, seen_y = [], []
    pairs, unique = [], set()

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue

        if line.startswith("#"):
            directive = line[1:].strip()
            if directive.startswith("individuals:"):
                individuals = _split_ids(directive[len("individuals:") :])
            elif directive.startswith("attributes:"):
                attributes = _split_ids(directive[len("attributes:") :])
            continue

        cells = [c.strip() for c in line.split(",")]
        if len(cells) != 2 or not all(cells):
            raise ParseError("Expected a line of the form individual,attribute", line=line_no)

        x, y = cells
        if (x, y) in unique:
            logger.warning("Duplicate pair (%s, %s) on line %s", x, y, line_no)
            continue
        unique.add((x, y))
        pairs.append((x, y))
        if x not in seen_x:
            seen_x.append(x)
        if y not in seen_y:
            seen_y.append(y)

    individuals = seen_x if individuals is None else individuals
    attributes = seen_y if attributes is None else attributes

    known_x, known_y = set(individuals), set(attributes)
    for x, y in pairs:
        if x not in known_x:
            raise ParseError(f"Individual {x!r} is missing from the individuals directive")
        if y not in known_y:
            raise ParseError(f"Attribute {y!r} is missing from the attributes directive")

    return _build(individuals, attributes, pairs)


def _serialize_pairs(r: Relation) -> str:
    lines = [
        "# individuals: " + ",".join(r.individuals),
        "# attributes: " + ",".join(r.attributes),
    ]
    lines += [f"{x},{y}" for x, y in r.pairs()]
    return "\n".join(lines) + "\n"


def _parse_json(text: str) -> Relation:
    document = load_json_document(text)
    for key in ("individuals", "attributes", "pairs"):
        if key not in document:
            raise ParseError(f"Relation document is missing {key!r}")

    individuals = [str(x) for x in document["individuals"]]
    attributes = [str(y) for y in document["attributes"]]
    pairs = []
    known_x, known_y = set(individuals), set(attributes)
    for pair in document["pairs"]:
        if not isinstance(pair, list) or len(pair) != 2:
            raise ParseError(f"Invalid pair {pair!r}")
        x, y = str(pair[0]), str(pair[1])
        if x not in known_x or y not in known_y:
            raise ParseError(f"Pair {pair!r} references unknown ids")
        pairs.append((x, y))

    return _build(individuals, attributes, pairs)


def _serialize_json(r: Relation) -> str:
    document = {
        "schema_version": SCHEMA_VERSION,
        "individuals": list(r.individuals),
        "attributes": list(r.attributes),
        "pairs": [list(p) for p in r.pairs()],
    }
    return json.dumps(document, indent=2) + "\n"


def parse_relation(data: Union[bytes, str], fmt: Union[RelationFormat, str]) -> Relation:
    """
    Parses a relation document.

    Parameters
    ----------
    data: bytes or str
        Document contents
    fmt: RelationFormat or str
        "csv-matrix" (header row of attribute ids, one row per individual, cells 0, 1 or
        blank), "pairs" (one individual,attribute pair per line, with optional
        "# individuals:" and "# attributes:" directives fixing the universes) or "json"

    Returns
    -------
        Relation
    """

    fmt = RelationFormat(fmt)
    text = _as_text(data)

    if fmt == RelationFormat.CSV_MATRIX:
        return _parse_csv_matrix(text)
    elif fmt == RelationFormat.PAIRS:
        return _parse_pairs(text)
    else:
        return _parse_json(text)


def serialize_relation(r: Relation, fmt: Union[RelationFormat, str]) -> bytes:
    """Serializes a relation; parsing the result gives back the same relation"""

    fmt = RelationFormat(fmt)
    if fmt == RelationFormat.CSV_MATRIX:
        text = _serialize_csv_matrix(r)
    elif fmt == RelationFormat.PAIRS:
        text = _serialize_pairs(r)
    else:
        text = _serialize_json(r)
    return text.encode("utf-8")


def guess_format(path: Union[str, Path]) -> RelationFormat:
    suffix = Path(path).suffix.lower()
    try:
        return _EXTENSIONS[suffix]
    except KeyError:
        raise ValueError(f"Cannot infer the relation format of {path}; pass it explicitly") from None


def read_relation(path: Union[str, Path], fmt: Union[RelationFormat, str] = None) -> Relation:
    fmt = guess_format(path) if fmt is None else RelationFormat(fmt)
    logger.debug("Reading %s relation from %s", fmt.value, path)
    return parse_relation(Path(path).read_bytes(), fmt)


def write_relation(r: Relation, path: Union[str, Path], fmt: Union[RelationFormat, str] = None) -> None:
    fmt = guess_format(path) if fmt is None else RelationFormat(fmt)
    Path(path).write_bytes(serialize_relation(r, fmt))
    logger.info("Relation written to %s", path)
