import csv
import logging

from collections import OrderedDict
from pathlib import Path
from typing import Any
from typing import Dict
from typing import List
from typing import Mapping
from typing import Sequence
from typing import Union

from dowkerpriv.models import EncodedRelation
from dowkerpriv.models import Relation
from dowkerpriv.utils.exceptions import MissingFieldError
from dowkerpriv.utils.exceptions import PreconditionViolatedError

logger = logging.getLogger(__name__)


def encode_multivalent(
    records: Sequence[Mapping[str, Any]],
    fields: Sequence[str],
    id_field: str = None,
) -> EncodedRelation:
    """
    Encodes records with multivalent fields as a binary relation.

    Every (field, value) pair that occurs becomes an attribute named `field=value`, so each
    individual has exactly one attribute per field. Records with identical values on all
    fields are merged into one individual, named after the first record of the class.

    Parameters
    ----------
    records: sequence of mapping
        Records as field -> value mappings
    fields: sequence of str
        Fields to encode, in attribute order
    id_field: str (optional)
        Field holding the record ids. Default = None (records are numbered from 1)

    Returns
    -------
        EncodedRelation
    """

    if len(records) == 0 or len(fields) == 0:
        raise PreconditionViolatedError("Need at least one record and one field to encode")
    if len(set(fields)) != len(fields):
        raise PreconditionViolatedError("Fields must be distinct")

    values: Dict[str, List[str]] = OrderedDict((f, []) for f in fields)
    classes: Dict[tuple, List[str]] = OrderedDict()

    for i, record in enumerate(records):
        record_id = str(i + 1)
        if id_field is not None:
            if id_field not in record:
                raise MissingFieldError(f"Record {i + 1} has no field {id_field!r}")
            record_id = str(record[id_field])

        key = []
        for f in fields:
            if f not in record:
                raise MissingFieldError(f"Record {record_id} has no field {f!r}")
            value = str(record[f])
            if value not in values[f]:
                values[f].append(value)
            key.append(value)

        classes.setdefault(tuple(key), []).append(record_id)

    attributes = [f"{f}={v}" for f in fields for v in values[f]]
    index = {a: j for j, a in enumerate(attributes)}

    individuals, rows = [], []
    multiplicities, members = {}, {}
    for key, ids in classes.items():
        name = ids[0]
        individuals.append(name)
        rows.append(sum(1 << index[f"{f}={v}"] for f, v in zip(fields, key)))
        multiplicities[name] = len(ids)
        members[name] = tuple(ids)

    logger.debug(
        "Encoded %s records as %s individuals and %s attributes", len(records), len(individuals), len(attributes)
    )
    if len(individuals) < len(records):
        logger.info("Merged %s duplicate records", len(records) - len(individuals))

    return EncodedRelation(Relation(individuals, attributes, rows), multiplicities, members)


def read_records(path: Union[str, Path]) -> List[Dict[str, str]]:
    """Reads records from a CSV file with a header row"""

    with open(path, newline="", encoding="utf-8") as file:
        return [dict(row) for row in csv.DictReader(file)]
