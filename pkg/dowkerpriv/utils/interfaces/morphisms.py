import logging

from pathlib import Path
from typing import Union

from dowkerpriv.models import Relation
from dowkerpriv.models import RelationMorphism
from dowkerpriv.utils.exceptions import ParseError
from dowkerpriv.utils.interfaces.documents import load_json_document

logger = logging.getLogger(__name__)


def parse_morphism(data: Union[bytes, str], domain: Relation, codomain: Relation) -> RelationMorphism:
    """
    Parses the maps of a relation morphism.

    The document holds two objects, "individuals" and "attributes", mapping domain ids to
    codomain ids. Totality and validity are left to the morphism checks.

    Parameters
    ----------
    data: bytes or str
        JSON document
    domain: Relation
    codomain: Relation

    Returns
    -------
        RelationMorphism
    """

    document = load_json_document(data)
    for key in ("individuals", "attributes"):
        if not isinstance(document.get(key), dict):
            raise ParseError(f"Morphism document needs an object {key!r}")

    fx = {str(k): str(v) for k, v in document["individuals"].items()}
    fy = {str(k): str(v) for k, v in document["attributes"].items()}
    return RelationMorphism(domain, codomain, fx, fy)


def read_morphism(path: Union[str, Path], domain: Relation, codomain: Relation) -> RelationMorphism:
    return parse_morphism(Path(path).read_bytes(), domain, codomain)
