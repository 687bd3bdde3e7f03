import json

from typing import Union

from dowkerpriv.utils.exceptions import ParseError

SCHEMA_VERSION = 1


def load_json_document(data: Union[bytes, str]) -> dict:
    """Decodes a versioned JSON object, mapping syntax errors to ParseError with their location"""

    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8-sig")
        except UnicodeDecodeError as e:
            raise ParseError(f"Input is not valid UTF-8: {e}") from None

    try:
        document = json.loads(data)
    except json.JSONDecodeError as e:
        raise ParseError(f"Invalid JSON: {e.msg}", line=e.lineno, column=e.colno) from None

    if not isinstance(document, dict):
        raise ParseError("Document must be a JSON object")

    version = document.get("schema_version", SCHEMA_VERSION)
    if version != SCHEMA_VERSION:
        raise ParseError(f"Unsupported schema version {version}")
    return document
