"""
Reading and writing TOML documents.

Every document carries a ``kind`` key naming what it holds.
"""

import logging
from pathlib import Path
from typing import Any, Dict, Mapping, Union

import tomlkit
from tomlkit.exceptions import TOMLKitError
from tomlkit.toml_document import TOMLDocument

from src.errors import InputError

logger = logging.getLogger(__name__)

INPUT_KINDS = ("point_set", "two_subset_family", "game", "labeled_complex")


def parse_document(text: str, source: str = "<string>") -> Dict[str, Any]:
    """
    Parse TOML text into plain Python values.

    Raises:
        InputError: On invalid TOML or a missing ``kind`` key
    """
    try:
        document = tomlkit.parse(text)
    except TOMLKitError as e:
        logger.error("Invalid TOML in %s: %s", source, e)
        raise InputError(f"Invalid TOML in {source}: {e}") from e
    data = document.unwrap()
    if not isinstance(data.get("kind"), str):
        raise InputError(f"Document {source} has no 'kind' key")
    return data


def read_document(path: Union[str, Path], kind: str) -> Dict[str, Any]:
    """
    Read a document from ``path`` and require its kind.

    Args:
        path: File to read
        kind: Expected value of the ``kind`` key

    Returns:
        The document as plain dicts and lists

    Raises:
        InputError: If the file is missing or unreadable, not TOML, or of another kind
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except (FileNotFoundError, IsADirectoryError, UnicodeDecodeError) as e:
        logger.error("Cannot read %s: %s", path, e)
        raise InputError(f"Cannot read {path}: {e}") from e
    data = parse_document(text, str(path))
    if data["kind"] != kind:
        raise InputError(f"{path} holds a {data['kind']!r} document, expected {kind!r}")
    return data


def require(data: Mapping[str, Any], key: str, kind: str) -> Any:
    """Fetch a mandatory key, as an InputError when it is absent."""
    try:
        return data[key]
    except KeyError as e:
        logger.error("%s document lacks %r", kind, key)
        raise InputError(f"{kind} document is missing the {key!r} key") from e


def new_document(kind: str) -> TOMLDocument:
    document = tomlkit.document()
    document.add("kind", kind)
    return document


def dump_document(document: TOMLDocument) -> str:
    return tomlkit.dumps(document)


def write_document(document: TOMLDocument, path: Union[str, Path]) -> None:
    Path(path).write_text(dump_document(document), encoding="utf-8")
    logger.info("Wrote %s document to %s", document["kind"], path)
