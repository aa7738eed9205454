"""CoveringDocument JSON: every rational is a "p/q" string (or "p"), never a float."""

import json
import logging
import re

from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any

from tricover.config import SCHEMA_VERSION, TRIANGLE_KEYS
from tricover.core.errors import DocumentError, GeometryError
from tricover.core.models import Covering, HTriangle, PieceRole, Region


logger = logging.getLogger(__name__)

RATIONAL_PATTERN = re.compile(r"^-?\d+(/\d+)?$")


def rat_to_str(value: Fraction) -> str:
    return str(Fraction(value))


def parse_rat(text: Any) -> Fraction:
    if not isinstance(text, str) or not RATIONAL_PATTERN.match(text):
        raise DocumentError(f"Expected an exact rational string like \"3/4\", got {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError as e:
        raise DocumentError(f"Zero denominator in {text!r}") from e


@dataclass(frozen=True)
class DocumentMetadata:
    construction: str | None = None
    n: int | None = None
    eps: Fraction | None = None
    label: str = ""

    def to_dict(self) -> dict[str, Any]:
        return {
            "construction": self.construction,
            "n": self.n,
            "eps": None if self.eps is None else rat_to_str(self.eps),
            "label": self.label,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "DocumentMetadata":
        n = data.get("n")
        if n is not None and (isinstance(n, bool) or not isinstance(n, int)):
            raise DocumentError(f"metadata.n must be an integer, got {n!r}")
        eps = data.get("eps")
        return cls(
            construction=data.get("construction"),
            n=n,
            eps=None if eps is None else parse_rat(eps),
            label=str(data.get("label", "")),
        )


@dataclass(frozen=True)
class CoveringDocument:
    covering: Covering
    metadata: DocumentMetadata = field(default_factory=DocumentMetadata)
    schema_version: int = SCHEMA_VERSION

    def to_dict(self) -> dict[str, Any]:
        return {
            "schema_version": self.schema_version,
            "metadata": self.metadata.to_dict(),
            "target": [triangle_to_dict(part) for part in self.covering.target.parts],
            "pieces": [
                triangle_to_dict(piece) | {"role": role.value}
                for piece, role in zip(self.covering.pieces, self.covering.roles)
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, data: Any) -> "CoveringDocument":
        if not isinstance(data, dict):
            raise DocumentError("Document root must be a JSON object")
        version = data.get("schema_version")
        if version != SCHEMA_VERSION:
            raise DocumentError(f"Unsupported schema_version {version!r}; expected {SCHEMA_VERSION}")
        for key in ("target", "pieces"):
            if not isinstance(data.get(key), list):
                raise DocumentError(f"'{key}' must be a list of triangles")

        metadata = DocumentMetadata.from_dict(data.get("metadata") or {})
        try:
            target = Region(tuple(triangle_from_dict(item) for item in data["target"]))
            pieces = tuple(triangle_from_dict(item) for item in data["pieces"])
            roles = tuple(parse_role(item) for item in data["pieces"])
            covering = Covering(target=target, pieces=pieces, label=metadata.label, roles=roles)
        except GeometryError as e:
            raise DocumentError(f"Invalid geometry in document: {e}") from e
        return cls(covering=covering, metadata=metadata, schema_version=version)

    @classmethod
    def from_json(cls, text: str) -> "CoveringDocument":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise DocumentError(f"JSON decode error: {e}") from e
        return cls.from_dict(data)


def triangle_to_dict(tri: HTriangle) -> dict[str, str]:
    return {key: rat_to_str(getattr(tri, key)) for key in TRIANGLE_KEYS}


def triangle_from_dict(data: Any) -> HTriangle:
    if not isinstance(data, dict):
        raise DocumentError(f"Triangle must be an object, got {data!r}")
    missing = [key for key in TRIANGLE_KEYS if key not in data]
    if missing:
        raise DocumentError(f"Triangle is missing {missing}")
    return HTriangle(**{key: parse_rat(data[key]) for key in TRIANGLE_KEYS})


def parse_role(data: dict[str, Any]) -> PieceRole:
    role = data.get("role", PieceRole.PIECE.value)
    try:
        return PieceRole(role)
    except ValueError as e:
        raise DocumentError(f"Unknown piece role {role!r}") from e


def document_for(covering: Covering, construction: str | None = None, n: int | None = None,
                 eps: Fraction | None = None) -> CoveringDocument:
    return CoveringDocument(covering, DocumentMetadata(construction, n, eps, covering.label))


def write_document(document: CoveringDocument, path: Path | str) -> None:
    Path(path).write_text(document.to_json() + "\n", encoding="utf-8")
    logger.info(f"Wrote {len(document.covering.pieces)} pieces to {path}")


def read_document(path: Path | str) -> CoveringDocument:
    document = CoveringDocument.from_json(Path(path).read_text(encoding="utf-8"))
    logger.info(f"Read '{document.covering.label}' ({len(document.covering.pieces)} pieces) from {path}")
    return document
