from .documents import CoveringDocument, DocumentMetadata, document_for, read_document, write_document
from .svg_renderer import SvgRenderer
from .tables import pieces_table, trace_table

__all__ = [
    "CoveringDocument",
    "DocumentMetadata",
    "SvgRenderer",
    "document_for",
    "pieces_table",
    "read_document",
    "trace_table",
    "write_document",
]
