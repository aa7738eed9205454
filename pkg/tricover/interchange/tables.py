import pandas as pd

from tricover.core.plfunc import PLFunc
from tricover.core.projection import BoundReport


PIECE_COLUMNS = ["start", "end", "value", "left_limit", "slope"]

PIECE_DTYPE_MAP = {
    "start": str,
    "end": str,
    "value": str,
    "left_limit": str,
    "slope": str,
}

TRACE_COLUMNS = ["step", "holds", "detail"]

TRACE_DTYPE_MAP = {
    "step": str,
    "holds": bool,
    "detail": str,
}


def pieces_table(f: PLFunc) -> pd.DataFrame:
    """One row per piece; values stay exact as "p/q" strings."""
    rows = []
    for i, piece in enumerate(f.pieces):
        end = f.piece_end(i)
        rows.append(
            {
                "start": str(piece.start),
                "end": str(end),
                "value": str(piece.value),
                "left_limit": str(f.left_limit(end)),
                "slope": str(piece.slope),
            }
        )
    return pd.DataFrame(rows).reindex(columns=PIECE_COLUMNS).astype(PIECE_DTYPE_MAP)


def trace_table(report: BoundReport) -> pd.DataFrame:
    rows = [{"step": step.name, "holds": step.holds, "detail": step.detail} for step in report.trace]
    if not rows:
        return pd.DataFrame(columns=TRACE_COLUMNS).astype(TRACE_DTYPE_MAP)
    return pd.DataFrame(rows).reindex(columns=TRACE_COLUMNS).astype(TRACE_DTYPE_MAP)
