"""CSV and JSON-lines output for flat result records."""

import csv
import io
import json
import logging
import math
import os
import sys
from typing import Any, Dict, Iterable, List, Optional, Sequence

logger = logging.getLogger("entrydeterrence.reporting")

SOLVE_COLUMNS = (
    "alpha", "beta", "theta", "phi", "c", "R",
    "regime", "x_star", "entry", "profit_p1", "profit_p2", "total",
    "pi_A_star", "pi_D_star", "advantage",
)
CHECK_COLUMNS = (
    "label", "status", "closed_form", "brute_force", "discrepancy", "tolerance",
    "regime_closed_form", "regime_brute_force", "x_closed_form", "x_brute_force",
)
# Echoed exactly so a record can be fed back as a config file
INPUT_COLUMNS = frozenset({"alpha", "beta", "theta", "phi", "c", "R"})


def format_number(value: Any) -> str:
    """Text form of one cell: floats to 9 significant digits, None empty."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        if math.isnan(value):
            return "nan"
        return format(value, ".9g")
    return str(value)


def _format_cell(column: str, value: Any) -> str:
    if column in INPUT_COLUMNS and isinstance(value, float) and not isinstance(value, bool):
        return repr(value)
    return format_number(value)


def _json_value(column: str, value: Any) -> Any:
    if isinstance(value, float) and column not in INPUT_COLUMNS and math.isfinite(value):
        return float(format(value, ".9g"))
    return value


class RecordWriter:
    """Writes flat records as CSV or JSON lines to a file or stdout."""

    def __init__(self, output_format: str = "csv", output_path: Optional[str] = None):
        """Initialize the record writer.

        Args:
            output_format: "csv" or "jsonl"
            output_path: Destination file; stdout when None
        """
        if output_format not in ("csv", "jsonl"):
            raise ValueError(f"Unsupported output format: {output_format}")
        self.output_format = output_format
        self.output_path = output_path

    def render(self, records: Iterable[Dict[str, Any]], columns: Optional[Sequence[str]] = None) -> str:
        records = list(records)
        if columns is None:
            columns = list(records[0].keys()) if records else []
        if self.output_format == "jsonl":
            return "".join(
                json.dumps({col: _json_value(col, record.get(col)) for col in columns}) + "\n" for record in records
            )
        return self._render_csv(records, columns)

    def _render_csv(self, records: List[Dict[str, Any]], columns: Sequence[str]) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(columns)
        for record in records:
            writer.writerow([_format_cell(col, record.get(col)) for col in columns])
        return buffer.getvalue()

    def write(self, records: Iterable[Dict[str, Any]], columns: Optional[Sequence[str]] = None) -> Optional[str]:
        """Write records; returns the output path if a file was written."""
        text = self.render(records, columns)
        if not self.output_path:
            sys.stdout.write(text)
            sys.stdout.flush()
            return None

        directory = os.path.dirname(self.output_path)
        if directory and not os.path.exists(directory):
            os.makedirs(directory)
            logger.info(f"Created output directory: {directory}")
        with open(self.output_path, "w", newline="") as f:
            f.write(text)
        logger.info(f"Wrote {self.output_format} output to {self.output_path}")
        return self.output_path

    def write_text(self, text: str) -> None:
        """Plain text goes to the output file if one is set, else to stdout."""
        if self.output_path:
            with open(self.output_path, "w") as f:
                f.write(text)
            logger.info(f"Wrote summary to {self.output_path}")
            return
        sys.stdout.write(text)

