"""
Report writers.

JSON layout (schema_version 1):
  {"schema_version": 1,
   "header": {"generated_at": ..., "tool": ...},
   "config": {...}, "summary": {...}, "results": [...]}

Everything outside "header" is a pure function of the configuration, so
two runs with the same config differ only inside "header".
CSV columns: graph_id, graph6, n, m, check, result, lhs_bits, rhs_bits, slack_bits.
"""

import csv
import json
from datetime import datetime, timezone
from pathlib import Path
from typing import TYPE_CHECKING

from indset.errors import IndsetError
from harness.runconfig import RunConfig
from logging_utils import get_module_logger

if TYPE_CHECKING:
    from harness.sweep import VerificationSummary

report_logger = get_module_logger("report")

SCHEMA_VERSION = 1
TOOL_NAME = "indset-bounds"
CSV_COLUMNS = ["graph_id", "graph6", "n", "m", "check", "result", "lhs_bits", "rhs_bits", "slack_bits"]


def report_document(summary: "VerificationSummary", config: RunConfig) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "header": {
            "generated_at": datetime.now(timezone.utc).isoformat(),
            "tool": TOOL_NAME,
        },
        "config": config.to_dict(),
        "summary": summary.to_dict(),
        "results": [r.to_dict() for r in summary.results],
    }


def write_json(summary: "VerificationSummary", config: RunConfig, path: Path) -> Path:
    document = report_document(summary, config)
    path.write_text(json.dumps(document, indent=2, sort_keys=False) + "\n")
    return path


def write_csv(summary: "VerificationSummary", path: Path) -> Path:
    with path.open("w", newline="") as handle:
        writer = csv.DictWriter(handle, fieldnames=CSV_COLUMNS)
        writer.writeheader()
        for result in summary.results:
            writer.writerow(result.row())
    return path


def write_reports(summary: "VerificationSummary", config: RunConfig) -> list[Path]:
    out_dir = Path(config.output_dir)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        paths = []
        for fmt in config.formats:
            match fmt:
                case "json":
                    paths.append(write_json(summary, config, out_dir / "report.json"))
                case "csv":
                    paths.append(write_csv(summary, out_dir / "report.csv"))
    except OSError as exc:
        report_logger.opt(exception=True).error(f"Could not write reports to {out_dir}: {exc}")
        raise IndsetError(f"Could not write reports to {out_dir}: {exc}") from exc
    for path in paths:
        report_logger.info(f"Report written to {path}")
    return paths
