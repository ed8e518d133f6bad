"""
Sweep orchestration: split the corpus into id-ordered chunks, verify the
chunks on the configured backend, then reduce the results in corpus order
on the calling thread. The reduction never depends on how the chunks were
scheduled, so every width and backend yields the same summary.
"""

import uuid
from dataclasses import asdict, dataclass, field
from pathlib import Path

from joblib import Parallel, delayed

from harness.checks import (
    FAILED,
    PASSED,
    SKIPPED,
    CheckContext,
    CheckResult,
    maximizer_results,
    run_checks_for_entry,
)
from harness.corpus import CorpusEntry, build_corpus
from harness.report import write_reports
from harness.runconfig import RunConfig
from logging_utils import get_module_logger, get_run_logger

sweep_logger = get_module_logger("sweep")

CHUNKS_PER_WORKER = 4
MAX_CHUNK = 256


@dataclass
class CheckTotals:
    checked: int = 0
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    equality_cases: int = 0


@dataclass
class VerificationSummary:
    totals: dict[str, CheckTotals] = field(default_factory=dict)
    failures: list[dict] = field(default_factory=list)
    results: list[CheckResult] = field(default_factory=list)
    graphs: int = 0
    report_paths: list[Path] = field(default_factory=list)

    @property
    def failed(self) -> int:
        return sum(t.failed for t in self.totals.values())

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def add(self, result: CheckResult) -> None:
        totals = self.totals.setdefault(result.check, CheckTotals())
        self.results.append(result)
        if result.result == SKIPPED:
            totals.skipped += 1
            return
        totals.checked += 1
        if result.result == PASSED:
            totals.passed += 1
            totals.equality_cases += int(result.equality)
        else:
            totals.failed += 1
            self.failures.append({
                "graph_id": result.graph_id,
                "graph6": result.graph6,
                "check": result.label,
                "detail": result.detail,
            })

    def to_dict(self) -> dict:
        return {
            "graphs": self.graphs,
            "failed": self.failed,
            "totals": {name: asdict(t) for name, t in sorted(self.totals.items())},
            "failures": self.failures,
        }


def verify_chunk(payloads: list[dict], context: dict) -> list[dict]:
    """Run every check on a chunk of wire-form corpus entries; plain data in and out."""
    ctx = CheckContext.from_dict(context)
    out = []
    for payload in payloads:
        entry = CorpusEntry.from_payload(payload)
        out += [r.to_dict() for r in run_checks_for_entry(entry, ctx)]
    return out


def chunk_entries(entries: list[CorpusEntry], workers: int) -> list[list[dict]]:
    if not entries:
        return []
    size = max(1, min(MAX_CHUNK, -(-len(entries) // (workers * CHUNKS_PER_WORKER))))
    payloads = [e.to_payload() for e in entries]
    return [payloads[i:i + size] for i in range(0, len(payloads), size)]


def _run_local(chunks: list[list[dict]], context: dict, workers: int) -> list[list[dict]]:
    if workers == 1:
        return [verify_chunk(chunk, context) for chunk in chunks]
    return Parallel(n_jobs=workers)(delayed(verify_chunk)(chunk, context) for chunk in chunks)


def _worker_failure(chunk: list[dict], error: str) -> list[dict]:
    """A lost chunk still produces one failed, replayable row per graph."""
    rows = []
    for payload in chunk:
        entry = CorpusEntry.from_payload(payload)
        rows.append(CheckResult(entry.graph_id, payload["graph6"], entry.graph.n, entry.graph.m,
                                "worker", "", FAILED, detail={"error": error}).to_dict())
    return rows


def _run_celery(chunks: list[list[dict]], context: dict) -> list[list[dict]]:
    from workers.tasks import verify_chunk_task

    pending = [verify_chunk_task.delay(chunk, context) for chunk in chunks]
    out = []
    for chunk, task in zip(chunks, pending):
        try:
            reply = task.get()
        except Exception as exc:
            sweep_logger.opt(exception=True).error(f"Chunk task {task.id} raised: {exc}")
            reply = {"status": "failed", "error": str(exc)}
        if reply.get("status") == "completed":
            out.append(reply["results"])
        else:
            out.append(_worker_failure(chunk, reply.get("error", "unknown worker error")))
    return out


def run_entries(entries: list[CorpusEntry], config: RunConfig) -> VerificationSummary:
    run_id = str(uuid.uuid4())[:6]
    log = get_run_logger(run_id)
    context = config.to_dict()
    chunks = chunk_entries(entries, config.workers)
    log.info(f"Verifying {len(entries)} graphs in {len(chunks)} chunks on {config.backend} x{config.workers}")

    match config.backend:
        case "celery":
            chunk_results = _run_celery(chunks, context)
        case _:
            chunk_results = _run_local(chunks, context, config.workers)

    summary = VerificationSummary(graphs=len(entries))
    if entries:
        for result in maximizer_results(CheckContext.from_dict(context)):
            summary.add(result)
    for rows in chunk_results:
        for row in rows:
            summary.add(CheckResult.from_dict(row))

    if summary.ok:
        log.info(f"Sweep finished: {len(summary.results)} results, no failures")
    else:
        log.warning(f"Sweep finished with {summary.failed} failures")
    return summary


def run_all(config: RunConfig, write: bool = True) -> VerificationSummary:
    """Build the configured corpus, verify every graph in it and write the reports."""
    entries = build_corpus(config.max_exhaustive_n, config.include_named, config.include_regular, config.input_files)
    summary = run_entries(entries, config)
    if write:
        summary.report_paths = write_reports(summary, config)
    return summary
