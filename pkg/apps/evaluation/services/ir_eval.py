"""
IR-style evaluation of extracted causal sentences against expert marks.

E is the set of sentences an expert marked as causal, A the set the
extractor returned. Sentences are identified by (doc_id, sentence_index).
"""
import logging
from dataclasses import dataclass
from pathlib import Path
from statistics import fmean
from typing import Iterable, Optional, Sequence

from apps.evaluation.exceptions import EvaluationError

from .metrics import f_from_precision_recall, ratio

logger = logging.getLogger(__name__)

SentenceKey = tuple[str, int]


@dataclass(frozen=True)
class IrEvalResult:
    relevant: frozenset
    retrieved: frozenset
    precision: Optional[float]
    recall: Optional[float]
    f: Optional[float]

    @property
    def n_relevant(self) -> int:
        return len(self.relevant)

    @property
    def n_retrieved(self) -> int:
        return len(self.retrieved)

    @property
    def n_overlap(self) -> int:
        return len(self.relevant & self.retrieved)


def ir_eval(expert: Iterable, algorithm: Iterable) -> IrEvalResult:
    relevant, retrieved = frozenset(expert), frozenset(algorithm)
    overlap = len(relevant & retrieved)
    precision = ratio(overlap, len(retrieved))
    recall = ratio(overlap, len(relevant))
    return IrEvalResult(
        relevant=relevant,
        retrieved=retrieved,
        precision=precision,
        recall=recall,
        f=f_from_precision_recall(precision, recall),
    )


def _mean(values: Iterable[Optional[float]]) -> Optional[float]:
    defined = [v for v in values if v is not None]
    return fmean(defined) if defined else None


@dataclass(frozen=True)
class ReportEvaluation:
    """One expert's marks scored report by report."""

    expert: str
    reports: tuple[tuple[str, IrEvalResult], ...]

    @property
    def mean_precision(self) -> Optional[float]:
        return _mean(r.precision for _, r in self.reports)

    @property
    def mean_recall(self) -> Optional[float]:
        return _mean(r.recall for _, r in self.reports)

    @property
    def mean_f(self) -> Optional[float]:
        return _mean(r.f for _, r in self.reports)


def evaluate_reports(
    expert: Iterable[SentenceKey],
    algorithm: Iterable[SentenceKey],
    doc_ids: Optional[Sequence[str]] = None,
    name: str = "expert",
) -> ReportEvaluation:
    """
    Split E and A by report and score each report separately.

    `doc_ids` fixes the report order; by default every report named in
    either set is scored, in sorted order.
    """
    expert, algorithm = set(expert), set(algorithm)
    if doc_ids is None:
        doc_ids = sorted({doc for doc, _ in expert | algorithm})
    rows = []
    for doc_id in doc_ids:
        result = ir_eval(
            (key for key in expert if key[0] == doc_id),
            (key for key in algorithm if key[0] == doc_id),
        )
        logger.debug(
            "%s/%s: |E|=%d |A|=%d |E&A|=%d",
            name, doc_id, result.n_relevant, result.n_retrieved, result.n_overlap,
        )
        rows.append((doc_id, result))
    return ReportEvaluation(expert=name, reports=tuple(rows))


def overall_mean_f(evaluations: Sequence[ReportEvaluation]) -> Optional[float]:
    """Cross-expert average of each expert's mean F."""
    return _mean(e.mean_f for e in evaluations)


def parse_expert_ids(text: str, source: str = "expert") -> frozenset:
    """``doc_id<TAB>sentence_index`` per line; ``#`` lines are comments."""
    keys = set()
    for line_number, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        columns = line.rstrip("\r").split("\t")
        if len(columns) != 2:
            raise EvaluationError(
                f"{source}:{line_number}: expected 2 tab-separated columns, got {len(columns)}"
            )
        doc_id, raw_index = (c.strip() for c in columns)
        try:
            index = int(raw_index)
        except ValueError:
            raise EvaluationError(
                f"{source}:{line_number}: sentence index must be an integer, got {raw_index!r}"
            ) from None
        if not doc_id or index < 0:
            raise EvaluationError(f"{source}:{line_number}: invalid sentence id")
        keys.add((doc_id, index))
    return frozenset(keys)


def load_expert_ids(path: Path) -> frozenset:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise EvaluationError(f"expert file not found: {path}") from None
    keys = parse_expert_ids(text, source=str(path))
    logger.info("Loaded %d expert-marked sentences from %s", len(keys), path)
    return keys
