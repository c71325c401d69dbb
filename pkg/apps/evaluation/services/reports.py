"""
Result tables.

A ReportTable is the single in-memory form of every evaluation output;
it renders to TSV (with the provenance line on top) and is what the
spreadsheet export writes, one sheet per table.
"""
from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

from apps.core.services.provenance import render_tsv

from .cross_validation import CombinedF, FoldResult, combine_f
from .grid_search import GridReport
from .ir_eval import ReportEvaluation, overall_mean_f

CV_COLUMNS = ["fold", "tp", "fp", "tn", "fn", "precision", "recall", "f"]
IR_COLUMNS = ["report", "n_expert", "n_algorithm", "n_overlap", "precision", "recall", "f"]


@dataclass(frozen=True)
class ReportTable:
    title: str
    columns: list[str]
    rows: list[list] = field(default_factory=list)
    # rows after this index are summary rows (highlighted in spreadsheets)
    body_rows: Optional[int] = None

    def render(self, header: str) -> str:
        return render_tsv(header, self.columns, self.rows)

    @property
    def footer_start(self) -> int:
        return len(self.rows) if self.body_rows is None else self.body_rows


def stack_tables(title: str, key: str, tables: Sequence[ReportTable]) -> ReportTable:
    """One table from several of the same shape, keyed by each table's title."""
    if not tables:
        return ReportTable(title, [key])
    columns = [key, *tables[0].columns]
    rows = [[table.title, *row] for table in tables for row in table.rows]
    return ReportTable(title, columns, rows)


def _footer(label: str, value, width: int) -> list:
    return [label, *([""] * (width - 2)), value]


def cv_table(results: Sequence[FoldResult], combined: Optional[CombinedF] = None) -> ReportTable:
    """Fold rows, then one footer row per F combination."""
    combined = combined or combine_f(results)
    rows = [
        [r.fold_index + 1, r.cm.tp, r.cm.fp, r.cm.tn, r.cm.fn,
         r.metrics.precision, r.metrics.recall, r.metrics.f_measure]
        for r in results
    ]
    width = len(CV_COLUMNS)
    body = len(rows)
    rows.append(_footer("f_avg", combined.f_avg, width))
    rows.append(_footer("f_pr_re", combined.f_pr_re, width))
    rows.append(_footer("f_tp_fp", combined.f_tp_fp, width))
    return ReportTable("cv", list(CV_COLUMNS), rows, body_rows=body)


def grid_table(report: GridReport) -> ReportTable:
    columns = [report.param, *(f"f_{scheme.value}" for scheme in report.schemes)]
    return ReportTable(f"tune_{report.param}", columns, report.rows())


def holdout_table(results: Mapping[tuple[str, str], FoldResult],
                  schemes: Sequence[str], classifiers: Sequence[str]) -> ReportTable:
    """Weighting scheme x classifier F-measures; keys are (scheme, classifier)."""
    rows = [
        [scheme, *(results[(scheme, kind)].f_measure for kind in classifiers)]
        for scheme in schemes
    ]
    return ReportTable("holdout", ["weights", *classifiers], rows)


def compare_table(scheme: str, folds_by_classifier: Mapping[str, Sequence[FoldResult]]) -> ReportTable:
    """Fold x classifier F-measures for one scheme, with F_tp,fp as footer."""
    classifiers = list(folds_by_classifier)
    n_folds = len(next(iter(folds_by_classifier.values()), ()))
    rows = [
        [fold + 1, *(folds_by_classifier[kind][fold].f_measure for kind in classifiers)]
        for fold in range(n_folds)
    ]
    body = len(rows)
    rows.append(["f_tp_fp", *(combine_f(folds_by_classifier[k]).f_tp_fp for k in classifiers)])
    return ReportTable(scheme, ["fold", *classifiers], rows, body_rows=body)


def ir_table(evaluation: ReportEvaluation) -> ReportTable:
    rows = [
        [doc_id, r.n_relevant, r.n_retrieved, r.n_overlap, r.precision, r.recall, r.f]
        for doc_id, r in evaluation.reports
    ]
    body = len(rows)
    rows.append(["mean", "", "", "", evaluation.mean_precision,
                 evaluation.mean_recall, evaluation.mean_f])
    return ReportTable(evaluation.expert, list(IR_COLUMNS), rows, body_rows=body)


def ir_tables(evaluations: Sequence[ReportEvaluation]) -> tuple[ReportTable, ReportTable]:
    """
    Stacked per-expert table closed by the cross-expert mean F row, plus
    a summary table with one mean row per expert.
    """
    stacked = stack_tables("eval_extract", "expert", [ir_table(e) for e in evaluations])
    overall = overall_mean_f(evaluations)
    body = len(stacked.rows)
    stacked.rows.append(["overall", "mean", "", "", "", "", "", overall])
    stacked = ReportTable(stacked.title, stacked.columns, stacked.rows, body_rows=body)

    rows = [[e.expert, e.mean_precision, e.mean_recall, e.mean_f] for e in evaluations]
    rows.append(["overall", "", "", overall])
    summary = ReportTable(
        "experts", ["expert", "precision", "recall", "f"], rows, body_rows=len(evaluations)
    )
    return stacked, summary


def predictions_table(keys: Sequence, labels: Sequence[int], scores: Sequence[float]) -> ReportTable:
    rows = [
        [doc_id, index, "+1" if label == 1 else "-1", float(score)]
        for (doc_id, index), label, score in zip(keys, labels, scores)
    ]
    return ReportTable("predictions", ["doc_id", "sentence_index", "label", "score"], rows)


def extraction_table(matches) -> ReportTable:
    rows = [
        [m.sentence.doc_id, m.sentence.index, m.category.value, m.connective, m.sentence.text]
        for m in matches
    ]
    return ReportTable(
        "extract", ["doc_id", "sentence_index", "category", "connective", "text"], rows
    )


def zipf_table(table) -> ReportTable:
    rows = [[row.rank, row.term, row.freq, row.product] for row in table]
    return ReportTable("zipf", ["rank", "term", "freq", "rank_freq"], rows)
