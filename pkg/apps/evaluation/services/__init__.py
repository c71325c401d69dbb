# Metrics, folds, cross-validation, grid search, IR evaluation and reports.
from .cross_validation import (
    CombinedF,
    FoldResult,
    combine_f,
    cross_validate,
    evaluate_split,
    holdout_evaluate,
    run_tasks,
)
from .excel_export import ReportExcelExporter
from .folds import kfold_split
from .grid_search import C_GRID, SIGMA_GRID, GridCell, GridReport, grid_search
from .ir_eval import (
    IrEvalResult,
    ReportEvaluation,
    evaluate_reports,
    ir_eval,
    load_expert_ids,
    overall_mean_f,
    parse_expert_ids,
)
from .metrics import ConfusionMatrix, MetricSet, confusion, f_from_counts, metrics
from .plots import plot_f_comparison, plot_zipf
from .reports import (
    ReportTable,
    compare_table,
    cv_table,
    extraction_table,
    grid_table,
    holdout_table,
    ir_table,
    ir_tables,
    predictions_table,
    stack_tables,
    zipf_table,
)
from .sentence_classifier import (
    ClassifierKind,
    ClassifierSpec,
    SentenceClassifier,
    TokenizedCorpus,
    dump_classifier,
    fit_classifier,
    load_classifier,
)

__all__ = [
    "C_GRID",
    "SIGMA_GRID",
    "ClassifierKind",
    "ClassifierSpec",
    "CombinedF",
    "ConfusionMatrix",
    "FoldResult",
    "GridCell",
    "GridReport",
    "IrEvalResult",
    "MetricSet",
    "ReportEvaluation",
    "ReportExcelExporter",
    "ReportTable",
    "SentenceClassifier",
    "TokenizedCorpus",
    "combine_f",
    "compare_table",
    "confusion",
    "cross_validate",
    "cv_table",
    "dump_classifier",
    "evaluate_reports",
    "evaluate_split",
    "extraction_table",
    "f_from_counts",
    "fit_classifier",
    "grid_search",
    "grid_table",
    "holdout_evaluate",
    "holdout_table",
    "ir_eval",
    "ir_table",
    "ir_tables",
    "kfold_split",
    "load_classifier",
    "load_expert_ids",
    "metrics",
    "overall_mean_f",
    "parse_expert_ids",
    "plot_f_comparison",
    "plot_zipf",
    "predictions_table",
    "run_tasks",
    "stack_tables",
    "zipf_table",
]
