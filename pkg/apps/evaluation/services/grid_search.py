"""
Hyperparameter grid search by cross-validated F_tp,fp.

Every (scheme, value) cell is one full k-fold run. Cells are independent;
with `jobs > 1` the folds of all cells are scheduled on one process pool
and regrouped by (cell, fold) index.
"""
import logging
from dataclasses import dataclass
from typing import Optional, Sequence

from apps.evaluation.exceptions import EvaluationError
from apps.vectorize.services import WeightingScheme

from .cross_validation import CombinedF, FoldResult, combine_f, fold_tasks, run_fold, run_tasks
from .sentence_classifier import ClassifierSpec, TokenizedCorpus

logger = logging.getLogger(__name__)

C_GRID = (0.01, 0.1, 1.0, 10.0, 100.0)
SIGMA_GRID = (8.0, 16.0, 32.0, 64.0, 128.0)
GRID_PARAMS = ("c", "sigma", "alpha")


@dataclass(frozen=True)
class GridCell:
    param: str
    value: float
    scheme: WeightingScheme
    combined: CombinedF
    folds: tuple[FoldResult, ...] = ()

    @property
    def f_measure(self) -> Optional[float]:
        return self.combined.f_tp_fp


@dataclass(frozen=True)
class GridReport:
    param: str
    values: tuple[float, ...]
    schemes: tuple[WeightingScheme, ...]
    cells: tuple[GridCell, ...]

    def cell(self, value: float, scheme) -> GridCell:
        scheme = WeightingScheme(scheme)
        for cell in self.cells:
            if cell.value == value and cell.scheme is scheme:
                return cell
        raise KeyError((value, scheme))

    def best(self, scheme) -> GridCell:
        """Highest F_tp,fp; ties go to the smaller parameter value."""
        scheme = WeightingScheme(scheme)
        candidates = [c for c in self.cells if c.scheme is scheme]
        if not candidates:
            raise KeyError(scheme)
        return min(
            candidates,
            key=lambda c: (-(c.f_measure if c.f_measure is not None else -1.0), c.value),
        )

    def rows(self) -> list[list]:
        """One row per value: value, then F per scheme in scheme order."""
        return [
            [value, *(self.cell(value, scheme).f_measure for scheme in self.schemes)]
            for value in self.values
        ]


def grid_search(
    corpus: TokenizedCorpus,
    base_spec: ClassifierSpec,
    param: str,
    values: Sequence[float],
    schemes: Sequence = (WeightingScheme.TF, WeightingScheme.TFIDF),
    k: int = 10,
    seed: int = 42,
    min_freq: int = 5,
    stratified: bool = True,
    shared_vocab: bool = False,
    jobs: int = 1,
) -> GridReport:
    if param not in GRID_PARAMS:
        raise EvaluationError(f"cannot tune '{param}', expected one of {', '.join(GRID_PARAMS)}")
    values = tuple(float(v) for v in values)
    schemes = tuple(WeightingScheme(s) for s in schemes)
    if not values or not schemes:
        raise EvaluationError("grid search needs at least one value and one scheme")
    if len(set(values)) != len(values):
        raise EvaluationError("grid values must be distinct")

    layout = [(scheme, value) for scheme in schemes for value in values]
    tasks = []
    for scheme, value in layout:
        spec = base_spec.with_changes(scheme=scheme, **{param: value})
        tasks.extend(fold_tasks(corpus, spec, k, seed, min_freq, stratified, shared_vocab))
    results = run_tasks(run_fold, tasks, jobs)

    cells = []
    for index, (scheme, value) in enumerate(layout):
        folds = tuple(results[index * k:(index + 1) * k])
        cell = GridCell(param, value, scheme, combine_f(folds), folds)
        logger.info("grid %s=%g/%s: F_tp,fp=%s", param, value, scheme.value, cell.f_measure)
        cells.append(cell)

    report = GridReport(param, values, schemes, tuple(cells))
    for scheme in schemes:
        best = report.best(scheme)
        logger.info("best %s for %s: %g (F=%s)", param, scheme.value, best.value, best.f_measure)
    return report
