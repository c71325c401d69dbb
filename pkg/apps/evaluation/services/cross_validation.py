"""
k-fold cross-validation and holdout evaluation.

Each fold rebuilds vocabulary and IDF from its k-1 training folds only,
unless `shared_vocab` asks for one vocabulary over the whole corpus.
Folds run in worker processes when `jobs > 1`; results always come back
in fold order.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from statistics import fmean
from typing import Callable, Optional, Sequence

import numpy as np

from apps.core.exceptions import CausalExtractError
from apps.evaluation.exceptions import EvaluationError
from apps.preprocess.services import Vocabulary, build_vocabulary
from apps.vectorize.services import count_matrix, idf

from .folds import kfold_split
from .metrics import (
    ConfusionMatrix,
    MetricSet,
    confusion,
    f_from_counts,
    f_from_precision_recall,
    metrics,
)
from .sentence_classifier import ClassifierSpec, TokenizedCorpus, fit_classifier

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FoldResult:
    fold_index: int
    cm: ConfusionMatrix
    metrics: MetricSet
    n_train: int = 0
    n_test: int = 0
    vocabulary: Optional[Vocabulary] = None

    @property
    def f_measure(self) -> Optional[float]:
        return self.metrics.f_measure


@dataclass(frozen=True)
class CombinedF:
    """The three ways of folding per-fold results into one F-measure."""

    f_avg: Optional[float]
    f_pr_re: Optional[float]
    f_tp_fp: Optional[float]
    undefined_folds: int
    pooled: ConfusionMatrix


def combine_f(results: Sequence[FoldResult]) -> CombinedF:
    """
    F_avg: mean of the per-fold F values.
    F_pr,re: F of the mean precision and mean recall.
    F_tp,fp: F of the mean TP, FP and FN. The 1/k factor cancels, so it is
    computed from the pooled integer counts.

    Folds whose F (or precision/recall) is undefined are left out of the
    corresponding mean.
    """
    if not results:
        raise EvaluationError("combine_f needs at least one fold")
    pooled = ConfusionMatrix()
    for result in results:
        pooled = pooled + result.cm

    f_values = [r.metrics.f_measure for r in results if r.metrics.f_measure is not None]
    precisions = [r.metrics.precision for r in results if r.metrics.precision is not None]
    recalls = [r.metrics.recall for r in results if r.metrics.recall is not None]
    undefined = len(results) - len(f_values)
    if undefined:
        logger.warning("%d of %d folds have an undefined F-measure", undefined, len(results))

    return CombinedF(
        f_avg=fmean(f_values) if f_values else None,
        f_pr_re=f_from_precision_recall(
            fmean(precisions) if precisions else None,
            fmean(recalls) if recalls else None,
        ),
        f_tp_fp=f_from_counts(pooled.tp, pooled.fp, pooled.fn),
        undefined_folds=undefined,
        pooled=pooled,
    )


def evaluate_split(
    train: TokenizedCorpus,
    test: TokenizedCorpus,
    spec: ClassifierSpec,
    min_freq: int = 5,
    fold_index: int = 0,
    vocabulary: Optional[Vocabulary] = None,
    idf_vector=None,
) -> FoldResult:
    """Fit on `train`, score on `test`."""
    classifier = fit_classifier(
        train.tokens, train.labels, spec,
        vocabulary=vocabulary, min_freq=min_freq, idf_vector=idf_vector,
    )
    predictions = classifier.predict(test.tokens)
    cm = confusion(predictions, test.labels)
    return FoldResult(
        fold_index=fold_index,
        cm=cm,
        metrics=metrics(cm),
        n_train=len(train),
        n_test=len(test),
        vocabulary=classifier.vocabulary,
    )


def holdout_evaluate(
    train: TokenizedCorpus,
    test: TokenizedCorpus,
    spec: ClassifierSpec,
    min_freq: int = 5,
) -> FoldResult:
    """Single train/test evaluation; vocabulary and IDF come from `train` only."""
    result = evaluate_split(train, test, spec, min_freq=min_freq)
    logger.info(
        "holdout %s: train=%d test=%d F=%s",
        spec.describe(), result.n_train, result.n_test, result.f_measure,
    )
    return result


@dataclass(frozen=True, eq=False)
class FoldTask:
    """Everything one worker needs to evaluate one fold."""

    corpus: TokenizedCorpus
    train_indices: np.ndarray
    test_indices: np.ndarray
    spec: ClassifierSpec
    min_freq: int
    fold_index: int
    vocabulary: Optional[Vocabulary] = None
    idf_vector: object = None


def run_fold(task: FoldTask) -> FoldResult:
    try:
        return evaluate_split(
            task.corpus.subset(task.train_indices),
            task.corpus.subset(task.test_indices),
            task.spec,
            min_freq=task.min_freq,
            fold_index=task.fold_index,
            vocabulary=task.vocabulary,
            idf_vector=task.idf_vector,
        )
    except CausalExtractError as e:
        message = f"fold {task.fold_index + 1}: {e.message}"
        e.message = message
        e.args = (message,)
        raise


def run_tasks(fn: Callable, tasks: Sequence, jobs: int = 1) -> list:
    """Map `fn` over `tasks`, in processes when jobs > 1; order is kept."""
    if jobs <= 1 or len(tasks) <= 1:
        return [fn(task) for task in tasks]
    with ProcessPoolExecutor(max_workers=min(jobs, len(tasks))) as pool:
        return list(pool.map(fn, tasks))


def fold_tasks(
    corpus: TokenizedCorpus,
    spec: ClassifierSpec,
    k: int = 10,
    seed: int = 42,
    min_freq: int = 5,
    stratified: bool = True,
    shared_vocab: bool = False,
) -> list[FoldTask]:
    n = len(corpus)
    folds = kfold_split(n, k, seed, labels=corpus.labels if stratified else None)

    vocabulary = idf_vector = None
    if shared_vocab:
        vocabulary = build_vocabulary(corpus.tokens, min_freq)
        idf_vector = idf(count_matrix(corpus.tokens, vocabulary), vocabulary)
        logger.info("shared vocabulary over all %d items: %d terms", n, len(vocabulary))

    everything = np.arange(n)
    return [
        FoldTask(
            corpus=corpus,
            train_indices=np.setdiff1d(everything, test, assume_unique=True),
            test_indices=test,
            spec=spec,
            min_freq=min_freq,
            fold_index=index,
            vocabulary=vocabulary,
            idf_vector=idf_vector,
        )
        for index, test in enumerate(folds)
    ]


def cross_validate(
    corpus: TokenizedCorpus,
    spec: ClassifierSpec,
    k: int = 10,
    seed: int = 42,
    min_freq: int = 5,
    stratified: bool = True,
    shared_vocab: bool = False,
    jobs: int = 1,
) -> list[FoldResult]:
    tasks = fold_tasks(corpus, spec, k, seed, min_freq, stratified, shared_vocab)
    results = run_tasks(run_fold, tasks, jobs)
    logger.info(
        "%d-fold CV of %s: F_tp,fp=%s", k, spec.describe(), combine_f(results).f_tp_fp,
    )
    return results
