"""
Confusion-matrix metrics.

+1 (causal) is the positive class. Ratios with a zero denominator are
undefined (None, rendered ``NA``); the F-measure is 0 when there are no
true positives but some errors.
"""
from dataclasses import dataclass
from typing import Optional, Sequence

from apps.evaluation.exceptions import EvaluationError


@dataclass(frozen=True)
class ConfusionMatrix:
    tp: int = 0
    fp: int = 0
    tn: int = 0
    fn: int = 0

    def __post_init__(self):
        if min(self.tp, self.fp, self.tn, self.fn) < 0:
            raise EvaluationError(f"negative confusion count in {self}")

    @property
    def positives(self) -> int:  # P
        return self.tp + self.fn

    @property
    def negatives(self) -> int:  # N
        return self.tn + self.fp

    @property
    def predicted_positives(self) -> int:  # P'
        return self.tp + self.fp

    @property
    def predicted_negatives(self) -> int:  # N'
        return self.tn + self.fn

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.tn + self.fn

    def __add__(self, other: "ConfusionMatrix") -> "ConfusionMatrix":
        return ConfusionMatrix(
            self.tp + other.tp, self.fp + other.fp, self.tn + other.tn, self.fn + other.fn
        )


@dataclass(frozen=True)
class MetricSet:
    accuracy: Optional[float]
    error_rate: Optional[float]
    recall: Optional[float]
    precision: Optional[float]
    specificity: Optional[float]
    fpr: Optional[float]
    fnr: Optional[float]
    f_measure: Optional[float]


def ratio(numerator: float, denominator: float) -> Optional[float]:
    return numerator / denominator if denominator else None


def complement(value: Optional[float]) -> Optional[float]:
    return None if value is None else 1.0 - value


def f_from_precision_recall(precision: Optional[float], recall: Optional[float]) -> Optional[float]:
    if precision is None or recall is None:
        return None
    if precision + recall == 0:
        return 0.0
    return 2 * precision * recall / (precision + recall)


def f_from_counts(tp: float, fp: float, fn: float) -> Optional[float]:
    """2TP / (2TP + FP + FN); undefined only when all three are zero."""
    return ratio(2 * tp, 2 * tp + fp + fn)


def confusion(predictions: Sequence[int], truth: Sequence[int]) -> ConfusionMatrix:
    predictions, truth = list(predictions), list(truth)
    if len(predictions) != len(truth):
        raise EvaluationError(f"{len(predictions)} predictions for {len(truth)} labels")
    counts = {"tp": 0, "fp": 0, "tn": 0, "fn": 0}
    for predicted, actual in zip(predictions, truth):
        if predicted not in (1, -1) or actual not in (1, -1):
            raise EvaluationError(f"labels must be +1 or -1, got {predicted}/{actual}")
        if predicted == 1:
            counts["tp" if actual == 1 else "fp"] += 1
        else:
            counts["fn" if actual == 1 else "tn"] += 1
    return ConfusionMatrix(**counts)


def metrics(cm: ConfusionMatrix) -> MetricSet:
    accuracy = ratio(cm.tp + cm.tn, cm.total)
    recall = ratio(cm.tp, cm.positives)
    precision = ratio(cm.tp, cm.predicted_positives)
    specificity = ratio(cm.tn, cm.negatives)
    if cm.tp == 0:
        f_measure = 0.0 if cm.fp + cm.fn > 0 else None
    else:
        f_measure = f_from_precision_recall(precision, recall)
    return MetricSet(
        accuracy=accuracy,
        error_rate=complement(accuracy),
        recall=recall,
        precision=precision,
        specificity=specificity,
        fpr=complement(specificity),
        fnr=complement(recall),
        f_measure=f_measure,
    )
