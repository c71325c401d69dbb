"""Stratified, seeded train/test split."""
import logging
import math

from apps.core.services.random_source import make_rng
from apps.corpus.exceptions import CorpusError

from .corpus_models import CausalLabel, LabeledDataset

logger = logging.getLogger(__name__)


def class_train_size(n_class: int, train_fraction: float) -> int:
    # nearest integer, halves up: 0.7 * 151 = 105.7 -> 106
    return math.floor(train_fraction * n_class + 0.5)


def split_train_test(
    dataset: LabeledDataset, train_fraction: float, seed: int
) -> tuple[LabeledDataset, LabeledDataset]:
    """
    Split `dataset` per class into train and test parts.

    Each class contributes round(train_fraction * n_c) sentences to train,
    chosen by a seeded shuffle of that class. Both parts keep the original
    item order.
    """
    if not 0 < train_fraction < 1:
        raise CorpusError(f"train_fraction must lie in (0, 1), got {train_fraction}")

    train_indices: list[int] = []
    for stream, label in enumerate(CausalLabel):
        members = dataset.indices_of(label)
        if not members:
            raise CorpusError(f"cannot stratify: class {label.render()} has no members")
        rng = make_rng(seed, 1, stream)
        shuffled = rng.permutation(len(members))
        n_train = class_train_size(len(members), train_fraction)
        train_indices.extend(members[i] for i in shuffled[:n_train])

    chosen = set(train_indices)
    train = sorted(chosen)
    test = [i for i in range(len(dataset)) if i not in chosen]
    logger.info(
        "Split %d sentences into %d train / %d test (fraction=%.2f, seed=%d)",
        len(dataset), len(train), len(test), train_fraction, seed,
    )
    return dataset.subset(train), dataset.subset(test)
