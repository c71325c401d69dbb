# Multinomial naive Bayes classifier.
from .naive_bayes import (
    CLASSES,
    NbModel,
    dump_nb,
    load_nb,
    log_posterior,
    predict_nb,
    predict_nb_many,
    train_nb,
)

__all__ = [
    "CLASSES",
    "NbModel",
    "dump_nb",
    "load_nb",
    "log_posterior",
    "predict_nb",
    "predict_nb_many",
    "train_nb",
]
