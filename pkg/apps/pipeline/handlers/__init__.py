# Pipeline handlers used by the management commands.
from .classification import PredictHandler, TrainHandler
from .extraction import ExtractionEvalHandler, ExtractionHandler
from .inputs import DatasetInputHandler, ReportInputHandler, ResourceHandler, TokenizeHandler
from .output import OutputHandler
from .preprocess import PreprocessHandler, ZipfHandler
from .synthetic import SyntheticCorpusHandler
from .validation import (
    CompareHandler,
    CrossValidationHandler,
    GridSearchHandler,
    HoldoutHandler,
)

__all__ = [
    "CompareHandler",
    "CrossValidationHandler",
    "DatasetInputHandler",
    "ExtractionEvalHandler",
    "ExtractionHandler",
    "GridSearchHandler",
    "HoldoutHandler",
    "OutputHandler",
    "PredictHandler",
    "PreprocessHandler",
    "ReportInputHandler",
    "ResourceHandler",
    "SyntheticCorpusHandler",
    "TokenizeHandler",
    "TrainHandler",
    "ZipfHandler",
]
