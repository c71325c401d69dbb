# Corpus loading, segmentation, splitting and synthetic data.
from .corpus_models import (
    CausalLabel,
    Document,
    LabeledDataset,
    LabeledSentence,
    Sentence,
)
from .loader import (
    format_labeled_dataset,
    load_labeled_dataset,
    load_report,
    load_reports,
    parse_labeled_lines,
)
from .segmenter import SentenceSegmenter, segment_sentences
from .splitter import split_train_test
from .synthetic import generate_synthetic_corpus, synthetic_reports

__all__ = [
    "CausalLabel",
    "Document",
    "LabeledDataset",
    "LabeledSentence",
    "Sentence",
    "SentenceSegmenter",
    "format_labeled_dataset",
    "load_labeled_dataset",
    "load_report",
    "load_reports",
    "parse_labeled_lines",
    "segment_sentences",
    "split_train_test",
    "synthetic_reports",
    "generate_synthetic_corpus",
]
