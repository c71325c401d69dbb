"""
Input handlers: shared resources, labeled datasets and plain-text reports.

ResourceHandler loads lexicon, stoplist and segmenter from the RunConfig.
Lexicon connectives are protected from the stoplist so single-word
connectives and causal verbs survive preprocessing.
"""
import logging
from pathlib import Path

from apps.connectives.services import load_lexicon
from apps.core.handlers import BasePipelineHandler, HandlerResult
from apps.corpus.exceptions import CorpusError
from apps.corpus.services import (
    CausalLabel,
    SentenceSegmenter,
    load_labeled_dataset,
    load_reports,
)
from apps.evaluation.services import TokenizedCorpus
from apps.preprocess.services import StopList, TextPreprocessor, load_vocabulary

logger = logging.getLogger(__name__)

# Files written by the preprocess command
TRAIN_FILE = "train.tsv"
TEST_FILE = "test.tsv"
VOCABULARY_FILE = "vocabulary.tsv"
IDF_FILE = "idf.tsv"
TRAIN_MATRIX_FILE = "train.matrix"
TEST_MATRIX_FILE = "test.matrix"


class ResourceHandler(BasePipelineHandler):
    """
    Lädt Lexikon, Stoppliste und Satzsegmentierer.

    Output:
        _lexicon, _preprocessor, _segmenter
        stoplist_size, lexicon_size
    """

    name = "ResourceHandler"
    description = "Lexikon, Stoppliste, Segmentierer laden"
    required_inputs = ["config"]

    def execute(self, input_data: dict) -> HandlerResult:
        config = input_data["config"]
        result = self.new_result()

        lexicon = load_lexicon(config.lexicon)
        stoplist = StopList.load(
            config.stoplist,
            protected_words=lexicon.single_words,
            protected_stems=lexicon.verb_stems,
        )
        segmenter = SentenceSegmenter.from_file(config.abbreviations)

        result.data.update({
            "_lexicon": lexicon,
            "_preprocessor": TextPreprocessor(stoplist),
            "_segmenter": segmenter,
            "stoplist_size": len(stoplist),
            "lexicon_size": len(lexicon),
        })
        logger.debug(
            "[%s] stoplist=%d words, lexicon=%d entries", self.name, len(stoplist), len(lexicon)
        )
        return result


class DatasetInputHandler(BasePipelineHandler):
    """
    Labeled TSV or a preprocess output directory.

    For a directory, `split` picks train.tsv or test.tsv as the main
    dataset; the other part (if present) and vocabulary.tsv are passed on.

    Output:
        _dataset, _other_dataset (or None), _vocabulary (or None)
        n_sentences, n_causal, n_non_causal
    """

    name = "DatasetInputHandler"
    description = "Gelabelte Sätze laden"
    required_inputs = ["input_path"]

    def __init__(self, context: dict = None, split: str = "train"):
        super().__init__(context)
        if split not in ("train", "test"):
            raise ValueError(f"split must be 'train' or 'test', got {split!r}")
        self.split = split

    def execute(self, input_data: dict) -> HandlerResult:
        path = Path(input_data["input_path"])
        result = self.new_result()
        other = vocabulary = None

        if path.is_dir():
            main_file, other_file = (
                (TRAIN_FILE, TEST_FILE) if self.split == "train" else (TEST_FILE, TRAIN_FILE)
            )
            if not (path / main_file).exists():
                raise CorpusError(f"{path} has no {main_file}; run preprocess first")
            dataset = load_labeled_dataset(path / main_file)
            if (path / other_file).exists():
                other = load_labeled_dataset(path / other_file)
            if (path / VOCABULARY_FILE).exists():
                vocabulary = load_vocabulary(path / VOCABULARY_FILE)
        else:
            dataset = load_labeled_dataset(path)

        if not len(dataset):
            raise CorpusError(f"{path}: no labeled sentences")

        counts = dataset.class_counts
        result.data.update({
            "_dataset": dataset,
            "_other_dataset": other,
            "_vocabulary": vocabulary,
            "n_sentences": len(dataset),
            "n_causal": counts[CausalLabel.CAUSAL],
            "n_non_causal": counts[CausalLabel.NON_CAUSAL],
        })
        return result


class TokenizeHandler(BasePipelineHandler):
    """Preprocesses _dataset (and _other_dataset) into TokenizedCorpus objects."""

    name = "TokenizeHandler"
    description = "Tokenisieren, Stoppwörter, Stemming"
    required_inputs = ["_dataset", "_preprocessor"]

    def execute(self, input_data: dict) -> HandlerResult:
        preprocessor = input_data["_preprocessor"]
        result = self.new_result()
        result.data["_corpus"] = TokenizedCorpus.from_dataset(input_data["_dataset"], preprocessor)
        other = input_data.get("_other_dataset")
        result.data["_other_corpus"] = (
            TokenizedCorpus.from_dataset(other, preprocessor) if other is not None else None
        )
        return result


class ReportInputHandler(BasePipelineHandler):
    """
    Lädt und segmentiert Berichte (Dateien oder Verzeichnisse mit *.txt).

    Output:
        _documents, n_reports, n_sentences
    """

    name = "ReportInputHandler"
    description = "Berichte laden und segmentieren"
    required_inputs = ["report_paths", "_segmenter"]

    def execute(self, input_data: dict) -> HandlerResult:
        result = self.new_result()
        paths = [Path(p) for p in input_data["report_paths"]]
        documents = load_reports(paths, input_data["_segmenter"])
        if not documents:
            raise CorpusError("no reports found in " + ", ".join(str(p) for p in paths))
        result.data.update({
            "_documents": documents,
            "n_reports": len(documents),
            "n_sentences": sum(len(d.sentences) for d in documents),
        })
        return result
