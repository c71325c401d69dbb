"""
PreprocessHandler and ZipfHandler.

PreprocessHandler splits the labeled corpus, fits vocabulary and IDF on
the training part only and writes every artifact into one directory.
"""
import logging
from collections import Counter
from pathlib import Path

from apps.core.exceptions import ConfigError
from apps.core.handlers import BasePipelineHandler, HandlerResult
from apps.core.services.provenance import write_text
from apps.corpus.services import (
    format_labeled_dataset,
    load_labeled_dataset,
    load_reports,
    split_train_test,
)
from apps.evaluation.services import ReportTable, plot_zipf, zipf_table
from apps.preprocess.services import format_vocabulary, rank_frequency, tokenize, zipf_spread
from apps.vectorize.services import build_matrix, count_matrix, format_idf, format_matrix, idf

from .inputs import (
    IDF_FILE,
    TEST_FILE,
    TEST_MATRIX_FILE,
    TRAIN_FILE,
    TRAIN_MATRIX_FILE,
    VOCABULARY_FILE,
)

logger = logging.getLogger(__name__)


class PreprocessHandler(BasePipelineHandler):
    """
    Input:
        _dataset, _preprocessor, config (output = target directory)

    Output:
        _table: term-count progression and split sizes
        vocabulary_size, n_train, n_test
    """

    name = "PreprocessHandler"
    description = "Split, Vokabular, IDF und Matrizen erzeugen"
    required_inputs = ["config", "_dataset", "_preprocessor"]

    def execute(self, input_data: dict) -> HandlerResult:
        config = input_data["config"]
        if config.output is None:
            raise ConfigError("preprocess needs --output DIR")
        out_dir = Path(config.output)
        if out_dir.exists() and not out_dir.is_dir():
            raise ConfigError(f"--output must be a directory: {out_dir}")
        result = self.new_result()
        preprocessor = input_data["_preprocessor"]

        train, test = split_train_test(input_data["_dataset"], config.train_fraction, config.seed)
        vocabulary, train_tokens, stats = preprocessor.fit_vocabulary(train.texts, config.min_freq)
        if not len(vocabulary):
            result.add_warning(f"vocabulary is empty at min_freq={config.min_freq}")
        idf_vector = idf(count_matrix(train_tokens, vocabulary), vocabulary)
        test_tokens = preprocessor.corpus_tokens(test.texts)
        train_matrix = build_matrix(train_tokens, vocabulary, config.scheme, idf_vector)
        test_matrix = build_matrix(test_tokens, vocabulary, config.scheme, idf_vector)

        header = config.provenance()
        artifacts = {
            TRAIN_FILE: format_labeled_dataset(train, header),
            TEST_FILE: format_labeled_dataset(test, header),
            VOCABULARY_FILE: format_vocabulary(vocabulary, header),
            IDF_FILE: format_idf(idf_vector, vocabulary, header),
            TRAIN_MATRIX_FILE: format_matrix(train_matrix, header),
            TEST_MATRIX_FILE: format_matrix(test_matrix, header),
        }
        for filename, text in artifacts.items():
            write_text(text, out_dir / filename)

        rows = [list(row) for row in stats.as_rows()]
        rows += [["train_sentences", len(train)], ["test_sentences", len(test)]]
        result.data.update({
            "_table": ReportTable("preprocess", ["stage", "count"], rows),
            "vocabulary_size": len(vocabulary),
            "n_train": len(train),
            "n_test": len(test),
        })
        logger.info(
            "[%s] %d -> %d -> %d terms, wrote %d files to %s",
            self.name, stats.raw_tokens, stats.after_stopwords, stats.vocabulary_size,
            len(artifacts), out_dir,
        )
        return result


class ZipfHandler(BasePipelineHandler):
    """
    Rank-frequency table over a labeled TSV or over report sentences.

    Input:
        input_paths: one labeled .tsv file, or report files/directories
        raw: count raw tokens instead of preprocessed terms
        plot_path: optional log-log plot
    """

    name = "ZipfHandler"
    description = "Rang-Häufigkeit (Zipf)"
    required_inputs = ["input_paths", "_preprocessor", "_segmenter"]

    def execute(self, input_data: dict) -> HandlerResult:
        result = self.new_result()
        paths = [Path(p) for p in input_data["input_paths"]]
        if len(paths) == 1 and paths[0].suffix.lower() == ".tsv":
            texts = load_labeled_dataset(paths[0]).texts
        else:
            documents = load_reports(paths, input_data["_segmenter"])
            texts = [s.text for d in documents for s in d.sentences]

        preprocessor = input_data["_preprocessor"]
        counts: Counter = Counter()
        for text in texts:
            counts.update(tokenize(text) if input_data.get("raw") else preprocessor.tokens(text))
        table = rank_frequency(counts)

        spread = zipf_spread(table)
        if spread is None:
            result.add_warning("fewer than 10 distinct terms; no Zipf spread")
        else:
            logger.info("[%s] rank*freq spread over ranks 10-100: %.2f", self.name, spread)

        plot_path = input_data.get("plot_path")
        if plot_path:
            plot_zipf(table, Path(plot_path))

        result.data.update({
            "_table": zipf_table(table),
            "n_terms": len(table),
            "zipf_spread": spread,
        })
        return result
