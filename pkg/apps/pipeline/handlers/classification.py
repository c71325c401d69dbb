"""
TrainHandler and PredictHandler.

A model file holds classifier settings, vocabulary, training IDF and the
NB or SVM model; see apps.evaluation.services.sentence_classifier.
"""
import logging
from pathlib import Path

from apps.core.exceptions import ModelFormatError
from apps.core.handlers import BasePipelineHandler, HandlerResult
from apps.evaluation.services import (
    ClassifierSpec,
    confusion,
    dump_classifier,
    fit_classifier,
    load_classifier,
    metrics,
    predictions_table,
)
from apps.preprocess.services import load_vocabulary

logger = logging.getLogger(__name__)


class TrainHandler(BasePipelineHandler):
    """
    Trainiert einen Satz-Klassifikator auf _corpus.

    Ein vorhandenes _vocabulary (aus dem preprocess-Verzeichnis) wird
    übernommen, sonst aus den Trainingssätzen gebaut.

    Output:
        _classifier, _text (Modelldatei), n_terms, n_support
    """

    name = "TrainHandler"
    description = "NB/SVM trainieren"
    required_inputs = ["config", "_corpus"]

    def execute(self, input_data: dict) -> HandlerResult:
        config = input_data["config"]
        corpus = input_data["_corpus"]
        result = self.new_result()

        spec = ClassifierSpec.from_config(config)
        classifier = fit_classifier(
            corpus.tokens, corpus.labels, spec,
            vocabulary=input_data.get("_vocabulary"), min_freq=config.min_freq,
        )
        model = classifier.model
        result.data.update({
            "_classifier": classifier,
            "_text": dump_classifier(classifier, header=config.provenance()),
            "classifier": spec.describe(),
            "n_terms": len(classifier.vocabulary),
            "n_support": getattr(model, "n_support", None),
        })
        logger.info(
            "[%s] %s on %d sentences, %d terms",
            self.name, spec.describe(), len(corpus), len(classifier.vocabulary),
        )
        return result


class PredictHandler(BasePipelineHandler):
    """
    Input:
        model_path: file written by train
        vocabulary_path: optional vocabulary the model must match
        _corpus, _vocabulary (from a preprocess directory)

    Output:
        _table: doc_id, sentence_index, label, score
    """

    name = "PredictHandler"
    description = "Sätze klassifizieren"
    required_inputs = ["model_path", "_corpus"]

    def execute(self, input_data: dict) -> HandlerResult:
        result = self.new_result()
        model_path = Path(input_data["model_path"])
        try:
            text = model_path.read_text(encoding="utf-8")
        except OSError as e:
            raise ModelFormatError(
                f"cannot read model: {e.strerror or e}", source=str(model_path)
            ) from e
        classifier = load_classifier(text, source=str(model_path))

        vocabulary = input_data.get("_vocabulary")
        if input_data.get("vocabulary_path"):
            vocabulary = load_vocabulary(Path(input_data["vocabulary_path"]))
        if vocabulary is not None:
            classifier.vocabulary.require(vocabulary.fingerprint)

        corpus = input_data["_corpus"]
        scores = classifier.scores(corpus.tokens)
        predicted = [1 if s >= 0 else -1 for s in scores]
        cm = confusion(predicted, corpus.labels)
        f_measure = metrics(cm).f_measure
        logger.info(
            "[%s] %d sentences, %d predicted causal, F against input labels=%s",
            self.name, len(corpus), sum(p == 1 for p in predicted), f_measure,
        )
        result.data.update({
            "_table": predictions_table(corpus.keys, predicted, scores),
            "n_predicted_causal": sum(p == 1 for p in predicted),
            "f_measure": f_measure,
        })
        return result
