"""
Validation handlers: cross-validation, grid search, holdout, comparison.

All of them work on the TokenizedCorpus from TokenizeHandler and take
k, seed, min_freq, stratification, shared vocabulary and jobs from the
RunConfig.
"""
import logging
from pathlib import Path

from apps.core.exceptions import ConfigError
from apps.core.handlers import BasePipelineHandler, HandlerResult
from apps.corpus.services import split_train_test
from apps.evaluation.services import (
    C_GRID,
    SIGMA_GRID,
    ClassifierKind,
    ClassifierSpec,
    TokenizedCorpus,
    combine_f,
    compare_table,
    cross_validate,
    cv_table,
    grid_search,
    grid_table,
    holdout_evaluate,
    holdout_table,
    plot_f_comparison,
    stack_tables,
)
from apps.vectorize.services import WeightingScheme

logger = logging.getLogger(__name__)

COMPARED_CLASSIFIERS = (
    ClassifierKind.NB,
    ClassifierKind.SVM_LINEAR,
    ClassifierKind.SVM_GAUSSIAN,
)
COMPARED_SCHEMES = (WeightingScheme.TF, WeightingScheme.TFIDF)

DEFAULT_GRIDS = {"c": C_GRID, "sigma": SIGMA_GRID, "alpha": (0.1, 0.5, 1.0, 2.0)}


def _cv_options(config) -> dict:
    return {
        "k": config.k,
        "seed": config.seed,
        "min_freq": config.min_freq,
        "stratified": config.stratified,
        "shared_vocab": config.shared_vocab,
        "jobs": config.jobs,
    }


class CrossValidationHandler(BasePipelineHandler):
    """
    k-fach Kreuzvalidierung eines Klassifikators.

    Output:
        _table: fold rows plus f_avg / f_pr_re / f_tp_fp footer
        f_avg, f_pr_re, f_tp_fp, undefined_folds
    """

    name = "CrossValidationHandler"
    description = "k-fold Kreuzvalidierung"
    required_inputs = ["config", "_corpus"]

    def execute(self, input_data: dict) -> HandlerResult:
        config = input_data["config"]
        result = self.new_result()
        spec = ClassifierSpec.from_config(config)

        folds = cross_validate(input_data["_corpus"], spec, **_cv_options(config))
        combined = combine_f(folds)
        if combined.undefined_folds:
            result.add_warning(f"{combined.undefined_folds} folds have an undefined F-measure")

        result.data.update({
            "_table": cv_table(folds, combined),
            "classifier": spec.describe(),
            "f_avg": combined.f_avg,
            "f_pr_re": combined.f_pr_re,
            "f_tp_fp": combined.f_tp_fp,
            "undefined_folds": combined.undefined_folds,
        })
        return result


class GridSearchHandler(BasePipelineHandler):
    """
    Input:
        param: "c", "sigma" or "alpha"
        values: optional grid (default grids per parameter)

    sigma always tunes the gaussian SVM and alpha naive Bayes; C tunes the
    configured SVM, or the linear SVM when naive Bayes is configured.
    """

    name = "GridSearchHandler"
    description = "Parameter-Grid über tf und tfidf"
    required_inputs = ["config", "_corpus", "param"]

    def execute(self, input_data: dict) -> HandlerResult:
        config = input_data["config"]
        param = input_data["param"]
        if param not in DEFAULT_GRIDS:
            raise ConfigError(f"cannot tune '{param}', expected one of {', '.join(DEFAULT_GRIDS)}")
        values = input_data.get("values") or DEFAULT_GRIDS[param]
        result = self.new_result()

        spec = ClassifierSpec.from_config(config)
        if param == "sigma":
            spec = spec.with_changes(kind=ClassifierKind.SVM_GAUSSIAN)
        elif param == "alpha":
            spec = spec.with_changes(kind=ClassifierKind.NB)
        elif not spec.is_svm:
            spec = spec.with_changes(kind=ClassifierKind.SVM_LINEAR)

        report = grid_search(
            input_data["_corpus"], spec, param, values, schemes=COMPARED_SCHEMES,
            **_cv_options(config),
        )
        best = {scheme.value: report.best(scheme) for scheme in report.schemes}
        result.data.update({
            "_table": grid_table(report),
            "classifier": spec.kind.value,
            "best": {scheme: cell.value for scheme, cell in best.items()},
            "best_f": {scheme: cell.f_measure for scheme, cell in best.items()},
        })
        return result


class HoldoutHandler(BasePipelineHandler):
    """
    Train/test evaluation of every compared classifier under tf and tfidf.

    Uses the preprocess directory's train/test split when given, otherwise
    splits the labeled corpus by train_fraction and seed.
    """

    name = "HoldoutHandler"
    description = "Train/Test-Evaluation"
    required_inputs = ["config", "_dataset", "_preprocessor"]

    def execute(self, input_data: dict) -> HandlerResult:
        config = input_data["config"]
        result = self.new_result()
        preprocessor = input_data["_preprocessor"]

        train_corpus = input_data.get("_corpus")
        test_corpus = input_data.get("_other_corpus")
        if train_corpus is None or test_corpus is None:
            train, test = split_train_test(
                input_data["_dataset"], config.train_fraction, config.seed
            )
            train_corpus = TokenizedCorpus.from_dataset(train, preprocessor)
            test_corpus = TokenizedCorpus.from_dataset(test, preprocessor)

        base = ClassifierSpec.from_config(config)
        outcomes = {}
        for scheme in COMPARED_SCHEMES:
            for kind in COMPARED_CLASSIFIERS:
                spec = base.with_changes(kind=kind, scheme=scheme)
                outcomes[(scheme.value, kind.value)] = holdout_evaluate(
                    train_corpus, test_corpus, spec, min_freq=config.min_freq
                )

        result.data.update({
            "_table": holdout_table(
                outcomes,
                [s.value for s in COMPARED_SCHEMES],
                [k.value for k in COMPARED_CLASSIFIERS],
            ),
            "n_train": len(train_corpus),
            "n_test": len(test_corpus),
        })
        return result


class CompareHandler(BasePipelineHandler):
    """
    Kreuzvalidierung aller Klassifikatoren unter tf und tfidf.

    Output:
        _table: scheme x fold x classifier F table with f_tp_fp footer rows
        _sheets: one table per scheme
        f_tp_fp: {scheme: {classifier: F}}
    """

    name = "CompareHandler"
    description = "Klassifikatorvergleich"
    required_inputs = ["config", "_corpus"]

    def execute(self, input_data: dict) -> HandlerResult:
        config = input_data["config"]
        result = self.new_result()
        base = ClassifierSpec.from_config(config)
        corpus = input_data["_corpus"]

        tables, scores = [], {}
        for scheme in COMPARED_SCHEMES:
            folds_by_kind = {
                kind.value: cross_validate(
                    corpus, base.with_changes(kind=kind, scheme=scheme), **_cv_options(config)
                )
                for kind in COMPARED_CLASSIFIERS
            }
            tables.append(compare_table(scheme.value, folds_by_kind))
            scores[scheme.value] = {
                kind: combine_f(folds).f_tp_fp for kind, folds in folds_by_kind.items()
            }

        plot_path = input_data.get("plot_path")
        if plot_path:
            plot_f_comparison(scores, Path(plot_path), title=f"{config.k}-fold F_tp,fp")

        result.data.update({
            "_table": stack_tables("compare", "scheme", tables),
            "_sheets": tables,
            "f_tp_fp": scores,
        })
        return result
