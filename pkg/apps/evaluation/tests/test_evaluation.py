"""Tests for metrics, folds, cross-validation, grid search and IR evaluation."""
from fractions import Fraction

import numpy as np
import pytest

from apps.bayes.exceptions import NaiveBayesError
from apps.connectives.services import load_lexicon, match_sentence
from apps.core.exceptions import ModelFormatError
from apps.corpus.services import Sentence
from apps.evaluation.exceptions import EvaluationError
from apps.evaluation.services import (
    ClassifierSpec,
    ConfusionMatrix,
    FoldResult,
    ReportExcelExporter,
    TokenizedCorpus,
    combine_f,
    confusion,
    cross_validate,
    cv_table,
    dump_classifier,
    evaluate_reports,
    extraction_table,
    fit_classifier,
    grid_search,
    grid_table,
    holdout_evaluate,
    ir_eval,
    ir_tables,
    kfold_split,
    load_classifier,
    load_expert_ids,
    metrics,
    parse_expert_ids,
    plot_f_comparison,
    plot_zipf,
)
from apps.preprocess.services import rank_frequency
from apps.vectorize.services import WeightingScheme


def _fold(index, tp, fp, tn, fn) -> FoldResult:
    cm = ConfusionMatrix(tp, fp, tn, fn)
    return FoldResult(fold_index=index, cm=cm, metrics=metrics(cm))


def _separable_corpus(n: int = 40) -> TokenizedCorpus:
    """Causal items carry 'leak', the others 'calm'; 'pump' is everywhere."""
    tokens, labels = [], []
    for i in range(n):
        causal = i % 2 == 0
        tokens.append(("leak" if causal else "calm", "pump"))
        labels.append(1 if causal else -1)
    keys = tuple(("doc", i) for i in range(n))
    return TokenizedCorpus(tuple(tokens), np.array(labels), keys)


def _noise_corpus(n: int = 400, seed: int = 7) -> TokenizedCorpus:
    rng = np.random.default_rng(seed)
    words = [f"w{i}" for i in range(30)]
    tokens = tuple(tuple(rng.choice(words, size=8)) for _ in range(n))
    labels = rng.permutation(np.array([1, -1] * (n // 2)))
    return TokenizedCorpus(tokens, labels)


class TestMetrics:
    def test_worked_example(self):
        m = metrics(ConfusionMatrix(tp=45, fp=5, tn=40, fn=10))
        assert m.precision == pytest.approx(0.9)
        assert m.recall == pytest.approx(0.8182, abs=1e-4)
        assert m.f_measure == pytest.approx(0.8571, abs=1e-4)

    def test_confusion_counts(self):
        assert confusion([1, -1], [1, -1]) == ConfusionMatrix(tp=1, tn=1)
        assert confusion([1, 1], [-1, -1]) == ConfusionMatrix(fp=2)
        assert confusion([1] * 90, [1] * 45 + [-1] * 45) == ConfusionMatrix(tp=45, fp=45)

    def test_confusion_errors(self):
        with pytest.raises(EvaluationError):
            confusion([1, -1], [1])
        with pytest.raises(EvaluationError):
            confusion([0], [1])

    def test_derived_counts(self):
        cm = ConfusionMatrix(tp=3, fp=2, tn=5, fn=1)
        assert (cm.positives, cm.negatives) == (4, 7)
        assert (cm.predicted_positives, cm.predicted_negatives) == (5, 6)

    def test_perfect(self):
        m = metrics(ConfusionMatrix(tp=7))
        assert m.accuracy == m.precision == m.recall == m.f_measure == 1.0

    def test_all_zero_undefined(self):
        m = metrics(ConfusionMatrix())
        assert m.accuracy is None and m.precision is None and m.recall is None
        assert m.f_measure is None and m.specificity is None

    def test_no_true_positive_gives_zero_f(self):
        assert metrics(ConfusionMatrix(fp=3, tn=2)).f_measure == 0.0
        assert metrics(ConfusionMatrix(fn=3, tn=2)).f_measure == 0.0

    def test_negative_count_rejected(self):
        with pytest.raises(EvaluationError):
            ConfusionMatrix(tp=-1)

    def test_identities_on_random_matrices(self):
        rng = np.random.default_rng(0)
        for counts in rng.integers(0, 50, size=(1000, 4)):
            m = metrics(ConfusionMatrix(*(int(c) for c in counts)))
            if m.accuracy is not None:
                assert m.error_rate == 1 - m.accuracy
            if m.specificity is not None:
                assert m.fpr == 1 - m.specificity
            if m.recall is not None:
                assert m.fnr == 1 - m.recall
            for value in (m.accuracy, m.precision, m.recall, m.specificity, m.f_measure):
                assert value is None or 0.0 <= value <= 1.0


class TestCombineF:
    def test_unbiased_example(self):
        combined = combine_f([_fold(0, 3, 1, 0, 1), _fold(1, 1, 3, 0, 3)])
        assert combined.f_tp_fp == 0.5

    def test_identical_folds(self):
        folds = [_fold(i, 4, 1, 5, 2) for i in range(3)]
        combined = combine_f(folds)
        assert combined.f_avg == pytest.approx(combined.f_pr_re)
        assert combined.f_avg == pytest.approx(combined.f_tp_fp)

    def test_single_fold(self):
        fold = _fold(0, 4, 1, 5, 2)
        combined = combine_f([fold])
        for value in (combined.f_avg, combined.f_pr_re, combined.f_tp_fp):
            assert value == pytest.approx(fold.f_measure)

    def test_mean_counts_equal_pooled_counts(self):
        rng = np.random.default_rng(1)
        for _ in range(1000):
            k = int(rng.integers(1, 11))
            counts = rng.integers(0, 20, size=(k, 4))
            if counts[:, 0].sum() + counts[:, 1].sum() + counts[:, 3].sum() == 0:
                continue
            folds = [_fold(i, *(int(c) for c in row)) for i, row in enumerate(counts)]
            tp, fp, fn = (Fraction(int(counts[:, col].sum()), k) for col in (0, 1, 3))
            expected = 2 * tp / (2 * tp + fp + fn)
            assert combine_f(folds).f_tp_fp == float(expected)

    def test_f_avg_between_fold_extremes(self):
        rng = np.random.default_rng(2)
        for _ in range(200):
            folds = [_fold(i, *(int(c) for c in rng.integers(1, 20, size=4))) for i in range(10)]
            values = [f.f_measure for f in folds]
            assert min(values) - 1e-12 <= combine_f(folds).f_avg <= max(values) + 1e-12

    def test_undefined_fold_left_out(self, caplog):
        combined = combine_f([_fold(0, 2, 0, 3, 0), _fold(1, 0, 0, 5, 0)])
        assert combined.undefined_folds == 1
        assert combined.f_avg == 1.0
        assert "undefined" in caplog.text

    def test_empty(self):
        with pytest.raises(EvaluationError):
            combine_f([])


class TestKfoldSplit:
    @pytest.mark.parametrize("n,k,big,size", [(302, 10, 2, 31), (212, 10, 2, 22)])
    def test_fold_sizes(self, n, k, big, size):
        sizes = sorted(len(f) for f in kfold_split(n, k, seed=42))
        assert sizes == [size - 1] * (k - big) + [size] * big

    def test_singletons(self):
        folds = kfold_split(5, 5, seed=0)
        assert sorted(int(f[0]) for f in folds) == [0, 1, 2, 3, 4]
        assert all(len(f) == 1 for f in folds)

    @pytest.mark.parametrize("stratified", [False, True])
    def test_partition(self, stratified):
        labels = [1] * 37 + [-1] * 63 if stratified else None
        folds = kfold_split(100, 7, seed=3, labels=labels)
        union = np.concatenate(folds)
        assert sorted(union.tolist()) == list(range(100))
        sizes = [len(f) for f in folds]
        assert max(sizes) - min(sizes) <= 1

    def test_deterministic(self):
        first = kfold_split(50, 5, seed=9)
        assert all(np.array_equal(a, b) for a, b in zip(first, kfold_split(50, 5, seed=9)))
        assert not all(np.array_equal(a, b) for a, b in zip(first, kfold_split(50, 5, seed=10)))

    def test_stratified_balance(self):
        labels = np.array([1] * 30 + [-1] * 70)
        for fold in kfold_split(100, 10, seed=4, labels=labels):
            assert (labels[fold] == 1).sum() == 3

    def test_bad_k(self):
        with pytest.raises(EvaluationError):
            kfold_split(3, 4, seed=0)
        with pytest.raises(EvaluationError):
            kfold_split(10, 1, seed=0)


class TestCrossValidate:
    @pytest.mark.parametrize("kind", ["nb", "svm-linear"])
    def test_separable_data_is_perfect(self, kind):
        results = cross_validate(_separable_corpus(), ClassifierSpec(kind=kind), k=10, min_freq=0)
        assert len(results) == 10
        assert all(r.f_measure == 1.0 for r in results)
        assert combine_f(results).f_tp_fp == 1.0

    def test_no_leakage(self):
        corpus = _noise_corpus(120)
        results = cross_validate(corpus, ClassifierSpec(), k=5, seed=11, min_freq=0)
        folds = kfold_split(len(corpus), 5, 11, labels=corpus.labels)
        for result, test in zip(results, folds):
            train = set(range(len(corpus))) - set(test.tolist())
            seen = {token for i in train for token in corpus.tokens[i]}
            assert set(result.vocabulary.terms) <= seen
            assert result.n_test == len(test)

    def test_fold_local_vocabulary(self):
        tokens = tuple(("pump", f"only{i}") for i in range(10))
        corpus = TokenizedCorpus(tokens, np.array([1, -1] * 5))
        for result in cross_validate(corpus, ClassifierSpec(), k=5, seed=0, min_freq=0):
            assert len(result.vocabulary) == 9

    def test_shared_vocabulary(self):
        tokens = tuple(("pump", f"only{i}") for i in range(10))
        corpus = TokenizedCorpus(tokens, np.array([1, -1] * 5))
        results = cross_validate(corpus, ClassifierSpec(), k=5, seed=0, min_freq=0,
                                 shared_vocab=True)
        assert all(len(r.vocabulary) == 11 for r in results)

    def test_shuffled_labels_near_chance(self):
        results = cross_validate(_noise_corpus(), ClassifierSpec(), k=10, seed=5, min_freq=0)
        assert combine_f(results).f_tp_fp == pytest.approx(0.5, abs=0.15)

    def test_two_folds_on_four_items(self):
        corpus = TokenizedCorpus(
            (("leak",), ("calm",), ("leak",), ("calm",)), np.array([1, -1, 1, -1])
        )
        results = cross_validate(corpus, ClassifierSpec(), k=2, seed=0, min_freq=0)
        assert [r.n_train for r in results] == [2, 2]

    def test_training_error_names_fold(self):
        corpus = TokenizedCorpus(tuple(("leak",) for _ in range(4)), np.array([1, 1, 1, -1]))
        with pytest.raises(NaiveBayesError, match=r"fold \d: degenerate training labels"):
            cross_validate(corpus, ClassifierSpec(), k=2, seed=0, min_freq=0, stratified=False)

    def test_parallel_matches_serial(self):
        corpus = _noise_corpus(100)
        serial = cross_validate(corpus, ClassifierSpec(), k=4, min_freq=0)
        parallel = cross_validate(corpus, ClassifierSpec(), k=4, min_freq=0, jobs=2)
        assert [r.cm for r in serial] == [r.cm for r in parallel]
        assert [r.fold_index for r in parallel] == [0, 1, 2, 3]

    def test_holdout(self):
        corpus = _separable_corpus()
        result = holdout_evaluate(corpus.subset(range(30)), corpus.subset(range(30, 40)),
                                  ClassifierSpec(kind="svm-linear"), min_freq=0)
        assert result.f_measure == 1.0
        assert (result.n_train, result.n_test) == (30, 10)


class TestGridSearch:
    def test_ties_go_to_smaller_value(self):
        report = grid_search(_separable_corpus(20), ClassifierSpec(), "alpha", [2.0, 0.5, 1.0],
                             k=5, min_freq=0)
        for scheme in ("tf", "tfidf"):
            assert report.best(scheme).value == 0.5
            assert report.best(scheme).f_measure == 1.0

    def test_single_cell(self):
        report = grid_search(_separable_corpus(20), ClassifierSpec(kind="svm-linear"), "c", [10],
                             schemes=["tf"], k=5, min_freq=0)
        assert report.best("tf").value == 10.0
        assert report.rows() == [[10.0, 1.0]]

    def test_table_layout(self):
        report = grid_search(_separable_corpus(20), ClassifierSpec(), "alpha", [1.0, 2.0],
                             k=5, min_freq=0)
        table = grid_table(report)
        assert table.columns == ["alpha", "f_tf", "f_tfidf"]
        assert [row[0] for row in table.rows] == [1.0, 2.0]

    def test_rejects_unknown_parameter(self):
        with pytest.raises(EvaluationError):
            grid_search(_separable_corpus(20), ClassifierSpec(), "gamma", [1.0], k=5)


# |E|, |A|, |E n A| of four expert-marked reports and the published P/R/F.
EXPERT_ONE = [
    ("r1", 32, 26, 13, (0.50, 0.41, 0.45)),
    ("r2", 29, 27, 16, (0.59, 0.55, 0.57)),
    ("r3", 16, 15, 9, (0.60, 0.56, 0.58)),
    ("r4", 33, 30, 21, (0.70, 0.64, 0.67)),
]


def _marks(doc_id, n_expert, n_algorithm, n_overlap):
    expert = {(doc_id, i) for i in range(n_expert)}
    algorithm = {(doc_id, i) for i in range(n_overlap)}
    algorithm |= {(doc_id, 1000 + i) for i in range(n_algorithm - n_overlap)}
    return expert, algorithm


class TestIrEval:
    def test_expert_one_reports(self):
        expert, algorithm = set(), set()
        for doc_id, n_e, n_a, n_both, (p, r, f) in EXPERT_ONE:
            e, a = _marks(doc_id, n_e, n_a, n_both)
            result = ir_eval(e, a)
            assert (round(result.precision, 2), round(result.recall, 2), round(result.f, 2)) == (
                p, r, f
            )
            expert |= e
            algorithm |= a
        evaluation = evaluate_reports(expert, algorithm, name="expert-1")
        assert [doc for doc, _ in evaluation.reports] == ["r1", "r2", "r3", "r4"]
        assert round(evaluation.mean_precision, 2) == 0.60
        assert round(evaluation.mean_recall, 2) == 0.54
        assert round(evaluation.mean_f, 2) == 0.57

    def test_identical_sets(self):
        result = ir_eval({("a", 1), ("a", 2)}, {("a", 1), ("a", 2)})
        assert result.precision == result.recall == result.f == 1.0

    def test_disjoint_sets(self):
        result = ir_eval({("a", 1)}, {("a", 2)})
        assert result.precision == result.recall == result.f == 0.0

    def test_empty_retrieval_undefined_precision(self):
        result = ir_eval({("a", 1)}, set())
        assert result.precision is None and result.recall == 0.0

    def test_multi_expert_tables(self):
        e1, a = _marks("r1", 4, 4, 2)
        e2, _ = _marks("r1", 2, 4, 2)
        stacked, summary = ir_tables([
            evaluate_reports(e1, a, name="expert-1"),
            evaluate_reports(e2, a, name="expert-2"),
        ])
        assert [row[0] for row in stacked.rows] == ["expert-1"] * 2 + ["expert-2"] * 2 + [
            "overall"
        ]
        assert stacked.rows[-1][-1] == summary.rows[-1][-1]
        assert summary.rows[-1][0] == "overall"
        assert summary.rows[-1][-1] == pytest.approx((0.5 + 2 / 3) / 2)


class TestExpertFile:
    def test_parse(self):
        keys = parse_expert_ids("# marks\nr1\t3\n\nr1\t5\nr2\t0\n")
        assert keys == {("r1", 3), ("r1", 5), ("r2", 0)}

    @pytest.mark.parametrize("text", ["r1 3\n", "r1\tthree\n", "r1\t-1\n"])
    def test_malformed(self, text):
        with pytest.raises(EvaluationError, match=":1:"):
            parse_expert_ids(text)

    def test_missing_file(self, tmp_path):
        with pytest.raises(EvaluationError, match="not found"):
            load_expert_ids(tmp_path / "expert.tsv")


class TestSentenceClassifier:
    def test_spec_line_round_trip(self):
        spec = ClassifierSpec(kind="svm-gaussian", scheme="tfidf", c=100, sigma=8)
        assert ClassifierSpec.parse_line(spec.as_line()) == spec
        assert spec.describe() == "svm-gaussian(C=100,sigma=8)/tfidf"

    @pytest.mark.parametrize("kind", ["nb", "svm-linear", "svm-poly"])
    def test_dump_and_load(self, kind):
        corpus = _noise_corpus(60)
        spec = ClassifierSpec(kind=kind, scheme=WeightingScheme.TFIDF)
        classifier = fit_classifier(corpus.tokens, corpus.labels, spec, min_freq=0)
        loaded = load_classifier(dump_classifier(classifier, header="# run"))
        assert loaded.vocabulary == classifier.vocabulary
        np.testing.assert_allclose(loaded.scores(corpus.tokens), classifier.scores(corpus.tokens),
                                   atol=1e-9)

    def test_scores_agree_with_predictions(self):
        corpus = _noise_corpus(60)
        classifier = fit_classifier(corpus.tokens, corpus.labels, ClassifierSpec(), min_freq=0)
        predicted = classifier.predict(corpus.tokens)
        assert np.array_equal(predicted, np.where(classifier.scores(corpus.tokens) >= 0, 1, -1))

    def test_vocabulary_section_must_match_model(self):
        corpus = _separable_corpus()
        text = dump_classifier(fit_classifier(corpus.tokens, corpus.labels, ClassifierSpec(),
                                              min_freq=0))
        with pytest.raises(ModelFormatError):
            load_classifier(text.replace("leak", "lake"))


class TestReportOutput:
    def test_cv_table_footer(self):
        folds = [_fold(0, 3, 1, 4, 1), _fold(1, 1, 3, 4, 3)]
        table = cv_table(folds)
        assert [row[0] for row in table.rows] == [1, 2, "f_avg", "f_pr_re", "f_tp_fp"]
        lines = table.render("# run").splitlines()
        assert lines[0] == "# run"
        assert lines[1].split("\t") == ["fold", "tp", "fp", "tn", "fn", "precision", "recall", "f"]
        assert lines[-1].split("\t")[-1] == "0.5000"

    def test_workbook(self, tmp_path):
        from openpyxl import load_workbook

        folds = [_fold(0, 3, 1, 4, 1), _fold(1, 0, 0, 4, 0)]
        path = ReportExcelExporter().save([cv_table(folds)], tmp_path / "cv.xlsx", header="# run")
        sheet = load_workbook(path)["cv"]
        assert sheet.cell(row=3, column=1).value == "fold"
        assert sheet.cell(row=5, column=8).value == "NA"

    def test_plots(self, tmp_path):
        bars = plot_f_comparison({"tf": {"nb": 0.9, "svm-linear": None}}, tmp_path / "f.png")
        zipf = plot_zipf(rank_frequency({"a": 5, "b": 2, "c": 1}), tmp_path / "zipf.svg")
        assert bars.stat().st_size > 0 and zipf.stat().st_size > 0

    def test_plot_format(self, tmp_path):
        with pytest.raises(EvaluationError, match="unsupported plot format"):
            plot_zipf(rank_frequency({"a": 1}), tmp_path / "zipf.gif")

    def test_extraction_table_category_before_connective(self):
        text = (
            "The distortion and subsequent cracking of the furnace tube in the auxiliary boiler "
            "was due to sustained overheating."
        )
        match = match_sentence(Sentence("r1", 0, text), load_lexicon())
        table = extraction_table([match])
        assert table.columns == ["doc_id", "sentence_index", "category", "connective", "text"]
        assert table.rows == [["r1", 0, "conjunction", "due to", text]]
