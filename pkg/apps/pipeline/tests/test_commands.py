"""Command-line tests: every command run through call_command on a synthetic corpus."""
from io import StringIO
from pathlib import Path

import pytest
from django.core.management import call_command
from django.core.management.base import CommandError
from openpyxl import load_workbook

from apps.core.services.provenance import strip_provenance


def run(*args) -> str:
    out = StringIO()
    call_command(*args, stdout=out)
    return out.getvalue()


def rows(text: str) -> list[list[str]]:
    return [line.split("\t") for line in strip_provenance(text)]


def footer(text: str, label: str) -> float:
    for row in rows(text):
        if row[0] == label:
            return float(row[-1])
    raise AssertionError(f"no {label} row")


@pytest.fixture(scope="module")
def synthetic(tmp_path_factory) -> Path:
    target = tmp_path_factory.mktemp("synthetic")
    run("make_synthetic", "--n", "200", "--seed", "42", "--output", str(target))
    return target


@pytest.fixture(scope="module")
def prepared(synthetic, tmp_path_factory) -> Path:
    target = tmp_path_factory.mktemp("prepared")
    run("preprocess", str(synthetic / "labeled.tsv"), "--output", str(target))
    return target


class TestMakeSynthetic:
    def test_writes_corpus_files(self, synthetic):
        assert (synthetic / "labeled.tsv").exists()
        assert (synthetic / "expert.tsv").exists()
        assert len(list((synthetic / "reports").glob("*.txt"))) == 10

    def test_expert_file_lists_causal_sentences(self, synthetic):
        labeled = rows((synthetic / "labeled.tsv").read_text())
        expert = rows((synthetic / "expert.tsv").read_text())
        causal = [[r[0], r[1]] for r in labeled if r[2] == "+1"]
        assert expert == causal
        assert len(expert) == 100

    def test_summary_on_stdout(self, tmp_path):
        output = run("make_synthetic", "--n", "40", "--output", str(tmp_path))
        assert output.startswith("# causal-extract")
        assert ["labeled.tsv", "40"] in rows(output)


class TestPreprocess:
    def test_writes_all_artifacts(self, prepared):
        for name in ("train.tsv", "test.tsv", "vocabulary.tsv", "idf.tsv",
                     "train.matrix", "test.matrix"):
            text = (prepared / name).read_text()
            assert text.startswith("# causal-extract 0.1.0 command=preprocess")

    def test_split_sizes(self, prepared):
        assert len(rows((prepared / "train.tsv").read_text())) == 140
        assert len(rows((prepared / "test.tsv").read_text())) == 60

    def test_rerun_is_byte_identical(self, synthetic, prepared, tmp_path):
        run("preprocess", str(synthetic / "labeled.tsv"), "--output", str(tmp_path))
        for path in prepared.iterdir():
            assert (tmp_path / path.name).read_bytes() == path.read_bytes(), path.name

    def test_term_count_progression(self, synthetic, tmp_path):
        output = run("preprocess", str(synthetic / "labeled.tsv"), "-o", str(tmp_path))
        stages = {row[0]: int(row[1]) for row in rows(output)[1:]}
        assert stages["train_sentences"] == 140
        assert stages["test_sentences"] == 60

    def test_output_must_be_given(self, synthetic):
        with pytest.raises(CommandError) as excinfo:
            run("preprocess", str(synthetic / "labeled.tsv"))
        assert excinfo.value.returncode == 2

    def test_missing_stoplist(self, synthetic, tmp_path):
        with pytest.raises(CommandError) as excinfo:
            run("preprocess", str(synthetic / "labeled.tsv"), "-o", str(tmp_path),
                "--stoplist", str(tmp_path / "missing.txt"))
        assert excinfo.value.returncode == 2
        assert "stoplist not found" in str(excinfo.value)

    def test_missing_input(self, tmp_path):
        with pytest.raises(CommandError) as excinfo:
            run("preprocess", str(tmp_path / "nope.tsv"), "-o", str(tmp_path / "out"))
        assert excinfo.value.returncode == 2


class TestTrainPredict:
    @pytest.fixture(scope="class")
    def model(self, prepared, tmp_path_factory) -> Path:
        path = tmp_path_factory.mktemp("model") / "nb.model"
        run("train", str(prepared), "--classifier", "nb", "-o", str(path))
        return path

    def test_model_file_has_provenance(self, model):
        assert model.read_text().startswith("# causal-extract 0.1.0 command=train")

    def test_predicts_test_split(self, prepared, model):
        output = run("predict", str(prepared), "--model", str(model))
        table = rows(output)
        assert table[0] == ["doc_id", "sentence_index", "label", "score"]
        assert len(table) == 61
        assert {row[2] for row in table[1:]} <= {"+1", "-1"}

    def test_predictions_match_labels(self, prepared, model):
        expected = {(r[0], r[1]): r[2] for r in rows((prepared / "test.tsv").read_text())}
        table = rows(run("predict", str(prepared), "--model", str(model)))[1:]
        agree = sum(expected[(r[0], r[1])] == r[2] for r in table)
        assert agree / len(table) >= 0.9

    def test_vocabulary_mismatch(self, synthetic, prepared, model, tmp_path):
        run("preprocess", str(synthetic / "labeled.tsv"), "-o", str(tmp_path),
            "--min-freq", "1")
        with pytest.raises(CommandError) as excinfo:
            run("predict", str(prepared), "--model", str(model),
                "--vocabulary", str(tmp_path / "vocabulary.tsv"))
        assert excinfo.value.returncode == 2
        assert "vocabulary mismatch" in str(excinfo.value)

    def test_missing_model(self, prepared, tmp_path):
        with pytest.raises(CommandError) as excinfo:
            run("predict", str(prepared), "--model", str(tmp_path / "none.model"))
        assert excinfo.value.returncode == 2

    def test_svm_model(self, prepared, tmp_path):
        path = tmp_path / "svm.model"
        run("train", str(prepared), "--classifier", "svm-linear", "--C", "1", "-o", str(path))
        assert len(rows(run("predict", str(prepared), "--model", str(path)))) == 61


class TestCrossValidation:
    def test_fold_rows_and_footer(self, synthetic):
        output = run("cv", str(synthetic / "labeled.tsv"), "--k", "5")
        table = rows(output)
        assert table[0] == ["fold", "tp", "fp", "tn", "fn", "precision", "recall", "f"]
        assert [row[0] for row in table[1:6]] == ["1", "2", "3", "4", "5"]
        assert [row[0] for row in table[6:]] == ["f_avg", "f_pr_re", "f_tp_fp"]
        assert sum(int(row[1]) + int(row[4]) for row in table[1:6]) == 100

    @pytest.mark.parametrize(
        "options",
        [
            ("--classifier", "nb"),
            ("--classifier", "svm-linear", "--C", "10"),
            ("--classifier", "svm-gaussian", "--sigma", "1", "--C", "100"),
        ],
        ids=["nb", "svm-linear", "svm-gaussian"],
    )
    def test_synthetic_corpus_is_learnable(self, synthetic, options):
        output = run("cv", str(synthetic / "labeled.tsv"), "--scheme", "tf", *options)
        assert footer(output, "f_tp_fp") >= 0.9

    def test_parallel_matches_serial(self, synthetic):
        args = ("cv", str(synthetic / "labeled.tsv"), "--k", "4")
        assert run(*args, "--jobs", "2") == run(*args)

    def test_no_convergence_exit_code(self, synthetic):
        with pytest.raises(CommandError) as excinfo:
            run("cv", str(synthetic / "labeled.tsv"), "--classifier", "svm-linear",
                "--max-iter", "0", "--k", "3")
        assert excinfo.value.returncode == 3
        assert "fold 1" in str(excinfo.value)

    def test_invalid_k(self, synthetic):
        with pytest.raises(CommandError) as excinfo:
            run("cv", str(synthetic / "labeled.tsv"), "--k", "1")
        assert excinfo.value.returncode == 2

    def test_config_file(self, synthetic, tmp_path):
        config = tmp_path / "run.cfg"
        config.write_text("# three folds\nk=3\nclassifier = nb\n")
        output = run("cv", str(synthetic / "labeled.tsv"), "--config", str(config))
        assert "k=3" in output.splitlines()[0]
        assert [row[0] for row in rows(output)[1:4]] == ["1", "2", "3"]

    def test_flags_override_config_file(self, synthetic, tmp_path):
        config = tmp_path / "run.cfg"
        config.write_text("k=3\n")
        output = run("cv", str(synthetic / "labeled.tsv"), "--config", str(config), "--k", "4")
        assert "k=4" in output.splitlines()[0]

    def test_unknown_config_key(self, synthetic, tmp_path):
        config = tmp_path / "run.cfg"
        config.write_text("folds=3\n")
        with pytest.raises(CommandError) as excinfo:
            run("cv", str(synthetic / "labeled.tsv"), "--config", str(config))
        assert excinfo.value.returncode == 2
        assert "unknown configuration key" in str(excinfo.value)

    def test_xlsx_export(self, synthetic, tmp_path):
        xlsx = tmp_path / "cv.xlsx"
        run("cv", str(synthetic / "labeled.tsv"), "--k", "3", "--xlsx", str(xlsx))
        workbook = load_workbook(xlsx)
        assert workbook.sheetnames == ["cv"]


class TestTune:
    def test_alpha_grid(self, synthetic):
        output = run("tune", str(synthetic / "labeled.tsv"), "--param", "alpha",
                     "--values", "0.5", "1.0", "--k", "3")
        table = rows(output)
        assert table[0] == ["alpha", "f_tf", "f_tfidf"]
        assert [row[0] for row in table[1:]] == ["0.5000", "1.0000"]

    def test_duplicate_values_rejected(self, synthetic):
        with pytest.raises(CommandError) as excinfo:
            run("tune", str(synthetic / "labeled.tsv"), "--param", "c",
                "--values", "1", "1", "--k", "3")
        assert excinfo.value.returncode == 2


class TestHoldoutCompare:
    def test_holdout_table(self, prepared):
        table = rows(run("holdout", str(prepared)))
        assert table[0] == ["weights", "nb", "svm-linear", "svm-gaussian"]
        assert [row[0] for row in table[1:]] == ["tf", "tfidf"]

    def test_compare_with_plot_and_workbook(self, synthetic, tmp_path):
        plot = tmp_path / "compare.png"
        xlsx = tmp_path / "compare.xlsx"
        output = run("compare", str(synthetic / "labeled.tsv"), "--k", "3",
                     "--plot", str(plot), "--xlsx", str(xlsx))
        table = rows(output)
        assert table[0] == ["scheme", "fold", "nb", "svm-linear", "svm-gaussian"]
        assert {row[0] for row in table[1:]} == {"tf", "tfidf"}
        assert plot.stat().st_size > 0
        assert load_workbook(xlsx).sheetnames == ["tf", "tfidf"]


class TestExtraction:
    def test_extract_finds_causal_sentences(self, synthetic):
        table = rows(run("extract", str(synthetic / "reports")))
        assert table[0] == ["doc_id", "sentence_index", "category", "connective", "text"]
        assert len(table) == 101
        assert {row[2] for row in table[1:]} <= {"transition", "conjunction", "verb_phrase"}

    def test_eval_extract_against_generator_labels(self, synthetic):
        output = run("eval_extract", str(synthetic / "reports"),
                     "--expert", str(synthetic / "expert.tsv"))
        last = rows(output)[-1]
        assert last[:2] == ["overall", "mean"]
        assert float(last[-1]) == 1.0

    def test_two_experts(self, synthetic, tmp_path):
        partial = tmp_path / "partial.tsv"
        lines = (synthetic / "expert.tsv").read_text().splitlines()
        partial.write_text("\n".join(lines[::2]) + "\n")
        xlsx = tmp_path / "eval.xlsx"
        output = run("eval_extract", str(synthetic / "reports"),
                     "--expert", str(synthetic / "expert.tsv"),
                     "--expert", str(partial), "--xlsx", str(xlsx))
        experts = {row[0] for row in rows(output)[1:-1]}
        assert experts == {"expert", "partial"}
        assert load_workbook(xlsx).sheetnames == ["expert", "partial", "experts"]

    def test_missing_expert_file(self, synthetic, tmp_path):
        with pytest.raises(CommandError) as excinfo:
            run("eval_extract", str(synthetic / "reports"),
                "--expert", str(tmp_path / "none.tsv"))
        assert excinfo.value.returncode == 2
        assert "expert file not found" in str(excinfo.value)

    def test_no_reports(self, tmp_path):
        with pytest.raises(CommandError) as excinfo:
            run("extract", str(tmp_path))
        assert excinfo.value.returncode == 2


class TestZipf:
    def test_rank_frequency_table(self, synthetic):
        table = rows(run("zipf", str(synthetic / "labeled.tsv")))
        assert table[0] == ["rank", "term", "freq", "rank_freq"]
        freqs = [int(row[2]) for row in table[1:]]
        assert table[1][0] == "1"
        assert freqs == sorted(freqs, reverse=True)

    def test_raw_tokens_on_reports(self, synthetic, tmp_path):
        plot = tmp_path / "zipf.svg"
        raw = rows(run("zipf", str(synthetic / "reports"), "--raw", "--plot", str(plot)))
        processed = rows(run("zipf", str(synthetic / "reports")))
        assert "the" in {row[1] for row in raw}
        assert "the" not in {row[1] for row in processed}
        assert plot.exists()
