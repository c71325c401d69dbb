"""Pipeline handlers run directly, without the command layer."""
from io import StringIO

import numpy as np
import pytest

from apps.core.services.run_config import RunConfig
from apps.evaluation.services import ReportTable, TokenizedCorpus
from apps.pipeline.handlers import (
    DatasetInputHandler,
    GridSearchHandler,
    OutputHandler,
    PreprocessHandler,
)


def _separable(n: int = 20) -> TokenizedCorpus:
    tokens = tuple(
        ("fire", "engin", "caus") if i % 2 == 0 else ("port", "crew", "watch")
        for i in range(n)
    )
    return TokenizedCorpus(tokens, np.array([1, -1] * (n // 2)))


@pytest.fixture
def config():
    return RunConfig(command="tune", k=2, min_freq=0, classifier="nb")


class TestGridSearchHandler:
    @pytest.mark.parametrize(
        "param, classifier, expected",
        [
            ("alpha", "svm-linear", "nb"),
            ("sigma", "nb", "svm-gaussian"),
            ("c", "nb", "svm-linear"),
            ("c", "svm-gaussian", "svm-gaussian"),
        ],
    )
    def test_classifier_follows_parameter(self, config, param, classifier, expected):
        result = GridSearchHandler().run({
            "config": config.with_changes(classifier=classifier),
            "_corpus": _separable(),
            "param": param,
            "values": [1.0, 10.0],
        })
        assert result.success, result.errors
        assert result.data["classifier"] == expected
        assert set(result.data["best"]) == {"tf", "tfidf"}

    def test_unknown_parameter(self, config):
        result = GridSearchHandler().run({"config": config, "_corpus": _separable(), "param": "k"})
        assert not result.success
        assert result.exit_code == 2


class TestOutputHandler:
    def test_table_below_provenance(self, config):
        stream = StringIO()
        table = ReportTable("t", ["a", "b"], [[1, 0.5], [2, None]])
        result = OutputHandler().run({"config": config, "_table": table, "stdout": stream})
        assert result.success
        lines = stream.getvalue().splitlines()
        assert lines[0] == config.provenance()
        assert lines[1:] == ["a\tb", "1\t0.5000", "2\tNA"]

    def test_text_written_to_output_file(self, config, tmp_path):
        path = tmp_path / "sub" / "model.txt"
        result = OutputHandler().run({
            "config": config.with_changes(output=path), "_text": "model\n",
        })
        assert result.data["output_path"] == str(path)
        assert path.read_text() == "model\n"

    def test_nothing_to_write(self, config):
        result = OutputHandler().run({"config": config})
        assert not result.success
        assert result.exit_code == 1


class TestInputHandlers:
    def test_directory_without_split(self, tmp_path):
        result = DatasetInputHandler().run({"input_path": str(tmp_path)})
        assert result.exit_code == 2
        assert "run preprocess first" in result.errors[0]

    def test_invalid_split(self):
        with pytest.raises(ValueError):
            DatasetInputHandler(split="dev")

    def test_preprocess_rejects_file_output(self, config, tmp_path):
        target = tmp_path / "file.txt"
        target.write_text("")
        result = PreprocessHandler().run({
            "config": config.with_changes(output=target),
            "_dataset": object(),
            "_preprocessor": object(),
        })
        assert result.exit_code == 2
        assert "must be a directory" in result.errors[0]
