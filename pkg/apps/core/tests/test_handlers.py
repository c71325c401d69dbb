"""HandlerPipeline: input validation, error mapping and data flow."""
import pickle

from apps.core.exceptions import CausalExtractError, ConfigError, ModelFormatError
from apps.core.handlers import BasePipelineHandler, HandlerPipeline, HandlerStatus


class Double(BasePipelineHandler):
    name = "Double"
    required_inputs = ["value"]

    def execute(self, input_data):
        result = self.new_result()
        result.data["value"] = input_data["value"] * 2
        result.data["_live"] = object()
        return result


class Fail(BasePipelineHandler):
    name = "Fail"

    def __init__(self, error, context=None):
        super().__init__(context)
        self.error = error

    def execute(self, input_data):
        raise self.error


class NonConvergence(CausalExtractError):
    exit_code = 3


class TestPipeline:
    def test_data_flows_between_handlers(self):
        pipeline = HandlerPipeline().add(Double()).add(Double())
        results = pipeline.run({"value": 3})
        assert results[-1].data["value"] == 12
        assert pipeline.failed_result is None
        assert all(r.status is HandlerStatus.SUCCESS for r in results)

    def test_missing_input(self):
        result = Double().run({})
        assert not result.success
        assert result.exit_code == 2
        assert result.errors == ["Missing required input: value"]

    def test_domain_error_keeps_exit_code(self):
        pipeline = HandlerPipeline().add(Fail(NonConvergence("no progress"))).add(Double())
        results = pipeline.run({"value": 1})
        assert len(results) == 1
        assert pipeline.failed_result.exit_code == 3
        assert pipeline.failed_result.errors == ["no progress"]

    def test_unexpected_error_exit_code(self):
        result = Fail(RuntimeError("boom")).run({})
        assert result.exit_code == 1
        assert "boom" in result.errors[0]

    def test_live_objects_not_serialized(self):
        final = HandlerPipeline().add(Double()).run({"value": 1})[0]
        assert "_live" not in final.to_dict()["data"]


class TestErrors:
    def test_errors_survive_pickling(self):
        error = pickle.loads(pickle.dumps(ModelFormatError("bad header", line_number=3)))
        assert error.message == "model:3: bad header"
        assert error.line_number == 3
        assert isinstance(error, CausalExtractError)

    def test_config_error_is_input_error(self):
        assert ConfigError("x").exit_code == 2
