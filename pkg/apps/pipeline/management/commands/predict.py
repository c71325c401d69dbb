"""Label sentences with a trained model."""
from apps.core.management.base import PipelineCommand
from apps.pipeline.handlers import (
    DatasetInputHandler,
    OutputHandler,
    PredictHandler,
    ResourceHandler,
    TokenizeHandler,
)


class Command(PipelineCommand):
    help = (
        "Predict labels for a labeled TSV (or the test part of a preprocess directory); "
        "refuses a vocabulary the model was not trained on"
    )
    command_name = "predict"

    def add_command_arguments(self, parser):
        parser.add_argument("input", help="Labeled TSV or preprocess output directory")
        parser.add_argument("--model", required=True, help="Model file written by train")
        parser.add_argument(
            "--vocabulary", default=None, help="Vocabulary file the model must match"
        )
        self.add_preprocess_arguments(parser)
        self.add_output_argument(parser)

    def run_command(self, config, options):
        return self.run_handlers(
            config,
            [
                ResourceHandler(),
                DatasetInputHandler(split="test"),
                TokenizeHandler(),
                PredictHandler(),
                OutputHandler(),
            ],
            input_path=options["input"],
            model_path=options["model"],
            vocabulary_path=options.get("vocabulary"),
        )
