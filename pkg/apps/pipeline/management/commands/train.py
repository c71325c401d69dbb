"""Train a sentence classifier and write the model file."""
from apps.core.management.base import PipelineCommand
from apps.pipeline.handlers import (
    DatasetInputHandler,
    OutputHandler,
    ResourceHandler,
    TokenizeHandler,
    TrainHandler,
)


class Command(PipelineCommand):
    help = "Train naive Bayes or an SVM on a labeled TSV or a preprocess directory"
    command_name = "train"

    def add_command_arguments(self, parser):
        parser.add_argument("input", help="Labeled TSV or preprocess output directory")
        self.add_preprocess_arguments(parser)
        self.add_model_arguments(parser)
        self.add_output_argument(parser, help_text="Model file (default: stdout)")

    def run_command(self, config, options):
        return self.run_handlers(
            config,
            [
                ResourceHandler(),
                DatasetInputHandler(),
                TokenizeHandler(),
                TrainHandler(),
                OutputHandler(),
            ],
            input_path=options["input"],
        )
