"""Train/test evaluation of all classifiers under tf and tfidf."""
from apps.core.management.base import PipelineCommand
from apps.pipeline.handlers import (
    DatasetInputHandler,
    HoldoutHandler,
    OutputHandler,
    ResourceHandler,
    TokenizeHandler,
)


class Command(PipelineCommand):
    help = "Evaluate nb, svm-linear and svm-gaussian on a held-out test set"
    command_name = "holdout"

    def add_command_arguments(self, parser):
        parser.add_argument("input", help="Labeled TSV or preprocess output directory")
        parser.add_argument(
            "--train-fraction", dest="train_fraction", type=float, default=None
        )
        self.add_preprocess_arguments(parser)
        self.add_model_arguments(parser)
        self.add_output_argument(parser)

    def run_command(self, config, options):
        return self.run_handlers(
            config,
            [
                ResourceHandler(),
                DatasetInputHandler(),
                TokenizeHandler(),
                HoldoutHandler(),
                OutputHandler(),
            ],
            input_path=options["input"],
        )
