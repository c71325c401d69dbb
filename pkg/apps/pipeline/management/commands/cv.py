"""k-fold cross-validation of one classifier."""
from apps.core.management.base import PipelineCommand
from apps.pipeline.handlers import (
    CrossValidationHandler,
    DatasetInputHandler,
    OutputHandler,
    ResourceHandler,
    TokenizeHandler,
)


class Command(PipelineCommand):
    help = "Cross-validate a classifier; footer rows report F_avg, F_pr,re and F_tp,fp"
    command_name = "cv"

    def add_command_arguments(self, parser):
        parser.add_argument("input", help="Labeled TSV or preprocess output directory")
        self.add_preprocess_arguments(parser)
        self.add_model_arguments(parser)
        self.add_validation_arguments(parser)
        self.add_output_argument(parser)
        self.add_xlsx_argument(parser)

    def run_command(self, config, options):
        return self.run_handlers(
            config,
            [
                ResourceHandler(),
                DatasetInputHandler(),
                TokenizeHandler(),
                CrossValidationHandler(),
                OutputHandler(),
            ],
            input_path=options["input"],
            xlsx_path=options.get("xlsx"),
        )
