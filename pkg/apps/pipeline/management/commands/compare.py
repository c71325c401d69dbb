"""Cross-validated comparison of nb, svm-linear and svm-gaussian."""
from apps.core.management.base import PipelineCommand
from apps.pipeline.handlers import (
    CompareHandler,
    DatasetInputHandler,
    OutputHandler,
    ResourceHandler,
    TokenizeHandler,
)


class Command(PipelineCommand):
    help = "Fold x classifier F-measures under tf and tfidf, optionally as a bar chart"
    command_name = "compare"

    def add_command_arguments(self, parser):
        parser.add_argument("input", help="Labeled TSV or preprocess output directory")
        parser.add_argument("--plot", default=None, help="Bar chart file (.png or .svg)")
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
                CompareHandler(),
                OutputHandler(),
            ],
            input_path=options["input"],
            plot_path=options.get("plot"),
            xlsx_path=options.get("xlsx"),
        )
