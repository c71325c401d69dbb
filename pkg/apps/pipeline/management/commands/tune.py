"""Grid search of C, sigma or alpha under tf and tfidf weighting."""
from apps.core.management.base import PipelineCommand
from apps.pipeline.handlers import (
    DatasetInputHandler,
    GridSearchHandler,
    OutputHandler,
    ResourceHandler,
    TokenizeHandler,
)


class Command(PipelineCommand):
    help = "Tune one hyperparameter by cross-validated F_tp,fp; ties go to the smaller value"
    command_name = "tune"

    def add_command_arguments(self, parser):
        parser.add_argument("input", help="Labeled TSV or preprocess output directory")
        parser.add_argument("--param", choices=("c", "sigma", "alpha"), required=True)
        parser.add_argument(
            "--values", type=float, nargs="+", default=None,
            help="Grid values (default: C 0.01..100, sigma 8..128)",
        )
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
                GridSearchHandler(),
                OutputHandler(),
            ],
            input_path=options["input"],
            param=options["param"],
            values=options.get("values"),
            xlsx_path=options.get("xlsx"),
        )
