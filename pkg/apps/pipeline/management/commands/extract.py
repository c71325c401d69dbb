"""Rule-based causal sentence extraction with the connectives lexicon."""
from apps.core.management.base import PipelineCommand
from apps.pipeline.handlers import (
    ExtractionHandler,
    OutputHandler,
    ReportInputHandler,
    ResourceHandler,
)


class Command(PipelineCommand):
    help = "Extract causal sentences from plain-text reports"
    command_name = "extract"

    def add_command_arguments(self, parser):
        parser.add_argument("reports", nargs="+", help="Report .txt files or directories")
        parser.add_argument(
            "--strict-ambiguous", dest="strict_ambiguous", action="store_true", default=None,
            help="Require a clause after 'as', 'since' and 'so'",
        )
        self.add_preprocess_arguments(parser)
        self.add_output_argument(parser)

    def run_command(self, config, options):
        return self.run_handlers(
            config,
            [
                ResourceHandler(),
                ReportInputHandler(),
                ExtractionHandler(),
                OutputHandler(),
            ],
            report_paths=options["reports"],
        )
