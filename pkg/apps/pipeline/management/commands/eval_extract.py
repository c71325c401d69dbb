"""IR evaluation of the connectives method against expert marks."""
from apps.core.management.base import PipelineCommand
from apps.pipeline.handlers import (
    ExtractionEvalHandler,
    ExtractionHandler,
    OutputHandler,
    ReportInputHandler,
    ResourceHandler,
)


class Command(PipelineCommand):
    help = (
        "Per-report precision, recall and F of the extracted sentences against "
        "one or more expert files (doc_id<TAB>sentence_index)"
    )
    command_name = "eval_extract"

    def add_command_arguments(self, parser):
        parser.add_argument("reports", nargs="+", help="Report .txt files or directories")
        parser.add_argument(
            "--expert", action="append", required=True,
            help="Expert-marked sentence ids; repeat for several experts",
        )
        parser.add_argument(
            "--strict-ambiguous", dest="strict_ambiguous", action="store_true", default=None
        )
        self.add_preprocess_arguments(parser)
        self.add_output_argument(parser)
        self.add_xlsx_argument(parser)

    def run_command(self, config, options):
        return self.run_handlers(
            config,
            [
                ResourceHandler(),
                ReportInputHandler(),
                ExtractionHandler(),
                ExtractionEvalHandler(),
                OutputHandler(),
            ],
            report_paths=options["reports"],
            expert_paths=options["expert"],
            xlsx_path=options.get("xlsx"),
        )
