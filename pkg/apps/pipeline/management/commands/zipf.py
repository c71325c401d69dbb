"""Rank-frequency table and Zipf diagnostic."""
from apps.core.management.base import PipelineCommand
from apps.pipeline.handlers import OutputHandler, ResourceHandler, ZipfHandler


class Command(PipelineCommand):
    help = "Rank-frequency table of a labeled TSV or of report files"
    command_name = "zipf"

    def add_command_arguments(self, parser):
        parser.add_argument("inputs", nargs="+", help="One labeled .tsv, or reports")
        parser.add_argument(
            "--raw", action="store_true", help="Count raw tokens (no stopwords, no stemming)"
        )
        parser.add_argument("--plot", default=None, help="Log-log plot file (.png or .svg)")
        self.add_preprocess_arguments(parser)
        self.add_output_argument(parser)

    def run_command(self, config, options):
        return self.run_handlers(
            config,
            [ResourceHandler(), ZipfHandler(), OutputHandler()],
            input_paths=options["inputs"],
            raw=options["raw"],
            plot_path=options.get("plot"),
        )
