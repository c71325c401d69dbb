"""Write the synthetic maritime corpus."""
from apps.core.management.base import PipelineCommand
from apps.pipeline.handlers import OutputHandler, SyntheticCorpusHandler


class Command(PipelineCommand):
    help = "Generate a labeled synthetic corpus, its expert file and report texts"
    command_name = "make_synthetic"

    def add_command_arguments(self, parser):
        parser.add_argument("--n", dest="n_sentences", type=int, default=200)
        self.add_output_argument(parser, help_text="Target directory")

    def run_command(self, config, options):
        return self.run_handlers(
            config,
            [SyntheticCorpusHandler(), OutputHandler(to_stdout=True)],
            n_sentences=options["n_sentences"],
        )
