"""Split a labeled corpus and write vocabulary, IDF and matrix files."""
from apps.core.management.base import PipelineCommand
from apps.core.services.run_config import SCHEMES
from apps.pipeline.handlers import (
    DatasetInputHandler,
    OutputHandler,
    PreprocessHandler,
    ResourceHandler,
)


class Command(PipelineCommand):
    help = (
        "Preprocess a labeled TSV: train/test split, vocabulary, IDF and matrices "
        "into --output DIR; prints the term-count progression"
    )
    command_name = "preprocess"

    def add_command_arguments(self, parser):
        parser.add_argument("input", help="Labeled TSV (doc_id, sentence_index, label, text)")
        self.add_preprocess_arguments(parser)
        parser.add_argument("--scheme", choices=SCHEMES, default=None)
        parser.add_argument(
            "--train-fraction", dest="train_fraction", type=float, default=None
        )
        self.add_output_argument(parser, help_text="Target directory")

    def run_command(self, config, options):
        return self.run_handlers(
            config,
            [
                ResourceHandler(),
                DatasetInputHandler(),
                PreprocessHandler(),
                OutputHandler(to_stdout=True),
            ],
            input_path=options["input"],
        )
