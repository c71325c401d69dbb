"""
Shared base for all causal-extract management commands.

Adds the global flags ``--seed``, ``--jobs`` and ``--config``, resolves the
RunConfig (flags > config file > settings) and turns failed handler results
into CommandError with the matching exit code.
"""
import logging
from dataclasses import fields

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from apps.core.exceptions import CausalExtractError
from apps.core.handlers import HandlerPipeline, HandlerResult
from apps.core.services.run_config import CLASSIFIERS, SCHEMES, RunConfig

logger = logging.getLogger(__name__)

RUN_CONFIG_KEYS = {f.name for f in fields(RunConfig)}


class PipelineCommand(BaseCommand):
    """BaseCommand with run configuration and exit-code mapping."""

    command_name = ""

    def add_arguments(self, parser):
        parser.add_argument("--seed", type=int, default=None, help="RNG seed")
        parser.add_argument(
            "--jobs", type=int, default=None, help="Parallel fold/grid workers"
        )
        parser.add_argument(
            "--config", dest="config_file", default=None,
            help="Flat key=value config file",
        )
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    # Argument groups shared by several commands

    def add_preprocess_arguments(self, parser):
        parser.add_argument("--min-freq", dest="min_freq", type=int, default=None)
        parser.add_argument("--stoplist", default=None, help="Stoplist file")
        parser.add_argument(
            "--abbreviations", default=None, help="Abbreviation list for segmentation"
        )
        parser.add_argument("--lexicon", default=None, help="Connectives lexicon file")

    def add_model_arguments(self, parser):
        parser.add_argument("--scheme", choices=SCHEMES, default=None)
        parser.add_argument("--classifier", choices=CLASSIFIERS, default=None)
        parser.add_argument("--alpha", type=float, default=None, help="NB smoothing")
        parser.add_argument("--C", dest="c", type=float, default=None, help="SVM box constraint")
        parser.add_argument("--sigma", type=float, default=None, help="Gaussian kernel width")
        parser.add_argument("--poly-c", dest="poly_c", type=float, default=None)
        parser.add_argument("--poly-degree", dest="poly_degree", type=int, default=None)
        parser.add_argument("--tol", type=float, default=None, help="SMO KKT tolerance")
        parser.add_argument("--max-iter", dest="max_iter", type=int, default=None)

    def add_validation_arguments(self, parser):
        parser.add_argument("--k", type=int, default=None, help="Number of folds")
        parser.add_argument(
            "--no-stratify", dest="stratified", action="store_false", default=None
        )
        parser.add_argument(
            "--shared-vocab", dest="shared_vocab", action="store_true", default=None,
            help="Build one vocabulary before folding",
        )

    def add_output_argument(self, parser, help_text="Output file (default: stdout)"):
        parser.add_argument("--output", "-o", default=None, help=help_text)

    def add_xlsx_argument(self, parser):
        parser.add_argument(
            "--xlsx", default=None, help="Also write the result tables to an Excel workbook"
        )

    def configure_logging(self, verbosity: int):
        app_logger = logging.getLogger("apps")
        if verbosity == 0:
            app_logger.setLevel(logging.WARNING)
        elif verbosity >= 2:
            app_logger.setLevel(logging.DEBUG)

    def resolve_config(self, options: dict) -> RunConfig:
        defaults = dict(settings.CAUSAL_EXTRACT)
        for key, path in settings.CAUSAL_EXTRACT_DATA.items():
            defaults.setdefault(key, str(path))
        overrides = {
            key: value
            for key, value in options.items()
            if key in RUN_CONFIG_KEYS and value is not None
        }
        return RunConfig.resolve(
            self.command_name,
            defaults,
            config_file=options.get("config_file"),
            overrides=overrides,
        )

    def handle(self, *args, **options):
        self.configure_logging(options.get("verbosity", 1))
        try:
            config = self.resolve_config(options)
        except CausalExtractError as e:
            raise CommandError(e.message, returncode=e.exit_code) from e

        result = self.run_command(config, options)
        if not result.success:
            message = "; ".join(result.errors) or "command failed"
            raise CommandError(message, returncode=result.exit_code or 1)
        for warning in result.warnings:
            logger.warning("%s", warning)

    def run_command(self, config: RunConfig, options: dict) -> HandlerResult:
        raise NotImplementedError

    def run_handlers(self, config: RunConfig, handlers, **inputs) -> HandlerResult:
        """Run `handlers` in order; returns the first failure or the last result."""
        pipeline = HandlerPipeline({"config": config, "stdout": self.stdout})
        for handler in handlers:
            pipeline.add(handler)
        results = pipeline.run(inputs)
        for result in results:
            logger.debug("%s", result.to_dict())
        failed = pipeline.failed_result
        if failed is not None:
            return failed
        final = results[-1]
        final.warnings = [w for result in results for w in result.warnings]
        return final
