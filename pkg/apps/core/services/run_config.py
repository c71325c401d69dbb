"""
Run configuration for every CLI command.

Precedence: command-line flags > config file > settings defaults.
The config file is flat ``key=value`` text; ``#`` starts a comment.
"""
import logging
from dataclasses import asdict, dataclass, fields, replace
from pathlib import Path
from typing import Any, Optional

from apps.core.exceptions import ConfigError

from .random_source import RNG_ALGORITHM

logger = logging.getLogger(__name__)

TOOL_NAME = "causal-extract"
TOOL_VERSION = "0.1.0"

SCHEMES = ("boolean", "tf", "tfidf", "count")
CLASSIFIERS = ("nb", "svm-linear", "svm-gaussian", "svm-poly")


def _to_bool(value: Any) -> bool:
    if isinstance(value, bool):
        return value
    text = str(value).strip().lower()
    if text in {"1", "true", "yes", "on"}:
        return True
    if text in {"0", "false", "no", "off"}:
        return False
    raise ValueError(f"not a boolean: {value!r}")


def _to_path(value: Any) -> Optional[Path]:
    if value in (None, ""):
        return None
    return Path(value)


@dataclass(frozen=True)
class RunConfig:
    """Resolved configuration of one command run."""

    command: str = ""
    scheme: str = "tf"
    classifier: str = "nb"
    alpha: float = 1.0
    c: float = 10.0
    sigma: float = 16.0
    poly_c: float = 1.0
    poly_degree: int = 2
    k: int = 10
    seed: int = 42
    min_freq: int = 5
    train_fraction: float = 0.7
    tol: float = 1e-3
    max_iter: int = 100_000
    stratified: bool = True
    shared_vocab: bool = False
    strict_ambiguous: bool = False
    jobs: int = 1
    stoplist: Optional[Path] = None
    lexicon: Optional[Path] = None
    abbreviations: Optional[Path] = None
    output: Optional[Path] = None

    # Keys that never appear in provenance headers.
    _NON_PROVENANCE = ("command", "output", "jobs")

    @classmethod
    def coercers(cls) -> dict:
        coerce = {}
        for f in fields(cls):
            if f.type is bool:
                coerce[f.name] = _to_bool
            elif f.type is int:
                coerce[f.name] = int
            elif f.type is float:
                coerce[f.name] = float
            elif f.type is str:
                coerce[f.name] = str
            else:
                coerce[f.name] = _to_path
        return coerce

    @classmethod
    def from_mapping(cls, values: dict, source: str) -> dict:
        """Coerce a raw mapping into typed field values."""
        coerce = cls.coercers()
        typed = {}
        for key, raw in values.items():
            name = key.lower()
            if name not in coerce:
                raise ConfigError(f"{source}: unknown configuration key '{key}'")
            if raw is None:
                continue
            try:
                typed[name] = coerce[name](raw)
            except (TypeError, ValueError) as e:
                raise ConfigError(f"{source}: invalid value for '{key}': {e}") from e
        return typed

    @classmethod
    def read_config_file(cls, path: Path) -> dict:
        if not path.exists():
            raise ConfigError(f"config file not found: {path}")
        raw = {}
        text = path.read_text(encoding="utf-8")
        for line_number, line in enumerate(text.splitlines(), 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError(f"{path}:{line_number}: expected key=value")
            key, value = line.split("=", 1)
            raw[key.strip()] = value.strip()
        return cls.from_mapping(raw, str(path))

    @classmethod
    def resolve(
        cls,
        command: str,
        defaults: dict,
        config_file: Optional[Path] = None,
        overrides: Optional[dict] = None,
    ) -> "RunConfig":
        """Merge defaults, config file and flag overrides, then validate."""
        merged = cls.from_mapping(defaults, "settings")
        if config_file is not None:
            merged.update(cls.read_config_file(Path(config_file)))
        if overrides:
            merged.update(cls.from_mapping(overrides, "command line"))
        merged["command"] = command
        config = cls(**merged)
        config.validate()
        logger.debug("Resolved config for %s: %s", command, config.as_header())
        return config

    def validate(self):
        if self.scheme not in SCHEMES:
            raise ConfigError(f"unknown weighting scheme '{self.scheme}'")
        if self.classifier not in CLASSIFIERS:
            raise ConfigError(f"unknown classifier '{self.classifier}'")
        if self.alpha <= 0:
            raise ConfigError("alpha must be > 0")
        if self.c <= 0:
            raise ConfigError("C must be > 0")
        if self.sigma <= 0:
            raise ConfigError("sigma must be > 0")
        if self.poly_degree < 1:
            raise ConfigError("polynomial degree must be >= 1")
        if self.k < 2:
            raise ConfigError("k must be >= 2")
        if self.min_freq < 0:
            raise ConfigError("min_freq must be >= 0")
        if not 0 < self.train_fraction < 1:
            raise ConfigError("train_fraction must lie strictly between 0 and 1")
        if self.jobs < 1:
            raise ConfigError("jobs must be >= 1")
        if self.seed < 0:
            raise ConfigError("seed must be >= 0")

    def with_changes(self, **changes) -> "RunConfig":
        return replace(self, **changes)

    def as_header(self) -> str:
        """Flat ``key=value;...`` rendering in field order."""
        parts = []
        for key, value in asdict(self).items():
            if key in self._NON_PROVENANCE:
                continue
            if isinstance(value, Path):
                value = value.name
            parts.append(f"{key}={value}")
        return ";".join(parts)

    def provenance(self) -> str:
        """The single ``#`` header line written on top of every output."""
        return (
            f"# {TOOL_NAME} {TOOL_VERSION} command={self.command} "
            f"rng={RNG_ALGORITHM} seed={self.seed} config={self.as_header()}"
        )
