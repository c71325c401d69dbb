"""
Base settings shared across all environments.
"""
import os
from pathlib import Path

BASE_DIR = Path(__file__).resolve().parent.parent.parent

SECRET_KEY = os.environ.get(
    "SECRET_KEY", "django-insecure-dev-only-change-in-production"
)

DEBUG = False

ALLOWED_HOSTS: list[str] = []

INSTALLED_APPS = [
    "django.contrib.contenttypes",
    "django.contrib.auth",
    # causal-extract apps
    "apps.core",
    "apps.corpus",
    "apps.preprocess",
    "apps.vectorize",
    "apps.bayes",
    "apps.svm",
    "apps.connectives",
    "apps.evaluation",
    "apps.pipeline",
]

# Every artifact is a text file; no database is used.
DATABASES: dict = {}

LANGUAGE_CODE = "en-us"
TIME_ZONE = "UTC"
USE_I18N = False
USE_TZ = True

DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"

# Run defaults (tuned protocol). Every key may be overridden by an
# environment variable CAUSAL_EXTRACT_<KEY>, then by --config files and flags.
_CAUSAL_EXTRACT_DEFAULTS = {
    "scheme": "tf",
    "classifier": "nb",
    "alpha": "1.0",
    "c": "10.0",
    "sigma": "16.0",
    "poly_c": "1.0",
    "poly_degree": "2",
    "k": "10",
    "seed": "42",
    "min_freq": "5",
    "train_fraction": "0.7",
    "tol": "1e-3",
    "max_iter": "100000",
    "stratified": "true",
    "shared_vocab": "false",
    "strict_ambiguous": "false",
    "jobs": "1",
}

CAUSAL_EXTRACT = {
    key: os.environ.get(f"CAUSAL_EXTRACT_{key.upper()}", default)
    for key, default in _CAUSAL_EXTRACT_DEFAULTS.items()
}

# Shipped resource files
CAUSAL_EXTRACT_DATA = {
    "stoplist": BASE_DIR / "apps" / "preprocess" / "data" / "stoplist.txt",
    "lexicon": BASE_DIR / "apps" / "connectives" / "data" / "connectives.tsv",
    "abbreviations": BASE_DIR / "apps" / "corpus" / "data" / "abbreviations.txt",
}

LOG_LEVEL = os.environ.get("CAUSAL_EXTRACT_LOG_LEVEL", "INFO")

# Console logging on stderr; stdout carries command output.
LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": (
                "%(asctime)s %(levelname)s %(name)s %(message)s"
            ),
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "stream": "ext://sys.stderr",
            "formatter": "verbose",
        },
    },
    "root": {
        "handlers": ["console"],
        "level": "INFO",
    },
    "loggers": {
        "django": {
            "handlers": ["console"],
            "level": "WARNING",
            "propagate": False,
        },
        "apps": {
            "handlers": ["console"],
            "level": LOG_LEVEL,
            "propagate": False,
        },
    },
}
