"""
Settings dispatcher: reads DJANGO_ENV to select settings module.

Default: development (verbose logging).
DJANGO_ENV=test or DJANGO_ENV=production use the base settings.
"""
import os

env = os.environ.get("DJANGO_ENV", "development")

if env in ("production", "test"):
    from .base import *  # noqa: F401, F403
else:
    from .development import *  # noqa: F401, F403
