import logging

import pytest


@pytest.fixture(autouse=True)
def app_logging():
    """Let caplog see the "apps" loggers; restore the level commands change."""
    app_logger = logging.getLogger("apps")
    propagate, level = app_logger.propagate, app_logger.level
    app_logger.propagate = True
    yield app_logger
    app_logger.propagate = propagate
    app_logger.setLevel(level)
