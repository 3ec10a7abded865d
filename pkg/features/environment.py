"""
Environment for Behave Testing
"""

import logging
import tempfile
from os import getenv

from click.testing import CliRunner
from wsgi import app

LOGGING_LEVEL = getenv("LOGGING_LEVEL", "CRITICAL").upper()


def before_all(context):
    """Executed once before all tests"""
    app.config["TESTING"] = True
    app.logger.setLevel(LOGGING_LEVEL)
    context.client = app.test_client()
    context.runner = CliRunner()
    context.config.setup_logging()


def before_scenario(context, scenario):  # pylint: disable=unused-argument
    """Gives every scenario its own scratch directory"""
    context.workdir = tempfile.TemporaryDirectory()  # pylint: disable=consider-using-with
    context.body = {}


def after_scenario(context, scenario):  # pylint: disable=unused-argument
    """Removes the scratch directory and any CLI log handlers"""
    context.workdir.cleanup()
    logging.getLogger("flask.app").handlers = []
