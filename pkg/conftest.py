"""Pytest wiring that mirrors ``python manage.py test``.

config/settings.py switches to its test configuration (in-memory SQLite,
eager Celery, silenced loggers) when "test" is in sys.argv, so mark the
process the same way the Django test runner would before loading settings.
"""
import os
import sys

if "test" not in sys.argv:
    sys.argv.append("test")

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "config.settings")

import django  # noqa: E402

django.setup()

from django.test.runner import DiscoverRunner  # noqa: E402

_runner = DiscoverRunner(verbosity=0, interactive=False)
_old_config = None


def pytest_sessionstart(session):
    global _old_config
    _runner.setup_test_environment()
    _old_config = _runner.setup_databases()


def pytest_sessionfinish(session, exitstatus):
    if _old_config is not None:
        _runner.teardown_databases(_old_config)
    _runner.teardown_test_environment()
