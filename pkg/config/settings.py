from pathlib import Path
import sys

import environ

# ---------------------------------------------------------------------------
# Paths and environment
# ---------------------------------------------------------------------------

BASE_DIR = Path(__file__).resolve().parent.parent
RUNNING_TESTS = "test" in sys.argv

env = environ.Env(
    DEBUG=(bool, False),
)

environ.Env.read_env(BASE_DIR / ".env")

DEBUG = env.bool("DEBUG", default=False)
# Only management commands run; nothing is signed with this key.
SECRET_KEY = env("SECRET_KEY", default="groebner-workbench-insecure-key")

ALLOWED_HOSTS: list[str] = env.list("ALLOWED_HOSTS", default=[])

# ---------------------------------------------------------------------------
# Applications
# ---------------------------------------------------------------------------

INSTALLED_APPS = [
    # Local apps
    "algebra.apps.AlgebraConfig",
    "groebner.apps.GroebnerConfig",
    "complexity.apps.ComplexityConfig",
    "runs.apps.RunsConfig",

    # Django apps
    "django.contrib.auth",
    "django.contrib.contenttypes",

    # Third party apps
    "django_celery_results",
]

# ---------------------------------------------------------------------------
# Database
# ---------------------------------------------------------------------------

if RUNNING_TESTS:
    DATABASES = {
        "default": {
            "ENGINE": "django.db.backends.sqlite3",
            "NAME": ":memory:",
        }
    }
else:
    _DB_ENGINE = env("DB_ENGINE", default="django.db.backends.sqlite3")

    if _DB_ENGINE == "django.db.backends.sqlite3":
        DATABASES = {
            "default": {
                "ENGINE": _DB_ENGINE,
                "NAME": env("DB_NAME", default=str(BASE_DIR / "db.sqlite3")),
            }
        }
    else:
        DATABASES = {
            "default": {
                "ENGINE": _DB_ENGINE,
                "NAME": env("DB_NAME"),
                "USER": env("DB_USER"),
                "PASSWORD": env("DB_PASS"),
                "HOST": env("DB_HOST"),
                "PORT": env("DB_PORT"),
            }
        }

# ---------------------------------------------------------------------------
# Internationalization
# ---------------------------------------------------------------------------

LANGUAGE_CODE = "en-us"
TIME_ZONE = "UTC"
USE_I18N = False
USE_TZ = True

# ---------------------------------------------------------------------------
# Gröbner engine
# ---------------------------------------------------------------------------

GROEBNER_DEFAULT_ORDER = env("GROEBNER_DEFAULT_ORDER", default="grevlex")
GROEBNER_DEFAULT_FIELD = env("GROEBNER_DEFAULT_FIELD", default="q")
GROEBNER_MAX_PAIRS = env.int("GROEBNER_MAX_PAIRS", default=50000)
GROEBNER_VALIDATE_OUTPUT = env.bool("GROEBNER_VALIDATE_OUTPUT", default=True)
GROEBNER_BENCH_JOBS = env.int("GROEBNER_BENCH_JOBS", default=4)
GROEBNER_SYSTEMS_ROOT = Path(env("GROEBNER_SYSTEMS_ROOT", default=str(BASE_DIR / "runs" / "bundled")))

# Any object with incr/increment and timing/observe, e.g. a statsd client.
METRICS_CLIENT = None

# ---------------------------------------------------------------------------
# Celery
# ---------------------------------------------------------------------------

CELERY_BROKER_URL = env("CELERY_BROKER_URL", default="redis://localhost:6379/0")
CELERY_RESULT_BACKEND = "django-db"
CELERY_RESULT_EXTENDED = True  # stores task_name, worker, date_created, etc.
CELERY_ACCEPT_CONTENT = ["json"]
CELERY_TASK_SERIALIZER = "json"
CELERY_RESULT_SERIALIZER = "json"
CELERY_TIMEZONE = TIME_ZONE
CELERY_TASK_DEFAULT_QUEUE = env("CELERY_TASK_DEFAULT_QUEUE", default="groebner")
CELERY_WORKER_POOL = env("CELERY_WORKER_POOL", default="prefork")
CELERY_WORKER_CONCURRENCY = env.int("CELERY_WORKER_CONCURRENCY", default=None)

if RUNNING_TESTS:
    # Namespaced keys; config/celery.py maps them to task_always_eager and
    # task_eager_propagates.
    CELERY_TASK_ALWAYS_EAGER = True
    CELERY_TASK_EAGER_PROPAGATES = True

# ---------------------------------------------------------------------------
# Misc
# ---------------------------------------------------------------------------

DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "handlers": {
        "console": {"class": "logging.StreamHandler"},
    },
    "loggers": {
        "runs": {
            "handlers": ["console"],
            "level": env("RUNS_LOG_LEVEL", default="INFO"),
            "propagate": False,
        },
        "complexity": {
            "handlers": ["console"],
            "level": "WARNING",
            "propagate": False,
        },
        "groebner": {
            "handlers": ["console"],
            "level": env("GROEBNER_LOG_LEVEL", default="WARNING"),
            "propagate": False,
        },
        "algebra": {
            "handlers": ["console"],
            "level": "WARNING",
            "propagate": False,
        },
    },
}

if RUNNING_TESTS:
    LOGGING["loggers"].update(
        {
            "runs": {"handlers": [], "level": "ERROR", "propagate": False},
            "complexity": {"handlers": [], "level": "ERROR", "propagate": False},
            "groebner": {"handlers": [], "level": "ERROR", "propagate": False},
            "algebra": {"handlers": [], "level": "ERROR", "propagate": False},
        }
    )
