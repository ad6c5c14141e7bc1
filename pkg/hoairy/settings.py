"""
Django settings for the hoairy project.

Only the parts of Django that a command-line toolkit needs are enabled:
management commands, logging and the celery configuration. No models are
stored, the database entry only keeps Django's checks quiet.
"""
from pathlib import Path

import environ

env = environ.Env()

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = env("SECRET_KEY", default="hoairy-local-only-not-a-secret")

DEBUG = env("DEBUG", cast=bool, default=False)

ALLOWED_HOSTS = env("ALLOWED_HOSTS", cast=list, default=[])

INSTALLED_APPS = [
    "hoairy.core",
    "hoairy.utils",
    "hoairy.diffring",
    "hoairy.hierarchy",
    "hoairy.airy",
    "hoairy.fredholm",
    "hoairy.painleve",
]

DEFAULT_AUTO_FIELD = "django.db.models.AutoField"

DATABASES = {
    "default": env.db(default=f"sqlite:///{BASE_DIR / 'hoairy.sqlite3'}"),
}

USE_TZ = True

# Celery only fans out parameter sweeps. Without a broker every task runs
# in-process, which keeps command output identical with or without workers.
CELERY_BROKER_URL = env("CELERY_BROKER_URL", default="memory://")
CELERY_RESULT_BACKEND = env("CELERY_RESULT_BACKEND", default="cache+memory://")
CELERY_TASK_ALWAYS_EAGER = env("CELERY_TASK_ALWAYS_EAGER", cast=bool, default=True)
CELERY_TASK_EAGER_PROPAGATES = True
CELERY_TASK_SERIALIZER = "json"
CELERY_RESULT_SERIALIZER = "json"

# Doubles the quadrature node counts of the Fredholm route.
HOAIRY_SELF_CHECK = env("HOAIRY_SELF_CHECK", cast=bool, default=False)

LOG_LEVEL = env("LOG_LEVEL", default="WARNING")

# Stdout carries the artifacts, so every log record goes to stderr.
LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "plain": {"format": "%(asctime)s %(levelname)s %(name)s: %(message)s"},
    },
    "handlers": {
        "stderr": {
            "class": "logging.StreamHandler",
            "stream": "ext://sys.stderr",
            "formatter": "plain",
        },
    },
    "loggers": {
        "hoairy": {"handlers": ["stderr"], "level": LOG_LEVEL, "propagate": False},
    },
}
