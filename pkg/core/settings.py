"""
Django settings for the swapping-algebra project.

The project has no web surface: it hosts the management commands in
``manage.py`` and the test runner. Every project-specific knob lives in
the ``SWAPALG`` dict, which is read through ``swapping_app.conf``.

For the full list of Django settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""

import os
from pathlib import Path

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.environ.get(
    'DJANGO_SECRET_KEY',
    'django-insecure-swapalg-development-key-not-for-deployment',
)

DEBUG = os.environ.get('DJANGO_DEBUG', '') == '1'

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'rest_framework',
    'swapping_app',
    'cluster_app',
    'verify_app',
]


# Nothing is persisted; the test runner only needs SimpleTestCase.
DATABASES = {}


# Internationalization
# https://docs.djangoproject.com/en/5.2/topics/i18n/

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True


# DRF is used for serializers and settings only; no auth app is installed.
REST_FRAMEWORK = {
    "UNAUTHENTICATED_USER": None,
    "DEFAULT_AUTHENTICATION_CLASSES": [],
    "DEFAULT_PERMISSION_CLASSES": [],
}


SWAPALG = {
    "THREADS": int(os.environ.get('SWAPALG_THREADS', '1') or 1),
    "ZERO_TEST_TRIALS": 3,
    "SAMPLE_BOUND": 64,
    "FAST_PATH": True,
    "DEFAULT_SEED": 0,
}


LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": "{asctime} {levelname} {name}: {message}",
            "style": "{",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "verbose",
        },
    },
    "loggers": {
        name: {
            "handlers": ["console"],
            "level": os.environ.get('SWAPALG_LOG_LEVEL', 'WARNING'),
            "propagate": False,
        }
        for name in ("swapping_app", "cluster_app", "verify_app")
    },
}
