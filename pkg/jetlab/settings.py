"""
Django settings for jetlab project.

jetlab has no web surface: Django provides the management-command CLI,
settings, forms, template rendering of text reports and the test runner.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/4.2/ref/settings/
"""

from pathlib import Path
import os
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.environ.get('SECRET_KEY', 'django-insecure-jetlab-3v$8k!q2z@w7r(1m^c0x_offline-only')

DEBUG = os.environ.get('DEBUG', 'False') == 'True'

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    # Local apps
    'jetalg',
]

TEMPLATES = [
    {
        'BACKEND': 'django.template.backends.django.DjangoTemplates',
        'DIRS': [BASE_DIR / 'templates'],
        'APP_DIRS': True,
        'OPTIONS': {
            'context_processors': [],
        },
    },
]

# Все вычисления чисто алгебраические, база данных не нужна
DATABASES = {}


# Internationalization

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = True

USE_TZ = True


# Sweep defaults
# Ranges are written lo..hi, both ends inclusive.
JETALG_M1_RANGE = os.environ.get('JETALG_M1_RANGE', '-3..3')
JETALG_M2_RANGE = os.environ.get('JETALG_M2_RANGE', '0..3')
JETALG_S1_RANGE = os.environ.get('JETALG_S1_RANGE', '-3..3')
JETALG_S2_RANGE = os.environ.get('JETALG_S2_RANGE', '0..3')

# Module sweeps apply several actions per case, so they default to a smaller grid
JETALG_CHECK_RANGES = {
    'jet-axioms': {'m1': '-2..2', 'm2': '0..2', 's1': '-2..2', 's2': '0..2'},
    'negative-control': {'m1': '-2..2', 'm2': '0..2', 's1': '-2..2', 's2': '0..2'},
}

JETALG_JOBS = int(os.environ.get('JETALG_JOBS', 1))
JETALG_SAMPLES = int(os.environ.get('JETALG_SAMPLES', 500))
JETALG_SEED = int(os.environ.get('JETALG_SEED', 1729))

# Report files and the text table
JETALG_REPORT_DIR = Path(os.environ.get('JETALG_REPORT_DIR', BASE_DIR / 'reports'))
JETALG_CLIP = int(os.environ.get('JETALG_CLIP', 72))
JETALG_TEXT_FAILURES = int(os.environ.get('JETALG_TEXT_FAILURES', 10))


# Logging goes to stderr so JSON reports on stdout stay clean
JETALG_LOG_LEVEL = os.environ.get('JETALG_LOG_LEVEL', 'WARNING')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '{levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'plain',
        },
    },
    'loggers': {
        'jetalg': {
            'handlers': ['console'],
            'level': JETALG_LOG_LEVEL,
            'propagate': False,
        },
    },
}
