import os
from pathlib import Path
from decouple import config

BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = config('SECRET_KEY', default='fracsim-local-key')
DEBUG = config('DEBUG', default=False, cast=bool)

ALLOWED_HOSTS = []

# Application definition
INSTALLED_APPS = [
    # Third party
    'rest_framework',
    # Local apps
    'fractional',
    'epidemic',
    'analytics',
]

TEMPLATES = [
    {
        'BACKEND': 'django.template.backends.django.DjangoTemplates',
        'DIRS': [],
        'APP_DIRS': True,
        'OPTIONS': {
            # Plot scripts are plain text, never HTML.
            'autoescape': False,
        },
    },
]

# Everything is written to flat files; no database is configured.
DATABASES = {}

LANGUAGE_CODE = 'en-us'
TIME_ZONE = 'UTC'
USE_I18N = False
USE_TZ = True

# Toolkit defaults
FRACSIM = {
    'OUTPUT_DIR': config('FRACSIM_OUTPUT_DIR', default='output'),
    'DEFAULT_PRESET': config('FRACSIM_DEFAULT_PRESET', default='florida-default'),
    'REFINE': config('FRACSIM_REFINE', default=4, cast=int),
    'MAX_ITERATIONS': config('FRACSIM_MAX_ITERATIONS', default=200, cast=int),
    'N_POINTS': config('FRACSIM_N_POINTS', default=400, cast=int),
    'T_FINAL': config('FRACSIM_T_FINAL', default=5.0, cast=float),
}

# Logging
LOG_LEVEL = config('LOG_LEVEL', default='INFO')
LOG_FILE = config('LOG_FILE', default='')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '%(asctime)s %(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'console': {
            'level': LOG_LEVEL,
            'class': 'logging.StreamHandler',
            'formatter': 'plain',
        },
    },
    'loggers': {
        'fractional': {
            'handlers': ['console'],
            'level': LOG_LEVEL,
            'propagate': True,
        },
        'epidemic': {
            'handlers': ['console'],
            'level': LOG_LEVEL,
            'propagate': True,
        },
        'analytics': {
            'handlers': ['console'],
            'level': LOG_LEVEL,
            'propagate': True,
        },
    },
}

if LOG_FILE:
    LOGGING['handlers']['file'] = {
        'level': LOG_LEVEL,
        'class': 'logging.FileHandler',
        'filename': os.path.join(BASE_DIR, LOG_FILE),
        'formatter': 'plain',
    }
    for logger_config in LOGGING['loggers'].values():
        logger_config['handlers'].append('file')
