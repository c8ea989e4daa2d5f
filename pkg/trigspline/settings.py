"""
Django settings for trigspline project.
"""

from pathlib import Path
from decouple import config

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = config('SECRET_KEY', default='trigspline-local-only')

DEBUG = config('DEBUG', default=False, cast=bool)

ALLOWED_HOSTS = []

# Application definition
THIRD_PARTY_APPS = [
    'rest_framework',
]

LOCAL_APPS = [
    'apps.interpolation',
    'apps.bases',
    'apps.verification',
]

INSTALLED_APPS = THIRD_PARTY_APPS + LOCAL_APPS

# Nothing is persisted; every computation is in memory.
DATABASES = {}

# Internationalization
LANGUAGE_CODE = 'en-us'
TIME_ZONE = 'UTC'
USE_I18N = False
USE_TZ = True

# REST Framework settings (serializers and renderers only)
REST_FRAMEWORK = {
    'UNAUTHENTICATED_USER': None,
    'DEFAULT_RENDERER_CLASSES': [
        'rest_framework.renderers.JSONRenderer',
    ],
    'COERCE_DECIMAL_TO_STRING': False,
}

# Numerical defaults
TRIGSPLINE = {
    'TRUNC_TOL': config('TRIGSPLINE_TRUNC_TOL', default=1e-12, cast=float),
    'TRUNC_MAX_TERMS': config('TRIGSPLINE_TRUNC_MAX_TERMS', default=100000, cast=int),
    'CONDITIONAL_TERMS': 10000,
    'SINGULARITY_FLOOR': 1e-12,
    'ORACLE_TERMS': config('TRIGSPLINE_ORACLE_TERMS', default=10 ** 6, cast=int),
    'QUADRATURE_POINTS': 10000,
    'SIGNIFICANT_DIGITS': 17,
    'DENSE_POINTS': 500,
}

# Logging configuration
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'simple': {
            'format': '{levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'simple',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': config('TRIGSPLINE_LOG_LEVEL', default='WARNING'),
    },
    'loggers': {
        'apps': {
            'handlers': ['console'],
            'level': config('TRIGSPLINE_LOG_LEVEL', default='WARNING'),
            'propagate': False,
        },
    },
}
