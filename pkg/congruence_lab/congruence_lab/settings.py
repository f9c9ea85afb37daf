"""
Django settings for congruence_lab project.

The project has no web surface: Django provides settings, logging
configuration and the management-command CLI (`manage.py census`, ...).
"""

import os
from pathlib import Path

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = os.getenv("CONGRUENCE_LAB_SECRET_KEY", "congruence-lab-offline")

DEBUG = False

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    "lab.apps.LabConfig",
]

# Вычисления не используют базу данных
DATABASES = {}

USE_TZ = True
TIME_ZONE = "UTC"
LANGUAGE_CODE = "ru-RU"


# Лаборатория

# Предел числа записей в одной таблице коэффициентов
CONGRUENCE_LAB_MEM_CAP = int(os.getenv("CONGRUENCE_LAB_MEM_CAP", 10 ** 7))

CONGRUENCE_LAB_CHECKPOINT_RATIO = 2
CONGRUENCE_LAB_MIN_CHECKPOINT = 16
CONGRUENCE_LAB_WORKERS = int(os.getenv("CONGRUENCE_LAB_WORKERS", 1))
CONGRUENCE_LAB_DEFAULT_SEED = 0


# Logging

LAB_LOGGERS = ("arith", "qseries", "partitions", "hecke", "census", "lab")

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "plain": {
            "format": "%(asctime)s %(levelname)s %(name)s: %(message)s",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "plain",
        },
    },
    "root": {"handlers": ["console"], "level": "WARNING"},
    "loggers": {name: {"level": "INFO"} for name in LAB_LOGGERS},
}
