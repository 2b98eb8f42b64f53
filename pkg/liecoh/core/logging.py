import logging
import logging.config
from typing import Optional

from liecoh.config import settings

# Log records go to stderr only; stdout carries command results.
LOGGING_CONFIG = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "generic": {
            "format": "%(levelname)-5.5s [%(name)s] %(message)s",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "stream": "ext://sys.stderr",
            "formatter": "generic",
            "level": "NOTSET",
        },
    },
    "loggers": {
        "liecoh": {
            "handlers": ["console"],
            "level": "WARNING",
            "propagate": False,
        },
    },
}


def configure_logging(level: Optional[str] = None) -> None:
    config = {**LOGGING_CONFIG, "loggers": {"liecoh": dict(LOGGING_CONFIG["loggers"]["liecoh"])}}
    config["loggers"]["liecoh"]["level"] = (level or settings.LIECOH_LOG_LEVEL).upper()
    logging.config.dictConfig(config)
