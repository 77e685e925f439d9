import logging

from rich.console import Console
from rich.logging import RichHandler

from src.conf.config import settings

LOGGER_NAME = 'bhzeta'


def get_logger(name: str | None = None) -> logging.Logger:
    """
    Return the package logger or one of its children.

    :param name: Optional child name, e.g. ``'zeta'`` gives ``bhzeta.zeta``.
    :type name: str | None
    :return: The logger.
    :rtype: logging.Logger
    """
    return logging.getLogger(LOGGER_NAME if name is None else f'{LOGGER_NAME}.{name}')


def setup_logging(level: str | None = None, rich: bool = True) -> logging.Logger:
    """
    Configure the ``bhzeta`` logger once. Log records always go to stderr so that
    reports written to stdout stay machine readable.

    :param level: Level name; defaults to ``settings.log_level``.
    :type level: str | None
    :param rich: Use a ``RichHandler`` instead of a plain stream handler.
    :type rich: bool
    :return: The configured package logger.
    :rtype: logging.Logger
    """
    logger = get_logger()
    logger.setLevel((level or settings.log_level).upper())

    if not logger.handlers:
        if rich:
            handler = RichHandler(console=Console(stderr=True), show_path=False)
        else:
            handler = logging.StreamHandler()
            handler.setFormatter(logging.Formatter('%(levelname)s %(name)s: %(message)s'))
        logger.addHandler(handler)
        logger.propagate = False

    return logger
