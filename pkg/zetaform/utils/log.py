"""Logging setup: rich output on stderr so stdout stays machine readable."""
import logging

from rich.console import Console
from rich.logging import RichHandler

LOGGER_NAME = "zetaform"


def setup_logging(verbose: bool = False) -> logging.Logger:
    """WARNING by default, DEBUG when verbose. Safe to call repeatedly."""
    logger = logging.getLogger(LOGGER_NAME)
    if not any(isinstance(h, RichHandler) for h in logger.handlers):
        handler = RichHandler(console=Console(stderr=True), show_path=False, markup=False)
        handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
        logger.addHandler(handler)
        logger.propagate = False
    logger.setLevel(logging.DEBUG if verbose else logging.WARNING)
    return logger
