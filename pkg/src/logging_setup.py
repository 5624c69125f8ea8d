"""
logging_setup.py
================

Console logging for scripts and the CLI.  Library modules only create
``logging.getLogger(__name__)`` loggers; this module attaches a single
``rich`` handler writing to stderr so that JSON written to stdout stays
clean.
"""

from __future__ import annotations

import logging

from rich.console import Console
from rich.logging import RichHandler

_HANDLER_NAME = "congruence-lift"


def configure_logging(level: str = "WARNING") -> None:
    """Install the rich stderr handler on the ``src`` logger once."""
    logger = logging.getLogger("src")
    logger.setLevel(level.upper())
    if any(getattr(h, "name", None) == _HANDLER_NAME for h in logger.handlers):
        return
    handler = RichHandler(
        console=Console(stderr=True),
        show_path=False,
        rich_tracebacks=False,
    )
    handler.set_name(_HANDLER_NAME)
    handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
    logger.addHandler(handler)
    logger.propagate = False
