"""Logging setup shared by the library, the CLI and the server"""
import logging
import sys
from typing import Optional

ROOT_LOGGER = "betti_engine"
LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def get_logger(name: str) -> logging.Logger:
    """Return a logger namespaced under the engine root logger"""
    if name.startswith("src."):
        name = name[len("src."):]
    return logging.getLogger(f"{ROOT_LOGGER}.{name}")


def configure_logging(level: Optional[str] = None) -> logging.Logger:
    """Install one stderr handler on the root engine logger; later calls rebind it to the current stderr"""
    root = logging.getLogger(ROOT_LOGGER)
    root.setLevel((level or "WARNING").upper())
    for handler in root.handlers:
        if getattr(handler, "_betti_engine", False):
            handler.setStream(sys.stderr)
            return root
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    handler._betti_engine = True
    root.addHandler(handler)
    return root
