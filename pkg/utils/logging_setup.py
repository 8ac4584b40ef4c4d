"""
Logging Setup
One-time logging configuration for the command-line entry point
"""
import logging
import sys

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def configure_logging(level: str = "INFO", quiet: bool = False):
    """Send diagnostics to stderr; --quiet keeps only warnings and errors"""
    if quiet:
        level = "WARNING"
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.INFO),
        format=LOG_FORMAT,
        stream=sys.stderr,
        force=True,
    )


def progress_enabled(setting: bool, quiet: bool) -> bool:
    """Progress bars only when enabled, not quiet, and stderr is a terminal"""
    return setting and not quiet and sys.stderr.isatty()
