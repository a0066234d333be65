"""
Command dispatch and exit codes.

    0  success
    1  usage, parse, scene or dimension error
    2  undefined operation (UndefinedOperation and its subclasses)
    3  `check` ran and at least one check failed
"""

import argparse
import io
import logging
import re
import sys
from contextlib import redirect_stdout
from typing import List, Tuple

from cli import arrows, check, geometry, vectors
from cli.common import UsageError
from core.errors import ArrowSpaceError, UndefinedOperation

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_UNDEFINED = 2
EXIT_CHECK_FAILED = 3


class ArgumentParser(argparse.ArgumentParser):
    """argparse that raises UsageError instead of exiting, and reads -1/2 as a value."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = re.compile(r"^-[0-9]+(?:/[0-9]+)?$")

    def error(self, message):
        raise UsageError(message)


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog="arrows", description="Exact rational arrow-space calculator")
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True
    for group in (check, arrows, geometry, vectors):
        group.register(subparsers)
    return parser


def _fail(code: int, exc: Exception) -> Tuple[int, str]:
    print(f"error: {exc}", file=sys.stderr)
    return code, ""


def dispatch(argv: List[str]) -> Tuple[int, str]:
    """Run one command; returns the exit code and everything meant for stdout."""
    help_text = io.StringIO()
    try:
        with redirect_stdout(help_text):
            args = build_parser().parse_args(argv)
    except UsageError as e:
        return _fail(EXIT_USAGE, e)
    except SystemExit as e:
        # --help, printed by argparse
        return (e.code if isinstance(e.code, int) else EXIT_OK), help_text.getvalue()

    logger.debug(f"dispatching {args.command}")
    try:
        output = args.handler(args)
    except UndefinedOperation as e:
        return _fail(EXIT_UNDEFINED, e)
    except (UsageError, ArrowSpaceError, ValueError, OSError) as e:
        return _fail(EXIT_USAGE, e)

    if output.failed:
        return EXIT_CHECK_FAILED, output.text
    return EXIT_OK, output.text
