"""Arrow Space Kernel - command-line entry point"""

import logging
import sys

from cli.dispatch import dispatch
from core.config import load_section


def setup_logging() -> None:
    """Configure root logging (stderr) from the logging section of config.yaml"""
    config = load_section("logging")
    level = getattr(logging, str(config.get("level", "WARNING")).upper(), logging.WARNING)
    logging.basicConfig(
        level=level,
        format=config.get("format", "%(asctime)s - %(levelname)s - %(message)s"),
    )


def main(argv=None) -> int:
    setup_logging()
    code, out = dispatch(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
