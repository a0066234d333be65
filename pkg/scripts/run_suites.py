#!/usr/bin/env python3
"""Run both harness suites over dimensions 1-4.

Each dimension runs the axiom suite and the theorem suite with the harness
settings from config.yaml. The report of every failing dimension is printed;
the exit status is 1 if any check failed anywhere.
"""

import sys
import time
import logging
from pathlib import Path

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from core.harness import TrialConfig, run_all

# Set up logging
logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)

DIMENSIONS = (1, 2, 3, 4)


def run_dimension(dim: int) -> bool:
    """Run every check in one dimension; returns True when nothing failed."""
    cfg = TrialConfig.from_config(dim=dim)
    start = time.perf_counter()
    report = run_all(cfg)
    elapsed = time.perf_counter() - start
    logger.info(
        f"dim {dim}: {len(report.checks)} checks, {cfg.trials} trials each, "
        f"{report.failures} failures in {elapsed:.1f}s"
    )
    if not report.ok:
        logger.error(f"dim {dim}: failing checks follow")
        print(report.to_text(), end="")
    return report.ok


def main():
    logger.info(f"Running axiom and theorem suites in dims {list(DIMENSIONS)}")
    start = time.perf_counter()
    results = {dim: run_dimension(dim) for dim in DIMENSIONS}
    logger.info(f"Sweep finished in {time.perf_counter() - start:.1f}s")

    failed = [dim for dim, ok in results.items() if not ok]
    if failed:
        logger.error(f"Failures in dims {failed}")
        sys.exit(1)
    logger.info("All checks passed")


if __name__ == "__main__":
    main()
