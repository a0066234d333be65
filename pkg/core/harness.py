"""
Law-checking harness.

Runs every named check of a suite over seeded random trials against a metric
model and collects a deterministic report. Failing witnesses are shrunk
before they are reported.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Tuple

from pydantic import BaseModel, Field

from core.arrows import EUCLIDEAN, Arrow, MetricModel, Point
from core.checks import AXIOM_SUITE, THEOREM_SUITE, Check, CheckContext, CheckSuite, Witness
from core.config import load_section
from core.generators import TrialGenerator, trial_rng
from core.rational import format_coords, format_rational

logger = logging.getLogger(__name__)

SUITES: Dict[str, CheckSuite] = {
    AXIOM_SUITE.name: AXIOM_SUITE,
    THEOREM_SUITE.name: THEOREM_SUITE,
}


class SignFlippedModel(MetricModel):
    """A deliberately broken model, the negated pre-inner product of another one."""

    name = "sign-flipped"

    def __init__(self, base: MetricModel = EUCLIDEAN):
        self.base = base

    def pre_inner(self, a: Arrow, b: Arrow) -> Fraction:
        return -self.base.pre_inner(a, b)

    def __repr__(self) -> str:
        return f"SignFlippedModel({self.base!r})"


# === Models ===

class TrialConfig(BaseModel):
    """Harness parameters; defaults match config.yaml."""
    trials: int = Field(1000, ge=0)
    dim: int = Field(2, ge=1)
    seed: int = Field(42, ge=0, le=2**64 - 1)
    coord_bound: int = Field(12, ge=1)
    denom_bound: int = Field(6, ge=1)
    workers: int = Field(1, ge=1)
    max_counterexamples: int = Field(3, ge=0)
    grid_radius: int = Field(25, ge=1)
    grid_denominator: int = Field(2, ge=1)

    @classmethod
    def from_config(cls, **overrides) -> "TrialConfig":
        """The harness section of config.yaml, then any non-None overrides on top."""
        values = dict(load_section("harness"))
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    def grid(self) -> Tuple[Fraction, ...]:
        r, q = self.grid_radius, self.grid_denominator
        return tuple(Fraction(k, q) for k in range(-r, r + 1))


class Counterexample(BaseModel):
    trial: int
    witness: Dict[str, str]
    error: Optional[str] = None


class CheckResult(BaseModel):
    name: str
    suite: str
    trials: int
    failures: int
    counterexamples: List[Counterexample] = []
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.failures == 0


class Report(BaseModel):
    model: str = EUCLIDEAN.name
    checks: List[CheckResult] = []
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> int:
        return sum(c.failures for c in self.checks)

    def merge(self, other: "Report") -> "Report":
        checks = sorted(self.checks + other.checks, key=lambda c: c.name)
        return Report(model=self.model, checks=checks, seconds=self.seconds + other.seconds)

    def to_text(self) -> str:
        """One CHECK line per check, counterexamples indented below. No timings."""
        lines: List[str] = []
        for c in self.checks:
            lines.append(f"CHECK {c.name} trials={c.trials} failures={c.failures}")
            for ex in c.counterexamples:
                lines.append(f"  counterexample trial={ex.trial}")
                for key, value in ex.witness.items():
                    lines.append(f"    {key} = {value}")
                if ex.error:
                    lines.append(f"    error = {ex.error}")
        return "".join(line + "\n" for line in lines)


# === Witness rendering and shrinking ===

def _render(value) -> str:
    if isinstance(value, Point):
        return format_coords(value.coords)
    if isinstance(value, list):
        return "[" + ", ".join(_render(v) for v in value) + "]"
    return format_rational(value)


def render_witness(witness: Witness) -> Dict[str, str]:
    return {key: _render(value) for key, value in witness.items()}


# a slot addresses one rational inside a witness: (key, list index, coordinate index)
Slot = Tuple[str, Optional[int], Optional[int]]


def _slots(witness: Witness) -> Iterator[Slot]:
    for key, value in witness.items():
        items = value if isinstance(value, list) else [value]
        for i, item in enumerate(items):
            index = i if isinstance(value, list) else None
            if isinstance(item, Point):
                for j in range(item.dim):
                    yield key, index, j
            else:
                yield key, index, None


def _get(witness: Witness, slot: Slot) -> Fraction:
    key, index, coord = slot
    item = witness[key] if index is None else witness[key][index]
    return item.coords[coord] if coord is not None else item


def _replace(witness: Witness, slot: Slot, q: Fraction) -> Witness:
    key, index, coord = slot
    value = witness[key]
    item = value if index is None else value[index]
    if coord is not None:
        coords = list(item.coords)
        coords[coord] = q
        item = Point(tuple(coords))
    else:
        item = q
    if index is not None:
        items = list(value)
        items[index] = item
        item = items
    updated = dict(witness)
    updated[key] = item
    return updated


def _fails(check: Check, witness: Witness, ctx: CheckContext) -> bool:
    """True when the predicate returns False; a candidate that raises is not kept."""
    try:
        return not check.holds(witness, ctx)
    except Exception:
        return False


def minimize_counterexample(check: Check, witness: Witness, ctx: CheckContext, rounds: int = 3) -> Witness:
    """
    Greedy shrinking of a failing witness.

    First every rational is tried at zero, then at its integer part
    (truncation toward zero). A change is kept when the predicate still
    returns False.

    Args:
        check: the failing check
        witness: a witness on which check.holds returns False
        ctx: the context the failure was observed in
        rounds: passes over all slots before giving up

    Returns:
        A witness that still fails, no larger than the input.
    """
    current = witness
    for _ in range(rounds):
        changed = False
        for candidate_of in (lambda q: Fraction(0), lambda q: Fraction(int(q))):
            for slot in list(_slots(current)):
                q = _get(current, slot)
                smaller = candidate_of(q)
                if smaller == q:
                    continue
                candidate = _replace(current, slot, smaller)
                if _fails(check, candidate, ctx):
                    current = candidate
                    changed = True
        if not changed:
            break
    return current


# === Running ===

def run_check(check: Check, cfg: TrialConfig, model: MetricModel = EUCLIDEAN) -> CheckResult:
    ctx = CheckContext(model=model, grid=cfg.grid())
    failures = 0
    examples: List[Counterexample] = []
    start = time.perf_counter()

    for index in range(cfg.trials):
        gen = TrialGenerator(trial_rng(cfg.seed, check.name, index), cfg.dim, cfg.coord_bound, cfg.denom_bound)
        witness = check.sample(gen)
        error = None
        try:
            ok = check.holds(witness, ctx)
        except Exception as e:
            ok = False
            error = f"{type(e).__name__}: {e}"
        if ok:
            continue

        failures += 1
        if len(examples) < cfg.max_counterexamples:
            if error is None:
                witness = minimize_counterexample(check, witness, ctx)
            examples.append(Counterexample(trial=index, witness=render_witness(witness), error=error))

    elapsed = time.perf_counter() - start
    logger.info(f"{check.name}: {cfg.trials} trials, {failures} failures in {elapsed:.2f}s")
    if failures:
        logger.warning(f"{check.name} failed {failures}/{cfg.trials} trials under {model.name}")
    return CheckResult(
        name=check.name,
        suite=check.suite,
        trials=cfg.trials,
        failures=failures,
        counterexamples=examples,
        seconds=elapsed,
    )


def _run_job(job: Tuple[str, str, TrialConfig, MetricModel]) -> CheckResult:
    suite_name, check_name, cfg, model = job
    return run_check(SUITES[suite_name].checks[check_name], cfg, model)


def run_suite(suite: CheckSuite, cfg: TrialConfig, model: MetricModel = EUCLIDEAN) -> Report:
    """Run every check of suite, sorted by name, in worker processes when cfg.workers > 1."""
    if cfg.trials == 0:
        logger.info(f"{suite.name} suite: zero trials requested, nothing to run")
        return Report(model=model.name)

    start = time.perf_counter()
    jobs = [(suite.name, name, cfg, model) for name in suite.names()]
    logger.info(f"Running {len(jobs)} {suite.name} checks: trials={cfg.trials} dim={cfg.dim} seed={cfg.seed}")
    if cfg.workers > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            results = list(pool.map(_run_job, jobs))
    else:
        results = [_run_job(job) for job in jobs]

    report = Report(model=model.name, checks=results, seconds=time.perf_counter() - start)
    logger.info(f"{suite.name} suite done: {report.failures} failures across {len(results)} checks")
    return report


def run_axiom_suite(cfg: TrialConfig, model: MetricModel = EUCLIDEAN) -> Report:
    return run_suite(AXIOM_SUITE, cfg, model)


def run_theorem_suite(cfg: TrialConfig, model: MetricModel = EUCLIDEAN) -> Report:
    return run_suite(THEOREM_SUITE, cfg, model)


def run_all(cfg: TrialConfig, model: MetricModel = EUCLIDEAN) -> Report:
    return run_axiom_suite(cfg, model).merge(run_theorem_suite(cfg, model))
