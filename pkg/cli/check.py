"""check: run the axiom and theorem suites and print the report."""

import logging

from core.arrows import EUCLIDEAN, MetricModel, WeightedRational
from core.harness import (
    SignFlippedModel,
    TrialConfig,
    run_all,
    run_axiom_suite,
    run_theorem_suite,
)
from core.rational import parse_rational

from cli.common import Output, UsageError

logger = logging.getLogger(__name__)

RUNNERS = {
    "axiom": run_axiom_suite,
    "theorem": run_theorem_suite,
    "all": run_all,
}


def register(subparsers) -> None:
    parser = subparsers.add_parser("check", help="run the law-checking harness")
    parser.add_argument("--suite", choices=sorted(RUNNERS), default="all")
    parser.add_argument("--model", choices=["euclidean", "weighted", "sign-flipped"], default="euclidean")
    parser.add_argument("--weights", nargs="+", type=parse_rational, metavar="W", help="weights of the weighted model")
    parser.add_argument("--trials", type=int)
    parser.add_argument("--dim", type=int)
    parser.add_argument("--seed", type=int)
    parser.add_argument("--coord-bound", type=int)
    parser.add_argument("--denom-bound", type=int)
    parser.add_argument("--workers", type=int)
    parser.set_defaults(handler=run_check_command)


def build_model(name: str, weights, dim: int) -> MetricModel:
    if name == "euclidean":
        return EUCLIDEAN
    if name == "sign-flipped":
        return SignFlippedModel(EUCLIDEAN)
    if not weights:
        raise UsageError("--model weighted needs --weights")
    if len(weights) != dim:
        raise UsageError(f"--weights needs {dim} values for dim {dim}, got {len(weights)}")
    return WeightedRational(weights)


def run_check_command(args) -> Output:
    cfg = TrialConfig.from_config(
        trials=args.trials,
        dim=args.dim,
        seed=args.seed,
        coord_bound=args.coord_bound,
        denom_bound=args.denom_bound,
        workers=args.workers,
    )
    model = build_model(args.model, args.weights, cfg.dim)
    logger.info(f"check suite={args.suite} model={model.name} trials={cfg.trials} dim={cfg.dim} seed={cfg.seed}")
    report = RUNNERS[args.suite](cfg, model)
    return Output(report.to_text(), failed=not report.ok)
