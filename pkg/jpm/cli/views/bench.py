import logging
import sys
from argparse import Namespace

from jpm import settings
from jpm.genstat import run_experiment, trend_check
from jpm.log import stderr_console
from jpm.models import BackendChoices, ExperimentConfig, TextFormatChoices
from jpm.utils.text_loader import load_text

logger = logging.getLogger(__name__)


def config_from_args(args: Namespace, n: int | None = None, sigma: int | None = None) -> ExperimentConfig:
    fields = {
        "n": n or args.n,
        "sigma": sigma or args.sigma,
        "query_model": args.query_model,
        "epsilon": args.epsilon,
        "m_lo": args.m_lo,
        "m_hi": args.m_hi,
        "m_points": args.m_points,
        "m_values": args.m_values,
        "reps": args.reps,
        "queries_per_text": args.queries_per_text,
        "seed": settings.resolve_seed(args.seed),
        "backends": args.backend or [BackendChoices.TABLE.value],
        "baseline": args.baseline,
        "timing": not args.no_timing,
        "workers": args.workers or settings.WORKERS,
    }
    # unset flags fall back to the model defaults
    return ExperimentConfig(**{k: v for k, v in fields.items() if v is not None})


def bench_command(args: Namespace) -> int:
    text = None
    if args.text:
        texts = load_text(args.text, TextFormatChoices(args.format), concatenate=True)
        text = texts[0][1]
        cfg = config_from_args(args, n=text.n, sigma=text.sigma)
    else:
        cfg = config_from_args(args)

    logger.info("Bench configuration: %s", cfg.json())
    result = run_experiment(cfg, text=text)
    if args.output:
        result.to_csv(args.output, timing=cfg.timing)
        stderr_console.print(f"Wrote {len(result.cells)} rows to {args.output}", markup=False)
    else:
        sys.stdout.write(result.to_csv(timing=cfg.timing))

    if args.trend:
        for backend in cfg.backends:
            report = trend_check(result, backend.value)
            stderr_console.print(
                f"{backend.value}: J ~ m^{report.exponent:.3f}, c={report.coefficient:.3f}"
                f"{' [flagged: ' + '; '.join(report.reasons) + ']' if report.flagged else ''}",
                markup=False,
            )
    return 0
