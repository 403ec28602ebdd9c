"""
Run an experiment config and emit its result files
"""
import time
from pathlib import Path
from typing import List, Optional, Tuple, Union

import structlog

from .. import __version__
from .config import ExperimentConfig, ExperimentId
from .experiments import EXPERIMENTS, Experiment
from .results import OutputFormat, ResultTable, write_outputs

logger = structlog.get_logger(__name__)

DEFAULT_OUTPUT = Path("results")


def run_experiment(
    cfg: ExperimentConfig,
    out_dir: Optional[Union[str, Path]] = None,
    fmt: Optional[OutputFormat] = None,
) -> ResultTable:
    """
    Run one experiment and write its CSV / JSON files.

    Args:
        cfg: Validated config
        out_dir: Output directory; overrides cfg.output (default ./results)
        fmt: Output format; overrides cfg.format

    Returns:
        ResultTable with checks and metadata (config echo, version, wall time)
    """
    experiment = EXPERIMENTS[cfg.experiment]
    out = Path(out_dir) if out_dir is not None else (cfg.output or DEFAULT_OUTPUT)
    fmt = fmt or cfg.format

    log = logger.bind(experiment=cfg.experiment.value)
    log.info("experiment.start", out=str(out))
    started = time.perf_counter()
    table = experiment.run(cfg.params)
    wall_time = time.perf_counter() - started

    table.metadata = {
        "config": cfg.echo(),
        "version": __version__,
        "wall_time": wall_time,
    }
    written = write_outputs(table, out, fmt)
    failure = table.first_failure
    log.info(
        "experiment.finish",
        passed=table.passed,
        rows=len(table.rows),
        checks=len(table.checks),
        wall_time=round(wall_time, 3),
        files=[str(p) for p in written],
        first_failure=failure.name if failure else None,
    )
    return table


def list_experiments() -> List[Tuple[Experiment, dict]]:
    """Registered experiments with their default parameters, in declaration order"""
    return [
        (EXPERIMENTS[experiment_id], EXPERIMENTS[experiment_id].params().model_dump(mode="json", by_alias=True))
        for experiment_id in ExperimentId
    ]
