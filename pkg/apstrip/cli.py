"""
Command line entry point
"""
import sys
from pathlib import Path
from typing import Optional

import click

from . import __version__
from .core.exceptions import ApstripError, ConfigError
from .core.log import configure_logging
from .harness.config import parse_config
from .harness.results import OutputFormat
from .harness.runner import list_experiments, run_experiment


@click.group()
@click.version_option(__version__, prog_name="apstrip")
@click.option("--log-level", default=None, help="Log level (default: APSTRIP_LOG_LEVEL or INFO)")
@click.option("--json-logs/--console-logs", default=None, help="Render log events as JSON lines")
def main(log_level: Optional[str], json_logs: Optional[bool]):
    """Finite-window experiments on almost periodic functions in a strip."""
    configure_logging(log_level, json_logs)


@main.command()
@click.argument("config", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--out", "out_dir", type=click.Path(file_okay=False, path_type=Path), default=None,
              help="Output directory (default: the config's output key or ./results)")
@click.option("--format", "fmt", type=click.Choice([f.value for f in OutputFormat]), default=None,
              help="Result files to write (default: the config's format key or both)")
def run(config: Path, out_dir: Optional[Path], fmt: Optional[str]):
    """Run the experiment described by CONFIG."""
    try:
        cfg = parse_config(config.read_text(encoding="utf-8"))
    except UnicodeDecodeError as e:
        raise click.UsageError(f"{config}: not a UTF-8 document ({e})") from e
    except ConfigError as e:
        raise click.UsageError(f"{config}: {e}") from e

    try:
        table = run_experiment(cfg, out_dir, OutputFormat(fmt) if fmt else None)
    except ApstripError as e:
        raise click.ClickException(str(e)) from e

    passed = sum(check.passed for check in table.checks)
    click.echo(f"{cfg.experiment.value}: {len(table.rows)} rows, {passed}/{len(table.checks)} checks passed")
    failure = table.first_failure
    if failure is not None:
        click.echo(f"FAILED {failure.name}: {failure.detail}", err=True)
        sys.exit(1)


@main.command("list")
def list_command():
    """List experiments with their default parameters."""
    for experiment, defaults in list_experiments():
        click.echo(f"{experiment.id.value}: {experiment.description}")
        for key, value in defaults.items():
            if isinstance(value, list):
                value = ", ".join(str(v) for v in value)
            click.echo(f"    {key} = {value}")


if __name__ == "__main__":
    main()
