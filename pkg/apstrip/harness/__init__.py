"""
Experiment configs, result tables and the experiment runner
"""
from .config import ExperimentConfig, ExperimentId, parse_config
from .experiments import EXPERIMENTS
from .results import Check, OutputFormat, ResultTable, write_outputs
from .runner import list_experiments, run_experiment

__all__ = [
    "EXPERIMENTS",
    "Check",
    "ExperimentConfig",
    "ExperimentId",
    "OutputFormat",
    "ResultTable",
    "list_experiments",
    "parse_config",
    "run_experiment",
    "write_outputs",
]
