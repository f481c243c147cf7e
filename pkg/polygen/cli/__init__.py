from polygen.cli.commands import (
    CommandResult,
    cmd_detect_period,
    cmd_reproduce,
    cmd_simulate,
    cmd_sweep,
    cmd_verify,
)
from polygen.cli.config import RunConfig, SweepConfig

__all__ = [
    "CommandResult",
    "RunConfig",
    "SweepConfig",
    "cmd_detect_period",
    "cmd_reproduce",
    "cmd_simulate",
    "cmd_sweep",
    "cmd_verify",
]
