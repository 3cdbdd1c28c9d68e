__all__ = [
    "RunConfig",
    "Report",
    "TabularReport",
    "cmd_run",
    "cmd_oracle",
    "cmd_sweep",
    "cmd_shor",
    "main",
]

from .config import RunConfig
from .report import Report, TabularReport
from .commands import cmd_oracle, cmd_run, cmd_shor, cmd_sweep
from .main import main
