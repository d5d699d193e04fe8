from .abel import run_abel
from .common import SuiteContext, check
from .git import run_git
from .robustness import run_robustness
from .theorem14 import run_theorem14
from .theorem15 import run_theorem15

__all__ = [
    "check",
    "run_abel",
    "run_git",
    "run_robustness",
    "run_theorem14",
    "run_theorem15",
    "SuiteContext",
]
