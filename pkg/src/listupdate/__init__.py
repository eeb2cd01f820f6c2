"""Online list-update algorithms, offline baselines and competitive ratios."""
from .core import CostLedger, ListState, inversion_distance, middle
from .errors import ContractViolation, ItemNotInList, ListUpdateError, SizeLimitError
from .algorithms import FC, MFM, MTF, TRANS, RuleSpec, RunResult, mflp, mtp, simulate, target_position
from .offline import StaticPlan, dyn_opt, stat_exact, stat_paper, true_opt
from .adversary import CruelSpec, cruel_mfm, cruel_mtf, cruel_mtp, cruel_trans, workload
from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "ContractViolation", "CostLedger", "CruelSpec", "FC", "ItemNotInList", "ListState",
    "ListUpdateError", "MFM", "MTF", "RuleSpec", "RunResult", "SizeLimitError", "StaticPlan", "TRANS",
    "cruel_mfm", "cruel_mtf", "cruel_mtp", "cruel_trans", "dyn_opt", "inversion_distance", "mflp",
    "middle", "mtp", "simulate", "stat_exact", "stat_paper", "target_position", "true_opt", "workload",
]
