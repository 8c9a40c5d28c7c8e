"""Most reliable binary-state network under a total build budget."""

from .connectivity import LayerTrace, connected_masks, is_connected, layer_trace
from .enumeration import (BatCursor, StepwiseCursor, bat_all, bat_masks, stepwise_all,
                          stepwise_masks)
from .io import DocumentError, dump_network, load_fixture, load_network, parse_network
from .minpaths import (MinPath, MpBudgetReport, enumerate_minpaths, min_feasible_path_size,
                       mp_budget_solve, path_cost, path_prob, union_reliability)
from .network import (Arc, ArcState, ContractError, Network, StepwiseVector, binary_image,
                      cost_of, prob_of)
from .optimizer import (BudgetProblem, HaltReason, LevelSet, SolveReport, compute_m_max,
                        compute_m_min, oracle_solve, solve_bat_baseline, solve_stepwise)
from .reliability import EnumerationTooLarge, ReliabilityResult, reliability, reliability_many

__version__ = "0.1.0"
