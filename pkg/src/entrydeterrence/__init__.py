from entrydeterrence.equilibrium_result import EquilibriumOutcome, Regime
from entrydeterrence.equilibrium_solver import EquilibriumSolver, solve
from entrydeterrence.model.params import ModelParams

__version__ = "0.1.0"
__all__ = ["EquilibriumOutcome", "EquilibriumSolver", "ModelParams", "Regime", "solve"]
