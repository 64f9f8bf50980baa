"""Figure renderer for pczoom experiment CSVs."""

from .figures import plot_fairness, plot_regret
from .io import SchemaError, read_aggregate, read_fairness

__version__ = "0.1.0"

__all__ = ["SchemaError", "plot_fairness", "plot_regret",
           "read_aggregate", "read_fairness"]
