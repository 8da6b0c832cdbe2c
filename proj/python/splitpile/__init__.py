"""Sandpile recurrence on complete split graphs S(m,n) and its bijections.

Configurations are ``(clique_heights, independent_heights)`` pairs with the
sink's slot left out.
"""

from ._core import *  # noqa: F401,F403
from ._core import BudgetExceeded, SplitpileError  # noqa: F401
