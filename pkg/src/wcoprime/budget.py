"""Work budgets for the brute-force enumerations."""

import os

from .errors import BudgetExceeded

DEFAULT_BUDGET = 10**8
BUDGET_ENV = "WCOPRIME_BUDGET"


def default_budget():
    """Budget from ``$WCOPRIME_BUDGET`` if set, else ``DEFAULT_BUDGET``."""
    raw = os.environ.get(BUDGET_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None
    if value <= 0:
        raise ValueError(f"{BUDGET_ENV} must be positive")
    return value


def charge(cost, budget=None, what="enumeration"):
    """Raise ``BudgetExceeded`` if ``cost`` elementary steps exceed the budget."""
    limit = default_budget() if budget is None else budget
    if cost > limit:
        raise BudgetExceeded(f"{what} needs {cost} steps, budget is {limit}")
