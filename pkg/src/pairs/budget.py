import os

DEFAULT_BUDGET = 10**8
ENV_VAR = "PAIRS_BUDGET"

_override = None


def get_budget():
    if _override is not None:
        return _override
    raw = os.environ.get(ENV_VAR)
    if raw:
        try:
            value = int(float(raw))
        except ValueError:
            value = DEFAULT_BUDGET
        if value > 0:
            return value
    return DEFAULT_BUDGET


def set_budget(value):
    """Set a process-wide budget; ``None`` restores env/default lookup."""
    global _override
    _override = None if value is None else int(value)


def check_budget(size, what, budget=None):
    from .errors import BudgetExceeded

    limit = get_budget() if budget is None else budget
    if size > limit:
        raise BudgetExceeded(f"{what} needs {size} steps, budget is {limit}")
