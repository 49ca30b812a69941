"""
Default limits for frobpow

Every limit can be overridden from the environment, the budget also
from the command line.

Oct-2026

"""

import os

from .errors import InvalidArgumentError

# enumeration states allowed before a BudgetExceededError
DEFAULT_BUDGET = 10 ** 7

# largest characteristic accepted by the prime validation
PRIME_LIMIT = 2 ** 31

# largest q = p^e a resolution scan may cover
SCAN_MAX_POINTS = 4096

# depth and size of the oracle cross-checks of jump tables and reduced exponents
VERIFY_DEPTH = 4
VERIFY_MAX_POINTS = 4096


def _from_env(name, default):
    value = os.environ.get(name)
    if value is None or value.strip() == '':
        return default
    try:
        return int(value)
    except ValueError:
        raise InvalidArgumentError(
            'Environment variable {} must be an integer, got {!r}.'.format(name, value))


def get_budget(budget=None):
    """
    Resolve the enumeration budget: explicit value, then FROBPOW_BUDGET,
    then the default.
    """
    if budget is None:
        budget = _from_env('FROBPOW_BUDGET', DEFAULT_BUDGET)
    if budget <= 0:
        raise InvalidArgumentError('Budget must be positive, got {}.'.format(budget))
    return budget


def get_prime_limit():
    return _from_env('FROBPOW_PRIME_LIMIT', PRIME_LIMIT)


def get_scan_max_points():
    return _from_env('FROBPOW_SCAN_MAX_POINTS', SCAN_MAX_POINTS)
