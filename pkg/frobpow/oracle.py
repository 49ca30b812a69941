"""
Frobenius powers straight from the generator formula

    I^[k/q] = ( x^floor(A u / q) : u in N^n, ||u|| = k, binom(k; u) != 0 mod p )

This is the slow ground truth the critical exponent algorithm is checked
against. The vectors u with nonvanishing multinomial are enumerated one
base p digit of k at a time, which produces exactly the carry-free ones.

Oct-2026

"""

import logging as log
from itertools import combinations, product
from math import prod

import numpy as np
from scipy.special import comb

from .basep import PAdicRational, base_digits, check_prime, power_of
from .defaults import get_budget, get_scan_max_points
from .errors import BudgetExceededError, InvalidArgumentError
from .monomials import (bracket_power, check_monomial, exponent_matrix, minimalize,
                        multiply, ordinary_power, unit_ideal)


def compositions(total, parts):
    """All tuples of `parts` non-negative ints adding up to total."""
    if parts == 0:
        return [()] if total == 0 else []
    result = []
    for bars in combinations(range(total + parts - 1), parts - 1):
        edges = (-1,) + bars + (total + parts - 1,)
        result.append(tuple(edges[i + 1] - edges[i] - 1 for i in range(parts)))
    return result


def count_carry_free(k, n, p):
    return prod(int(comb(d + n - 1, n - 1, exact=True)) for d in base_digits(k, p))


def carry_free_vectors(k, n, p, budget=None):
    """
    Yield every u in N^n with ||u|| = k whose entries add without a carry
    in base p.
    """
    budget = get_budget(budget)
    states = count_carry_free(k, n, p)
    if states > budget:
        raise BudgetExceededError(
            'Enumerating {} vectors for k={} exceeds the budget of {} states.'.format(states, k, budget))
    digits = base_digits(k, p)
    per_digit = [compositions(d, n) for d in digits]
    for choice in product(*per_digit):
        yield tuple(sum(c[i] * p ** j for j, c in enumerate(choice)) for i in range(n))


def integer_frobenius_power(ideal, k, p):
    """
    I^[k] = I^{k_0} (I^{k_1})^[p] ... (I^{k_r})^[p^r] for k = sum k_j p^j.
    """
    check_prime(p)
    if k < 0:
        raise InvalidArgumentError('Power must be non-negative, got {}.'.format(k))
    result = unit_ideal(ideal.num_vars, ideal.variables)
    for j, d in enumerate(base_digits(k, p)):
        if d:
            result = multiply(result, bracket_power(ordinary_power(ideal, d), p ** j))
    return result


def padic_power(ideal, k, q, p, budget=None):
    """
    The Frobenius power I^[k/q] by direct enumeration.
    """
    check_prime(p)
    power_of(q, p)
    if k < 0:
        raise InvalidArgumentError('Numerator must be non-negative, got {}.'.format(k))
    if ideal.is_unit:
        return ideal
    a = exponent_matrix(ideal)
    us = list(carry_free_vectors(k, a.num_cols, p, budget))
    dtype = np.int64 if k * a.max_entry < 2 ** 62 else object
    floors = np.dot(np.array(us, dtype=dtype), a.array.T.astype(dtype)) // q
    log.debug('I^[{}/{}]: {} carry-free vectors.'.format(k, q, len(us)))
    return minimalize({tuple(int(x) for x in row) for row in floors},
                      ideal.num_vars, ideal.variables)


def member(ideal, b, k, q, p, budget=None):
    """
    x^b in I^[k/q], stopping at the first carry-free u with
    floor(A u / q) <= b.
    """
    check_prime(p)
    power_of(q, p)
    b = check_monomial(b, ideal.num_vars)
    if ideal.is_unit:
        return True
    a = exponent_matrix(ideal)
    # floor(x / q) <= b_i  <=>  x < q (b_i + 1)
    bound = tuple(q * (x + 1) for x in b)
    for u in carry_free_vectors(k, a.num_cols, p, budget):
        if all(x < y for x, y in zip(a.apply(u), bound)):
            return True
    return False


def scan_powers(ideal, e, p, budget=None, cache=None):
    """
    I^[k/q] for q = p^e and k = 0 .. q-1, with equal neighbours merged.

    :param cache: dict keyed by (k, q) reused across calls
    :return: list of (start, ideal) pairs, the ideal holding from start to the next start
    """
    check_prime(p)
    q = p ** e
    if q > get_scan_max_points():
        raise BudgetExceededError(
            'A scan at depth {} covers {} points, above the limit of {}.'.format(
                e, q, get_scan_max_points()))
    if cache is None:
        cache = {}
    runs = []
    for k in range(q):
        if (k, q) not in cache:
            cache[k, q] = padic_power(ideal, k, q, p, budget)
        power = cache[k, q]
        if not runs or runs[-1][1] != power:
            runs.append((PAdicRational(k, e, p), power))
    log.debug('Scan at q={} found {} runs.'.format(q, len(runs)))
    return runs
