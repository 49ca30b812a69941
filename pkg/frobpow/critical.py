"""
Critical exponents of monomial ideals

lambda_b(I) is the supremum of the t with x^b in I^[t]. It is computed
digit by digit in base p, like long division: every candidate carries a
remainder vector, the next digits are the maximal-norm solutions of a
small integer program, and a candidate whose remainder repeats closes
into an eventually periodic witness. Remainders are capped at
Omega = (p-1) * max(A), which makes the state space finite.

Oct-2026

"""

import logging as log
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .basep import BasePExpansion, PAdicRational, check_prime, expand, to_rational
from .defaults import VERIFY_DEPTH, VERIFY_MAX_POINTS, get_budget
from .errors import (BudgetExceededError, ConsistencyError, ImproperIdealError,
                     InvalidArgumentError, MembershipError)
from .monomials import check_monomial, contains, divides, exponent_matrix, minimalize
from .oracle import integer_frobenius_power, member, scan_powers


def omega(a, p):
    """
    Bound on every entry of A v for ||v|| < p; remainder entries above it
    never constrain a digit again.
    """
    return (p - 1) * a.max_entry


@dataclass(frozen=True)
class Candidate:
    """
    A witness in progress.

    digits[i] is the digit vector of place i + 1, history holds the
    remainders r_0 .. r_{e-1} the digits were chosen from, and remainder
    is r_e, the state the next digit is chosen from.
    """
    p: int
    digits: tuple
    numerator: int
    history: tuple
    remainder: tuple

    @property
    def level(self):
        return len(self.digits)

    @property
    def norm(self):
        return PAdicRational(self.numerator, self.level, self.p)

    def entries(self):
        """The candidate as a vector of fractions."""
        n = len(self.digits[0]) if self.digits else 0
        return tuple(sum(Fraction(col[j], self.p ** (i + 1)) for i, col in enumerate(self.digits))
                     for j in range(n))


@dataclass(frozen=True)
class LevelRecord:
    e: int
    numerator: int
    p: int
    candidates: int
    cycles: int

    @property
    def lambda_e(self):
        return PAdicRational(self.numerator, self.e, self.p)

    def line(self):
        return 'e={} lambda_e={}/{} candidates={} cycles={}'.format(
            self.e, self.numerator, self.p ** self.e, self.candidates, self.cycles)

    def to_dict(self):
        return {'e': self.e, 'lambda_e': '{}/{}'.format(self.numerator, self.p ** self.e),
                'candidates': self.candidates, 'cycles': self.cycles}


@dataclass(frozen=True)
class CriticalResult:
    """
    lambda_b(I) together with a family of witnesses: one eventually
    periodic expansion per generator, adding up without carries.

    target is the monomial whose critical exponent was computed after
    splitting off I^[reduced_by]; ambiguous flags a value reached along
    several generators of that power.
    """
    b: tuple
    p: int
    value: Fraction
    expansion: BasePExpansion
    witness: tuple
    target: tuple
    reduced_by: int = 0
    branches: tuple = ()
    ambiguous: bool = False
    trace: tuple = field(default=(), compare=False)

    @property
    def norm_expansion(self):
        """The digitwise sum of the witness, which never carries."""
        length = max(len(x.preperiod) for x in self.witness)
        period = math.lcm(*(len(x.period) for x in self.witness))
        pre = tuple(sum(x.digit(i) for x in self.witness) for i in range(1, length + 1))
        per = tuple(sum(x.digit(i) for x in self.witness)
                    for i in range(length + 1, length + period + 1))
        return BasePExpansion(self.p, 0, pre, per)


@dataclass(frozen=True)
class SkodaReduction:
    target: tuple
    shift: int
    branches: tuple


def max_digit_vectors(a, r, p):
    """
    All v in N^n with A v < p r (strictly, componentwise) and ||v|| <= p-1
    whose norm is maximal among such v.

    Depth first over the coordinates, each bounded by the remaining slack
    of the rows it touches.
    """
    if any(x < 1 for x in r):
        raise InvalidArgumentError('Remainder {} must be positive.'.format(r))
    n = a.num_cols
    best = [-1]
    found = []
    v = [0] * n

    def search(j, slack, left, norm):
        if j == n:
            if norm > best[0]:
                best[0] = norm
                found.clear()
            if norm == best[0]:
                found.append(tuple(v))
            return
        if norm + left < best[0]:
            return
        column = a.columns[j]
        limit = left
        for s, x in zip(slack, column):
            if x:
                limit = min(limit, s // x)
        for d in range(limit, -1, -1):
            v[j] = d
            search(j + 1, [s - x * d for s, x in zip(slack, column)], left - d, norm + d)
        v[j] = 0

    # A v <= p r - 1
    search(0, [p * x - 1 for x in r], p - 1, 0)
    return tuple(sorted(found))


def _root(b, p, cap_value):
    r0 = tuple(x + 1 for x in b)
    if cap_value is not None:
        r0 = tuple(min(x, cap_value) for x in r0)
    return Candidate(p, (), 0, (), r0)


def _extend(candidate, a, p, cap_value):
    r = candidate.remainder
    children = []
    for v in max_digit_vectors(a, r, p):
        nxt = tuple(p * x - y for x, y in zip(r, a.apply(v)))
        if cap_value is not None:
            nxt = tuple(min(x, cap_value) for x in nxt)
        children.append(Candidate(p, candidate.digits + (v,), candidate.numerator * p + sum(v),
                                  candidate.history + (r,), nxt))
    return children


def _prune(children):
    if not children:
        return []
    top = max(c.numerator for c in children)
    return [c for c in children if c.numerator == top]


def _dedup(candidates):
    # survivors share their norm, so the remainder alone fixes the future
    kept = {}
    for c in candidates:
        if c.remainder not in kept or c.digits < kept[c.remainder].digits:
            kept[c.remainder] = c
    return sorted(kept.values(), key=lambda c: c.digits)


def _check_inputs(ideal, b, p):
    check_prime(p)
    b = check_monomial(b, ideal.num_vars)
    if ideal.is_unit:
        raise ImproperIdealError('Critical exponents need a proper ideal.')
    return b


class CriticalExponentStepper(object):
    """
    The infinite refinement: level e holds every e-witness of lambda_b,
    i.e. every digit matrix with e columns attaining lambda_e.

    Each call to step() computes one more base p digit. With cap=False the
    remainders are the exact p^e (b + 1 - A u).
    """

    def __init__(self, ideal, b, p, cap=True, dedup=False, budget=None):
        b = _check_inputs(ideal, b, p)
        if contains(ideal, b):
            raise MembershipError('x^{} lies in the ideal.'.format(b))
        self.ideal = ideal
        self.b = b
        self.p = p
        self.a = exponent_matrix(ideal)
        self.cap_value = omega(self.a, p) if cap else None
        self.dedup = dedup
        self.budget = get_budget(budget)
        self.level = 0
        self.candidates = [_root(b, p, self.cap_value)]

    def step(self):
        children = [c for cand in self.candidates for c in _extend(cand, self.a, self.p, self.cap_value)]
        if len(children) > self.budget:
            raise BudgetExceededError('Level {} has {} candidates, above the budget.'.format(
                self.level + 1, len(children)))
        survivors = _prune(children)
        if self.dedup:
            survivors = _dedup(survivors)
        self.level += 1
        self.candidates = survivors
        record = LevelRecord(self.level, survivors[0].numerator, self.p, len(survivors), 0)
        log.debug(record.line())
        return record

    def run(self, depth):
        return [self.step() for _ in range(depth)]

    def __iter__(self):
        while True:
            yield self.step()


def _periodic(candidate, c, n):
    """
    Close a candidate whose remainder repeats r_c: digits after place c
    repeat forever.
    """
    pre, per = candidate.digits[:c], candidate.digits[c:]
    p = candidate.p
    witness = tuple(BasePExpansion(p, 0, tuple(col[j] for col in pre), tuple(col[j] for col in per))
                    for j in range(n))
    norm = to_rational(BasePExpansion(p, 0, tuple(sum(col) for col in pre),
                                      tuple(sum(col) for col in per)))
    return norm, (pre, per), witness


def _cycle_search(ideal, b, p, dedup, keep_trace, budget):
    """
    The terminating version: candidates retire as soon as their remainder
    repeats, and the best closed candidate wins.
    """
    a = exponent_matrix(ideal)
    cap_value = omega(a, p)
    level_bound = cap_value ** a.num_rows + 1
    budget = get_budget(budget)

    candidates = [_root(b, p, cap_value)]
    closed = []
    records = []
    expanded = 0
    level = 0
    while candidates:
        level += 1
        if level > level_bound:
            raise BudgetExceededError('No cycle within {} levels.'.format(level_bound))
        children = []
        for cand in candidates:
            if cand.remainder in cand.history:
                closed.append(_periodic(cand, cand.history.index(cand.remainder), a.num_cols))
            else:
                children.extend(_extend(cand, a, p, cap_value))
        expanded += len(children)
        if expanded > budget:
            raise BudgetExceededError(
                'Expanded {} candidates, above the budget of {}.'.format(expanded, budget))
        candidates = _prune(children)
        if dedup:
            candidates = _dedup(candidates)
        if not candidates:
            break
        # candidates whose remainder repeats retire at the next level
        cycles = sum(1 for c in candidates if c.remainder in c.history)
        record = LevelRecord(level, candidates[0].numerator, p, len(candidates), cycles)
        log.debug(record.line())
        if keep_trace:
            records.append(record)

    # largest norm, then the smallest digit matrix
    value, _, witness = min(closed, key=lambda item: (-item[0], item[1]))
    return CriticalResult(b=b, p=p, value=value, expansion=expand(value, p), witness=witness,
                          target=b, trace=tuple(records))


def skoda_reduce(ideal, b):
    """
    Subtract dividing generators from b until x^b leaves the ideal.

    Follows the first dividing generator in canonical order and records
    every dividing generator met on the way as a branch.
    """
    b = check_monomial(b, ideal.num_vars)
    if ideal.is_unit:
        raise ImproperIdealError('Cannot reduce against the unit ideal.')
    shift = 0
    branches = []
    while contains(ideal, b):
        dividing = [g for g in ideal.gens if divides(g, b)]
        branches.extend(dividing)
        b = tuple(x - y for x, y in zip(b, dividing[0]))
        shift += 1
    return SkodaReduction(target=b, shift=shift, branches=tuple(branches))


def _unit_witness(ideal, rest, p):
    """u = 0.(bar)(p-1) = 1 on the first generator dividing x^rest."""
    j = next(i for i, g in enumerate(ideal.gens) if divides(g, rest))
    return tuple(BasePExpansion(p, 0, (), (p - 1,) if i == j else (0,)) for i in range(ideal.num_gens))


def _check_reduced(ideal, b, value, p, budget):
    """Both sides of the boundary k/q < value against the enumeration."""
    for e in range(1, _verify_depth(p, VERIFY_DEPTH) + 1):
        q = p ** e
        k = math.ceil(value * q) - 1
        if not member(ideal, b, k, q, p, budget) or member(ideal, b, k + 1, q, p, budget):
            raise ConsistencyError(
                'lambda_{} = {} disagrees with the enumeration at q={}.'.format(b, value, q))


def _reduced_lambda(ideal, b, p, dedup, keep_trace, budget):
    """
    x^b in I. For integer n and s in [0, 1), I^[n+s] = I^[n] I^[s], so
    lambda_b is the largest n + lambda_{b-c} over n >= 1 and the generators
    c of I^[n] dividing x^b; lambda_{b-c} counts as 1 when x^{b-c} is in I.
    """
    options = []
    n = 1
    while True:
        dividing = [c for c in integer_frobenius_power(ideal, n, p).gens if divides(c, b)]
        if not dividing:
            break
        for c in dividing:
            rest = tuple(x - y for x, y in zip(b, c))
            if contains(ideal, rest):
                options.append((Fraction(n + 1), n, c, rest, None))
            else:
                result = _cycle_search(ideal, rest, p, dedup, keep_trace, budget)
                options.append((n + result.value, n, c, rest, result))
        n += 1

    # largest value, then the deepest shift, then the smallest generator
    value, shift, _, rest, result = min(options, key=lambda item: (-item[0], -item[1], item[2]))
    ambiguous = sum(1 for item in options if item[0] == value) > 1
    if ambiguous:
        log.info('lambda_{} = {} is reached along several generators.'.format(b, value))
    _check_reduced(ideal, b, value, p, budget)
    if result is None:
        witness, trace = _unit_witness(ideal, rest, p), ()
    else:
        witness, trace = result.witness, result.trace
    return CriticalResult(b=b, p=p, value=value, expansion=expand(value, p), witness=witness,
                          target=rest, reduced_by=shift,
                          branches=tuple(item[2] for item in options if item[1] == shift),
                          ambiguous=ambiguous, trace=trace)


def lambda_b(ideal, b, p, reduce=False, dedup=True, trace=False, budget=None):
    """
    The critical exponent lambda_b(I) with a witness family.

    :param reduce: allow x^b in I, splitting off integer Frobenius powers I^[n]
    :param dedup: merge same-level candidates with equal remainders
    :param trace: keep the per-level records on the result
    """
    b = _check_inputs(ideal, b, p)
    if contains(ideal, b):
        if not reduce:
            raise MembershipError(
                'x^{} lies in the ideal, so lambda_b > 1; pass reduce=True.'.format(b))
        return _reduced_lambda(ideal, b, p, dedup, trace, budget)
    return _cycle_search(ideal, b, p, dedup, trace, budget)


def lce(ideal, p, **kwargs):
    """The least critical exponent lambda_0(I), in (0, 1]."""
    return lambda_b(ideal, (0,) * ideal.num_vars, p, **kwargs)


def crit(ideal, a, p, **kwargs):
    """
    sup{t : I^[t] not inside (x_1^{a_1}, ..., x_m^{a_m})} for a != 0,
    which is lambda_b for b = max(a, 1) - 1.
    """
    a = check_monomial(a, ideal.num_vars)
    if not any(a):
        raise InvalidArgumentError('crit needs a nonzero exponent vector.')
    return lambda_b(ideal, tuple(max(x, 1) - 1 for x in a), p, **kwargs)


def candidate_box(ideal):
    """
    Exponent vectors that can appear in a generator of I^[t], t < 1:
    entry i stays below the largest exponent of x_i among the generators.
    """
    a = exponent_matrix(ideal)
    bounds = [max(max(row) - 1, 0) for row in a.rows]
    return list(product(*(range(x + 1) for x in bounds)))


@lru_cache(maxsize=64)
def _table(ideal, p, budget):
    table = []
    for b in candidate_box(ideal):
        if contains(ideal, b):
            table.append((b, None))
        else:
            table.append((b, lambda_b(ideal, b, p, budget=budget).value))
    return tuple(table)


def critical_exponent_table(ideal, p, budget=None):
    """
    lambda_b for every b in the candidate box; None marks x^b in I,
    where the exponent exceeds 1.
    """
    check_prime(p)
    return dict(_table(ideal, p, budget))


def _power_from_table(ideal, table, t):
    gens = [b for b, value in table.items() if value is None or t < value]
    return minimalize(gens, ideal.num_vars, ideal.variables)


def power_at(ideal, t, p, budget=None):
    """
    The exact Frobenius power I^[t] for t in [0, 1): x^b belongs to it
    iff t < lambda_b.
    """
    t = Fraction(t)
    if not 0 <= t < 1:
        raise InvalidArgumentError('power_at needs t in [0, 1), got {}.'.format(t))
    check_prime(p)
    if ideal.is_unit:
        return ideal
    return _power_from_table(ideal, critical_exponent_table(ideal, p, budget), t)


@dataclass(frozen=True)
class JumpTable:
    """
    rows[i] = (lambda_i, ideal): the ideal is I^[t] for t in
    [lambda_{i-1}, lambda_i), with lambda_{-1} = 0.
    """
    p: int
    ideal: object
    rows: tuple
    verified_depth: int

    @property
    def jumps(self):
        return [value for value, _ in self.rows]

    def ideal_at(self, t):
        t = Fraction(t)
        if not 0 <= t < 1:
            raise InvalidArgumentError('The table covers t in [0, 1), got {}.'.format(t))
        for value, power in self.rows:
            if t < value:
                return power
        # no jump at 1: the last interval reaches up to 1
        return self.rows[-1][1]


def _verify_depth(p, verify_depth):
    depth = 0
    while depth < verify_depth and p ** (depth + 1) <= VERIFY_MAX_POINTS:
        depth += 1
    return depth


def jumps_unit_interval(ideal, p, verify_depth=VERIFY_DEPTH, budget=None):
    """
    Every critical exponent in (0, 1] with the ideal I^[t] in front of it,
    cross-checked against the oracle scan.
    """
    check_prime(p)
    if ideal.is_unit:
        raise ImproperIdealError('The unit ideal has no critical exponents.')
    table = critical_exponent_table(ideal, p, budget)
    jumps = sorted({value for value in table.values() if value is not None and value <= 1})
    rows = []
    start = Fraction(0)
    for value in jumps:
        rows.append((value, _power_from_table(ideal, table, start)))
        start = value
    result = JumpTable(p=p, ideal=ideal, rows=tuple(rows), verified_depth=_verify_depth(p, verify_depth))

    depth = result.verified_depth
    log.info('Checking the jump table against the scan at q={}.'.format(p ** depth))
    runs = scan_powers(ideal, depth, p, budget)
    q = p ** depth
    for i, (start, power) in enumerate(runs):
        stop = runs[i + 1][0].to_fraction() * q if i + 1 < len(runs) else q
        for k in range(int(start.to_fraction() * q), int(stop)):
            if result.ideal_at(Fraction(k, q)) != power:
                raise ConsistencyError(
                    'I^[{}/{}] is {} by enumeration but {} by the jump table.'.format(
                        k, q, power, result.ideal_at(Fraction(k, q))))
    return result
