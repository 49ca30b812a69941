"""
Exact base p arithmetic

Eventually periodic expansions of non-negative rationals, truncations,
carry-free addition and the closed/open Sierpinski simplex membership.
All values are exact; nothing here goes through floating point.

Oct-2026

"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from itertools import product, zip_longest

from sympy import isprime

from .defaults import get_prime_limit
from .errors import InvalidArgumentError

CANONICAL = 'canonical'
NONTERMINATING = 'nonterminating'


def check_prime(p):
    if not isinstance(p, int) or isinstance(p, bool):
        raise InvalidArgumentError('The characteristic must be an integer, got {!r}.'.format(p))
    if p > get_prime_limit():
        raise InvalidArgumentError('Characteristic {} exceeds the supported limit {}.'.format(
            p, get_prime_limit()))
    if not isprime(p):
        raise InvalidArgumentError('{} is not a prime.'.format(p))
    return p


def power_of(q, p):
    """
    Return e with q = p^e, raise InvalidArgumentError otherwise.
    """
    if q < 1:
        raise InvalidArgumentError('{} is not a power of {}.'.format(q, p))
    e = 0
    while q % p == 0:
        q //= p
        e += 1
    if q != 1:
        raise InvalidArgumentError('Denominator is not a power of {}.'.format(p))
    return e


def base_digits(k, p):
    """Digits of k >= 0 in base p, least significant first."""
    digits = []
    while k:
        k, d = divmod(k, p)
        digits.append(d)
    return digits


@total_ordering
@dataclass(frozen=True)
class PAdicRational:
    """
    The number k / p^e, kept in lowest terms over p.
    """
    k: int
    e: int
    p: int

    def __post_init__(self):
        if self.k < 0 or self.e < 0:
            raise ValueError('PAdicRational needs k, e >= 0, got k={}, e={}.'.format(self.k, self.e))
        k, e = self.k, self.e
        while e > 0 and k % self.p == 0:
            k //= self.p
            e -= 1
        object.__setattr__(self, 'k', k)
        object.__setattr__(self, 'e', e)

    @classmethod
    def from_fraction(cls, r, p):
        r = Fraction(r)
        if r < 0:
            raise ValueError('{} is negative.'.format(r))
        e = power_of(r.denominator, p)
        return cls(r.numerator, e, p)

    @property
    def q(self):
        return self.p ** self.e

    def to_fraction(self):
        return Fraction(self.k, self.q)

    def __lt__(self, other):
        if isinstance(other, PAdicRational):
            other = other.to_fraction()
        return self.to_fraction() < other

    def __str__(self):
        r = self.to_fraction()
        return '{}/{}'.format(r.numerator, r.denominator)


@dataclass(frozen=True)
class BasePExpansion:
    """
    int_part . preperiod (period repeated forever), digits in base p.
    A terminating number has period (0,).
    """
    p: int
    int_part: int
    preperiod: tuple
    period: tuple

    def __post_init__(self):
        object.__setattr__(self, 'preperiod', tuple(self.preperiod))
        object.__setattr__(self, 'period', tuple(self.period))
        if self.int_part < 0:
            raise ValueError('Integer part must be non-negative.')
        if not self.period:
            raise ValueError('The period must not be empty.')
        for d in self.preperiod + self.period:
            if not 0 <= d < self.p:
                raise ValueError('Digit {} out of range for base {}.'.format(d, self.p))

    @property
    def is_terminating(self):
        return all(d == 0 for d in self.period)

    def digit(self, i):
        """The i-th digit after the point, i >= 1."""
        if i < 1:
            raise ValueError('Digits are indexed from 1.')
        if i <= len(self.preperiod):
            return self.preperiod[i - 1]
        return self.period[(i - len(self.preperiod) - 1) % len(self.period)]

    def digits(self, count):
        return [self.digit(i) for i in range(1, count + 1)]

    def truncated(self, e):
        """Value of the first e digits, as a Fraction."""
        value = 0
        for d in self.digits(e):
            value = value * self.p + d
        return self.int_part + Fraction(value, self.p ** e)

    def to_fraction(self):
        return to_rational(self)

    def __str__(self):
        sep = ',' if self.p > 10 else ''
        pre = sep.join(str(d) for d in self.preperiod)
        per = sep.join(str(d) for d in self.period)
        return '{}.{}(bar)({})_{}'.format(self.int_part, pre, per, self.p)


def _digits_value(digits, p):
    value = 0
    for d in digits:
        value = value * p + d
    return value


def to_rational(x):
    """Sum the geometric series of an expansion exactly."""
    p = x.p
    pre_len = len(x.preperiod)
    pre = Fraction(_digits_value(x.preperiod, p), p ** pre_len)
    per = Fraction(_digits_value(x.period, p), p ** pre_len * (p ** len(x.period) - 1))
    return x.int_part + pre + per


def _nonterminating(x):
    if x.int_part == 0 and not x.preperiod:
        raise ValueError('Zero has no nonterminating expansion.')
    preperiod = list(x.preperiod)
    int_part = x.int_part
    if preperiod:
        # the last digit of a canonical preperiod is never zero
        preperiod[-1] -= 1
    else:
        int_part -= 1
    return BasePExpansion(x.p, int_part, tuple(preperiod), (x.p - 1,))


def expand(r, p, representation=CANONICAL):
    """
    Long division of r in base p, stopping at the first repeated remainder.

    :param representation: 'canonical' ends terminating numbers in (0,),
        'nonterminating' ends them in a (p-1) tail instead
    """
    check_prime(p)
    if representation not in (CANONICAL, NONTERMINATING):
        raise ValueError('Unknown representation {!r}.'.format(representation))
    r = Fraction(r)
    if r < 0:
        raise ValueError('Cannot expand the negative number {}.'.format(r))

    int_part, rem = divmod(r.numerator, r.denominator)
    seen = {}
    digits = []
    while rem not in seen:
        seen[rem] = len(digits)
        digit, rem = divmod(rem * p, r.denominator)
        digits.append(digit)
    start = seen[rem]
    x = BasePExpansion(p, int_part, tuple(digits[:start]), tuple(digits[start:]))
    if representation == NONTERMINATING and x.is_terminating:
        x = _nonterminating(x)
    return x


def trunc(z, p, e):
    """
    trunc_e(z): the first e digits of the nonterminating expansion of z,
    always strictly below z.
    """
    z = Fraction(z)
    if e < 0:
        raise ValueError('Truncation depth must be non-negative.')
    if z == 0 and e == 0:
        return PAdicRational(0, 0, p)
    if z <= 0:
        raise ValueError('trunc needs z > 0, got {}.'.format(z))
    x = expand(z, p, NONTERMINATING)
    return PAdicRational.from_fraction(x.truncated(e), p)


def tau(v, e):
    """
    Cut every given expansion after e digits, keeping each representation
    as it is (terminating entries stay terminating).
    """
    return [PAdicRational.from_fraction(x.truncated(e), x.p) for x in v]


def carry_free_sum(digits, p):
    """
    True iff the rows of the digit matrix add without a carry in base p,
    i.e. every column sums to less than p.
    """
    return all(sum(column) < p for column in zip_longest(*digits, fillvalue=0))


def multinomial_nonzero(k, u, p):
    """
    binom(k; u) != 0 mod p, which holds iff ||u|| = k and adding the
    entries of u in base p involves no carry.
    """
    u = list(u)
    if sum(u) != k or any(x < 0 for x in u):
        return False
    while any(u):
        if sum(x % p for x in u) >= p:
            return False
        u = [x // p for x in u]
    return True


def _expansions_carry_free(expansions, p):
    # column sums repeat once every preperiod is over, with period lcm
    length = max(len(x.preperiod) for x in expansions) + \
        math.lcm(*(len(x.period) for x in expansions))
    return all(sum(x.digit(i) for x in expansions) < p for i in range(1, length + 1))


def admissible(v, p, closed=True):
    """
    Membership of v in the Sierpinski simplex.

    The closed simplex allows either representation for every entry in
    Z[1/p]; the open one (closed=False) only the terminating ones.
    """
    check_prime(p)
    choices = []
    for x in v:
        x = Fraction(x)
        if not 0 <= x <= 1:
            raise ValueError('Entry {} is outside [0, 1].'.format(x))
        canonical = expand(x, p, CANONICAL)
        reps = []
        if canonical.int_part == 0:
            reps.append(canonical)
        if closed and x > 0 and canonical.is_terminating:
            reps.append(expand(x, p, NONTERMINATING))
        if not reps:
            return False
        choices.append(reps)
    if not choices:
        return True
    return any(_expansions_carry_free(combo, p) for combo in product(*choices))
