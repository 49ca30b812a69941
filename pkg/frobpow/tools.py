"""
Collection of tools for the frobpow library

Parsing of command line values and the text and JSON renderings shared
by the command line front end.

Oct-2026
"""

import json
from fractions import Fraction

from .basep import PAdicRational
from .errors import InvalidArgumentError
from .monomials import format_ideal, ideal_to_dict


# ------------ PARSING ----------------------------

def parse_rational(text):
    """
    Read 'num/den' or an integer into a Fraction.
    """
    text = text.strip()
    try:
        if '/' in text:
            num, den = text.split('/')
            return Fraction(int(num), int(den))
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError):
        raise InvalidArgumentError('Cannot read {!r} as a rational num/den.'.format(text))


def parse_rational_list(text):
    return [parse_rational(x) for x in text.split(',') if x.strip()]


def parse_int_list(text):
    """'1,1,0' -> (1, 1, 0)"""
    try:
        return tuple(int(x) for x in text.split(','))
    except ValueError:
        raise InvalidArgumentError('Cannot read {!r} as comma separated integers.'.format(text))


# ------------ FORMATTING ----------------------------

def format_rational(r):
    """Lowest terms, always with a denominator: 1 prints as 1/1."""
    if isinstance(r, PAdicRational):
        r = r.to_fraction()
    r = Fraction(r)
    return '{}/{}'.format(r.numerator, r.denominator)


def format_result(result):
    lines = [format_rational(result.value),
             'expansion = {}'.format(result.expansion)]
    if result.reduced_by:
        lines.append('reduced by {} to b = {}'.format(result.reduced_by, result.target))
    for i, x in enumerate(result.witness):
        lines.append('u_{} = {}'.format(i + 1, x))
    return '\n'.join(lines)


def result_to_dict(result, ideal):
    d = {
        'ideal': ideal_to_dict(ideal),
        'p': result.p,
        'b': list(result.b),
        'lambda': format_rational(result.value),
        'expansion': str(result.expansion),
        'witness': [str(x) for x in result.witness],
        'target': list(result.target),
        'reduced_by': result.reduced_by,
        'ambiguous': result.ambiguous,
    }
    if result.branches:
        d['branches'] = [list(g) for g in result.branches]
    if result.trace:
        d['trace'] = [record.to_dict() for record in result.trace]
    return d


def format_jump_table(table):
    lines = []
    start = Fraction(0)
    for value, power in table.rows:
        lines.append('[{}, {}): {}'.format(format_rational(start), format_rational(value),
                                           format_ideal(power)))
        start = value
    return '\n'.join(lines)


def jump_table_to_dict(table):
    return {
        'ideal': ideal_to_dict(table.ideal),
        'p': table.p,
        'jumps': [format_rational(value) for value in table.jumps],
        'ideals': [ideal_to_dict(power) for _, power in table.rows],
        'verified_depth': table.verified_depth,
    }


def format_runs(runs):
    return '\n'.join('{}: {}'.format(format_rational(start), format_ideal(power))
                     for start, power in runs)


def runs_to_dict(runs, q):
    return {'q': q, 'runs': [{'start': format_rational(start), 'ideal': ideal_to_dict(power)}
                             for start, power in runs]}


def format_point(point):
    return '(' + ', '.join(format_rational(x) for x in point) + ')'


def dump_json(data):
    return json.dumps(data, sort_keys=True)
