"""
Monomials and monomial ideals

Exponent vectors are plain tuples of non-negative integers. An ideal
keeps its minimal generators sorted in decreasing lexicographic order,
so equal ideals are equal values.

Oct-2026

"""

import json
import re
import logging as log
from dataclasses import dataclass, field
from functools import reduce

import numpy as np

from .errors import IdealSyntaxError, ImproperIdealError, InvalidArgumentError


def default_variables(num_vars):
    if num_vars <= 3:
        return ('x', 'y', 'z')[:num_vars]
    return tuple('x{}'.format(i + 1) for i in range(num_vars))


def check_monomial(b, num_vars=None):
    """
    Validate an exponent vector and return it as a tuple of ints.
    """
    b = tuple(int(x) for x in b)
    if num_vars is not None and len(b) != num_vars:
        raise InvalidArgumentError(
            'Exponent vector {} has length {}, expected {}.'.format(b, len(b), num_vars))
    if any(x < 0 for x in b):
        raise InvalidArgumentError('Exponent vector {} has a negative entry.'.format(b))
    return b


def divides(a, b):
    """x^a | x^b, i.e. a <= b componentwise."""
    if len(a) != len(b):
        raise InvalidArgumentError(
            'Cannot compare monomials of lengths {} and {}.'.format(len(a), len(b)))
    return all(x <= y for x, y in zip(a, b))


def format_monomial(b, variables, sep='*'):
    parts = []
    for var, exp in zip(variables, b):
        if exp == 1:
            parts.append(var)
        elif exp > 1:
            parts.append('{}^{}'.format(var, exp))
    return sep.join(parts) if parts else '1'


@dataclass(frozen=True)
class MonomialIdeal:
    """
    Monomial ideal given by its minimal generators.

    The unit ideal is the distinguished value whose only generator is the
    zero vector. Build instances with minimalize() or parse_ideal().
    """
    num_vars: int
    gens: tuple
    variables: tuple = field(default=None, compare=False)

    def __post_init__(self):
        gens = tuple(check_monomial(g, self.num_vars) for g in self.gens)
        if not gens:
            raise ValueError('A monomial ideal needs at least one generator.')
        if list(gens) != sorted(set(gens), reverse=True):
            raise ValueError('Generators {} are not in canonical order.'.format(gens))
        for i, a in enumerate(gens):
            for j, b in enumerate(gens):
                if i != j and divides(a, b):
                    raise ValueError(
                        'Generator {} divides {}; use minimalize().'.format(a, b))
        variables = self.variables
        if variables is None:
            variables = default_variables(self.num_vars)
        variables = tuple(variables)
        if len(variables) != self.num_vars:
            raise ValueError('Expected {} variable names, got {}.'.format(
                self.num_vars, len(variables)))
        object.__setattr__(self, 'gens', gens)
        object.__setattr__(self, 'variables', variables)

    @property
    def is_unit(self):
        return self.gens == ((0,) * self.num_vars,)

    @property
    def num_gens(self):
        return len(self.gens)

    def __str__(self):
        return format_ideal(self)

    def __iter__(self):
        return iter(self.gens)

    def __len__(self):
        return len(self.gens)


def unit_ideal(num_vars, variables=None):
    return MonomialIdeal(num_vars, ((0,) * num_vars,), variables)


def minimalize(gens, num_vars=None, variables=None):
    """
    Keep the divisibility-minimal exponent vectors, deduplicated and in
    canonical order.
    """
    gens = list(gens)
    if not gens:
        raise ValueError('Cannot build an ideal from an empty generator list.')
    if num_vars is None:
        num_vars = len(gens[0])
    gens = {check_monomial(g, num_vars) for g in gens}
    kept = []
    # by degree, so that a divisor is always seen before its multiples
    for g in sorted(gens, key=lambda g: (sum(g), g)):
        if not any(divides(h, g) for h in kept):
            kept.append(g)
    return MonomialIdeal(num_vars, tuple(sorted(kept, reverse=True)), variables)


def contains(ideal, b):
    b = check_monomial(b, ideal.num_vars)
    return any(divides(g, b) for g in ideal.gens)


def is_subideal(sub, ideal):
    """True iff every generator of sub lies in ideal."""
    return all(contains(ideal, g) for g in sub.gens)


def contains_squarefree(ideal):
    return any(max(g) <= 1 for g in ideal.gens)


def _check_compatible(a, b):
    if a.num_vars != b.num_vars:
        raise ValueError('Ideals live in {} and {} variables.'.format(
            a.num_vars, b.num_vars))


def multiply(a, b):
    _check_compatible(a, b)
    return minimalize((tuple(x + y for x, y in zip(g, h)) for g in a.gens for h in b.gens),
                      a.num_vars, a.variables)


def ordinary_power(ideal, k):
    if k < 0:
        raise ValueError('Power must be non-negative, got {}.'.format(k))
    unit = unit_ideal(ideal.num_vars, ideal.variables)
    return reduce(multiply, [ideal] * k, unit)


def bracket_power(ideal, q):
    """I^[q]: every generator exponent scaled by q."""
    if q < 1:
        raise ValueError('Bracket power needs q >= 1, got {}.'.format(q))
    return minimalize((tuple(q * x for x in g) for g in ideal.gens),
                      ideal.num_vars, ideal.variables)


def bracket_root(ideal, q):
    """I^[1/q] of a monomial ideal: generatorwise floor division by q."""
    if q < 1:
        raise ValueError('Bracket root needs q >= 1, got {}.'.format(q))
    return minimalize((tuple(x // q for x in g) for g in ideal.gens),
                      ideal.num_vars, ideal.variables)


@dataclass(frozen=True)
class ExponentMatrix:
    """
    The m x n matrix whose columns are the generator exponent vectors.
    """
    columns: tuple

    def __post_init__(self):
        columns = tuple(tuple(int(x) for x in c) for c in self.columns)
        if not columns:
            raise ImproperIdealError('An exponent matrix needs at least one column.')
        if len({len(c) for c in columns}) != 1:
            raise ValueError('Columns {} have different lengths.'.format(columns))
        if any(not any(c) for c in columns):
            raise ImproperIdealError('Zero column: the ideal is not proper.')
        if any(x < 0 for c in columns for x in c):
            raise ValueError('Exponent matrix entries must be non-negative.')
        object.__setattr__(self, 'columns', columns)

    @property
    def num_rows(self):
        return len(self.columns[0])

    @property
    def num_cols(self):
        return len(self.columns)

    @property
    def rows(self):
        return tuple(zip(*self.columns))

    @property
    def array(self):
        return np.array(self.rows, dtype=object)

    @property
    def max_entry(self):
        return max(max(c) for c in self.columns)

    def apply(self, v):
        """A v as a tuple of ints."""
        if len(v) != self.num_cols:
            raise ValueError('Vector {} does not have {} entries.'.format(v, self.num_cols))
        return tuple(sum(a * x for a, x in zip(row, v)) for row in self.rows)


def exponent_matrix(ideal):
    if ideal.is_unit:
        raise ImproperIdealError('The unit ideal has no exponent matrix.')
    return ExponentMatrix(ideal.gens)


# ------------ PARSING ----------------------------

_TOKEN = re.compile(r'(?P<ident>[A-Za-z_][A-Za-z_0-9]*)|(?P<int>\d+)|(?P<op>[\^*,\-])')


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise IdealSyntaxError('Unexpected character {!r}'.format(text[pos]), pos)
        tokens.append((m.lastgroup, m.group(m.lastgroup), pos))
        pos = m.end()
    return tokens


def _parse_terms(text):
    """
    Split ideal text into terms, each a list of (variable, exponent, position) triples.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise IdealSyntaxError('Empty generator list', 0)
    terms = [[]]
    expect_factor = True
    i = 0
    while i < len(tokens):
        kind, value, pos = tokens[i]
        if kind == 'ident':
            exponent = 1
            if i + 1 < len(tokens) and tokens[i + 1][1] == '^':
                if i + 2 >= len(tokens):
                    raise IdealSyntaxError('Missing exponent', tokens[i + 1][2] + 1)
                ekind, evalue, epos = tokens[i + 2]
                if evalue == '-':
                    raise IdealSyntaxError('Negative exponent', epos)
                if ekind != 'int':
                    raise IdealSyntaxError('Expected an exponent', epos)
                exponent = int(evalue)
                i += 2
            terms[-1].append((value, exponent, pos))
            expect_factor = False
        elif kind == 'int':
            if int(value) != 1:
                raise IdealSyntaxError('Coefficients are not supported', pos)
            terms[-1].append((None, 0, pos))
            expect_factor = False
        elif value == '*':
            if expect_factor:
                raise IdealSyntaxError("Unexpected '*'", pos)
            expect_factor = True
        elif value == ',':
            if expect_factor:
                raise IdealSyntaxError("Unexpected ','", pos)
            terms.append([])
            expect_factor = True
        else:
            raise IdealSyntaxError('Unexpected {!r}'.format(value), pos)
        i += 1
    if expect_factor:
        raise IdealSyntaxError('Unexpected end of input', len(text))
    return terms


def _parse_json(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise IdealSyntaxError('Invalid JSON: {}'.format(e.msg), e.pos)
    if not isinstance(data, dict) or 'gens' not in data:
        raise IdealSyntaxError('JSON ideal needs a "gens" list', 0)
    gens = data['gens']
    if not gens:
        raise IdealSyntaxError('Empty generator list', 0)
    variables = data.get('vars')
    num_vars = len(variables) if variables else len(gens[0])
    for g in gens:
        if len(g) != num_vars:
            raise IdealSyntaxError('Generator {} has the wrong length'.format(g), 0)
        if any(int(x) < 0 for x in g):
            raise IdealSyntaxError('Negative exponent in {}'.format(g), 0)
    return minimalize(gens, num_vars, variables)


def parse_ideal(text, variables=None, num_vars=None):
    """
    Parse "x^2*y^2, y^3*z^3" (or the JSON form with "vars" and "gens")
    into a minimal monomial ideal.

    :param variables: explicit variable order, otherwise order of first appearance
    :param num_vars: pad the ring with further variables up to this count
    """
    if text.lstrip().startswith('{'):
        return _parse_json(text)

    terms = _parse_terms(text)
    if variables is None:
        names = []
        for term in terms:
            for var, _, _ in term:
                if var is not None and var not in names:
                    names.append(var)
    else:
        names = list(variables)
    if num_vars is not None:
        if num_vars < len(names):
            raise InvalidArgumentError('Text uses {} variables, more than {}.'.format(len(names), num_vars))
        i = 1
        while len(names) < num_vars:
            if 'x{}'.format(i) not in names:
                names.append('x{}'.format(i))
            i += 1
    if not names:
        # only constants, e.g. "1"
        names = ['x']

    index = {name: i for i, name in enumerate(names)}
    gens = []
    for term in terms:
        b = [0] * len(names)
        for var, exponent, pos in term:
            if var is None:
                continue
            if var not in index:
                raise IdealSyntaxError('Unknown variable {!r}'.format(var), pos)
            b[index[var]] += exponent
        gens.append(tuple(b))
    ideal = minimalize(gens, len(names), names)
    log.debug('Parsed {!r} into {} generators.'.format(text, ideal.num_gens))
    return ideal


def format_ideal(ideal, sep='*'):
    return ', '.join(format_monomial(g, ideal.variables, sep) for g in ideal.gens)


def ideal_to_dict(ideal):
    return {'vars': list(ideal.variables), 'gens': [list(g) for g in ideal.gens]}
