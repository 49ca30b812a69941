#!/usr/bin/env python
'''
Command line front end for frobpow: Frobenius powers and critical
exponents of monomial ideals in characteristic p.

Oct-2026
'''

import argparse
import sys
import logging as log

from .version import __version__
from .critical import crit, jumps_unit_interval, lambda_b, lce, power_at
from .defaults import DEFAULT_BUDGET, VERIFY_DEPTH
from .errors import InvalidArgumentError
from .fractal import SimplexSpec, dimension, sierpinski_points
from .monomials import format_ideal, ideal_to_dict, parse_ideal
from .oracle import member, padic_power, scan_powers
from .plotters import plot_subdivision
from .tools import *


# ------------ COMMANDS ----------------------------

def _ideal(args):
    return parse_ideal(args.ideal)


def _render(result, ideal, args):
    if args.json:
        return result_to_dict(result, ideal)
    return '\n'.join([format_result(result)] + [record.line() for record in result.trace])


def cmd_lce(args):
    ideal = _ideal(args)
    return _render(lce(ideal, args.p, trace=args.trace, budget=args.budget), ideal, args)


def cmd_crit(args):
    ideal = _ideal(args)
    result = lambda_b(ideal, parse_int_list(args.b), args.p, reduce=args.reduce,
                      trace=args.trace, budget=args.budget)
    return _render(result, ideal, args)


def cmd_threshold(args):
    ideal = _ideal(args)
    result = crit(ideal, parse_int_list(args.a), args.p, budget=args.budget)
    return result_to_dict(result, ideal) if args.json else format_result(result)


def cmd_power(args):
    ideal = _ideal(args)
    t = parse_rational(args.t)
    power = power_at(ideal, t, args.p, budget=args.budget)
    if args.json:
        return {'t': format_rational(t), 'p': args.p, 'ideal': ideal_to_dict(power)}
    return format_ideal(power)


def cmd_oracle_power(args):
    ideal = _ideal(args)
    power = padic_power(ideal, args.k, args.q, args.p, budget=args.budget)
    if args.json:
        return {'k': args.k, 'q': args.q, 'p': args.p, 'ideal': ideal_to_dict(power)}
    return format_ideal(power)


def cmd_member(args):
    ideal = _ideal(args)
    found = member(ideal, parse_int_list(args.b), args.k, args.q, args.p, budget=args.budget)
    if args.json:
        return {'k': args.k, 'q': args.q, 'p': args.p, 'b': list(parse_int_list(args.b)),
                'member': found}
    return 'true' if found else 'false'


def cmd_jumps(args):
    ideal = _ideal(args)
    table = jumps_unit_interval(ideal, args.p, verify_depth=args.verify_depth, budget=args.budget)
    if args.json:
        return jump_table_to_dict(table)
    header = ' '.join(format_rational(value) for value in table.jumps)
    return '\n'.join([header, format_jump_table(table)])


def cmd_scan(args):
    ideal = _ideal(args)
    runs = scan_powers(ideal, args.e, args.p, budget=args.budget)
    q = args.p ** args.e
    return runs_to_dict(runs, q) if args.json else format_runs(runs)


def cmd_plot(args):
    ideal = _ideal(args)
    overlay = parse_rational_list(args.overlay) if args.overlay else []
    drawn = plot_subdivision(ideal, args.q, args.outfile, overlay=overlay, labels=args.labels)
    if args.json:
        return {'file': args.outfile, 'cells': len(drawn)}
    return '{} cells written to {}'.format(len(drawn), args.outfile)


def cmd_fractal(args):
    if args.dimension:
        dim = dimension(args.p, args.d)
        if args.json:
            return {'p': args.p, 'd': args.d, 'count': dim.count, 'base': dim.base,
                    'value': dim.value}
        return str(dim)
    points = sorted(sierpinski_points(SimplexSpec(args.p, args.d, args.depth)))
    if args.json:
        return {'p': args.p, 'd': args.d, 'depth': args.depth,
                'points': [[format_rational(x) for x in pt] for pt in points]}
    return '\n'.join(format_point(pt) for pt in points)


# ------------ PARSER ----------------------------

def _add_ideal(parser, prime=True):
    parser.add_argument('--ideal', type=str, required=True,
                        help='Generators, e.g. "x^2*y^2, y^3*z^3", or the JSON form.')
    if prime:
        parser.add_argument('-p', type=int, required=True, help='The characteristic.')


def build_parser():
    parser = argparse.ArgumentParser(prog='frobpow')
    parser.add_argument('--budget', type=int, default=None,
                        help='Bound on enumerated states, default {}.'.format(DEFAULT_BUDGET))
    parser.add_argument('--json', help='Print JSON instead of text.', action='store_true')
    parser.add_argument('-v', '--verbose',
                        help='Increase output verbosity', action='store_true')
    parser.add_argument('--version', action='version',
                        version=f'%(prog)s {__version__}')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('lce', help='Least critical exponent.')
    _add_ideal(p)
    p.add_argument('--trace', action='store_true', help='Keep the per-level trace.')
    p.set_defaults(func=cmd_lce)

    p = sub.add_parser('crit', help='Critical exponent lambda_b.')
    _add_ideal(p)
    p.add_argument('--b', type=str, required=True, help='Exponent vector, e.g. 1,1,0.')
    p.add_argument('--reduce', action='store_true', help='Allow x^b in I (Skoda shifts).')
    p.add_argument('--trace', action='store_true', help='Print the per-level trace.')
    p.set_defaults(func=cmd_crit)

    p = sub.add_parser('threshold', help='Threshold of I with respect to (x_1^a_1, ..., x_m^a_m).')
    _add_ideal(p)
    p.add_argument('--a', type=str, required=True, help='Exponent vector, e.g. 1,1,1.')
    p.set_defaults(func=cmd_threshold)

    p = sub.add_parser('power', help='Exact I^[t] for t in [0, 1).')
    _add_ideal(p)
    p.add_argument('--t', type=str, required=True, help='Rational num/den.')
    p.set_defaults(func=cmd_power)

    p = sub.add_parser('oracle-power', help='I^[k/q] by enumeration.')
    _add_ideal(p)
    p.add_argument('--k', type=int, required=True)
    p.add_argument('--q', type=int, required=True, help='A power of p.')
    p.set_defaults(func=cmd_oracle_power)

    p = sub.add_parser('member', help='Is x^b in I^[k/q]?')
    _add_ideal(p)
    p.add_argument('--b', type=str, required=True)
    p.add_argument('--k', type=int, required=True)
    p.add_argument('--q', type=int, required=True)
    p.set_defaults(func=cmd_member)

    p = sub.add_parser('jumps', help='Critical exponents in (0, 1] with the ideals between them.')
    _add_ideal(p)
    p.add_argument('--verify-depth', type=int, default=VERIFY_DEPTH,
                   help='Depth of the enumeration cross-check, default {}.'.format(VERIFY_DEPTH))
    p.set_defaults(func=cmd_jumps)

    p = sub.add_parser('scan', help='I^[k/p^e] for every k < p^e.')
    _add_ideal(p)
    p.add_argument('-e', type=int, required=True, help='Depth.')
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser('plot', help='SVG of the subdivision of the q x q square.')
    _add_ideal(p, prime=False)
    p.add_argument('--q', type=int, required=True)
    p.add_argument('-o', '--outfile', type=str, required=True)
    p.add_argument('--overlay', type=str, default=None, help='Level lines t1,t2,...')
    p.add_argument('--labels', action=argparse.BooleanOptionalAction, default=True)
    p.set_defaults(func=cmd_plot)

    p = sub.add_parser('fractal', help='Sierpinski simplex points or dimension.')
    p.add_argument('-p', '--p', type=int, required=True)
    p.add_argument('--d', type=int, required=True)
    p.add_argument('--depth', type=int, default=1)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument('--points', action='store_true', help='List the points (default).')
    mode.add_argument('--dimension', action='store_true', help='Print the dimension.')
    p.set_defaults(func=cmd_fractal)

    return parser


# ------------ MAIN ----------------------------

def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    if args.verbose:
        log.basicConfig(level=log.DEBUG)

    try:
        output = args.func(args)
    except InvalidArgumentError as e:
        print('error: {}'.format(e), file=sys.stderr)
        return 2
    except (ValueError, RuntimeError) as e:
        print('error: {}'.format(e), file=sys.stderr)
        return 1

    print(dump_json(output) if args.json else output)
    return 0

# ----------------------------------------


if __name__ == '__main__':
    sys.exit(main())
