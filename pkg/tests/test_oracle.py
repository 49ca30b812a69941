from fractions import Fraction
from itertools import product

import pytest

from frobpow.basep import multinomial_nonzero
from frobpow.errors import BudgetExceededError
from frobpow.monomials import (bracket_power, bracket_root, contains, is_subideal, multiply,
                               parse_ideal, unit_ideal)
from frobpow.oracle import (carry_free_vectors, compositions, count_carry_free,
                            integer_frobenius_power, member, padic_power, scan_powers)


def test_compositions():
    assert sorted(compositions(2, 2)) == [(0, 2), (1, 1), (2, 0)]
    assert compositions(0, 3) == [(0, 0, 0)]
    assert compositions(3, 0) == []


@pytest.mark.parametrize('p', [2, 3, 5])
def test_carry_free_vectors_are_exactly_the_nonvanishing_multinomials(p):
    for k in range(p * p + 2):
        for n in (1, 2, 3):
            found = set(carry_free_vectors(k, n, p))
            expected = {u for u in product(range(k + 1), repeat=n) if multinomial_nonzero(k, u, p)}
            assert found == expected
            assert count_carry_free(k, n, p) == len(found)


def test_carry_free_vectors_budget():
    with pytest.raises(BudgetExceededError):
        list(carry_free_vectors(3 ** 6 - 1, 3, 3, budget=1000))


def test_integer_frobenius_power(square_cube):
    for p in (2, 3, 5):
        assert integer_frobenius_power(square_cube, 1, p) == square_cube
        assert integer_frobenius_power(square_cube, 0, p).is_unit
    xy = parse_ideal('x, y')
    assert integer_frobenius_power(xy, 3, 3) == bracket_power(xy, 3)
    assert integer_frobenius_power(xy, 3, 2) == parse_ideal('x^3, x^2*y, x*y^2, y^3')


def test_padic_power_examples(square_cube):
    assert padic_power(square_cube, 1, 3, 3).is_unit
    assert not padic_power(square_cube, 2, 3, 3).is_unit
    assert padic_power(square_cube, 2, 3, 3) == parse_ideal('x*y, y*z')
    for p in (2, 3, 5):
        assert padic_power(square_cube, p, p, p) == square_cube
    with pytest.raises(ValueError):
        padic_power(square_cube, 1, 6, 3)


def test_padic_power_unit_ideal():
    assert padic_power(unit_ideal(2), 5, 9, 3).is_unit


def test_padic_power_with_denominator_one_is_integer_power(random_ideals):
    for ideal in random_ideals(15, max_gens=2, max_exponent=2):
        for p in (2, 3):
            for k in range(6):
                assert padic_power(ideal, k, 1, p) == integer_frobenius_power(ideal, k, p)


def test_padic_power_inside_bracket_root(random_ideals):
    # the q-th root of I^[k] lies inside I^[k/q]
    for ideal in random_ideals(15, max_gens=2, max_exponent=3):
        for p in (2, 3):
            q = p * p
            for k in range(q + 1):
                root = bracket_root(integer_frobenius_power(ideal, k, p), q)
                assert is_subideal(root, padic_power(ideal, k, q, p))


def test_member_examples(square_cube):
    assert member(square_cube, (0, 0, 0), 4, 9, 3)
    assert not member(square_cube, (0, 0, 0), 5, 9, 3)
    assert member(square_cube, (2, 2, 0), 0, 9, 3)


def test_member_agrees_with_padic_power(random_ideals):
    for ideal in random_ideals(10, max_exponent=3):
        p = 3
        q = 9
        for k in range(q):
            power = padic_power(ideal, k, q, p)
            for b in product(range(3), repeat=ideal.num_vars):
                assert member(ideal, b, k, q, p) == contains(power, b)


def test_scan_running_example(square_cube):
    runs = scan_powers(square_cube, 2, 2)
    assert [r.to_fraction() for r, _ in runs] == [0, Fraction(1, 2), Fraction(3, 4)]
    assert runs[0][1].is_unit
    assert runs[1][1] == parse_ideal('x*y, y*z')
    assert runs[2][1] == parse_ideal('x*y, y^2*z')


def test_scan_squarefree_and_depth_zero(square_cube):
    for p in (2, 3):
        runs = scan_powers(parse_ideal('x*y*z'), 2, p)
        assert len(runs) == 1 and runs[0][1].is_unit
    runs = scan_powers(square_cube, 0, 5)
    assert len(runs) == 1 and runs[0][0].to_fraction() == 0 and runs[0][1].is_unit


def test_scan_limit(square_cube, monkeypatch):
    monkeypatch.setenv('FROBPOW_SCAN_MAX_POINTS', '100')
    with pytest.raises(BudgetExceededError):
        scan_powers(square_cube, 3, 5)


def test_scan_reuses_cache(square_cube):
    cache = {}
    scan_powers(square_cube, 2, 3, cache=cache)
    assert len(cache) == 9
    cache[6, 9] = unit_ideal(3)
    runs = dict((start.to_fraction(), power) for start, power in scan_powers(square_cube, 2, 3, cache=cache))
    assert runs[Fraction(2, 3)].is_unit


def test_monotone_in_t(random_ideals):
    for ideal in random_ideals(10):
        p = 2
        q = 8
        powers = [padic_power(ideal, k, q, p) for k in range(q + 1)]
        for smaller, larger in zip(powers[1:], powers):
            assert is_subideal(smaller, larger)


def test_product_of_powers_contains_power_of_sum(random_ideals):
    for ideal in random_ideals(10, max_exponent=3):
        p, q = 3, 9
        for k1, k2 in [(1, 2), (2, 4), (3, 3), (4, 5)]:
            lhs = multiply(padic_power(ideal, k1, q, p), padic_power(ideal, k2, q, p))
            assert is_subideal(padic_power(ideal, k1 + k2, q, p), lhs)


def test_power_of_product_inside_product_of_powers(random_ideals):
    ideals = random_ideals(12, max_vars=2, max_gens=2, max_exponent=3)
    for i, j in zip(ideals[::2], ideals[1::2]):
        if i.num_vars != j.num_vars:
            continue
        p, q = 2, 4
        for k in range(q + 1):
            lhs = multiply(padic_power(i, k, q, p), padic_power(j, k, q, p))
            assert is_subideal(padic_power(multiply(i, j), k, q, p), lhs)


def test_variables_without_squares_stay_out(random_ideals):
    for ideal in random_ideals(20):
        p, q = 3, 9
        for j in range(ideal.num_vars):
            if any(g[j] >= 2 for g in ideal.gens):
                continue
            for k in range(q):
                assert all(g[j] == 0 for g in padic_power(ideal, k, q, p).gens)
