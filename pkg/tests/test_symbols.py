import random

import pytest

from fermatlucas.lucas import ALTERNATE_PARAMS, STANDARD_PARAMS, LucasParams
from fermatlucas.primality import FermatNumber
from fermatlucas.symbols import SymbolTriple, fermat_symbols_closed_form, jacobi, symbol_triple


def _sieve(limit):
    flags = bytearray([1]) * limit
    flags[:2] = b"\x00\x00"
    for p in range(2, int(limit**0.5) + 1):
        if flags[p]:
            flags[p * p :: p] = b"\x00" * len(flags[p * p :: p])
    return [i for i, f in enumerate(flags) if f]


def test_jacobi_examples():
    assert jacobi(2, 3) == -1
    assert jacobi(3, 5) == -1  # squares mod 5 are {1, 4}
    for n in range(1, 200, 2):
        assert jacobi(1, n) == 1
    assert jacobi(0, 1) == 1
    assert jacobi(0, 15) == 0
    assert jacobi(6, 15) == 0  # shared factor 3


def test_jacobi_validation():
    with pytest.raises(ValueError):
        jacobi(2, 4)
    with pytest.raises(ValueError):
        jacobi(2, 0)
    with pytest.raises(ValueError):
        jacobi(2, -7)


def test_jacobi_reduces_the_numerator():
    rng = random.Random(3)
    for _ in range(300):
        n = rng.randrange(3, 10**6) | 1
        a = rng.randrange(-(10**9), 10**9)
        assert jacobi(a, n) == jacobi(a % n, n) == jacobi(a + n, n)


def test_jacobi_euler_criterion():
    rng = random.Random(1930)
    for p in _sieve(10_000):
        if p == 2:
            continue
        for a in (2, 3, 5, 7, p - 1, rng.randrange(1, p)):
            euler = pow(a, (p - 1) // 2, p)
            expected = 0 if a % p == 0 else (1 if euler == 1 else -1)
            if euler not in (0, 1, p - 1):
                raise AssertionError("Euler criterion broke; p is not prime?")
            assert jacobi(a, p) == expected


def test_jacobi_multiplicative_in_numerator():
    rng = random.Random(42)
    for _ in range(1000):
        n = rng.randrange(3, 1 << 40) | 1
        a = rng.randrange(1 << 40)
        b = rng.randrange(1 << 40)
        assert jacobi(a * b, n) == jacobi(a, n) * jacobi(b, n)


def test_jacobi_reciprocity_with_3():
    # jacobi(3, N) * jacobi(N, 3) = (-1)^((3-1)/2 * (N-1)/2) for odd N coprime to 3
    for N in range(5, 10_000, 2):
        if N % 3 == 0:
            continue
        sign = -1 if (N - 1) // 2 % 2 else 1
        assert jacobi(3, N) * jacobi(N, 3) == sign


def test_symbol_triple_examples():
    assert symbol_triple(STANDARD_PARAMS, 17) == SymbolTriple(-1, -1, 1)
    assert symbol_triple(STANDARD_PARAMS, 65537) == SymbolTriple(-1, -1, 1)
    assert symbol_triple(STANDARD_PARAMS, 7).sigma == 0  # R == 0 mod 7
    with pytest.raises(ValueError):
        symbol_triple(STANDARD_PARAMS, 10)


def test_symbol_triple_alternate_params():
    # (3, -1) has D = 7; over 17 that gives the same -1, -1 pattern with tau = +1.
    assert symbol_triple(ALTERNATE_PARAMS, 17) == SymbolTriple(-1, -1, 1)
    # tau = (-1/p) = -1 when p == 3 (mod 4)
    assert symbol_triple(ALTERNATE_PARAMS, 11).tau == -1


def test_closed_form_values_and_branches():
    assert fermat_symbols_closed_form(1) == SymbolTriple(-1, -1, 1)
    assert fermat_symbols_closed_form(2) == SymbolTriple(-1, -1, 1)
    assert FermatNumber(1).value % 7 == 5  # odd-n branch
    assert FermatNumber(2).value % 7 == 3  # even-n branch
    assert FermatNumber(1).value % 3 == 2
    with pytest.raises(ValueError):
        fermat_symbols_closed_form(0)


def test_closed_form_agrees_with_jacobi():
    for n in range(1, 11):  # F_10 has 309 digits; jacobi is fast
        F = FermatNumber(n).value
        assert fermat_symbols_closed_form(n) == symbol_triple(STANDARD_PARAMS, F)


def test_closed_form_matches_generic_params_object():
    # D = 3 for the standard parameters, so epsilon is (3/F_n) specifically.
    params = LucasParams(7, 1)
    for n in (1, 2, 6):
        F = FermatNumber(n).value
        assert fermat_symbols_closed_form(n).epsilon == jacobi(params.D, F)
