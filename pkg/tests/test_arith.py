from itertools import product
from math import gcd

import pytest

from repzeta import arith, schemes
from repzeta.schemes import F, G, H


def _jordan_brute(b, n):
    return sum(1 for t in product(range(n), repeat=b) if gcd(n, *t) == 1)


def test_jordan_examples():
    assert arith.jordan_totient(1, 6) == 2
    assert arith.jordan_totient(3, 1) == 1
    assert arith.jordan_totient(2, 4) == 12
    for b in (1, 2, 3):
        for n in range(1, 13):
            assert arith.jordan_totient(b, n) == _jordan_brute(b, n)


def test_quotient_examples():
    assert arith.dirichlet_from_quotients([(0, 1)], 6).as_list() == [1, 1, 2, 2, 4, 2]
    assert arith.dirichlet_from_quotients([], 4).as_list() == [1, 0, 0, 0]
    assert arith.dirichlet_from_quotients([(1, 1)], 4).as_list() == [1, 2, 6, 8]


def test_quotient_pairs():
    assert arith.quotient_pairs(G(1)) == [(0, 1)]
    assert arith.quotient_pairs(G(3)) == [(0, 3), (1, 3), (2, 3)]
    assert arith.quotient_pairs(F(2, 1)) == [(0, 5), (2, 5)]


def test_heisenberg_is_phi():
    assert arith.global_coeffs_from_local(G(1), 10).as_list() == arith.euler_phi_sieve(10)
    assert arith.global_coeffs_from_local(G(1), 1).as_list() == [1]
    assert arith.global_coeffs_from_local(G(1), 1000).as_list() == arith.euler_phi_sieve(1000)


def test_G2_route():
    assert arith.global_coeffs_from_local(G(2), 20) == arith.dirichlet_from_quotients([(0, 2), (1, 2)], 20)


@pytest.mark.parametrize("g", list(schemes.all_schemes(3)), ids=str)
def test_routes_agree(g):
    local = arith.global_coeffs_from_local(g, 200)
    assert local == arith.dirichlet_from_quotient_data(arith.quotient_data(g), 200)
    assert local.is_multiplicative()
    assert min(local.coeffs) >= 0
    if g.kind != "H":
        assert local == arith.dirichlet_from_quotients(arith.quotient_pairs(g), 200)


def test_convolution_identity():
    seq = list(range(1, 31))
    one = [1] + [0] * 29
    assert arith.dirichlet_convolve(seq, one) == seq


def test_errors():
    with pytest.raises(arith.DomainError):
        arith.global_coeffs_from_local(G(1), 0)
    with pytest.raises(arith.DomainError):
        arith.jordan_totient(0, 3)
    with pytest.raises(IndexError):
        arith.global_coeffs_from_local(H(1), 5)[6]
