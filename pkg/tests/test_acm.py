import itertools
import random
from math import prod

import numpy as np
import pytest

from omegaprimality import (FactorizationFailed, NotAMember, NotIdempotent, NotRegularUnit,
                            acm_factorizations, acm_is_irreducible, acm_new, acm_omega,
                            hilbert_monoid, is_acm_bullet)
from omegaprimality.acm import prime_factorization

H = hilbert_monoid()


def smallest_prime_factor(limit):
    spf = np.arange(limit + 1)
    for p in range(2, int(limit ** 0.5) + 1):
        if spf[p] == p:
            block = spf[p * p::p]
            np.putmask(block, block == np.arange(p * p, limit + 1, p), p)
    return spf


def test_hilbert_irreducibles_characterization():
    # irreducibles of M(1,4) are primes = 1 mod 4 and products of two primes = 3 mod 4
    limit = 10**5
    spf = smallest_prime_factor(limit)
    for n in range(5, limit + 1, 4):
        primes = []
        m = n
        while m > 1:
            primes.append(int(spf[m]))
            m //= int(spf[m])
        expected = (len(primes) == 1) or (len(primes) == 2 and all(p % 4 == 3 for p in primes))
        assert acm_is_irreducible(H, n) == expected, n


def test_factorizations():
    assert acm_factorizations(H, 441) == [(9, 49), (21, 21)]
    assert acm_factorizations(H, 225) == [(5, 5, 9)]
    assert acm_factorizations(H, 9) == [(9,)]


def test_reference_value_1225():
    r = acm_omega(H, 1225)
    assert r.omega == 4
    assert all(is_acm_bullet(H, 1225, b) for b in r.bullets)


@pytest.mark.parametrize("x, want", [(5, 1), (9, 2), (21, 2), (441, 4), (225, 4), (2205, 5), (3969, 6)])
def test_small_values(x, want):
    assert acm_omega(H, x).omega == want


def brute_omega(x, atom_limit=400, max_len=6):
    atoms = [n for n in range(5, atom_limit, 4) if acm_is_irreducible(H, n)]
    best = 0
    for k in range(1, max_len + 1):
        for combo in itertools.combinations_with_replacement(atoms, k):
            if is_acm_bullet(H, x, combo):
                best = k
                break
    return best


@pytest.mark.parametrize("x", [9, 21, 45, 49, 225])
def test_against_brute_force(x):
    assert brute_omega(x, max_len=acm_omega(H, x).omega + 1) == acm_omega(H, x).omega


def test_cap_and_order_do_not_matter():
    rng = random.Random(5)
    members = [n for n in range(5, 5000, 4)]
    for x in rng.sample(members, 60):
        base = acm_omega(H, x)
        assert acm_omega(H, x, cap=3 * base.omega + 4).bullets == base.bullets
        assert acm_omega(H, x, reverse=True).bullets == base.bullets
        assert acm_omega(H, x, cofactor_skip=2).omega == base.omega
        assert all(is_acm_bullet(H, x, b) for b in base.bullets)


def test_subadditivity():
    rng = random.Random(9)
    members = list(range(5, 2000, 4))
    for _ in range(80):
        x, y = rng.choice(members), rng.choice(members)
        assert acm_omega(H, x * y).omega <= acm_omega(H, x).omega + acm_omega(H, y).omega


def test_other_modulus():
    M = acm_new(1, 6)
    r = acm_omega(M, 49)
    assert r.omega >= 2 and all(is_acm_bullet(M, 49, b) for b in r.bullets)


def test_validation():
    with pytest.raises(NotIdempotent):
        acm_new(2, 4)
    assert acm_new(4, 6).regular is False
    with pytest.raises(NotRegularUnit):
        acm_omega(acm_new(4, 6), 16)
    with pytest.raises(NotAMember):
        acm_omega(H, 7)
    with pytest.raises(ValueError):
        acm_new(5, 4)
    with pytest.raises(FactorizationFailed):
        prime_factorization(10**13 + 1, limit=10**12)
    assert 1 in H and prod(p**e for p, e in prime_factorization(3969).items()) == 3969
