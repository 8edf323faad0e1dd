import itertools
import random
from collections import Counter

import pytest

from omegaprimality import (BudgetExceeded, ElementOutOfRange, FiniteAbelianGroup,
                            ZeroSumSequence, block_divides, block_omega, is_zero_sum,
                            minimal_zero_sum_sequences)

Z3 = FiniteAbelianGroup([3])
G, NG, ZERO = (1,), (2,), (0,)


def brute_minimal(Gr, max_len):
    """Minimal zero-sum multisets by direct subset checks."""
    out = set()
    for length in range(1, max_len + 1):
        for combo in itertools.combinations_with_replacement(Gr.elements, length):
            if not is_zero_sum(Gr, Counter(combo)):
                continue
            proper = any(is_zero_sum(Gr, Counter(sub))
                         for k in range(1, length)
                         for sub in itertools.combinations(combo, k))
            if not proper:
                out.add(Gr.block(Counter(combo)))
    return out


def test_z3_irreducibles():
    atoms = minimal_zero_sum_sequences(Z3)
    assert set(atoms) == {Z3.block({ZERO: 1}), Z3.block({G: 1, NG: 1}),
                          Z3.block({G: 3}), Z3.block({NG: 3})}


@pytest.mark.parametrize("inv, davenport, count", [
    ([2], 2, 2), ([3], 3, 4), ([4], 4, 7), ([2, 2], 3, 5), ([5], 5, 15), ([6], 6, 20)])
def test_irreducibles_match_subset_scan(inv, davenport, count):
    Gr = FiniteAbelianGroup(inv)
    atoms = minimal_zero_sum_sequences(Gr)
    assert len(atoms) == count
    assert max(u.length for u in atoms) == davenport
    if Gr.order <= 5:
        assert set(atoms) == brute_minimal(Gr, davenport + 1)


def test_reference_values_z3():
    cases = [({ZERO: 1}, 1), ({G: 3}, 3), ({G: 1, NG: 1}, 2), ({G: 3, NG: 3}, 3)]
    for ms, want in cases:
        assert block_omega(Z3, Z3.block(ms)).omega == want
    r = block_omega(Z3, Z3.block({G: 3}))
    assert r.maximal_bullets == ((Z3.block({G: 1, NG: 1}),) * 3,)


def test_z2_atoms_are_prime():
    # B(Z2) is free on 0 and g^2, so both atoms have omega 1
    Z2 = FiniteAbelianGroup([2])
    assert [block_omega(Z2, u).omega for u in minimal_zero_sum_sequences(Z2)] == [1, 1]


@pytest.mark.parametrize("inv", [[3], [4], [2, 2], [5], [6]])
def test_atom_omega_equals_length(inv):
    Gr = FiniteAbelianGroup(inv)
    for u in minimal_zero_sum_sequences(Gr):
        if u.length > 1:
            assert block_omega(Gr, u).omega == u.length


def test_prime_shift():
    x = Z3.block({G: 3, NG: 3})
    zero = Z3.block({ZERO: 1})
    for a in range(1, 4):
        assert block_omega(Z3, zero ** a * x).omega == block_omega(Z3, x).omega + a


def test_bullets_satisfy_definition():
    Gr = FiniteAbelianGroup([4])
    x = Gr.block({(1,): 2, (2,): 1})
    for b in block_omega(Gr, x).bullets:
        prod = b[0]
        for u in b[1:]:
            prod = prod * u
        assert x.divides(prod)
        for i in range(len(b)):
            rest = [v for j, v in enumerate(b) if j != i]
            if rest:
                p = rest[0]
                for v in rest[1:]:
                    p = p * v
                assert not x.divides(p)


def test_subadditivity_random():
    rng = random.Random(11)
    for inv in ([3], [4], [2, 2]):
        Gr = FiniteAbelianGroup(inv)
        atoms = minimal_zero_sum_sequences(Gr)
        for _ in range(40):
            x = rng.choice(atoms) * rng.choice(atoms)
            y = rng.choice(atoms)
            assert block_omega(Gr, x * y).omega <= block_omega(Gr, x).omega + block_omega(Gr, y).omega


def test_sequence_helpers():
    x = Z3.block([(G, 3), (NG, 1), (NG, 2)])
    assert x.length == 6 and x.multiplicity(NG) == 3
    assert ZeroSumSequence.from_json(Z3, x.to_json()) == x
    assert block_divides(Z3, Z3.block({G: 1, NG: 1}), x)
    assert str(Z3.block({G: 3})) == "1^3"
    with pytest.raises(ValueError):
        Z3.block({G: 1})
    with pytest.raises(ElementOutOfRange):
        Z3.element(3)


def test_limits():
    with pytest.raises(BudgetExceeded):
        minimal_zero_sum_sequences(FiniteAbelianGroup([9, 9]))
    with pytest.raises(BudgetExceeded):
        minimal_zero_sum_sequences(FiniteAbelianGroup([7]), budget=5)
    with pytest.raises(ValueError):
        block_omega(Z3, Z3.block({}))
