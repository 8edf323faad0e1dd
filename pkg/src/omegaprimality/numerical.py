"""Numerical monoids: construction, membership, divisibility, factorizations."""

from __future__ import annotations

from math import gcd
from functools import reduce
from typing import Iterable, Sequence

import numpy as np

from .errors import DegenerateMonoid, DimensionMismatch, EmptyGenerators, GcdNotOne, NotAMember

Vector = tuple[int, ...]


def _sieve_add(table: np.ndarray, g: int) -> None:
    """Close a boolean membership table under adding ``g`` (in place)."""
    for r in range(g):
        strand = table[r::g]
        table[r::g] = np.logical_or.accumulate(strand)


class NumericalMonoid:
    """Additive submonoid of the non-negative integers with finite complement.

    The constructor accepts any generating set, drops redundant generators and
    keeps the sorted minimal generating set. A gcd above one is rejected
    instead of silently rescaled.

    >>> M = NumericalMonoid([3, 7, 10])
    >>> M.generators, M.frobenius
    ((3, 7), 11)
    """

    __slots__ = ("generators", "frobenius", "_table", "_bytes")

    def __init__(self, raw_generators: Iterable[int]):
        gens = sorted(set(int(g) for g in raw_generators))
        if not gens:
            raise EmptyGenerators("at least one generator is required")
        if gens[0] < 1:
            raise ValueError(f"generators must be positive, got {gens[0]}")
        d = reduce(gcd, gens)
        if d != 1:
            raise GcdNotOne(d)
        if gens[0] == 1:
            raise DegenerateMonoid("1 is a generator, so the monoid is all of N")

        # Schur: the Frobenius number is below min*max for any gcd-1 generating set.
        limit = gens[0] * gens[-1]
        table = np.zeros(limit + 1, dtype=bool)
        table[0] = True
        minimal = []
        for g in gens:
            if table[g]:
                continue
            minimal.append(g)
            _sieve_add(table, g)

        frob = int(np.flatnonzero(~table)[-1])
        object.__setattr__(self, "generators", tuple(minimal))
        object.__setattr__(self, "frobenius", frob)
        table = table[: frob + 1].copy()
        table.flags.writeable = False
        object.__setattr__(self, "_table", table)
        object.__setattr__(self, "_bytes", bytes(table))

    def __setattr__(self, name, value):
        raise AttributeError("NumericalMonoid is immutable")

    def __repr__(self):
        return f"NumericalMonoid({list(self.generators)})"

    def __eq__(self, other):
        return isinstance(other, NumericalMonoid) and self.generators == other.generators

    def __hash__(self):
        return hash(("NumericalMonoid", self.generators))

    def __reduce__(self):
        return (NumericalMonoid, (list(self.generators),))

    @property
    def embedding_dimension(self) -> int:
        return len(self.generators)

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    @property
    def membership_table(self) -> np.ndarray:
        """Read-only boolean table for ``0..frobenius``."""
        return self._table

    # -- membership ----------------------------------------------------------

    def __contains__(self, n: int) -> bool:
        if n < 0:
            return False
        if n > self.frobenius:
            return True
        return bool(self._bytes[n])

    contains = __contains__

    def contains_array(self, values) -> np.ndarray:
        """Vectorized membership for an integer array."""
        v = np.asarray(values, dtype=np.int64)
        out = v > self.frobenius
        inside = (v >= 0) & ~out
        out[inside] = self._table[v[inside]]
        return out

    def members(self, lo: int, hi: int) -> list[int]:
        return [n for n in range(max(lo, 0), hi + 1) if n in self]

    def _require_member(self, *values: int) -> None:
        for n in values:
            if n not in self:
                raise NotAMember(f"{n} is not in {self!r}")

    # -- arithmetic ----------------------------------------------------------

    def divides(self, a: int, b: int) -> bool:
        """``a`` divides ``b`` in the monoid, i.e. ``b - a`` is a member."""
        self._require_member(a, b)
        return (b - a) in self

    def value(self, vector: Sequence[int]) -> int:
        if len(vector) != len(self.generators):
            raise DimensionMismatch(
                f"expected {len(self.generators)} coordinates, got {len(vector)}")
        return sum(a * g for a, g in zip(vector, self.generators))

    def factorizations(self, n: int) -> list[Vector]:
        """All factorization vectors of ``n``, sorted lexicographically."""
        self._require_member(n)
        gens = self.generators
        k = len(gens)
        out: list[Vector] = []
        prefix = [0] * k

        def walk(i: int, rem: int) -> None:
            g = gens[i]
            if i == k - 1:
                if rem % g == 0:
                    prefix[i] = rem // g
                    out.append(tuple(prefix))
                return
            for a in range(rem // g + 1):
                left = rem - a * g
                # later generators only reach members of M
                if left in self:
                    prefix[i] = a
                    walk(i + 1, left)
            prefix[i] = 0

        walk(0, n)
        return out

    def max_factorization_length(self, n: int) -> int:
        return max(sum(f) for f in self.factorizations(n))


def new_numerical_monoid(raw_generators: Iterable[int]) -> NumericalMonoid:
    return NumericalMonoid(raw_generators)


def contains(M: NumericalMonoid, n: int) -> bool:
    return n in M


def frobenius_number(M: NumericalMonoid) -> int:
    return M.frobenius


def divides(M: NumericalMonoid, a: int, b: int) -> bool:
    return M.divides(a, b)


def factorizations(M: NumericalMonoid, n: int) -> list[Vector]:
    return M.factorizations(n)
