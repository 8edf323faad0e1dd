"""Block monoids: zero-sum sequences over a finite Abelian group.

A block is stored as a sorted tuple of ``(element, multiplicity)`` pairs,
elements being tuples ``(x_1, ..., x_m)`` with ``0 <= x_i < d_i``. Divisibility
of blocks is multiset containment, because the complement of a zero-sum
sub-multiset of a zero-sum sequence is again zero-sum.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import prod
from typing import Iterable, Mapping, Sequence

from .errors import BudgetExceeded, ElementOutOfRange
from .omega import BulletSet, OmegaResult

Element = tuple[int, ...]

DEFAULT_MAX_ORDER = 64
DEFAULT_NODE_BUDGET = 10**7


class FiniteAbelianGroup:
    """``Z_{d_1} x ... x Z_{d_m}`` given by its invariant factors."""

    def __init__(self, invariant_factors: Iterable[int] = ()):
        factors = tuple(int(d) for d in invariant_factors)
        if any(d < 2 for d in factors):
            raise ValueError(f"invariant factors must be at least 2, got {factors}")
        self.invariant_factors = factors
        self.order = prod(factors)
        self.elements: tuple[Element, ...] = tuple(itertools.product(*(range(d) for d in factors)))
        self.index = {e: i for i, e in enumerate(self.elements)}
        self.zero: Element = tuple(0 for _ in factors)

    def __repr__(self):
        return f"FiniteAbelianGroup({list(self.invariant_factors)})"

    def __eq__(self, other):
        return isinstance(other, FiniteAbelianGroup) and self.invariant_factors == other.invariant_factors

    def __hash__(self):
        return hash(self.invariant_factors)

    def element(self, x) -> Element:
        """Normalize ``x`` (an int for cyclic groups, or a tuple) and range-check it."""
        if isinstance(x, int):
            x = (x,)
        x = tuple(int(c) for c in x)
        if len(x) != len(self.invariant_factors) or any(
                not 0 <= c < d for c, d in zip(x, self.invariant_factors)):
            raise ElementOutOfRange(f"{x} is not an element of {self}")
        return x

    def add(self, x: Element, y: Element) -> Element:
        return tuple((a + b) % d for a, b, d in zip(x, y, self.invariant_factors))

    def neg(self, x: Element) -> Element:
        return tuple(-a % d for a, d in zip(x, self.invariant_factors))

    def scale(self, k: int, x: Element) -> Element:
        return tuple(k * a % d for a, d in zip(x, self.invariant_factors))

    def element_order(self, x: Element) -> int:
        k, y = 1, x
        while y != self.zero:
            y = self.add(y, x)
            k += 1
        return k

    def total(self, multiset: Mapping[Element, int]) -> Element:
        s = self.zero
        for e, m in multiset.items():
            s = self.add(s, self.scale(m, e))
        return s

    def block(self, multiset: Mapping | Iterable) -> ZeroSumSequence:
        return ZeroSumSequence.from_multiset(self, multiset)

    @cached_property
    def _add_index(self) -> list[list[int]]:
        els = self.elements
        return [[self.index[self.add(a, b)] for b in els] for a in els]


def _normalize(G: FiniteAbelianGroup, multiset) -> dict[Element, int]:
    items = multiset.items() if isinstance(multiset, Mapping) else multiset
    out: dict[Element, int] = {}
    for e, m in items:
        if m < 0:
            raise ValueError(f"negative multiplicity {m}")
        if m:
            e = G.element(e)
            out[e] = out.get(e, 0) + m
    return out


def is_zero_sum(G: FiniteAbelianGroup, multiset) -> bool:
    return G.total(_normalize(G, multiset)) == G.zero


@dataclass(frozen=True)
class ZeroSumSequence:
    """An element of the block monoid B(G)."""

    counts: tuple[tuple[Element, int], ...]
    group: FiniteAbelianGroup

    @classmethod
    def from_multiset(cls, G: FiniteAbelianGroup, multiset) -> ZeroSumSequence:
        ms = _normalize(G, multiset)
        if G.total(ms) != G.zero:
            raise ValueError(f"{ms} does not sum to zero in {G}")
        return cls(tuple(sorted(ms.items())), G)

    @classmethod
    def from_vector(cls, G: FiniteAbelianGroup, vec: Sequence[int]) -> ZeroSumSequence:
        return cls(tuple((G.elements[i], m) for i, m in enumerate(vec) if m), G)

    def __lt__(self, other):
        return (self.length, self.counts) < (other.length, other.counts)

    @property
    def length(self) -> int:
        return sum(m for _, m in self.counts)

    def __len__(self):
        return self.length

    @property
    def support(self) -> frozenset[Element]:
        return frozenset(e for e, _ in self.counts)

    def multiplicity(self, e: Element) -> int:
        return dict(self.counts).get(e, 0)

    def vector(self) -> tuple[int, ...]:
        v = [0] * self.group.order
        for e, m in self.counts:
            v[self.group.index[e]] = m
        return tuple(v)

    def __mul__(self, other: ZeroSumSequence) -> ZeroSumSequence:
        ms = dict(self.counts)
        for e, m in other.counts:
            ms[e] = ms.get(e, 0) + m
        return ZeroSumSequence(tuple(sorted(ms.items())), self.group)

    def __pow__(self, k: int) -> ZeroSumSequence:
        return ZeroSumSequence(tuple((e, m * k) for e, m in self.counts), self.group)

    def divides(self, other: ZeroSumSequence) -> bool:
        theirs = dict(other.counts)
        return all(theirs.get(e, 0) >= m for e, m in self.counts)

    def to_json(self) -> str:
        return json.dumps([[list(e), m] for e, m in self.counts])

    @classmethod
    def from_json(cls, G: FiniteAbelianGroup, text: str) -> ZeroSumSequence:
        return cls.from_multiset(G, [(tuple(e), m) for e, m in json.loads(text)])

    def __str__(self):
        if not self.counts:
            return "1"
        return " ".join(f"{'/'.join(map(str, e)) or '0'}^{m}" for e, m in self.counts)


def block_divides(G: FiniteAbelianGroup, x: ZeroSumSequence, y: ZeroSumSequence) -> bool:
    return x.divides(y)


@lru_cache(maxsize=64)
def _minimal_zero_sum_vectors(G: FiniteAbelianGroup, budget: int) -> tuple[tuple[int, ...], ...]:
    n = G.order
    add = G._add_index
    zero = G.index[G.zero]
    found = {tuple(1 if i == zero else 0 for i in range(n))}
    nonzero = [i for i in range(n) if i != zero]
    seq = [0] * n
    nodes = 0

    def shift(mask: int, g: int) -> int:
        out = 0
        while mask:
            low = mask & -mask
            out |= 1 << add[low.bit_length() - 1][g]
            mask ^= low
        return out

    # Depth-first over zero-sum free sequences in non-decreasing element order.
    # Appending the negative of the sum of one yields a minimal zero-sum sequence,
    # and every minimal zero-sum sequence of length >= 2 arises this way.
    def walk(start: int, sums: int, total: int) -> None:
        nonlocal nodes
        for pos in range(start, len(nonzero)):
            g = nonzero[pos]
            new = sums | (1 << g) | shift(sums, g)
            if new >> zero & 1:
                continue
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(f"zero-sum enumeration over {G} exceeded {budget} nodes")
            seq[g] += 1
            t = add[total][g]
            closing = G.index[G.neg(G.elements[t])]
            v = seq.copy()
            v[closing] += 1
            found.add(tuple(v))
            walk(pos, new, t)
            seq[g] -= 1

    walk(0, 0, zero)
    return tuple(sorted(found, key=lambda v: (sum(v), tuple(-c for c in v))))


def minimal_zero_sum_sequences(G: FiniteAbelianGroup, max_order: int = DEFAULT_MAX_ORDER,
                               budget: int = DEFAULT_NODE_BUDGET) -> list[ZeroSumSequence]:
    """All irreducible blocks of B(G), sorted by length then content."""
    if G.order > max_order:
        raise BudgetExceeded(f"|G| = {G.order} exceeds the configured limit {max_order}")
    return sorted(ZeroSumSequence.from_vector(G, v) for v in _minimal_zero_sum_vectors(G, budget))


def block_omega(G: FiniteAbelianGroup, x: ZeroSumSequence, max_order: int = DEFAULT_MAX_ORDER,
                budget: int = DEFAULT_NODE_BUDGET) -> OmegaResult:
    """omega(x) in B(G) with all bullets and the maximal ones.

    Bullets are multisets of irreducibles. Candidates must share support with
    ``x``; the search adds them in a fixed order, only while ``x`` is not yet
    covered, and each new irreducible must lower the remaining deficit (one
    that covers nothing new could be dropped from any completion). That caps
    bullets at ``len(x)`` irreducibles.
    """
    if x.length == 0:
        raise ValueError("the empty block is the identity; omega is defined on non-units")
    atoms = [u for u in minimal_zero_sum_sequences(G, max_order, budget) if u.support & x.support]
    need = x.vector()
    atom_vecs = [u.vector() for u in atoms]
    found: list[tuple[int, ...]] = []
    chosen: list[int] = []
    nodes = 0

    def is_bullet(picks: list[int]) -> bool:
        total = [0] * G.order
        for j in picks:
            for i, c in enumerate(atom_vecs[j]):
                total[i] += c
        if any(t < c for t, c in zip(total, need)):
            return False
        for j in set(picks):
            if all(t - u >= c for t, u, c in zip(total, atom_vecs[j], need)):
                return False
        return True

    def walk(start: int, deficit: list[int]) -> None:
        nonlocal nodes
        if not any(deficit):
            if is_bullet(chosen):
                found.append(tuple(chosen))
            return
        for j in range(start, len(atoms)):
            u = atom_vecs[j]
            if not any(d and c for d, c in zip(deficit, u)):
                continue
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(f"bullet search for {x} exceeded {budget} nodes")
            chosen.append(j)
            walk(j, [max(0, d - c) for d, c in zip(deficit, u)])
            chosen.pop()

    walk(0, list(need))
    found.sort()
    bullets = tuple(tuple(atoms[j] for j in b) for b in found)
    best = max(len(b) for b in bullets)
    maximal = tuple(b for b in bullets if len(b) == best)
    return OmegaResult(x, best, BulletSet(x, bullets), maximal)
