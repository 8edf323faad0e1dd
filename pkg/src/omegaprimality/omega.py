"""Bullets and omega-primality in numerical monoids.

Three independent routes compute omega here:

* :func:`bullets` / :func:`omega` -- the bounded box scan over
  ``prod [0, b_i]`` with the per-coordinate bounds from :func:`bullet_bounds`;
* :func:`omega_oracle` -- breadth-first over vectors by total length with no
  componentwise pruning, capped at ``sum(b_i)``;
* :func:`omega_range` -- a batch evaluator for long ranges. A bullet ``a`` of
  ``n`` with value ``n + d`` is exactly a factorization of ``n + d`` that only
  uses generators ``g`` with ``d - g`` outside the monoid, and such ``d`` never
  exceeds ``frobenius + max(generators)``. Grouping by ``d`` turns omega into
  a max over a few max-length knapsack tables.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb, prod
from typing import Any, Sequence

import numpy as np

from .errors import BudgetExceeded, DimensionMismatch, NotAMember, ZeroElement
from .numerical import NumericalMonoid, Vector

DEFAULT_SEARCH_BUDGET = 10**8
DEFAULT_ORACLE_BUDGET = 10**7


@dataclass(frozen=True)
class BulletSet:
    element: Any
    bullets: tuple
    bounds: tuple | None = None

    def __len__(self):
        return len(self.bullets)

    def __iter__(self):
        return iter(self.bullets)

    def __contains__(self, item):
        return item in self.bullets


@dataclass(frozen=True)
class OmegaResult:
    """omega-value of an element together with the bullets that witness it.

    ``complete`` is False when the bullet search ran over a truncated set of
    irreducibles, in which case ``omega`` is only a lower bound.
    """

    element: Any
    omega: int
    bullet_set: BulletSet
    maximal_bullets: tuple
    complete: bool = field(default=True)

    @property
    def bullets(self) -> tuple:
        return self.bullet_set.bullets

    @property
    def maximal_supports(self) -> tuple:
        """Support patterns (indices of nonzero coordinates) of the maximal bullets."""
        return tuple(sorted({tuple(i for i, a in enumerate(b) if a) for b in self.maximal_bullets}))


def _length(b) -> int:
    return sum(b)


def _result(element, bullets: list, bounds=None, complete=True, length=_length) -> OmegaResult:
    bullets = sorted(bullets)
    best = max(length(b) for b in bullets)
    maximal = tuple(b for b in bullets if length(b) == best)
    return OmegaResult(element, best, BulletSet(element, tuple(bullets), bounds), maximal, complete)


def _check_element(M: NumericalMonoid, n: int) -> None:
    if n not in M:
        raise NotAMember(f"{n} is not in {M!r}")
    if n == 0:
        raise ZeroElement("omega is defined on non-units only; 0 is the identity")


def bullet_bounds(M: NumericalMonoid, n: int) -> Vector:
    """Minimal ``b_i > 0`` with ``b_i * n_i - n`` in ``M``, one per generator."""
    _check_element(M, n)
    bounds = []
    for g in M.generators:
        b = max(1, -(-n // g))
        while b * g - n not in M:
            b += 1
        bounds.append(b)
    return tuple(bounds)


def is_bullet(M: NumericalMonoid, n: int, a: Sequence[int]) -> bool:
    if n not in M:
        raise NotAMember(f"{n} is not in {M!r}")
    if len(a) != len(M.generators):
        raise DimensionMismatch(f"expected {len(M.generators)} coordinates, got {len(a)}")
    v = M.value(a) - n
    if v not in M:
        return False
    return all(v - g not in M for ai, g in zip(a, M.generators) if ai > 0)


def _box_size(bounds: Sequence[int]) -> int:
    return prod(b + 1 for b in bounds)


def bullets(M: NumericalMonoid, n: int, budget: int = DEFAULT_SEARCH_BUDGET) -> BulletSet:
    """Complete bullet set of ``n`` by a scan of the box ``prod [0, b_i]``.

    Coordinates are fixed in generator order. A partial vector whose running
    value already exceeds ``n + frobenius + n_i`` for some ``i`` in its support
    can never become a bullet (``v - n - n_i`` would be a member), so that
    branch is cut. The output equals the unpruned scan.
    """
    bounds = bullet_bounds(M, n)
    if _box_size(bounds) > budget:
        raise BudgetExceeded(
            f"bullet box for {n} has {_box_size(bounds)} points, budget is {budget}")
    gens = M.generators
    k = len(gens)
    base = n + M.frobenius
    found: list[Vector] = []
    coords = [0] * k

    def walk(i: int, value: int, limit: float) -> None:
        g, b = gens[i], bounds[i]
        if i == k - 1:
            for a in range(b + 1):
                v = value + a * g
                lim = min(limit, base + g) if a else limit
                if v > lim:
                    break
                coords[i] = a
                if is_bullet(M, n, coords):
                    found.append(tuple(coords))
            coords[i] = 0
            return
        for a in range(b + 1):
            v = value + a * g
            lim = min(limit, base + g) if a else limit
            if v > lim:
                break
            coords[i] = a
            walk(i + 1, v, lim)
        coords[i] = 0

    walk(0, 0, float("inf"))
    return BulletSet(n, tuple(sorted(found)), bounds)


def bullets_unpruned(M: NumericalMonoid, n: int, budget: int = DEFAULT_SEARCH_BUDGET) -> BulletSet:
    """Reference scan: every point of the box, no pruning."""
    bounds = bullet_bounds(M, n)
    if _box_size(bounds) > budget:
        raise BudgetExceeded(f"bullet box for {n} exceeds budget {budget}")
    found = [a for a in itertools.product(*(range(b + 1) for b in bounds)) if is_bullet(M, n, a)]
    return BulletSet(n, tuple(sorted(found)), bounds)


@lru_cache(maxsize=8192)
def _omega_cached(M: NumericalMonoid, n: int, budget: int) -> OmegaResult:
    bs = bullets(M, n, budget)
    return _result(n, list(bs.bullets), bs.bounds)


def omega(M: NumericalMonoid, n: int, budget: int = DEFAULT_SEARCH_BUDGET) -> OmegaResult:
    """omega(n) as the maximum bullet length, with all maximal bullets.

    >>> omega(NumericalMonoid([6, 9, 20]), 35).omega
    14
    """
    _check_element(M, n)
    return _omega_cached(M, n, budget)


def omega_oracle(M: NumericalMonoid, n: int, budget: int = DEFAULT_ORACLE_BUDGET) -> int:
    """omega(n) by scanning vectors in order of total length up to ``sum(b_i)``."""
    cap = sum(bullet_bounds(M, n))
    k = len(M.generators)
    if comb(cap + k, k) > budget:
        raise BudgetExceeded(f"oracle would visit {comb(cap + k, k)} vectors, budget is {budget}")
    best = 0
    for length in range(1, cap + 1):
        # stars and bars: bar positions split `length` into k parts
        for bars in itertools.combinations(range(length + k - 1), k - 1):
            edges = (-1,) + bars + (length + k - 1,)
            a = tuple(edges[j + 1] - edges[j] - 1 for j in range(k))
            if is_bullet(M, n, a):
                best = length
                break
    return best


# -- batch evaluation --------------------------------------------------------

_NEG = -(1 << 40)


def _max_length_table(gens: Sequence[int], top: int) -> np.ndarray:
    """``L[v]`` = longest factorization of ``v`` using ``gens``; negative if none."""
    table = np.full(top + 1, _NEG, dtype=np.int64)
    table[0] = 0
    for g in gens:
        for r in range(min(g, top + 1)):
            strand = table[r::g]
            steps = np.arange(strand.size, dtype=np.int64)
            table[r::g] = np.maximum.accumulate(strand - steps) + steps
    return table


def omega_range(M: NumericalMonoid, lo: int, hi: int) -> list[tuple[int, int]]:
    """``(n, omega(n))`` for every nonzero member ``n`` in ``[lo, hi]``."""
    if lo > hi:
        raise ValueError(f"empty range [{lo}, {hi}]")
    ns = np.array(M.members(max(lo, 1), hi), dtype=np.int64)
    if ns.size == 0:
        return []
    gens = M.generators
    reach = M.frobenius + gens[-1]
    top = hi + reach
    tables: dict[int, np.ndarray] = {}
    best = np.full(ns.size, _NEG, dtype=np.int64)
    for d in range(reach + 1):
        if d not in M:
            continue
        mask = sum(1 << i for i, g in enumerate(gens) if d - g not in M)
        if not mask:
            continue
        if mask not in tables:
            tables[mask] = _max_length_table([g for i, g in enumerate(gens) if mask >> i & 1], top)
        np.maximum(best, tables[mask][ns + d], out=best)
    assert (best > 0).all()
    return list(zip(ns.tolist(), best.tolist()))


def omega_value(M: NumericalMonoid, n: int) -> int:
    """omega(n) through the batch evaluator; cheap even when the bullet box is huge."""
    _check_element(M, n)
    return omega_range(M, n, n)[0][1]
