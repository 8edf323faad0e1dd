"""Arithmetical congruence monoids ``M_{a,b} = {1} u {n >= 1 : n = a mod b}``.

omega is supported for ``a = 1`` only. There, every member is a unit modulo
``b``, so ``x`` divides ``y`` in the monoid exactly when it does in the
integers, and a bullet for ``x`` only sees how many copies of each prime of
``x`` its irreducibles carry (capped at the exponent in ``x``). The bullet
search therefore runs over exponent patterns on the primes of ``x``.

A nonzero pattern with prime part ``m`` is carried by an irreducible iff no
divisor ``d`` of ``m`` with ``1 < d < m`` lies in the monoid. The witness
irreducible is ``m`` itself when ``m = 1 mod b``, and otherwise ``m * q`` for
the least prime ``q = m^-1 mod b`` not dividing ``x``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd, isqrt, prod
from typing import Sequence

from .errors import FactorizationFailed, NotAMember, NotIdempotent, NotRegularUnit
from .omega import BulletSet, OmegaResult

DEFAULT_FACTOR_LIMIT = 10**12


def prime_factorization(n: int, limit: int = DEFAULT_FACTOR_LIMIT) -> dict[int, int]:
    """Trial-division factorization; refuses ``n`` above ``limit``."""
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    if n > limit:
        raise FactorizationFailed(f"{n} exceeds the trial-division limit {limit}")
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, isqrt(n) + 1))


def divisors(n: int, limit: int = DEFAULT_FACTOR_LIMIT) -> list[int]:
    pf = prime_factorization(n, limit)
    divs = [1]
    for p, e in pf.items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


@dataclass(frozen=True)
class ArithmeticCongruenceMonoid:
    a: int
    b: int

    def __post_init__(self):
        if not 1 <= self.a <= self.b:
            raise ValueError(f"need 1 <= a <= b, got a={self.a}, b={self.b}")
        if (self.a * self.a - self.a) % self.b:
            raise NotIdempotent(f"{self.a}^2 is not {self.a} mod {self.b}")

    @property
    def regular_unit(self) -> bool:
        return self.a == 1

    @property
    def regular(self) -> bool:
        return gcd(self.a, self.b) == 1

    def __contains__(self, n: int) -> bool:
        if n < 1:
            raise ValueError(f"members are positive integers, got {n}")
        return n == 1 or n % self.b == self.a % self.b

    def __repr__(self):
        return f"M({self.a},{self.b})"


def acm_new(a: int, b: int) -> ArithmeticCongruenceMonoid:
    return ArithmeticCongruenceMonoid(a, b)


def hilbert_monoid() -> ArithmeticCongruenceMonoid:
    return ArithmeticCongruenceMonoid(1, 4)


def acm_contains(M: ArithmeticCongruenceMonoid, n: int) -> bool:
    return n in M


def _require_nonunit_member(M, n):
    if n not in M:
        raise NotAMember(f"{n} is not in {M!r}")
    if n == 1:
        raise ValueError("1 is the unit of the monoid")


def acm_is_irreducible(M: ArithmeticCongruenceMonoid, n: int,
                       limit: int = DEFAULT_FACTOR_LIMIT) -> bool:
    _require_nonunit_member(M, n)
    for d in divisors(n, limit):
        if 1 < d < n and d in M and n // d in M:
            return False
    return True


def acm_factorizations(M: ArithmeticCongruenceMonoid, n: int,
                       limit: int = DEFAULT_FACTOR_LIMIT) -> list[tuple[int, ...]]:
    """Every factorization of ``n`` into irreducibles, as sorted tuples."""
    _require_nonunit_member(M, n)
    divs = [d for d in divisors(n, limit) if d > 1 and d in M]
    atoms = [d for d in divs if acm_is_irreducible(M, d, limit)]
    out: list[tuple[int, ...]] = []

    def walk(rem: int, start: int, acc: list[int]) -> None:
        if rem == 1:
            out.append(tuple(acc))
            return
        for i in range(start, len(atoms)):
            u = atoms[i]
            if u > rem:
                break
            if rem % u == 0 and rem // u in M:
                acc.append(u)
                walk(rem // u, i, acc)
                acc.pop()

    walk(n, 0, [])
    return sorted(out)


def _auxiliary_prime(residue: int, b: int, avoid: Sequence[int], skip: int = 0) -> int:
    """The ``skip``-th least prime congruent to ``residue`` mod ``b`` outside ``avoid``."""
    q = residue if residue > 1 else residue + b
    while True:
        if is_prime(q) and q not in avoid:
            if skip == 0:
                return q
            skip -= 1
        q += b


def _pattern_irreducible(M: ArithmeticCongruenceMonoid, primes: Sequence[int],
                         pattern: Sequence[int], skip: int = 0) -> int | None:
    m = prod(p**e for p, e in zip(primes, pattern))
    sub = itertools.product(*(range(e + 1) for e in pattern))
    for exps in sub:
        d = prod(p**e for p, e in zip(primes, exps))
        if 1 < d < m and d % M.b == 1 % M.b:
            return None
    if m % M.b == 1 % M.b:
        return m
    return m * _auxiliary_prime(pow(m, -1, M.b), M.b, primes, skip)


def acm_omega(M: ArithmeticCongruenceMonoid, x: int, limit: int = DEFAULT_FACTOR_LIMIT,
              cap: int | None = None, reverse: bool = False, cofactor_skip: int = 0) -> OmegaResult:
    """omega(x) in ``M_{1,b}``; bullets are reported as tuples of irreducibles.

    ``cap`` bounds the number of irreducibles per bullet (default: the number
    of prime factors of ``x`` with multiplicity, which is sound because
    divisibility matches integer divisibility). ``reverse`` and
    ``cofactor_skip`` only change enumeration order and witness choice.
    """
    if not M.regular_unit:
        raise NotRegularUnit(f"omega is implemented for a = 1 only, got {M!r}")
    _require_nonunit_member(M, x)
    pf = prime_factorization(x, limit)
    primes = sorted(pf)
    need = tuple(pf[p] for p in primes)
    if cap is None:
        cap = sum(need)

    patterns = []
    for pat in itertools.product(*(range(e + 1) for e in need)):
        if any(pat):
            u = _pattern_irreducible(M, primes, pat, cofactor_skip)
            if u is not None:
                patterns.append((pat, u))
    if reverse:
        patterns.reverse()

    found: list[tuple[int, ...]] = []
    chosen: list[int] = []

    def is_bullet(picks):
        total = [sum(patterns[j][0][i] for j in picks) for i in range(len(need))]
        if any(t < e for t, e in zip(total, need)):
            return False
        return all(any(t - c < e for t, c, e in zip(total, patterns[j][0], need)) for j in set(picks))

    def walk(start: int, deficit: list[int]) -> None:
        if not any(deficit):
            if is_bullet(chosen):
                found.append(tuple(sorted(patterns[j][1] for j in chosen)))
            return
        if len(chosen) >= cap:
            return
        for j in range(start, len(patterns)):
            pat = patterns[j][0]
            # an irreducible that covers nothing still missing is removable later
            if not any(d and c for d, c in zip(deficit, pat)):
                continue
            chosen.append(j)
            walk(j, [max(0, d - c) for d, c in zip(deficit, pat)])
            chosen.pop()

    walk(0, list(need))
    found.sort()
    best = max(len(b) for b in found)
    maximal = tuple(b for b in found if len(b) == best)
    return OmegaResult(x, best, BulletSet(x, tuple(found)), maximal)


def is_acm_bullet(M: ArithmeticCongruenceMonoid, x: int, factors: Sequence[int]) -> bool:
    """Direct integer check of the bullet conditions for ``M_{1,b}``."""
    total = prod(factors)
    if total % x or total // x not in M:
        return False
    for u in set(factors):
        rest = total // u
        if rest % x == 0 and rest // x in M:
            return False
    return True
