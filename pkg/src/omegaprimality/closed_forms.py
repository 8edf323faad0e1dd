"""Closed-form omega evaluators and generator-ordering scans."""

from __future__ import annotations

import csv
import io
import itertools
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import gcd
from typing import Iterable

from .errors import BelowThreshold, GcdNotOne, NotAMember, NotCoprime, ZeroFactorization
from .numerical import NumericalMonoid
from .omega import DEFAULT_SEARCH_BUDGET, omega, omega_range


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _check_pair(n1: int, n2: int) -> None:
    if n1 < 2 or n2 < 2:
        raise ValueError("both generators must exceed 1")
    if gcd(n1, n2) != 1:
        raise NotCoprime(f"gcd({n1}, {n2}) = {gcd(n1, n2)}")


def omega_two_gen_from_factorization(n1: int, n2: int, a1: int, a2: int) -> int:
    """omega of ``a1*n1 + a2*n2`` in ``<n1, n2>`` from one of its factorizations."""
    _check_pair(n1, n2)
    if a1 < 0 or a2 < 0:
        raise ValueError("factorization coordinates must be non-negative")
    if a1 == 0 and a2 == 0:
        raise ZeroFactorization("the zero factorization describes the identity")
    return max(_ceil_div(a2, n1) * n2 + a1, _ceil_div(a1, n2) * n1 + a2)


@dataclass(frozen=True)
class ResidueTable:
    """``a_of_r[r]`` is the least ``a >= 0`` with ``a*n1 = r (mod n2)``.

    ``validity_threshold`` is the first member after the last point where
    ``q + a_of_r[r]`` disagrees with the engine, checked up to ``horizon``.
    """

    n1: int
    n2: int
    a_of_r: tuple[int, ...]
    validity_threshold: int
    horizon: int

    @property
    def monoid(self) -> NumericalMonoid:
        return NumericalMonoid([self.n1, self.n2])

    def formula(self, n: int) -> int:
        q, r = divmod(n, self.n1)
        return q + self.a_of_r[r]


def residue_coefficients(n1: int, n2: int) -> tuple[int, ...]:
    _check_pair(n1, n2)
    if not n1 < n2:
        raise ValueError("expected n1 < n2")
    table = [None] * n1
    for a in range(n2):
        r = a * n1 % n2
        if r < n1 and table[r] is None:
            table[r] = a
    return tuple(table)


def build_residue_table(n1: int, n2: int, horizon: int | None = None) -> ResidueTable:
    coeffs = residue_coefficients(n1, n2)
    if horizon is None:
        horizon = 2 * n1 * n2 + n2
    M = NumericalMonoid([n1, n2])
    threshold = 1
    for n, w in omega_range(M, 1, horizon):
        q, r = divmod(n, n1)
        if q + coeffs[r] != w:
            threshold = n + 1
    while threshold not in M:
        threshold += 1
    return ResidueTable(n1, n2, coeffs, threshold, horizon)


def omega_two_gen_residue(table: ResidueTable, n: int) -> int:
    if n not in table.monoid:
        raise NotAMember(f"{n} is not in <{table.n1}, {table.n2}>")
    if n < table.validity_threshold:
        raise BelowThreshold(
            f"residue formula is certified only from {table.validity_threshold}, got {n}")
    return table.formula(n)


def interval_generator_omegas(n: int, parity_case: str) -> list[tuple[int, int]]:
    """Generator omega-values of ``<2n-1, 2n, 2n+1>`` ("odd") or ``<2n, 2n+1, 2n+2>`` ("even")."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if parity_case == "odd":
        return [(2 * n - 1, n), (2 * n, n + 1), (2 * n + 1, n + 1)]
    if parity_case == "even":
        return [(2 * n, n), (2 * n + 1, n + 2), (2 * n + 2, n + 1)]
    raise ValueError(f"parity_case must be 'odd' or 'even', got {parity_case!r}")


# -- generator ordering scan -------------------------------------------------

def ordering_pattern(values: Iterable[int]) -> str:
    """Weak order of ``(w1, w2, ...)`` written in ascending order, ties by index.

    >>> ordering_pattern((9, 8, 8))
    'w2=w3<w1'
    """
    values = list(values)
    levels = sorted(set(values))
    groups = ["=".join(f"w{i + 1}" for i, v in enumerate(values) if v == lev) for lev in levels]
    return "<".join(groups)


def all_patterns(k: int = 3) -> list[str]:
    """Every weak order on ``k`` labels (13 for k = 3)."""
    pats = {ordering_pattern(v) for v in itertools.product(range(k), repeat=k)}
    return sorted(pats)


FORBIDDEN_PATTERNS = (
    ordering_pattern((3, 2, 1)),  # w1 > w2 > w3
    ordering_pattern((2, 2, 1)),  # w1 = w2 > w3
    ordering_pattern((2, 3, 1)),  # w3 < w1 < w2
)


@dataclass(frozen=True)
class OrderingRow:
    n1: int
    n2: int
    n3: int
    w1: int
    w2: int
    w3: int
    pattern: str

    @property
    def forbidden(self) -> bool:
        return self.pattern in FORBIDDEN_PATTERNS


@dataclass(frozen=True)
class OrderingCensus:
    bound: int
    rows: tuple[OrderingRow, ...]

    @property
    def counts(self) -> dict[str, int]:
        c = Counter(r.pattern for r in self.rows)
        return {p: c.get(p, 0) for p in all_patterns(3)}

    @property
    def forbidden_rows(self) -> tuple[OrderingRow, ...]:
        return tuple(r for r in self.rows if r.forbidden)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n1", "n2", "n3", "w1", "w2", "w3", "pattern"])
        for r in self.rows:
            w.writerow([r.n1, r.n2, r.n3, r.w1, r.w2, r.w3, r.pattern])
        return buf.getvalue()


def is_minimal_triple(n1: int, n2: int, n3: int) -> bool:
    try:
        return NumericalMonoid([n1, n2, n3]).generators == (n1, n2, n3)
    except GcdNotOne:
        return False


def classify_triple(n1: int, n2: int, n3: int, budget: int = DEFAULT_SEARCH_BUDGET) -> OrderingRow:
    M = NumericalMonoid([n1, n2, n3])
    if M.generators != (n1, n2, n3):
        raise ValueError(f"({n1}, {n2}, {n3}) is not a minimal generating set")
    ws = [omega(M, g, budget).omega for g in (n1, n2, n3)]
    return OrderingRow(n1, n2, n3, *ws, ordering_pattern(ws))


def _scan_chunk(args) -> list[OrderingRow]:
    n1, bound, budget = args
    rows = []
    for n2 in range(n1 + 1, bound + 1):
        for n3 in range(n2 + 1, bound + 1):
            if is_minimal_triple(n1, n2, n3):
                rows.append(classify_triple(n1, n2, n3, budget))
    return rows


def generator_ordering_scan(bound: int, budget: int = DEFAULT_SEARCH_BUDGET,
                            workers: int | None = None) -> OrderingCensus:
    """Classify every minimal triple ``n1 < n2 < n3 <= bound``; output ordered by triple."""
    if bound < 3:
        raise ValueError("bound must be at least 3")
    jobs = [(n1, bound, budget) for n1 in range(2, bound - 1)]
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_scan_chunk, jobs))
    else:
        chunks = [_scan_chunk(j) for j in jobs]
    return OrderingCensus(bound, tuple(r for c in chunks for r in c))
