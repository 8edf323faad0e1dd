"""Leamer monoids: arithmetic runs of step ``s`` inside a numerical monoid.

``(n, k)`` stands for the run ``n, n + s, ..., n + k*s``. Non-identity members
have ``k >= 1``; ``(n, 0)`` is excluded except for the identity ``(0, 0)``.
Every enumeration is confined to an explicit box ``0 <= n <= N_max``,
``0 <= k <= K_max``.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np

from .errors import BoxTooSmall, BudgetExceeded, CapNotFound, StepInGamma
from .numerical import NumericalMonoid
from .omega import BulletSet, OmegaResult

Point = tuple[int, int]

DEFAULT_NODE_BUDGET = 10**6
DEFAULT_CAP_LIMIT = 10**4


@dataclass(frozen=True)
class LeamerMonoid:
    gamma: NumericalMonoid
    s: int
    box: tuple[int, int] = (100, 12)

    def __post_init__(self):
        if self.s < 1:
            raise ValueError("the step s must be positive")
        if self.s in self.gamma:
            raise StepInGamma(f"step {self.s} lies in {self.gamma!r}")
        if min(self.box) < 0:
            raise ValueError("box bounds must be non-negative")

    def __contains__(self, point: Point) -> bool:
        n, k = point
        if (n, k) == (0, 0):
            return True
        if k < 1 or n < 0:
            return False
        return all(n + j * self.s in self.gamma for j in range(k + 1))

    def in_box(self, point: Point) -> bool:
        return 0 <= point[0] <= self.box[0] and 0 <= point[1] <= self.box[1]

    def grid(self) -> np.ndarray:
        """Boolean membership grid indexed ``[n, k]`` over the box."""
        N, K = self.box
        member = self.gamma.contains_array(np.arange(N + K * self.s + 1))
        grid = np.zeros((N + 1, K + 1), dtype=bool)
        run = np.ones(N + 1, dtype=bool)
        for k in range(K + 1):
            run &= member[k * self.s: k * self.s + N + 1]
            grid[:, k] = run
        grid[:, 0] = False
        grid[0, 0] = True
        return grid


def leamer_new(gamma: NumericalMonoid, s: int, box: tuple[int, int] = (100, 12)) -> LeamerMonoid:
    return LeamerMonoid(gamma, s, tuple(box))


def leamer_contains(L: LeamerMonoid, point: Point) -> bool:
    return point in L


def leamer_points(L: LeamerMonoid) -> list[Point]:
    n, k = np.nonzero(L.grid())
    return sorted(zip(n.tolist(), k.tolist()))


def _irreducible_grid(L: LeamerMonoid) -> np.ndarray:
    grid = L.grid()
    nonid = grid.copy()
    nonid[0, 0] = False
    reducible = np.zeros_like(grid)
    N, K = grid.shape
    for a, c in zip(*np.nonzero(nonid)):
        # (a, c) + every non-identity member that still fits in the box
        reducible[a:, c:] |= nonid[: N - a, : K - c]
    return nonid & ~reducible


def leamer_irreducibles(L: LeamerMonoid, require_dense: bool = True) -> list[Point]:
    """Irreducible members inside the box.

    Summands of a point are componentwise smaller, so the classification is
    exact for every point of the box. By default the box must reach past
    ``2 * frobenius`` so that the dense region, where the tall irreducibles
    stop, is visible; pass ``require_dense=False`` to classify a smaller box.
    """
    if require_dense and L.box[0] <= 2 * L.gamma.frobenius:
        raise BoxTooSmall(f"N_max must exceed 2*frobenius = {2 * L.gamma.frobenius}")
    n, k = np.nonzero(_irreducible_grid(L))
    return sorted(zip(n.tolist(), k.tolist()))


def irreducible_column_bound(L: LeamerMonoid, require_dense: bool = True) -> int | None:
    """Largest first coordinate of an in-box irreducible with second coordinate above 1."""
    tall = [n for n, k in leamer_irreducibles(L, require_dense) if k > 1]
    return max(tall) if tall else None


def points_csv(L: LeamerMonoid, require_dense: bool = True) -> str:
    irreducible = set(leamer_irreducibles(L, require_dense))
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "k", "irreducible"])
    for p in leamer_points(L):
        w.writerow([p[0], p[1], int(p in irreducible)])
    return buf.getvalue()


def _sub(p: Point, q: Point) -> Point:
    return (p[0] - q[0], p[1] - q[1])


def leamer_divides(L: LeamerMonoid, x: Point, y: Point) -> bool:
    return _sub(y, x) in L


def multiple_cap(L: LeamerMonoid, x: Point, u: Point, limit: int = DEFAULT_CAP_LIMIT) -> int:
    """Least ``b >= 1`` with ``x`` dividing ``b*u``; any bullet uses ``u`` at most that often."""
    for b in range(1, limit + 1):
        if (b * u[0] - x[0], b * u[1] - x[1]) in L:
            return b
    raise CapNotFound(f"no multiple of {u} up to {limit} is divisible by {x}")


def leamer_omega(L: LeamerMonoid, x: Point, budget: int = DEFAULT_NODE_BUDGET,
                 require_dense: bool = True) -> OmegaResult:
    """Longest bullet for ``x`` built from the irreducibles inside the box.

    Bullets using out-of-box irreducibles are not searched, so the result has
    ``complete=False`` and ``omega`` is a lower bound on the true value.
    """
    if x not in L or x == (0, 0):
        raise ValueError(f"{x} is not a non-identity member of the monoid")
    frob = L.gamma.frobenius
    atoms = leamer_irreducibles(L, require_dense)
    caps = [multiple_cap(L, x, u) for u in atoms]
    found: list[tuple[Point, ...]] = []
    counts = [0] * len(atoms)
    chosen: list[int] = []
    nodes = 0

    def is_bullet(total: Point) -> bool:
        for j in set(chosen):
            if _sub(_sub(total, atoms[j]), x) in L:
                return False
        return True

    def doomed(total: Point) -> bool:
        # once total - x - u has first coordinate past the Frobenius number and
        # second coordinate >= 1, it stays a member however the sum grows
        for j in set(chosen):
            rn, rk = _sub(_sub(total, atoms[j]), x)
            if rn > frob and rk >= 1:
                return True
        return False

    def walk(start: int, total: Point) -> None:
        nonlocal nodes
        for j in range(start, len(atoms)):
            if counts[j] == caps[j]:
                continue
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(f"Leamer bullet search for {x} exceeded {budget} nodes")
            u = atoms[j]
            t = (total[0] + u[0], total[1] + u[1])
            counts[j] += 1
            chosen.append(j)
            if _sub(t, x) in L:
                if is_bullet(t):
                    found.append(tuple(atoms[i] for i in chosen))
            elif not doomed(t):
                walk(j, t)
            chosen.pop()
            counts[j] -= 1

    walk(0, (0, 0))
    found.sort()
    best = max(len(b) for b in found)
    maximal = tuple(b for b in found if len(b) == best)
    return OmegaResult(x, best, BulletSet(x, tuple(found)), maximal, complete=False)
