"""omega tables over ranges and their eventual quasilinear form.

For large ``n`` the omega-function of a numerical monoid with least generator
``n1`` satisfies ``omega(n) = n // n1 + c[n % n1]`` for an integer intercept
table ``c``. :func:`fit_quasilinear` detects that regime from the top of a
computed series rather than assuming a bound for where it starts.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotAMember, SeriesTooShort, WindowUnstable
from .numerical import NumericalMonoid
from .omega import omega_range, omega_value

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class OmegaSeries:
    monoid: NumericalMonoid
    lo: int
    hi: int
    entries: tuple[tuple[int, int], ...]

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    def to_csv(self, model: QuasilinearModel | None = None) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        n1 = self.monoid.generators[0]
        w.writerow(["n", "omega", "model", "residue"])
        for n, v in self.entries:
            w.writerow([n, v, "" if model is None else model(n), n % n1])
        return buf.getvalue()


def omega_series(M: NumericalMonoid, lo: int, hi: int) -> OmegaSeries:
    """omega of every nonzero member of ``M`` in ``[lo, hi]``."""
    if lo > hi:
        raise ValueError(f"empty range: lo={lo} > hi={hi}")
    return OmegaSeries(M, lo, hi, tuple(omega_range(M, lo, hi)))


@dataclass(frozen=True)
class QuasilinearModel:
    """``model(n) = n // n1 + intercepts[n % n1]``.

    ``dissonance`` is the largest member of the fitted series where omega
    disagrees with the model, or None if the model fits the whole series.
    Nothing is claimed past ``certified_through``.
    """

    n1: int
    intercepts: tuple[int, ...]
    dissonance: int | None
    certified_through: int
    stability_window: int = 5

    def __call__(self, n: int) -> int:
        return n // self.n1 + self.intercepts[n % self.n1]

    def offset(self, n: int) -> Fraction:
        """Periodic part ``model(n) - n/n1``."""
        return self(n) - Fraction(n, self.n1)

    @property
    def max_intercept(self) -> int:
        return max(self.intercepts)

    def to_json(self) -> str:
        return json.dumps({
            "schema_version": SCHEMA_VERSION,
            "n1": self.n1,
            "intercepts": list(self.intercepts),
            "dissonance": self.dissonance,
            "certified_through": self.certified_through,
            "stability_window": self.stability_window,
            "minimal_period": minimal_period(self),
        }, sort_keys=True)


def fit_quasilinear(series: OmegaSeries, stability_window: int = 5) -> QuasilinearModel:
    if stability_window < 1:
        raise ValueError("stability_window must be positive")
    n1 = series.monoid.generators[0]
    entries = series.entries
    if len(entries) < (stability_window + 2) * n1:
        raise SeriesTooShort(
            f"need at least {(stability_window + 2) * n1} members, series has {len(entries)}")

    cut = series.hi - stability_window * n1
    intercepts: dict[int, int] = {}
    for n, w in entries:
        if n <= cut:
            continue
        c = w - n // n1
        r = n % n1
        if intercepts.setdefault(r, c) != c:
            raise WindowUnstable(
                f"omega({n}) breaks the slope 1/{n1} inside the top window; extend the series")
    if len(intercepts) < n1:
        missing = sorted(set(range(n1)) - set(intercepts))
        raise WindowUnstable(f"residues {missing} have no members in the top window")

    table = tuple(intercepts[r] for r in range(n1))
    dissonance = None
    for n, w in reversed(entries):
        if n // n1 + table[n % n1] != w:
            dissonance = n
            break
    return QuasilinearModel(n1, table, dissonance, series.hi, stability_window)


def minimal_period(model: QuasilinearModel) -> int:
    """Least ``p`` dividing ``n1`` such that ``model(n) - n/n1`` is ``p``-periodic."""
    n1 = model.n1
    offsets = [model.offset(n) for n in range(2 * n1)]
    for p in range(1, n1 + 1):
        if n1 % p == 0 and all(offsets[r] == offsets[r + p] for r in range(n1)):
            return p
    return n1


def period_is_exact(model: QuasilinearModel) -> bool:
    return minimal_period(model) == model.n1


def asymptotic_ratio(M: NumericalMonoid, N: int) -> Fraction:
    """``omega(N) / N`` as an exact fraction, for ``N`` past the Frobenius number."""
    if N not in M:
        raise NotAMember(f"{N} is not in {M!r}")
    if N <= M.frobenius:
        raise ValueError(f"N must exceed the Frobenius number {M.frobenius}")
    return Fraction(omega_value(M, N), N)


def ratio_error_bound(model: QuasilinearModel, N: int) -> Fraction:
    return Fraction(model.max_intercept + 1, N)
