"""Command-line interface: ``omega-primality <subcommand> ...``.

Exit codes: 0 success, 1 reproduction mismatch, 2 bad input, 3 search budget
exceeded, 4 element not in the monoid, 5 series too short or unstable.
Data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import sys
from dataclasses import dataclass

from . import acm as acm_mod
from .asymptotics import SCHEMA_VERSION, fit_quasilinear, minimal_period, omega_series
from .blocks import FiniteAbelianGroup, block_omega
from .closed_forms import FORBIDDEN_PATTERNS, generator_ordering_scan, interval_generator_omegas
from .errors import BudgetExceeded, FitError, NotAMember, OmegaPrimalityError, BelowThreshold
from .leamer import leamer_new, leamer_omega, points_csv
from .numerical import NumericalMonoid
from .omega import DEFAULT_ORACLE_BUDGET, DEFAULT_SEARCH_BUDGET, omega, omega_oracle

BUDGET_ENV = "OMEGA_SEARCH_BUDGET"
FORMATS = ("table", "csv", "json")


@dataclass(frozen=True)
class RunConfig:
    search_budget: int = DEFAULT_SEARCH_BUDGET
    oracle_budget: int = DEFAULT_ORACLE_BUDGET
    output_format: str = "table"
    seed: int = 0

    def __post_init__(self):
        if self.search_budget < 1 or self.oracle_budget < 1:
            raise ValueError("budgets must be positive")
        if self.output_format not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}")


class UsageError(OmegaPrimalityError, ValueError):
    pass


# -- parsing helpers ---------------------------------------------------------

def parse_ints(text: str, sep: str = ",") -> list[int]:
    try:
        return [int(t) for t in text.split(sep) if t.strip()]
    except ValueError:
        raise UsageError(f"expected integers separated by {sep!r}, got {text!r}") from None


def parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition(":")
    if not sep:
        raise UsageError(f"range must look like LO:HI, got {text!r}")
    return parse_ints(lo)[0], parse_ints(hi)[0]


def parse_group_element(G: FiniteAbelianGroup, token: str):
    """``g`` / ``-g`` / ``k*g`` (cyclic only) or ``/``-separated coordinates."""
    token = token.strip()
    if "g" in token:
        if len(G.invariant_factors) != 1:
            raise UsageError("symbolic 'g' is only defined for cyclic groups")
        coef = token.replace("*", "").replace("g", "")
        k = {"": 1, "-": -1}.get(coef)
        if k is None:
            k = parse_ints(coef)[0]
        return (k % G.invariant_factors[0],)
    return G.element(tuple(parse_ints(token, "/")))


def parse_block(G: FiniteAbelianGroup, text: str):
    """``elem:mult,elem:mult,...`` into a zero-sum sequence."""
    ms = {}
    for part in text.split(","):
        elem, sep, mult = part.rpartition(":")
        if not sep:
            elem, mult = part, "1"
        e = parse_group_element(G, elem)
        ms[e] = ms.get(e, 0) + parse_ints(mult)[0]
    try:
        return G.block(ms)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# -- output ------------------------------------------------------------------

def emit(cfg: RunConfig, header: list[str], rows: list[list], meta: dict | None = None) -> None:
    out = sys.stdout
    if cfg.output_format == "json":
        payload = {"schema_version": SCHEMA_VERSION, **(meta or {}),
                   "rows": [dict(zip(header, r)) for r in rows]}
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    elif cfg.output_format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
    else:
        for key, val in (meta or {}).items():
            out.write(f"{key}: {val}\n")
        if rows:
            cells = [header] + [[str(c) for c in r] for r in rows]
            widths = [max(len(c[i]) for c in cells) for i in range(len(header))]
            for r in cells:
                out.write("  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() + "\n")


def _vec(v) -> str:
    return "(" + ",".join(map(str, v)) + ")"


# -- subcommands -------------------------------------------------------------

def cmd_omega(args, cfg):
    M = NumericalMonoid(parse_ints(args.gens))
    if args.range:
        lo, hi = parse_range(args.range)
        rows = []
        for n in M.members(max(lo, 1), hi):
            r = omega(M, n, cfg.search_budget)
            rows.append([n, r.omega, len(r.bullets), " ".join(map(_vec, r.maximal_bullets))])
        emit(cfg, ["n", "omega", "bullets", "maximal"], rows, {"generators": list(M.generators)})
        return 0
    r = omega(M, args.n, cfg.search_budget)
    rows = [[_vec(b), sum(b), int(b in r.maximal_bullets)] for b in r.bullets]
    emit(cfg, ["bullet", "length", "maximal"], rows,
         {"generators": list(M.generators), "n": args.n, "omega": r.omega,
          "bullet_count": len(r.bullets), "bounds": _vec(r.bullet_set.bounds)})
    return 0


def cmd_bullets(args, cfg):
    return cmd_omega(argparse.Namespace(gens=args.gens, n=args.n, range=None), cfg)


def cmd_quasi(args, cfg):
    M = NumericalMonoid(parse_ints(args.gens))
    series = omega_series(M, 1, args.horizon)
    model = fit_quasilinear(series, args.window)
    period = minimal_period(model)
    if args.plot_data:
        with open(args.plot_data, "w", newline="") as fh:
            fh.write(series.to_csv(model))
    meta = {"generators": list(M.generators), "n1": model.n1,
            "dissonance": model.dissonance, "certified_through": model.certified_through,
            "minimal_period": period, "period_equals_n1": period == model.n1}
    if cfg.output_format == "csv":
        sys.stdout.write(series.to_csv(model))
        return 0
    rows = [[r, c] for r, c in enumerate(model.intercepts)]
    emit(cfg, ["residue", "intercept"], rows, meta)
    return 0


def cmd_scan(args, cfg):
    census = generator_ordering_scan(args.bound, cfg.search_budget, args.workers)
    if cfg.output_format == "csv":
        sys.stdout.write(census.to_csv())
        return 0
    rows = [[p, c, int(p in FORBIDDEN_PATTERNS)] for p, c in census.counts.items()]
    emit(cfg, ["pattern", "count", "forbidden"], rows,
         {"bound": args.bound, "triples": len(census.rows),
          "forbidden_occurrences": len(census.forbidden_rows)})
    return 0


def cmd_interval(args, cfg):
    rows = []
    for g, w in interval_generator_omegas(args.n, args.case):
        gens = [2 * args.n - 1, 2 * args.n, 2 * args.n + 1] if args.case == "odd" \
            else [2 * args.n, 2 * args.n + 1, 2 * args.n + 2]
        engine = omega(NumericalMonoid(gens), g, cfg.search_budget).omega
        rows.append([g, w, engine, int(w == engine)])
    emit(cfg, ["generator", "formula", "engine", "agree"], rows, {"n": args.n, "case": args.case})
    return 0


def cmd_block(args, cfg):
    G = FiniteAbelianGroup(parse_ints(args.group))
    x = parse_block(G, args.element)
    r = block_omega(G, x)
    rows = [[" * ".join(f"[{u}]" for u in b), len(b), int(b in r.maximal_bullets)] for b in r.bullets]
    emit(cfg, ["bullet", "length", "maximal"], rows,
         {"group": list(G.invariant_factors), "block": json.loads(x.to_json()), "omega": r.omega})
    return 0


def cmd_acm(args, cfg):
    M = acm_mod.acm_new(args.a, args.b)
    r = acm_mod.acm_omega(M, args.x)
    rows = [["*".join(map(str, b)), len(b), int(b in r.maximal_bullets)] for b in r.bullets]
    emit(cfg, ["bullet", "length", "maximal"], rows,
         {"a": args.a, "b": args.b, "x": args.x, "omega": r.omega,
          "factorizations": ["*".join(map(str, f)) for f in acm_mod.acm_factorizations(M, args.x)]})
    return 0


def cmd_leamer(args, cfg):
    box = tuple(parse_ints(args.box))
    if len(box) != 2:
        raise UsageError("--box takes N_MAX,K_MAX")
    L = leamer_new(NumericalMonoid(parse_ints(args.gens)), args.s, box)
    dense = not args.allow_small_box
    if args.point:
        x = tuple(parse_ints(args.point))
        if x not in L:
            raise NotAMember(f"{x} is not in the Leamer monoid")
        r = leamer_omega(L, x, require_dense=dense)
        rows = [[" + ".join(map(_vec, b)), len(b), int(b in r.maximal_bullets)] for b in r.maximal_bullets]
        emit(cfg, ["bullet", "length", "maximal"], rows,
             {"point": _vec(x), "omega_lower_bound": r.omega, "bullet_count": len(r.bullets)})
        return 0
    text = points_csv(L, dense)
    if cfg.output_format == "csv":
        sys.stdout.write(text)
        return 0
    rows = list(csv.reader(io.StringIO(text)))
    emit(cfg, rows[0], rows[1:], {"gens": args.gens, "s": args.s, "box": list(box)})
    return 0


def golden_checks(cfg: RunConfig, samples: int = 50) -> list[tuple[str, object, object]]:
    """``(label, expected, computed)`` for the reference values reproduced by ``repro``."""
    from .blocks import FiniteAbelianGroup as Grp

    checks = []
    mc = NumericalMonoid([6, 9, 20])
    r = omega(mc, 6)
    checks.append(("<6,9,20> omega(6)", 3, r.omega))
    checks.append(("<6,9,20> bullets(6)", [(0, 0, 3), (0, 2, 0), (1, 0, 0)], list(r.bullets)))
    r = omega(mc, 35)
    checks.append(("<6,9,20> omega(35)", 14, r.omega))
    checks.append(("<6,9,20> bullets(35)", sorted([
        (14, 0, 0), (11, 1, 0), (8, 3, 0), (5, 5, 0), (2, 7, 0), (0, 9, 0),
        (4, 0, 1), (1, 1, 1), (0, 3, 1), (0, 0, 4)]), list(r.bullets)))
    r = omega(NumericalMonoid([3, 7]), 9)
    checks.append(("<3,7> omega(9)", 3, r.omega))
    checks.append(("<3,7> bullets(9)", [(0, 3), (3, 0)], list(r.bullets)))
    m3 = NumericalMonoid([11, 13, 15])
    for j in range(6):
        r = omega(m3, 58 + 11 * j)
        checks.append((f"<11,13,15> omega({58 + 11 * j})", 11 + j, r.omega))
        checks.append((f"<11,13,15> maximal({58 + 11 * j}) has ({5 + j},6,0)", True,
                       (5 + j, 6, 0) in r.maximal_bullets))
    H = acm_mod.hilbert_monoid()
    checks.append(("Hilbert omega(1225)", 4, acm_mod.acm_omega(H, 1225).omega))
    checks.append(("Hilbert factorizations(441)", [(9, 49), (21, 21)], acm_mod.acm_factorizations(H, 441)))
    G = Grp([3])
    for label, ms, want in [("0", {(0,): 1}, 1), ("g^3", {(1,): 3}, 3),
                            ("g(-g)", {(1,): 1, (2,): 1}, 2), ("g^3(-g)^3", {(1,): 3, (2,): 3}, 3)]:
        checks.append((f"B(Z3) omega({label})", want, block_omega(G, G.block(ms)).omega))
    rng = random.Random(cfg.seed)
    for gens in ([3, 7], [6, 9, 20], [11, 13, 15]):
        M = NumericalMonoid(gens)
        horizon = M.frobenius + 3 * M.generators[-1]
        members = M.members(1, horizon)
        for n in sorted(rng.sample(members, min(samples, len(members)))):
            checks.append((f"<{','.join(map(str, gens))}> oracle({n})",
                           omega(M, n, cfg.search_budget).omega, omega_oracle(M, n, cfg.oracle_budget)))
    return checks


def cmd_repro(args, cfg):
    checks = golden_checks(cfg, args.samples)
    failed = 0
    rows = []
    for label, want, got in checks:
        ok = want == got
        failed += not ok
        rows.append([label, "PASS" if ok else "FAIL", str(want) if not ok else ""])
    emit(cfg, ["check", "status", "expected"], rows, {"checks": len(checks), "failed": failed})
    return 1 if failed else 0


# -- entry point -------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="omega-primality", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=FORMATS, default="table")
    parser.add_argument("--budget", type=int, default=None,
                        help=f"bullet search budget (default ${BUDGET_ENV} or {DEFAULT_SEARCH_BUDGET})")
    parser.add_argument("--oracle-budget", type=int, default=DEFAULT_ORACLE_BUDGET)
    parser.add_argument("--seed", type=int, default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("omega", help="omega-value and bullets in a numerical monoid")
    p.add_argument("--gens", required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--n", type=int)
    g.add_argument("--range", help="LO:HI, one row per member")
    p.set_defaults(func=cmd_omega)

    p = sub.add_parser("bullets", help="full bullet set of one element")
    p.add_argument("--gens", required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_bullets)

    p = sub.add_parser("quasi", help="fit the eventual quasilinear form")
    p.add_argument("--gens", required=True)
    p.add_argument("--horizon", type=int, required=True)
    p.add_argument("--window", type=int, default=5, help="stability window in periods")
    p.add_argument("--plot-data", help="write (n, omega, model, residue) CSV here")
    p.set_defaults(func=cmd_quasi)

    p = sub.add_parser("scan-orderings", help="census of generator omega orderings")
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("interval", help="generator omega-values of 3-element intervals")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--case", choices=("odd", "even"), required=True)
    p.set_defaults(func=cmd_interval)

    p = sub.add_parser("block", help="omega in a block monoid")
    p.add_argument("--group", required=True, help="invariant factors, e.g. 3 or 2,4")
    p.add_argument("--element", required=True, help='e.g. "g:3,-g:3" or "1/0:2,1/2:2"')
    p.set_defaults(func=cmd_block)

    p = sub.add_parser("acm", help="omega in an arithmetical congruence monoid")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--x", type=int, required=True)
    p.set_defaults(func=cmd_acm)

    p = sub.add_parser("leamer", help="Leamer monoid point cloud or omega of a point")
    p.add_argument("--gens", required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--box", default="100,12")
    p.add_argument("--point", help="N,K: compute omega over in-box irreducibles")
    p.add_argument("--allow-small-box", action="store_true",
                   help="classify irreducibles even if N_MAX <= 2*frobenius")
    p.set_defaults(func=cmd_leamer)

    p = sub.add_parser("repro", help="recompute the reference values and diff them")
    p.add_argument("--samples", type=int, default=50, help="oracle cross-checks per monoid")
    p.set_defaults(func=cmd_repro)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    budget = args.budget
    if budget is None:
        env = os.environ.get(BUDGET_ENV)
        budget = int(env) if env else DEFAULT_SEARCH_BUDGET
    try:
        cfg = RunConfig(budget, args.oracle_budget, args.format, args.seed)
        return args.func(args, cfg)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except NotAMember as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (FitError, BelowThreshold) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 5
    except (OmegaPrimalityError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
