"""Command-line front end: weight tables, verification runs, witness reports.

Exit codes: 0 all checks pass, 1 verification failure, 2 budget or
configuration error.  All JSON output is deterministic (sorted keys);
only elapsed_ms fields vary between runs.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass

from .codes import PRM, RM, CodeParams, build
from .errors import BudgetExceeded, DomainError
from .formulas import (
    decompose_projective,
    w1_prm,
    w1_rm,
    w2_prm_binary,
    w2_rm_binary,
    w2_rm_candidates,
)
from .geometry import (
    check_subspace_bounds,
    find_avoiding_subspace,
    find_avoiding_subspace_at_least,
    projective_support,
    zero_set_is_hyperplane_union,
)
from .gfp import GF
from .poly import parse_poly
from .weights import DEFAULT_BUDGET, codeword_support, weight_report

MIN_BUDGET = 1 << 10

# geometry checks walk every nonzero codeword up to this many messages,
# and fall back to the witness codewords beyond it
EXHAUSTIVE_GEOMETRY_LIMIT = 1 << 15

TABLE_COLUMNS = [
    "family",
    "q",
    "n",
    "d",
    "length",
    "dimension",
    "w1_formula",
    "w2_formula",
    "w1_brute",
    "w2_brute",
    "match",
    "note",
]


@dataclass
class RunConfig:
    family: str
    q: int
    n_values: list[int]
    d_spec: str
    budget: int
    threads: int
    fmt: str
    out: str | None

    def __post_init__(self):
        if not self.n_values:
            raise DomainError("empty n range")
        if self.budget < MIN_BUDGET:
            raise DomainError(f"budget {self.budget} below minimum {MIN_BUDGET}")

    def d_values(self, n: int) -> list[int]:
        return _parse_range(self.d_spec, n)


def _parse_range(spec: str, n: int | None = None) -> list[int]:
    """``3`` -> [3]; ``2..4`` -> [2,3,4]; ``2..n`` -> [2..n] per row."""

    def bound(tok: str) -> int:
        if tok == "n":
            if n is None:
                raise DomainError("'n' bound is only valid for --d")
            return n
        return int(tok)

    try:
        if ".." in spec:
            lo_s, hi_s = spec.split("..", 1)
            lo, hi = bound(lo_s), bound(hi_s)
        else:
            lo = hi = bound(spec)
    except ValueError:
        raise DomainError(f"cannot parse range {spec!r}") from None
    if hi < lo:
        return []
    return list(range(lo, hi + 1))


def _default_budget() -> int:
    env = os.environ.get("PRMW_BUDGET")
    if not env:
        return DEFAULT_BUDGET
    try:
        return int(env)
    except ValueError:
        raise DomainError(f"PRMW_BUDGET={env!r} is not an integer") from None


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- table ---------------------------------------------------------------------


def _closed_forms(family: str, q: int, n: int, d: int) -> tuple[str, str, list | None]:
    """(w1_formula, w2_formula_or_candidates, w2_membership_set).

    The membership set is what a brute-force W2 is checked against when
    only a candidate set is known; None means check equality against the
    rendered value, empty string means no W2 assertion at all.
    """
    if family == RM:
        w1 = str(w1_rm(n, d, q)) if d >= 1 else ""
        if q == 2:
            w2 = str(w2_rm_binary(n, d)) if 1 <= d <= n - 1 else ""
            return w1, w2, None
        try:
            cands = w2_rm_candidates(n, d, q)
            return w1, "in {%s}" % ",".join(map(str, cands.options)), list(cands.options)
        except DomainError:
            return w1, "", []
    # PRM: W1 equals the affine minimum at one degree less, W2 from the
    # binary closed form;
    # for q > 2 only the affine upper-bound candidate set is displayed
    # and W2 is reported empirically (no assertion)
    w1 = str(w1_prm(n, d, q)) if d >= 2 else ""
    if q == 2:
        w2 = str(w2_prm_binary(n, d)) if 2 <= d <= n else ""
        return w1, w2, None
    try:
        cands = w2_rm_candidates(n, d - 1, q) if d >= 2 else None
    except DomainError:
        cands = None
    w2 = "<= max{%s}" % ",".join(map(str, cands.options)) if cands else ""
    return w1, w2, []


def _grid(cfg: RunConfig) -> list[tuple[int, int]]:
    grid = [(n, d) for n in cfg.n_values for d in cfg.d_values(n)]
    if not grid:
        raise DomainError("the (n, d) grid is empty")
    return grid


def _table_rows(cfg: RunConfig) -> list[dict]:
    rows = []
    for n, d in _grid(cfg):
        row = {c: "" for c in TABLE_COLUMNS}
        row.update({"family": cfg.family, "q": cfg.q, "n": n, "d": d})
        try:
            code = build(CodeParams(cfg.family, cfg.q, n, d))
        except (DomainError, BudgetExceeded) as exc:
            row["note"] = str(exc)
            rows.append(row)
            continue
        row["length"], row["dimension"] = code.length, code.dimension
        w1f, w2f, w2_set = _closed_forms(cfg.family, cfg.q, n, d)
        row["w1_formula"], row["w2_formula"] = w1f, w2f
        try:
            rep = weight_report(code, budget=cfg.budget, threads=cfg.threads)
        except BudgetExceeded as exc:
            row["note"] = str(exc)
            rows.append(row)
            continue
        row["w1_brute"] = rep.min_weight
        row["w2_brute"] = "" if rep.next_weight is None else rep.next_weight
        checks = []
        if w1f:
            checks.append(str(rep.min_weight) == w1f)
        if w2_set is None and w2f:
            checks.append(str(rep.next_weight) == w2f)
        elif w2_set:
            checks.append(rep.next_weight in w2_set)
        row["match"] = "true" if all(checks) else "false" if checks else ""
        rows.append(row)
    return rows


def _render_text(rows: list[dict]) -> str:
    cols = TABLE_COLUMNS
    str_rows = [[str(r[c]) for c in cols] for r in rows]
    widths = [max(len(c), *(len(sr[i]) for sr in str_rows)) if str_rows else len(c) for i, c in enumerate(cols)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip()]
    for sr in str_rows:
        lines.append("  ".join(v.ljust(w) for v, w in zip(sr, widths)).rstrip())
    return "\n".join(lines) + "\n"


def _render_csv(rows: list[dict]) -> str:
    lines = [",".join(TABLE_COLUMNS)]
    for r in rows:
        lines.append(",".join(_csv_cell(str(r[c])) for c in TABLE_COLUMNS))
    return "\n".join(lines) + "\n"


def _csv_cell(v: str) -> str:
    if any(ch in v for ch in ",\"\n"):
        return '"' + v.replace('"', '""') + '"'
    return v


def cmd_table(cfg: RunConfig) -> int:
    rows = _table_rows(cfg)
    if cfg.fmt == "json":
        _emit(json.dumps(rows, sort_keys=True, separators=(",", ":")) + "\n", cfg.out)
    elif cfg.fmt == "csv":
        _emit(_render_csv(rows), cfg.out)
    else:
        _emit(_render_text(rows), cfg.out)
    bad = [r for r in rows if r["match"] == "false"]
    budget = [r for r in rows if r["note"]]
    return 1 if bad else 2 if budget else 0


# -- verify ----------------------------------------------------------------------


def _all_nonzero_messages(dim: int, q: int):
    msg = [0] * dim
    for _ in range(q**dim - 1):
        i = 0
        while True:
            msg[i] += 1
            if msg[i] < q:
                break
            msg[i] = 0
            i += 1
        yield tuple(msg)


def _verify_instance(cfg: RunConfig, n: int, d: int, checks: list[dict]) -> None:
    name = f"{cfg.family}({n},{d}) q={cfg.q}"
    t0 = time.perf_counter()

    def record(check: str, status: str, detail: str) -> None:
        checks.append(
            {
                "check": check,
                "instance": name,
                "status": status,
                "detail": detail,
                "elapsed_ms": int((time.perf_counter() - t0) * 1000),
            }
        )

    try:
        code = build(CodeParams(cfg.family, cfg.q, n, d))
        rep = weight_report(code, budget=cfg.budget, threads=cfg.threads)
    except BudgetExceeded as exc:
        record("weights", "budget", str(exc))
        return
    except DomainError as exc:
        record("weights", "fail", str(exc))
        return

    # weight match against closed forms
    w1f, w2f, w2_set = _closed_forms(cfg.family, cfg.q, n, d)
    ok = (not w1f or str(rep.min_weight) == w1f) and (
        (w2_set is None and (not w2f or str(rep.next_weight) == w2f))
        or (w2_set is not None and (not w2_set or rep.next_weight in w2_set))
    )
    record(
        "weights",
        "pass" if ok else "fail",
        f"dimension={rep.dimension} w1={rep.min_weight} w2={rep.next_weight} "
        f"formula w1={w1f or '-'} w2={w2f or '-'}",
    )

    if cfg.family != PRM or d < 2:
        return

    # geometry checks need codeword supports: exhaustively over all
    # nonzero codewords while feasible, else over the extreme-weight
    # witnesses of the report
    gf = GF(cfg.q)
    exhaustive = cfg.q**rep.dimension <= EXHAUSTIVE_GEOMETRY_LIMIT
    if exhaustive:
        supports = [
            codeword_support(code, m)
            for m in _all_nonzero_messages(rep.dimension, cfg.q)
        ]
        scope = f"all {len(supports)} nonzero codewords"
    else:
        supports = [w.support for w in rep.witnesses]
        scope = f"{len(supports)} witness codewords"

    t0 = time.perf_counter()
    try:
        violations = 0
        for sup in supports:
            violations += len(check_subspace_bounds(sup, code.params))
        record(
            "intersection_bounds",
            "pass" if violations == 0 else "fail",
            f"{scope}, dims 1..{n - 1}, {violations} violations",
        )
    except BudgetExceeded as exc:
        record("intersection_bounds", "budget", str(exc))

    k, ell = decompose_projective(d, cfg.q)
    q = cfg.q
    hyperplane_bound = (1 + 1 / q) * (q - ell) * q ** (n - k - 1)
    subspace_bound = (q - ell + 1) * q ** (n - k - 1)
    t0 = time.perf_counter()
    try:
        missing1 = sum(
            1
            for sup in supports
            if len(sup) < hyperplane_bound
            and find_avoiding_subspace(sup, n, gf, n - 1) is None
        )
        record(
            "avoiding_hyperplane",
            "pass" if missing1 == 0 else "fail",
            f"{scope}, |S| < {hyperplane_bound:g}, {missing1} without avoiding hyperplane",
        )
        t0 = time.perf_counter()
        missing2 = sum(
            1
            for sup in supports
            if len(sup) <= subspace_bound
            and find_avoiding_subspace_at_least(sup, n, gf, k) is None
        )
        record(
            "avoiding_subspace",
            "pass" if missing2 == 0 else "fail",
            f"{scope}, |S| <= {subspace_bound}, dim >= k={k}, {missing2} without",
        )
    except BudgetExceeded as exc:
        record("avoiding_subspace", "budget", str(exc))

    # the quadric witness settles the strict-inequality case
    if q == 2 and d == 2 and n >= 3:
        t0 = time.perf_counter()
        quad = parse_poly("X0*X3+X1*X2", n + 1, gf)
        sup = projective_support(quad, n, gf)
        cover = zero_set_is_hyperplane_union(quad, n, gf)
        ok = len(sup) == 3 * 2 ** (n - 2) == rep.next_weight and not cover.is_union
        record(
            "witness_quadric",
            "pass" if ok else "fail",
            f"weight={len(sup)} expected={3 * 2 ** (n - 2)} hyperplane_union={cover.is_union}",
        )


def cmd_verify(cfg: RunConfig) -> int:
    checks: list[dict] = []
    for n, d in _grid(cfg):
        _verify_instance(cfg, n, d, checks)
    failed = [c for c in checks if c["status"] == "fail"]
    budget = [c for c in checks if c["status"] == "budget"]
    status = "fail" if failed else "budget" if budget else "pass"
    doc = {
        "command": "verify",
        "family": cfg.family,
        "q": cfg.q,
        "status": status,
        "checks": checks,
    }
    if cfg.fmt == "text":
        lines = [
            f"[{c['status'].upper():6s}] {c['check']:26s} {c['instance']:18s} {c['detail']}"
            for c in checks
        ]
        lines.append(f"overall: {status}")
        _emit("\n".join(lines) + "\n", cfg.out)
    else:
        _emit(json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n", cfg.out)
    return 1 if failed else 2 if budget else 0


# -- witness ----------------------------------------------------------------------


def cmd_witness(cfg: RunConfig, n: int, poly_src: str) -> int:
    gf = GF(cfg.q)
    f = parse_poly(poly_src, n + 1, gf)
    if f.is_zero() or not f.is_homogeneous():
        raise DomainError(f"witness polynomial must be nonzero homogeneous: {poly_src!r}")
    support = projective_support(f, n, gf)
    if not support:
        raise DomainError("polynomial vanishes on every point")
    avoid = find_avoiding_subspace_at_least(support, n, gf, 0)
    cover = zero_set_is_hyperplane_union(f, n, gf)
    doc = {
        "command": "witness",
        "q": cfg.q,
        "n": n,
        "poly": str(f),
        "degree": f.degree(),
        "weight": len(support),
        "support": list(support),
        "avoiding_subspace_dim": None if avoid is None else avoid.dim,
        "avoiding_subspace_forms": None if avoid is None else [list(r) for r in avoid.forms],
        "hyperplane_union": cover.is_union,
        "certificate_forms": [list(h.forms[0]) for h in cover.hyperplanes],
        "uncovered_zeros": list(cover.uncovered),
    }
    if cfg.fmt == "text":
        lines = [
            f"poly: {doc['poly']} over GF({cfg.q}), P^{n}",
            f"weight: {doc['weight']}",
            f"support: {doc['support']}",
            "avoiding subspace: "
            + (
                "none"
                if avoid is None
                else f"dim {avoid.dim}, forms {doc['avoiding_subspace_forms']}"
            ),
            f"hyperplane-union={'true' if cover.is_union else 'false'}"
            + (
                f" certificate={doc['certificate_forms']}"
                if cover.is_union
                else f" uncovered={doc['uncovered_zeros']}"
            ),
        ]
        _emit("\n".join(lines) + "\n", cfg.out)
    else:
        _emit(json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n", cfg.out)
    return 0


# -- entry point --------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="prmw",
        description="Reed-Muller / projective Reed-Muller weight tables, "
        "exhaustive verification and witness reports over GF(q), q prime.",
        epilog="CSV columns of `table`: " + ",".join(TABLE_COLUMNS) + ". "
        "match compares brute-force weights with closed forms (for q>2 the "
        "rm W2 is checked for membership in the candidate set; the prm W2 "
        "is reported empirically only). Environment: PRMW_BUDGET overrides "
        "the default codeword budget.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, with_family=True):
        if with_family:
            p.add_argument("--family", choices=[RM, PRM], default=PRM)
        p.add_argument("--q", type=int, required=True, help="field size (prime)")
        p.add_argument("--budget", type=int, default=None, help=f"codeword cap, default {DEFAULT_BUDGET}")
        p.add_argument("--threads", type=int, default=1)
        p.add_argument("--format", dest="fmt", choices=["text", "csv", "json"], default="text")
        p.add_argument("--out", default=None, help="output path (default stdout)")

    pt = sub.add_parser("table", help="weight table over an (n, d) grid")
    common(pt)
    pt.add_argument("--n", required=True, help="value or range, e.g. 3 or 2..4")
    pt.add_argument("--d", required=True, help="value or range; upper bound may be 'n', e.g. 2..n")

    pv = sub.add_parser("verify", help="run weight/geometry checks on a grid")
    common(pv)
    pv.add_argument("--n", required=True)
    pv.add_argument("--d", required=True)

    pw = sub.add_parser("witness", help="weight and geometry report for one polynomial")
    common(pw, with_family=False)
    pw.add_argument("--n", required=True, help="projective dimension (single value)")
    pw.add_argument("--poly", required=True, help="homogeneous polynomial in X0..Xn")
    return ap


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        cfg = RunConfig(
            family=getattr(args, "family", PRM),
            q=args.q,
            n_values=_parse_range(args.n),
            d_spec=getattr(args, "d", "1"),
            budget=args.budget if args.budget is not None else _default_budget(),
            threads=args.threads,
            fmt=args.fmt,
            out=args.out,
        )
        if args.command == "table":
            return cmd_table(cfg)
        if args.command == "verify":
            return cmd_verify(cfg)
        if len(cfg.n_values) != 1:
            raise DomainError("witness takes a single --n value")
        return cmd_witness(cfg, cfg.n_values[0], args.poly)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
