"""Command line front end: ``python -m cabcodes <command> ...``.

Exit codes: 0 success, 2 usage or input errors, 3 when a size guard trips.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import bounds as B
from . import codes as C
from .cabgen import (
    build_generalized_cab,
    coset_polynomial,
    cyclotomic_cosets,
    is_balanced,
    norm_polynomial,
    optimal_pairs,
    trace_polynomial,
)
from .errors import CabCodesError, PairBudgetExceeded, SizeExceeded
from .field import make_field, parse_field
from .groebner import IdealSpec, count_variety_points, order_domain_check
from .oracle import MESSAGE_LIMIT, count_2d_subspaces, true_ghw2, true_min_distance
from .polyalg import WeightedOrder, format_monomial, parse_poly


class UsageError(Exception):
    pass


# -- shared helpers ---------------------------------------------------------

def _univariate(spec: str, field):
    s = spec.strip()
    if s == "trace":
        return trace_polynomial(field)
    if s == "norm":
        return norm_polynomial(field)
    if s.startswith("coset:"):
        return coset_polynomial(cyclotomic_cosets(field.p, field.m), int(s[6:]), field)
    return parse_poly(s, field)


def _weights(text: str) -> WeightedOrder:
    try:
        return WeightedOrder(tuple(int(w) for w in text.split(",")))
    except ValueError:
        raise UsageError(f"bad --weights {text!r}; expected e.g. 3,2") from None


def _context(args) -> B.BoundContext:
    field = parse_field(args.field)
    if args.cab:
        g, _, h = args.cab.partition(",")
        if not h:
            raise UsageError("--cab expects G,H such as trace,coset:3")
        spec = build_generalized_cab(_univariate(g, field), _univariate(h, field), field)
        return B.BoundContext.from_cab(spec)
    if not args.poly or not args.weights:
        raise UsageError("give --cab G,H or both --poly and --weights")
    order = _weights(args.weights)
    gens = [parse_poly(p, field, order.nvars) for p in args.poly]
    return B.BoundContext.from_ideal(IdealSpec(field, gens, nvars=order.nvars), order)


def _index(ctx: B.BoundContext, args) -> int:
    if args.monomial:
        return ctx.index(args.monomial)
    if args.index is None:
        raise UsageError("give --index or --monomial")
    return args.index


def _ints(text: str | None) -> list[int]:
    if not text:
        return []
    return [int(x) for x in text.split(",") if x]


def _range(text: str, n: int) -> list[int]:
    if not text:
        return list(range(1, n + 1))
    lo, _, hi = text.partition(":")
    return list(range(int(lo or 1), int(hi or n) + 1))


def _names(ctx: B.BoundContext, idx) -> str:
    return "{" + ", ".join(format_monomial(ctx.fp.monomial(i)) for i in idx) + "}"


def _write(out: Path | None, name: str, text: str) -> None:
    if out is None:
        return
    out.mkdir(parents=True, exist_ok=True)
    (out / name).write_text(text)


# -- reproductions ----------------------------------------------------------

def _exord() -> list[str]:
    F4 = make_field(2, 2)
    order = WeightedOrder((3, 2))
    ideal = IdealSpec(F4, [parse_poly("X^2+X-Y^3", F4, 2)])
    ctx = B.BoundContext.from_ideal(ideal, order)
    c1, c2 = order_domain_check([parse_poly("X^2+X-Y^3", F4, 2)], order)
    i = ctx.index((1, 0))
    return [
        "ideal: <X^2+X-Y^3> over GF(4), w(X)=3, w(Y)=2",
        f"order domain conditions: C1={c1} C2={c2}",
        f"footprint: {', '.join(ctx.fp.as_text())}",
        f"weights: {ctx.fp.weights}",
        f"n = {ctx.n}, variety size = {count_variety_points(ideal)}",
        f"FR bound at X = {B.feng_rao_bound(ctx, i)}",
    ]


def _exmot() -> list[str]:
    F8 = make_field(2, 3)
    spec = build_generalized_cab(trace_polynomial(F8), coset_polynomial(cyclotomic_cosets(2, 3), 3, F8))
    ctx = B.BoundContext.from_cab(spec)
    i = ctx.index((3, 0))
    v = B.natural_v(ctx, i)
    nb = B.new_bound(ctx, i, v)
    fr = B.feng_rao_bound(ctx, i)
    sets = B.case_sets(ctx, i, v)
    lines = [
        f"F = {spec.F.format(spec.order)} over GF(8), w(X)={spec.wX}, w(Y)={spec.wY}",
        f"zeros = {spec.zeros}, optimal = {spec.optimal}, n = {ctx.n}",
        f"word with leading monomial X^3 (index {i}), natural v = {v}",
    ]
    for cs in sets:
        lines.append(f"#L({cs.t}) = {cs.card}: {_names(ctx, cs.members())}")
    lines.append(f"closed form = {B.closed_form_bound(spec.a, spec.b, spec.field.q, 3, 0)}")
    lines.append(f"bound = {nb.bound} (FR bound = {fr})")
    return lines


def _klein_ctx():
    F8 = make_field(2, 3)
    return B.BoundContext.from_ideal(IdealSpec(F8, [parse_poly("X^3Y+Y^3+X", F8, 2)]), WeightedOrder((2, 3)))


def _klein(delta: int) -> list[str]:
    ctx = _klein_ctx()
    i = ctx.index((3, 0))
    y2 = ctx.index((0, 2))
    sets = B.case_sets(ctx, i, 1)
    lines = [
        "Klein quartic X^3Y+Y^3+X over GF(8), w(X)=2, w(Y)=3",
        f"footprint ({ctx.n}): {', '.join(ctx.fp.as_text())}",
    ]
    for cs in sets:
        lines.append(f"#L({cs.t}) = {cs.card}: {_names(ctx, cs.members())}")
    lines.append(f"bound at X^3 = {B.new_bound(ctx, i, 1).bound}; with a_6 = 0 known: {B.new_bound(ctx, i, 1, {y2}).bound}")
    e = C.improved_code(ctx, 11, build=False)
    rep = B.min_distance_bound(ctx, e.indices)
    lines.append(f"Eimp(11): span {_names(ctx, e.indices)}, dimension {len(e.indices)}, bound {rep.bound}")
    x = C.improved_code_with_exclusions(ctx, delta, build=False)
    rep = B.min_distance_bound(ctx, x.indices, excl_map="auto")
    lines.append(
        f"exclusion construction ({delta}): span {_names(ctx, x.indices)}, dimension {len(x.indices)}, bound {rep.bound}"
    )
    return lines


FIGURES = {
    "q8": (3, [(4, 6), (4, 7)]),
    "q16": (4, [(8, 10), (8, 15)]),
    "q32": (5, [(16, 20), (16, 26), (16, 31)]),
    "q64": (6, [(32, 42), (32, 63)]),
}


def figure_tables(key: str) -> dict[tuple[int, int], tuple[int, list[tuple[int, int]]]]:
    """Improved-code (delta, k) tables for the optimal pairs shown in one comparison."""
    m, wanted = FIGURES[key]
    field = make_field(2, m)
    out = {}
    for spec in optimal_pairs(field):
        if (spec.a, spec.b) in wanted:
            ctx = B.BoundContext.from_cab(spec)
            out[(spec.a, spec.b)] = (ctx.n, C.dimension_table(ctx, "eimp"))
    return out


def _series_label(ab, q) -> str:
    a, b = ab
    nt = b == q - 1
    return f"(a,b)=({a},{b})" + (" norm-trace" if nt else "")


def _figure(key: str, out: Path | None) -> list[str]:
    m, _ = FIGURES[key]
    q = 2**m
    tables = figure_tables(key)
    series = {_series_label(ab, q): tab for ab, tab in tables.items()}
    _write(out, f"{key}_series.csv", C.series_csv(series))
    lines = [f"improved codes over GF({q}), G = trace"]
    for ab, (n, rows) in tables.items():
        best = C.best_codes(rows)
        lines.append(f"{_series_label(ab, q)}: n = {n}, {len(best)} distinct dimensions")
        if n <= 32:
            lines.append("  " + " ".join(f"[{n},{k},{d}]" for k, d in best))
    nt = [ab for ab in tables if ab[1] == q - 1][0]
    others = [ab for ab in tables if ab != nt]
    dicts = {ab: dict(rows) for ab, (_, rows) in tables.items()}
    strict = [d for d in dicts[nt] if all(dicts[nt][d] > dicts[o][d] for o in others)]
    lines.append(f"deltas where norm-trace is strictly best: {len(strict)}" + (f" {strict}" if strict else ""))
    if key == "q8":
        spec_pairs = {(s.a, s.b): s for s in optimal_pairs(make_field(2, 3))}
        ctx = B.BoundContext.from_cab(spec_pairs[(4, 6)])
        gaps = closed_form_gaps(ctx, spec_pairs[(4, 6)])
        lines.append(f"closed form vs generic bound (4,6): {sum(1 for g in gaps if g[3] == 0)} equal, "
                     f"{sum(1 for g in gaps if g[3] > 0)} strictly larger, {sum(1 for g in gaps if g[3] < 0)} violations")
    return lines


def closed_form_gaps(ctx: B.BoundContext, spec) -> list[tuple[int, str, int, int]]:
    """(i, monomial, generic, generic - closed form) for every footprint index."""
    rows = []
    for i in range(1, ctx.n + 1):
        a1, a2 = ctx.fp.monomial(i)
        gen = B.new_bound(ctx, i).bound
        cf = B.closed_form_bound(spec.a, spec.b, spec.field.q, a1, a2)
        rows.append((i, format_monomial((a1, a2)), gen, gen - cf))
    return rows


def dualprimary_tables():
    F32 = make_field(2, 5)
    table = cyclotomic_cosets(2, 5)
    spec = build_generalized_cab(coset_polynomial(table, 5, F32), coset_polynomial(table, 11, F32), F32)
    ctx = B.BoundContext.from_cab(spec)
    return spec, ctx, C.dimension_table(ctx, "eimp"), C.dimension_table(ctx, "cfim")


def _dualprimary(out: Path | None) -> list[str]:
    spec, ctx, eimp, cfim = dualprimary_tables()
    _write(out, "dualprimary_series.csv", C.series_csv({"Eimp": (ctx.n, eimp), "Cfim": (ctx.n, cfim)}))
    e, f = dict(eimp), dict(cfim)
    lms = [format_monomial(g.leading_monomial(ctx.order)) for g in ctx.gb]
    a_max = max(m[0] for m in ctx.fp.monomials) + 1
    return [
        f"F = G(X) - H(Y), deg G = {spec.a}, deg H = {spec.b}, weights ({spec.wX},{spec.wY})",
        f"zeros = {spec.zeros}, optimal = {spec.optimal}",
        f"Groebner basis leading monomials: {', '.join(lms)}",
        f"footprint size {ctx.n}; X-degree < {a_max}",
        f"deltas with Eimp larger: {sum(e[d] > f[d] for d in e)}",
        f"deltas with Cfim larger: {sum(f[d] > e[d] for d in e)}",
        f"deltas with equal dimension: {sum(f[d] == e[d] for d in e)}",
    ]


def reproduce(example: str, out: Path | None = None, allow_long: bool = False, delta: int = 12) -> str:
    if example == "exord":
        lines = _exord()
    elif example == "exmot":
        lines = _exmot()
    elif example == "klein":
        lines = _klein(delta)
    elif example in FIGURES:
        if example == "q64" and not allow_long:
            raise SizeExceeded("long-run guard: reproduce q64 (n=2048) needs --allow-long")
        lines = _figure(example, out)
    elif example == "dualprimary":
        lines = _dualprimary(out)
    else:
        raise UsageError(f"unknown example {example!r}")
    text = "\n".join(lines) + "\n"
    _write(out, f"{example}.txt", text)
    return text


# -- oracle check -----------------------------------------------------------

def oracle_check(verbose: bool = False) -> tuple[int, list[str]]:
    """Compare every bound with brute force on the small examples; returns (#violations, log)."""
    log = []
    bad = 0
    F4 = make_field(2, 2)
    ex = B.BoundContext.from_ideal(IdealSpec(F4, [parse_poly("X^2+X-Y^3", F4, 2)]), WeightedOrder((3, 2)))
    F8 = make_field(2, 3)
    mot = B.BoundContext.from_cab(
        build_generalized_cab(trace_polynomial(F8), coset_polynomial(cyclotomic_cosets(2, 3), 3, F8))
    )
    kl = _klein_ctx()
    for name, ctx in (("exord", ex), ("exmot", mot), ("klein", kl)):
        q = ctx.field.q
        kmax = 0
        while q ** (kmax + 1) <= MESSAGE_LIMIT:
            kmax += 1
        for k in range(1, min(kmax, ctx.n) + 1):
            code = C.monomial_code(ctx, range(1, k + 1))
            d = true_min_distance(ctx.field, code.generator)
            b = B.min_distance_bound(ctx, code.indices).bound
            ok = d >= b
            bad += not ok
            line = f"{name} E({k}): true d = {d}, bound = {b}"
            if k >= 2 and count_2d_subspaces(q, k) <= 2**14:
                d2 = true_ghw2(ctx.field, code.generator)
                b2 = B.ghw2_code_bound(ctx, code.indices)
                bad += d2 < b2
                line += f", true d2 = {d2}, ghw2 bound = {b2}"
            log.append(line + ("" if ok else "  VIOLATION"))
    return bad, log


# -- argument parsing -------------------------------------------------------

def _add_ideal_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--field", required=True, help="field size as p^m")
    p.add_argument("--poly", action="append", help="ideal generator (repeatable)")
    p.add_argument("--weights", help="comma separated variable weights, X1 first")
    p.add_argument("--cab", help="generalized C_ab shortcut G,H e.g. trace,coset:3")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cabcodes", description="Affine variety codes from generalized C_ab polynomials")
    sub = ap.add_subparsers(dest="command", required=True)

    f = sub.add_parser("field", help="field information")
    f.add_argument("action", choices=["info"])
    f.add_argument("size", help="p^m")

    c = sub.add_parser("cosets", help="cyclotomic cosets and coset polynomials")
    c.add_argument("size", help="p^m")

    cab = sub.add_parser("cab", help="generalized C_ab polynomials")
    cab.add_argument("action", choices=["build", "list"])
    cab.add_argument("--field", required=True)
    cab.add_argument("--g", default="trace", help="trace | norm | coset:k | explicit polynomial")
    cab.add_argument("--h", help="trace | norm | coset:k | explicit polynomial")

    b = sub.add_parser("bound", help="per-index bound report")
    _add_ideal_args(b)
    b.add_argument("--index", type=int)
    b.add_argument("--monomial")
    b.add_argument("--v", default="auto")
    b.add_argument("--exclude", help="comma separated indices known to have zero coefficient")
    b.add_argument("--witnesses", action="store_true")
    b.add_argument("--json", action="store_true")

    code = sub.add_parser("code", help="code parameter tables")
    code.add_argument("action", choices=["table"])
    _add_ideal_args(code)
    code.add_argument("--construction", choices=list(C.CONSTRUCTIONS), default="eimp")
    code.add_argument("--delta-range", default="", help="lo:hi (default 1:n)")
    code.add_argument("--out", type=Path)

    r = sub.add_parser("reproduce", help="reproduce a worked example")
    r.add_argument("example", choices=["exord", "exmot", "klein", "q8", "q16", "q32", "q64", "dualprimary"])
    r.add_argument("--out", type=Path)
    r.add_argument("--allow-long", action="store_true")
    r.add_argument("--delta", type=int, default=12)

    o = sub.add_parser("oracle", help="brute-force checks of every bound")
    o.add_argument("action", choices=["check"])
    return ap


def _run(args) -> int:
    if args.command == "field":
        F = parse_field(args.size)
        print(f"GF({F.q}) = GF({F.p}^{F.m})")
        print(f"modulus: {F.modulus_str()}")
        print(f"primitive element code: {F.generator}")
        return 0
    if args.command == "cosets":
        F = parse_field(args.size)
        table = cyclotomic_cosets(F.p, F.m)
        for rep, cos in zip(table.representatives(), table.cosets):
            if rep == 0:
                print(f"C_0 = {{0}}")
                continue
            poly = coset_polynomial(table, rep, F).format()
            print(f"C_{rep} = {{{', '.join(map(str, cos))}}}  F_{rep}(X) = {poly}  balanced = {is_balanced(table, rep)}")
        return 0
    if args.command == "cab":
        F = parse_field(args.field)
        if args.action == "list":
            for spec in optimal_pairs(F):
                print(json.dumps(spec.as_dict()))
            return 0
        if not args.h:
            raise UsageError("cab build needs --h")
        spec = build_generalized_cab(_univariate(args.g, F), _univariate(args.h, F), F)
        d = spec.as_dict()
        print(json.dumps({k: d[k] for k in ("a", "b", "wX", "wY", "zeros", "optimal")}))
        return 0
    if args.command == "bound":
        ctx = _context(args)
        i = _index(ctx, args)
        v = B.natural_v(ctx, i) if args.v == "auto" else int(args.v)
        excl = _ints(args.exclude)
        rep = B.BoundReport([B.index_report(ctx, i, v, excl)])
        if args.json:
            print(rep.to_json())
        else:
            print(rep.to_csv(), end="")
            print(f"FR bound = {B.feng_rao_bound(ctx, i)}")
        if args.witnesses:
            for cs in B.case_sets(ctx, i, v, excl, with_witnesses=True):
                for k, (p, j) in sorted(cs.witnesses.items()):
                    print(
                        f"L({cs.t}) {format_monomial(ctx.fp.monomial(k))} <- "
                        f"{format_monomial(ctx.fp.monomial(p))} * {format_monomial(ctx.fp.monomial(j))}"
                    )
        return 0
    if args.command == "code":
        ctx = _context(args)
        deltas = _range(args.delta_range, ctx.n)
        rows = C.dimension_table(ctx, args.construction, deltas)
        text = "delta,k,n\n" + "".join(f"{d},{k},{ctx.n}\n" for d, k in rows)
        if args.out:
            _write(args.out, f"{args.construction}_table.csv", text)
            _write(args.out, f"{args.construction}_series.csv", C.series_csv({args.construction: (ctx.n, rows)}))
        print(text, end="")
        return 0
    if args.command == "reproduce":
        print(reproduce(args.example, args.out, args.allow_long, args.delta), end="")
        return 0
    if args.command == "oracle":
        bad, log = oracle_check()
        print("\n".join(log))
        print(f"violations: {bad}")
        return 1 if bad else 0
    raise UsageError(f"unknown command {args.command!r}")  # pragma: no cover


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args)
    except (SizeExceeded, PairBudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (UsageError, CabCodesError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
