"""Command-line front end.

Exit codes: 0 success (and, for ``verify``, computed == expected);
1 verification mismatch or internal verification failure; 2 usage or
input errors.

Semigroups travel as JSON files (see serialization); everything printed
for humans is 1-based, with "-" for an undefined image.
"""

from __future__ import annotations

import argparse
import math
import sys
import time

from . import extremal, graphs, oracle, trees
from .semigroups import (
    SemigroupSet,
    center,
    classify_small_abelian_group,
    enumerate_full,
    enumerate_partial,
    idempotents,
    image_union,
    is_group,
    is_nilpotent,
    is_null,
)
from .serialization import (
    dumps_report,
    load_semigroup_file,
    semigroup_digest,
    write_semigroup_file,
    write_xi_csv,
)

_PRINT_LIMIT = 64


def _fmt_map(a) -> str:
    n = a.degree
    return " ".join("-" if v == n else str(v + 1) for v in a.img)


def _print_set(S: SemigroupSet, out=None) -> None:
    out = out or sys.stdout
    print(f"kind={S.kind} degree={S.degree} size={len(S)}", file=out)
    if len(S) <= _PRINT_LIMIT:
        for a in S:
            print(f"  {_fmt_map(a)}", file=out)
    else:
        print(f"  ({len(S)} elements; use --out FILE for the full set)", file=out)


def _parse_points(text: str) -> list[int]:
    """Comma-separated 1-based points → 0-based list."""
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if not parts:
        raise ValueError("empty point list")
    vals = []
    for p in parts:
        try:
            v = int(p)
        except ValueError:
            raise ValueError(f"bad point {p!r}: expected an integer") from None
        if v < 1:
            raise ValueError(f"points are 1-based; got {v}")
        vals.append(v - 1)
    return vals


def _fmt_points(points) -> str:
    return "{" + ", ".join(str(x + 1) for x in points) + "}"


# ---------------------------------------------------------------------------
# subcommands


def _cmd_xi(args) -> int:
    rows = extremal.xi_table(args.max)
    print(f"{'n':>3} {'alpha':>6} {'xi':>15}")
    for r in rows:
        print(f"{r.n:>3} {r.alpha:>6} {r.xi:>15}")
    if args.csv:
        write_xi_csv(rows, args.csv)
        print(f"wrote {args.csv}")
    return 0


def _cmd_construct(args) -> int:
    n = args.n
    what = args.what
    if what == "gamma":
        S = extremal.gamma(n, args.x - 1)
    elif what == "nullmax":
        pts = _parse_points(args.points) if args.points else None
        S = extremal.null_max(n, pts)
    elif what == "omega":
        if args.b:
            B = _parse_points(args.b)
        else:
            B = list(range(extremal.xi_alpha(n + 1).alpha - 1))
        S = extremal.omega_pn(n, B)
    elif what == "eix":
        S = extremal.e_ix(n)
    elif what == "abelian":
        S = extremal.abelian_witness(n)
    elif what == "nullid":
        pts = _parse_points(args.points) if args.points else None
        S = extremal.null_plus_identity(n, pts)
    else:  # knit
        a1, a2 = extremal.knit_witness(n)
        S = SemigroupSet([a1, a2])
        print("left-path witnesses (products all equal the first):")
        print(f"  {_fmt_map(a1)}")
        print(f"  {_fmt_map(a2)}")
    _print_set(S)
    if args.out:
        write_semigroup_file(S, args.out)
        print(f"wrote {args.out}")
    return 0


def _cmd_analyze(args) -> int:
    S = load_semigroup_file(args.file)
    print(f"degree: {S.degree}")
    print(f"kind: {S.kind}")
    print(f"size: {len(S)}")
    closed = S.is_closed()
    print(f"closed: {closed}")
    print(f"commutative: {S.is_commutative()}")
    E = idempotents(S)
    print(f"idempotents: {len(E)}")
    if len(E) == 1:
        print(f"unique idempotent: {_fmt_map(E[0])}")
    if not closed:
        print("(further structure needs a product-closed set)")
        return 0
    null, zero = is_null(S)
    print(f"null: {null}" + (f" (zero: {_fmt_map(zero)})" if null else ""))
    print(f"nilpotent: {is_nilpotent(S)}")
    group = is_group(S)
    print(f"group: {group}")
    if group:
        print(f"classification: {classify_small_abelian_group(S)}")
    print(f"center size: {len(center(S))}")
    if S.kind == "full":
        print(f"image union: {_fmt_points(image_union(S))}")
    return 0


def _cmd_spartition(args) -> int:
    S = load_semigroup_file(args.file)
    part = trees.s_partition(S)
    for j, block in enumerate(part.blocks):
        print(f"A_{j}: {_fmt_points(block)}")
    return 0


def _cmd_tree(args) -> int:
    S = load_semigroup_file(args.file)
    part = trees.s_partition(S)
    sigma = trees.element_order(part)
    t = trees.build_tree(S, sigma)
    prof = trees.level_profile(t)
    print(f"point order: {' '.join(str(x + 1) for x in sigma)}")
    print(f"leaves: {t.leaf_count}")
    print(f"depth: {t.depth}")
    print(f"levels: {''.join(k[0] for k in prof.kinds)}")
    print(f"trunk length: {prof.trunk_length}")
    print(f"max branching arcs: {prof.max_branching_arcs}")
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(trees.tree_to_dot(t))
        print(f"wrote {args.dot}")
    return 0


def _cmd_nullify(args) -> int:
    S = load_semigroup_file(args.file)
    m = load_semigroup_file(args.m_override) if args.m_override else None
    trace = trees.nullify_trace(S, m_override=m)
    print(f"input size: {len(S)}")
    print(f"point order: {' '.join(str(x + 1) for x in trace.sigma)}")
    print(f"top-layer size: {trace.r}")
    print(f"levels before surgery: {''.join(k[0] for k in trace.profile_s.kinds)}")
    print(f"levels after surgery:  {''.join(k[0] for k in trace.profile_2.kinds)}")
    print(f"contracted levels: {trace.contracted}")
    ok, zero = is_null(trace.result)
    if not ok:
        raise RuntimeError("surgery output failed the null check")
    print(f"output size: {len(trace.result)} (null, zero: {_fmt_map(zero)})")
    if args.out:
        write_semigroup_file(trace.result, args.out)
        print(f"wrote {args.out}")
    return 0


def _cmd_graph(args) -> int:
    S = load_semigroup_file(args.file)
    g = graphs.build(S)
    print(f"vertices: {g.vertex_count}")
    print(f"edges: {g.edge_count}")
    print(f"center size: {len(S) - g.vertex_count}")
    if args.clique:
        res = graphs.max_clique(g)
        print(f"clique number: {res.size}")
        if res.size <= 32:
            for i in res.witness:
                print(f"  {_fmt_map(S.elements[i])}")
    if args.girth:
        gi = graphs.girth(g)
        print(f"girth: {'infinity' if gi == math.inf else gi}")
    if args.knit is not None:
        kd = graphs.knit_degree(S, max_len=args.knit)
        print(f"knit degree: {'none' if kd is None else kd} (searched lengths 1..{args.knit})")
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(graphs.graph_to_dot(g))
        print(f"wrote {args.dot}")
    if args.adj:
        graphs.write_adjacency(g, args.adj)
        print(f"wrote {args.adj}")
    return 0


# ---------------------------------------------------------------------------
# verify


def _enumerate_capped(n: int, kind: str, cap_full: int, cap_partial: int, what: str) -> SemigroupSet:
    cap = cap_full if kind == "full" else cap_partial
    if n > cap:
        raise ValueError(f"{what} is computed exhaustively; capped at n={cap} for kind={kind}")
    return enumerate_full(n) if kind == "full" else enumerate_partial(n)


def _compute_claim(claim: str, n: int, kind: str):
    """Returns (computed value, witness digests)."""
    if claim == "comm-max":
        r = oracle.max_commutative(n, kind)
        return r.size, [semigroup_digest(m) for m in r.maximizers]
    if claim == "idem-max":
        r = oracle.max_commutative_idempotent(n, kind)
        return r.size, [semigroup_digest(m) for m in r.maximizers]
    if claim == "unique-idem-max":
        r = oracle.max_unique_idempotent(n, kind)
        return r.size, [semigroup_digest(m) for m in r.maximizers]
    if claim == "null-max":
        r = oracle.max_null(n, kind)
        return r.size, [semigroup_digest(m) for m in r.maximizers]
    if claim == "abelian-max":
        r = oracle.max_abelian_subgroup(n)
        return r.size, [semigroup_digest(m) for m in r.maximizers]
    if claim == "pclique":
        S = _enumerate_capped(n, kind, 5, 4, "pclique")
        g = graphs.build(S)
        res = graphs.max_clique(g)
        witness = SemigroupSet([S.elements[i] for i in res.witness])
        return res.size, [semigroup_digest(witness)]
    if claim == "girth":
        S = _enumerate_capped(n, kind, 5, 4, "girth")
        return graphs.girth(graphs.build(S)), []
    if claim == "knit":
        S = _enumerate_capped(n, kind, 6, 5, "knit")
        return graphs.knit_degree(S, max_len=4), []
    if claim == "xi-table":
        return [(r.n, r.alpha, r.xi) for r in extremal.xi_table(n)], []
    raise ValueError(f"unknown claim {claim!r}")


def _jsonable_value(v):
    if v is None:
        return None
    if isinstance(v, float) and math.isinf(v):
        return "infinity"
    if isinstance(v, list):
        return [list(row) for row in v]
    return v


def _fmt_value(v) -> str:
    if v is None:
        return "none"
    if isinstance(v, float) and math.isinf(v):
        return "infinity"
    if isinstance(v, list):
        return f"[{len(v)} rows]"
    return str(v)


def _cmd_verify(args) -> int:
    expected = oracle.expected_value(args.claim, args.n, args.kind)
    start = time.monotonic()
    computed, digests = _compute_claim(args.claim, args.n, args.kind)
    runtime = time.monotonic() - start
    match = computed == expected
    print(
        f"claim={args.claim} n={args.n} kind={args.kind} "
        f"expected={_fmt_value(expected)} computed={_fmt_value(computed)} match={match}"
    )
    if args.json:
        report = {
            "claim": args.claim,
            "n": args.n,
            "kind": args.kind,
            "expected": _jsonable_value(expected),
            "computed": _jsonable_value(computed),
            "match": match,
            "witness_digests": digests[:40],
            "runtime_seconds": round(runtime, 3),
        }
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(dumps_report(report))
        print(f"wrote {args.json}")
    return 0 if match else 1


# ---------------------------------------------------------------------------
# parser


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="commsemi",
        description="Extremal commutative subsemigroups of finite transformation semigroups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("xi", help="table of the null-semigroup maximum xi(n) and its arity alpha(n)")
    p.add_argument("--max", type=int, required=True, metavar="N")
    p.add_argument("--csv", metavar="PATH")
    p.set_defaults(func=_cmd_xi)

    p = sub.add_parser("construct", help="emit one of the extremal constructions as JSON")
    p.add_argument(
        "what",
        choices=["gamma", "nullmax", "omega", "eix", "abelian", "nullid", "knit"],
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x", type=int, default=1, help="fixed point for gamma (1-based)")
    p.add_argument("--points", help="comma-separated 1-based points (nullmax/nullid)")
    p.add_argument("--b", help="comma-separated 1-based image set (omega)")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("analyze", help="structural report on a semigroup file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("spartition", help="layer a commutative unique-idempotent semigroup")
    p.add_argument("file")
    p.set_defaults(func=_cmd_spartition)

    p = sub.add_parser("tree", help="prefix tree of a commutative unique-idempotent semigroup")
    p.add_argument("file")
    p.add_argument("--dot", metavar="OUT")
    p.set_defaults(func=_cmd_tree)

    p = sub.add_parser("nullify", help="convert to a null semigroup of the same size")
    p.add_argument("file")
    p.add_argument("--m-override", dest="m_override", metavar="FILE")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=_cmd_nullify)

    p = sub.add_parser("graph", help="commuting-graph statistics")
    p.add_argument("file")
    p.add_argument("--clique", action="store_true")
    p.add_argument("--girth", action="store_true")
    p.add_argument("--knit", type=int, metavar="MAXLEN")
    p.add_argument("--dot", metavar="OUT")
    p.add_argument("--adj", metavar="OUT", help="binary adjacency-matrix dump")
    p.set_defaults(func=_cmd_graph)

    p = sub.add_parser("verify", help="recompute a published value and compare")
    p.add_argument(
        "--claim",
        required=True,
        choices=[
            "comm-max",
            "idem-max",
            "unique-idem-max",
            "null-max",
            "abelian-max",
            "pclique",
            "girth",
            "knit",
            "xi-table",
        ],
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kind", required=True, choices=["full", "partial"])
    p.add_argument("--json", metavar="OUT")
    p.set_defaults(func=_cmd_verify)

    return parser


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        if code is None:
            return 0
        return code if isinstance(code, int) else 2
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"failure: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
