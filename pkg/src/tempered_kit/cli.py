"""``tempered-kit`` command line.

Exit codes: 0 success, 1 domain error (cycle, Condition (K), unknown
signature, ...), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import __version__, census, classdb
from .errors import ConditionKError, ParseError, TemperedKitError
from .formats import dumps, graph_to_json, parse_graph, parse_poset, poset_to_json
from .graphalg import (
    SIX_MAPS,
    condition_K,
    filtered_k,
    ideal_lattice,
    k_pair,
    prim_space,
    six_term,
)
from .poset import transitive_reduction
from .signature import canonical_signature, classify_shape, display, format_signature, parse_signature

FORMAT_VERSION = 1


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _emit_json(data: dict) -> None:
    print(dumps({"format_version": FORMAT_VERSION, **data}))


def _fmt_set(s) -> str:
    return "{" + ",".join(map(str, sorted(s))) + "}"


def _parse_set(text: str) -> frozenset[int]:
    text = text.strip()
    if text in ("", "-", "{}"):
        return frozenset()
    try:
        return frozenset(int(x) for x in text.strip("{}").split(",") if x.strip())
    except ValueError:
        raise UsageError(f"bad vertex set {text!r}; use comma-separated vertices") from None


# -- commands -------------------------------------------------------------


def cmd_enumerate(args) -> int:
    n = args.points
    if not 1 <= n <= census.MAX_CENSUS_POINTS:
        raise UsageError(f"--points must lie in 1..{census.MAX_CENSUS_POINTS}")
    if args.tempered:
        items = [format_signature(s) for s in census.enumerate_tempered(n, args.connected)]
    else:
        items = [format_signature(s) for s in census.enumerate_spaces(n, args.connected)]
    if args.json:
        out = {"points": n, "connected": args.connected, "tempered": args.tempered, "count": len(items)}
        if args.list:
            out["signatures"] = items
        _emit_json(out)
    elif args.list:
        print("\n".join(items))
    else:
        print(len(items))
    return 0


def cmd_signature(args) -> int:
    tp = parse_poset(_read(args.poset))
    comps = tp.poset.components()
    sigs = sorted(canonical_signature(tp.induced(c)) for c in comps)
    if args.json:
        _emit_json({"components": [{"signature": format_signature(s), "computed": format_signature(s, computed=True)} for s in sigs]})
    else:
        for s in sigs:
            print(display(s))
    return 0


def _stratum_role(poset, x) -> str:
    if poset.n == 1:
        return "simple"
    if x in poset.maximal_points():
        return "ideal"
    if x in poset.minimal_points():
        return "quotient"
    return "subquotient"


def cmd_analyze(args) -> int:
    g = parse_graph(_read(args.graph))
    ok, witness = condition_K(g)
    if not ok:
        if args.json:
            _emit_json({"graph": graph_to_json(g), "condition_k": {"holds": False, "witness": witness}})
        raise ConditionKError(witness)
    lattice = ideal_lattice(g)
    space, points = prim_space(g)
    report = classdb.classification_report(g)
    fk = filtered_k(g)
    shapes = {}
    for comp in report.components:
        shapes[format_signature(comp.signature)] = str(classify_shape(comp.signature.poset()))
    if args.json:
        _emit_json(
            {
                "graph": graph_to_json(g),
                "condition_k": {"holds": True, "witness": None},
                "lattice": [sorted(h) for h in lattice.elements],
                "prim": poset_to_json(space),
                "points": [
                    {
                        "point": i,
                        "min_open": sorted(p.min_open),
                        "stratum": sorted(p.stratum),
                        "temperature": p.temperature,
                        "role": _stratum_role(space.poset, i),
                    }
                    for i, p in enumerate(points, start=1)
                ],
                "report": report.to_json(),
                "shapes": shapes,
                "ktheory": fk.to_json()["groups"],
                "all_exact": fk.all_exact,
            }
        )
        return 0
    print(f"graph: {g.n_vertices} vertices, {sum(m for *_, m in g.edges())} edges")
    print("condition (K): holds")
    print(f"ideal lattice: {len(lattice)} hereditary saturated sets")
    covers = " ".join(f"{i}<{j}" for i, j in transitive_reduction(space.poset)) or "none"
    print(f"prim: {space.n} points, covers {covers}")
    for i, p in enumerate(points, start=1):
        kind = "purely infinite" if p.temperature else "AF"
        role = _stratum_role(space.poset, i)
        print(f"  point {i}: stratum {_fmt_set(p.stratum)}, {role}, {kind} (temperature {p.temperature})")
    for comp in report.components:
        label = format_signature(comp.signature)
        print(f"component {label} {shapes[label]}")
        refs = ", ".join(comp.references)
        status = comp.resolved_status.value
        if comp.status is not comp.resolved_status:
            status += f" (table: {comp.status.value})"
        print(f"  status: {status}" + (f" [{refs}]" if refs else ""))
        for note in comp.notes:
            print(f"  note: {note}")
    print("K-theory (locally closed sets of points):")
    for y in sorted(fk.groups, key=lambda s: (len(s), sorted(s))):
        if not y:
            continue
        kp = fk.groups[y]
        print(f"  {_fmt_set(y)}: K0 = {kp.k0}, K1 = {kp.k1}")
    print(f"six-term sequences: {len(fk.transforms)}, all exact: {'yes' if fk.all_exact else 'NO'}")
    return 0


def cmd_status(args) -> int:
    try:
        sig = parse_signature(args.signature)
    except ParseError as exc:
        raise UsageError(str(exc)) from None
    rec = classdb.lookup_table_label(args.signature) if args.table_label else classdb.lookup(sig)
    if args.json:
        _emit_json({"record": rec.to_json()})
    else:
        refs = ", ".join(rec.references)
        print(f"{rec.label} {rec.status.value}" + (f" {refs}" if refs else ""))
    return 0


def cmd_ktheory(args) -> int:
    g = parse_graph(_read(args.graph))
    subset = frozenset(args.subset) if args.subset else frozenset(g.vertices)
    kp = k_pair(g, subset)
    if args.json:
        _emit_json({"subset": sorted(subset), **kp.to_json()})
    else:
        print(f"K0 = {kp.k0}")
        print(f"K1 = {kp.k1}")
    return 0


def cmd_sixterm(args) -> int:
    g = parse_graph(_read(args.graph))
    u, v, w = (_parse_set(t) for t in args.triple)
    st = six_term(g, u, v, w)
    names = ("Y1", "Y2", "Y3")
    if args.json:
        _emit_json(
            {
                "vertex_sets": [sorted(s) for s in st.vertex_sets],
                "groups": [kp.to_json() for kp in st.groups],
                "maps": {k: st.maps[k].matrix.tolist() for k in SIX_MAPS},
                "exact": list(st.exact),
            }
        )
        return 0
    for name, s, kp in zip(names, st.vertex_sets, st.groups):
        print(f"{name} = {_fmt_set(s)}: K0 = {kp.k0}, K1 = {kp.k1}")
    for k in SIX_MAPS:
        m = st.maps[k]
        print(f"{k}: {m.source} -> {m.target} {m.matrix.tolist()}")
    print(f"exact: {'yes' if st.is_exact else 'NO'}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tempered-kit", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="count or list finite T0 spaces")
    p.add_argument("--points", type=int, required=True)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--tempered", action="store_true")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--count", action="store_true")
    mode.add_argument("--list", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("signature", help="canonical signature of a tempered poset")
    p.add_argument("--poset", required=True, help="poset file ('-' for stdin)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_signature)

    p = sub.add_parser("analyze", help="invariants and classification status of a graph")
    p.add_argument("graph", help="graph file ('-' for stdin)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("status", help="classification status of a tempered signature")
    p.add_argument("signature")
    p.add_argument("--table-label", action="store_true", help="interpret t as printed in the results table")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_status)

    p = sub.add_parser("ktheory", help="K-groups of a subquotient of a graph algebra")
    p.add_argument("graph")
    p.add_argument("--subset", type=int, nargs="+", help="vertices of the subquotient (default: all)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_ktheory)

    p = sub.add_parser("sixterm", help="six-term sequence of nested hereditary saturated sets")
    p.add_argument("graph")
    p.add_argument("--triple", nargs=3, required=True, metavar=("U", "V", "W"), help="comma-separated vertex sets, '-' for empty")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_sixterm)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConditionKError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(f"witness: {exc.witness}", file=sys.stderr)
        return 1
    except TemperedKitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
