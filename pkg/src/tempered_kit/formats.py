"""Text and JSON formats for posets and graphs.

Poset text::

    points 4
    cover 1 2        # 1 < 2
    rel 1 4          # any relation, closed up transitively
    temp 0 1 0 0     # optional, defaults to all 0

Graph text::

    vertices 2
    edge 1 1 2       # two loops at vertex 1
    edge 1 2

JSON: ``{"points": n, "covers": [[i, j], ...], "temp": [...]}`` and
``{"vertices": n, "edges": [[u, v, mult], ...]}``. Either parser accepts
both forms and picks JSON when the text starts with ``{``.
"""

from __future__ import annotations

import json
from typing import Iterator

from .errors import ParseError
from .graphalg import Graph
from .poset import Poset, TemperedPoset, transitive_reduction


def _lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        words = raw.split("#", 1)[0].split()
        if words:
            yield lineno, words


def _ints(words: list[str], lineno: int) -> list[int]:
    try:
        return [int(w) for w in words]
    except ValueError:
        raise ParseError(f"line {lineno}: expected integers, got {' '.join(words)!r}") from None


def _load_json(text: str) -> dict:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise ParseError("JSON document must be an object")
    return data


def _is_json(text: str) -> bool:
    return text.lstrip().startswith("{")


# -- posets ---------------------------------------------------------------


def parse_poset(text: str) -> TemperedPoset:
    if _is_json(text):
        return poset_from_json(_load_json(text))
    n = None
    pairs: list[tuple[int, int]] = []
    temp = None
    for lineno, words in _lines(text):
        key, args = words[0].lower(), _ints(words[1:], lineno)
        if key == "points":
            if n is not None or len(args) != 1:
                raise ParseError(f"line {lineno}: 'points' must appear once with one value")
            n = args[0]
        elif key in ("cover", "rel"):
            if len(args) != 2:
                raise ParseError(f"line {lineno}: '{key}' takes two points")
            pairs.append((args[0], args[1]))
        elif key == "temp":
            temp = args
        else:
            raise ParseError(f"line {lineno}: unknown keyword {words[0]!r}")
    if n is None:
        raise ParseError("missing 'points' line")
    return _build_poset(n, pairs, temp)


def _build_poset(n, pairs, temp) -> TemperedPoset:
    try:
        p = Poset.from_relation(n, pairs)
        return TemperedPoset(p, tuple(temp) if temp is not None else (0,) * n)
    except (ValueError, IndexError) as exc:
        raise ParseError(str(exc)) from None


def poset_from_json(data: dict) -> TemperedPoset:
    try:
        n = int(data["points"])
        pairs = [(int(a), int(b)) for a, b in data.get("covers", [])]
        temp = data.get("temp")
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed poset JSON: {exc}") from None
    return _build_poset(n, pairs, temp)


def poset_to_json(tp: TemperedPoset | Poset) -> dict:
    if isinstance(tp, Poset):
        tp = TemperedPoset.cold(tp)
    return {
        "points": tp.n,
        "covers": [list(c) for c in transitive_reduction(tp.poset)],
        "temp": list(tp.temp),
    }


def format_poset(tp: TemperedPoset | Poset) -> str:
    if isinstance(tp, Poset):
        tp = TemperedPoset.cold(tp)
    lines = [f"points {tp.n}"]
    lines += [f"cover {i} {j}" for i, j in transitive_reduction(tp.poset)]
    lines.append("temp " + " ".join(map(str, tp.temp)))
    return "\n".join(lines) + "\n"


# -- graphs ---------------------------------------------------------------


def parse_graph(text: str) -> Graph:
    if _is_json(text):
        return graph_from_json(_load_json(text))
    n = None
    edges = []
    for lineno, words in _lines(text):
        key, args = words[0].lower(), _ints(words[1:], lineno)
        if key == "vertices":
            if n is not None or len(args) != 1:
                raise ParseError(f"line {lineno}: 'vertices' must appear once with one value")
            n = args[0]
        elif key == "edge":
            if len(args) not in (2, 3):
                raise ParseError(f"line {lineno}: 'edge' takes two vertices and an optional multiplicity")
            edges.append(tuple(args))
        else:
            raise ParseError(f"line {lineno}: unknown keyword {words[0]!r}")
    if n is None:
        raise ParseError("missing 'vertices' line")
    return _build_graph(n, edges)


def _build_graph(n, edges) -> Graph:
    try:
        return Graph.from_edges(n, edges)
    except (ValueError, IndexError) as exc:
        raise ParseError(str(exc)) from None


def graph_from_json(data: dict) -> Graph:
    try:
        n = int(data["vertices"])
        edges = [tuple(int(x) for x in e) for e in data.get("edges", [])]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed graph JSON: {exc}") from None
    return _build_graph(n, edges)


def graph_to_json(g: Graph) -> dict:
    return {"vertices": g.n_vertices, "edges": [list(e) for e in g.edges()]}


def format_graph(g: Graph) -> str:
    lines = [f"vertices {g.n_vertices}"]
    for u, v, m in g.edges():
        lines.append(f"edge {u} {v}" if m == 1 else f"edge {u} {v} {m}")
    return "\n".join(lines) + "\n"


def dumps(data: dict) -> str:
    """Deterministic JSON used by every emitter."""
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False)
