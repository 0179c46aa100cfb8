"""Combinatorial invariants of C*-algebras of finite directed graphs.

Vertices are ``1..n``. Ideals of a graph algebra satisfying Condition (K)
correspond to hereditary saturated vertex sets; these form the open-set
lattice of the primitive ideal space. K-theory of a subquotient with vertex
set ``W`` is read off the matrix ``A_W^T - I`` restricted to the columns of
vertices that emit edges.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .errors import (
    ConditionKError,
    NotLocallyClosedError,
    NotNestedError,
    ShapeMismatchError,
)
from .intlin import (
    ChainMap,
    FinAbGroup,
    GroupHom,
    IntMatrix,
    TwoTermComplex,
    cycle_exactness,
    gcd_all,
    snake_connecting,
)
from .poset import Poset, TemperedPoset, is_locally_closed, locally_closed_sets, open_sets, transitive_reduction
from .signature import Signature, canonical_relabeling, canonical_signature, raw_signature

MAX_VERTICES = 20
MAX_MULTIPLICITY = 2**31 - 1

VertexSet = frozenset


def _key(s: frozenset[int]) -> tuple:
    return (len(s), sorted(s))


@dataclass(frozen=True)
class Graph:
    """Finite directed multigraph; ``adj[v-1][w-1]`` counts edges ``v -> w``."""

    n_vertices: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = self.n_vertices
        if not 1 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count must lie in 1..{MAX_VERTICES}, got {n}")
        adj = tuple(tuple(int(x) for x in row) for row in self.adj)
        if len(adj) != n or any(len(r) != n for r in adj):
            raise ValueError("adjacency matrix must be n x n")
        if any(not 0 <= x <= MAX_MULTIPLICITY for r in adj for x in r):
            raise ValueError(f"edge multiplicities must lie in 0..{MAX_MULTIPLICITY}")
        object.__setattr__(self, "adj", adj)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        """Edges as ``(u, v)`` or ``(u, v, mult)``; repeated entries add up."""
        m = [[0] * n for _ in range(n)]
        for e in edges:
            u, v = e[0], e[1]
            mult = e[2] if len(e) > 2 else 1
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 1..{n}")
            if mult < 0:
                raise ValueError("negative edge multiplicity")
            m[u - 1][v - 1] += mult
        return cls(n, tuple(tuple(r) for r in m))

    @property
    def vertices(self) -> range:
        return range(1, self.n_vertices + 1)

    def mult(self, v: int, w: int) -> int:
        return self.adj[v - 1][w - 1]

    @cached_property
    def _succ(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(w + 1 for w, m in enumerate(row) if m) for row in self.adj)

    def successors(self, v: int) -> frozenset[int]:
        return self._succ[v - 1]

    def is_sink(self, v: int) -> bool:
        return not self._succ[v - 1]

    def sinks(self) -> list[int]:
        return [v for v in self.vertices if self.is_sink(v)]

    def edges(self) -> list[tuple[int, int, int]]:
        return [(v, w, self.mult(v, w)) for v in self.vertices for w in self.vertices if self.mult(v, w)]

    def induced(self, vs: Sequence[int]) -> "Graph":
        vs = list(vs)
        return Graph(len(vs), tuple(tuple(self.mult(a, b) for b in vs) for a in vs))

    def has_cycle_within(self, vs: Iterable[int]) -> bool:
        vs = set(vs)
        state: dict[int, int] = {}

        def visit(v):
            state[v] = 1
            for w in self.successors(v):
                if w not in vs:
                    continue
                s = state.get(w, 0)
                if s == 1 or (s == 0 and visit(w)):
                    return True
            state[v] = 2
            return False

        return any(state.get(v, 0) == 0 and visit(v) for v in sorted(vs))


# -- hereditary saturated sets --------------------------------------------


def is_hereditary(g: Graph, s: Iterable[int]) -> bool:
    s = frozenset(s)
    return all(g.successors(v) <= s for v in s)


def is_saturated(g: Graph, s: Iterable[int]) -> bool:
    s = frozenset(s)
    return all(v in s for v in g.vertices if not g.is_sink(v) and g.successors(v) <= s)


def saturated_hereditary_closure(g: Graph, s: Iterable[int]) -> frozenset[int]:
    """Smallest hereditary saturated superset of ``s``."""
    out = set(s)
    if any(not 1 <= v <= g.n_vertices for v in out):
        raise ValueError("vertex outside the graph")
    while True:
        stack = list(out)
        while stack:
            v = stack.pop()
            for w in g.successors(v):
                if w not in out:
                    out.add(w)
                    stack.append(w)
        grew = [v for v in g.vertices if v not in out and not g.is_sink(v) and g.successors(v) <= out]
        if not grew:
            return frozenset(out)
        out.update(grew)


def count_simple_cycles_at(g: Graph, v: int, limit: int = 2) -> int:
    """Simple cycles based at ``v`` (parallel edges counted apart), capped at ``limit``."""
    count = 0
    on_path = {v}

    def walk(u: int, weight: int) -> bool:
        nonlocal count
        for w in sorted(g.successors(u)):
            m = weight * g.mult(u, w)
            if w == v:
                count += m
                if count >= limit:
                    return True
            elif w not in on_path:
                on_path.add(w)
                stop = walk(w, m)
                on_path.discard(w)
                if stop:
                    return True
        return False

    walk(v, 1)
    return min(count, limit)


def condition_K(g: Graph) -> tuple[bool, int | None]:
    """``(True, None)`` or ``(False, v)`` with ``v`` the base of exactly one simple cycle."""
    for v in g.vertices:
        if count_simple_cycles_at(g, v) == 1:
            return False, v
    return True, None


def _require_K(g: Graph) -> None:
    ok, witness = condition_K(g)
    if not ok:
        raise ConditionKError(witness)


def _hs_sets(g: Graph) -> list[frozenset[int]]:
    """All hereditary saturated sets, generated as joins of singleton closures."""
    gens = {saturated_hereditary_closure(g, {v}) for v in g.vertices}
    found = {frozenset()}
    frontier = [frozenset()]
    while frontier:
        nxt = []
        for h in frontier:
            for c in gens:
                if c <= h:
                    continue
                j = saturated_hereditary_closure(g, h | c)
                if j not in found:
                    found.add(j)
                    nxt.append(j)
        frontier = nxt
    return sorted(found, key=_key)


def hereditary_saturated_brute_force(g: Graph) -> list[frozenset[int]]:
    """Exhaustive subset filter; exponential, meant as a cross-check."""
    out = []
    vs = list(g.vertices)
    for mask in range(1 << len(vs)):
        s = frozenset(v for i, v in enumerate(vs) if mask >> i & 1)
        if is_hereditary(g, s) and is_saturated(g, s):
            out.append(s)
    return sorted(out, key=_key)


@dataclass(frozen=True)
class IdealLattice:
    """Hereditary saturated sets of a graph ordered by inclusion."""

    graph: Graph
    elements: tuple[frozenset[int], ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, h) -> bool:
        return frozenset(h) in self._index

    @cached_property
    def _index(self) -> dict[frozenset[int], int]:
        return {h: i for i, h in enumerate(self.elements)}

    def join(self, a, b) -> frozenset[int]:
        return saturated_hereditary_closure(self.graph, frozenset(a) | frozenset(b))

    def meet(self, a, b) -> frozenset[int]:
        return frozenset(a) & frozenset(b)

    def lower_covers(self, h) -> list[frozenset[int]]:
        h = frozenset(h)
        below = [k for k in self.elements if k < h]
        return [k for k in below if not any(k < m for m in below)]

    def join_irreducibles(self) -> list[frozenset[int]]:
        return [h for h in self.elements if len(self.lower_covers(h)) == 1]


def ideal_lattice(g: Graph) -> IdealLattice:
    _require_K(g)
    return IdealLattice(g, tuple(_hs_sets(g)))


# -- primitive ideal space ------------------------------------------------


@dataclass(frozen=True)
class PrimPoint:
    min_open: frozenset[int]
    stratum: frozenset[int]
    temperature: int


@dataclass(frozen=True)
class PrimData:
    """Tempered Prim space with the dictionary to the ideal lattice."""

    space: TemperedPoset
    points: tuple[PrimPoint, ...]
    lattice: IdealLattice

    def lattice_element(self, open_set: Iterable[int]) -> frozenset[int]:
        """Hereditary saturated set of an open set of points."""
        h: frozenset[int] = frozenset()
        for x in open_set:
            h = self.lattice.join(h, self.points[x - 1].min_open)
        return h

    def open_set(self, h: Iterable[int]) -> frozenset[int]:
        """Open set of points of a lattice element."""
        h = frozenset(h)
        if h not in self.lattice:
            raise NotLocallyClosedError(f"{sorted(h)} is not hereditary and saturated")
        return frozenset(i + 1 for i, p in enumerate(self.points) if p.min_open <= h)

    def vertex_set(self, y: Iterable[int]) -> frozenset[int]:
        """Vertices of the subquotient over a locally closed set of points.

        Uses the presentation ``up(Y) minus (up(Y) - Y)``.
        """
        y = frozenset(y)
        if not is_locally_closed(self.space.poset, y):
            raise NotLocallyClosedError(f"{sorted(y)} is not locally closed")
        u = self.space.poset.up_closure(y)
        return self.lattice_element(u) - self.lattice_element(u - y)


def _prim(g: Graph) -> PrimData:
    lat = ideal_lattice(g)
    irr = sorted(lat.join_irreducibles(), key=lambda h: (-len(h), sorted(h)))
    pts = []
    for j in irr:
        (low,) = lat.lower_covers(j)
        stratum = j - low
        pts.append(PrimPoint(j, stratum, int(g.has_cycle_within(stratum))))
    k = len(pts)
    pairs = [(x + 1, y + 1) for x in range(k) for y in range(k) if x != y and pts[y].min_open <= pts[x].min_open]
    poset = Poset.from_relation(k, pairs)
    return PrimData(TemperedPoset(poset, tuple(p.temperature for p in pts)), tuple(pts), lat)


def prim_space(g: Graph) -> tuple[TemperedPoset, list[PrimPoint]]:
    """Tempered primitive ideal space; point ``x`` below ``y`` iff ``j_y`` is inside ``j_x``."""
    pd = _prim(g)
    return pd.space, list(pd.points)


def tempered_signature(g: Graph) -> list[Signature]:
    """Canonical signature of each connected component of the tempered Prim space."""
    space = _prim(g).space
    return sorted(canonical_signature(space.induced(c)) for c in space.poset.components())


# -- K-theory -------------------------------------------------------------


def _complex(g: Graph, w: Sequence[int]) -> tuple[TwoTermComplex, tuple[int, ...]]:
    w = sorted(w)
    reg = tuple(v for v in w if not g.is_sink(v))
    rows = []
    for r in w:
        rows.append([g.mult(c, r) - (1 if c == r else 0) for c in reg])
    return TwoTermComplex(IntMatrix.of(rows, len(reg))), reg


@dataclass(frozen=True)
class KPair:
    """``K_0`` (with vertex classes as generator images) and ``K_1`` of a subquotient."""

    vertices: tuple[int, ...]
    k0: FinAbGroup
    k1: FinAbGroup
    regular: tuple[int, ...] = field(default=(), compare=False)
    complex: TwoTermComplex | None = field(default=None, compare=False, repr=False)

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "k0": {**self.k0.to_json(), "generators": [list(v) for v in self.k0.generator_images or ()]},
            "k1": self.k1.to_json(),
        }


def _k_pair_unchecked(g: Graph, w: Iterable[int]) -> KPair:
    vs = tuple(sorted(w))
    cx, reg = _complex(g, vs)
    coker = cx.h0
    images = [coker.classify(tuple(int(i == j) for i in range(len(vs)))) for j in range(len(vs))]
    k0 = FinAbGroup(coker.group.free_rank, coker.group.torsion, tuple(images))
    return KPair(vs, k0, cx.h1.group, reg, cx)


def k_pair(g: Graph, w: Iterable[int]) -> KPair:
    """K-theory of the subquotient on ``w = H' - H`` (hereditary saturated ``H`` inside ``H'``)."""
    w = frozenset(w)
    hs = _hs_sets(g)
    if not any(h <= h2 and h2 - h == w for h2 in hs for h in hs):
        raise NotLocallyClosedError(f"{sorted(w)} is not a difference of nested hereditary saturated sets")
    return _k_pair_unchecked(g, w)


SIX_MAPS = ("iota0", "pi0", "d0", "iota1", "pi1", "d1")


@dataclass(frozen=True)
class SixTerm:
    """The cyclic sequence ``K0(Y1) -> K0(Y2) -> K0(Y3) -> K1(Y1) -> K1(Y2) -> K1(Y3) -> K0(Y1)``.

    ``Y1 = V - U`` (ideal), ``Y2 = W - U``, ``Y3 = W - V`` (quotient), as
    vertex sets. ``exact`` lists exactness at the target of each map.
    """

    vertex_sets: tuple[frozenset[int], frozenset[int], frozenset[int]]
    groups: tuple[KPair, KPair, KPair]
    maps: dict[str, GroupHom]
    exact: tuple[bool, ...]

    def cycle(self) -> list[GroupHom]:
        return [self.maps[k] for k in SIX_MAPS]

    @property
    def is_exact(self) -> bool:
        return all(self.exact)


def _inclusion(rows_big: Sequence[int], rows_small: Sequence[int]) -> IntMatrix:
    pos = {v: i for i, v in enumerate(rows_big)}
    m = [[0] * len(rows_small) for _ in rows_big]
    for j, v in enumerate(rows_small):
        m[pos[v]][j] = 1
    return IntMatrix.of(m, len(rows_small))


def _six_from_sets(g: Graph, x1: frozenset[int], x2: frozenset[int], x3: frozenset[int], cache=None) -> SixTerm:
    def kp(w):
        if cache is None:
            return _k_pair_unchecked(g, w)
        if w not in cache:
            cache[w] = _k_pair_unchecked(g, w)
        return cache[w]

    a, b, c = kp(x1), kp(x2), kp(x3)
    inc = ChainMap(
        a.complex,
        b.complex,
        _inclusion(b.regular, a.regular),
        _inclusion(b.vertices, a.vertices),
    )
    proj = ChainMap(
        b.complex,
        c.complex,
        _inclusion(b.regular, c.regular).T,
        _inclusion(b.vertices, c.vertices).T,
    )
    maps = {
        "iota0": _with_groups(inc.on_h0(), a.k0, b.k0),
        "pi0": _with_groups(proj.on_h0(), b.k0, c.k0),
        "d0": GroupHom.zero(c.k0, a.k1),
        "iota1": inc.on_h1(),
        "pi1": proj.on_h1(),
        "d1": _with_groups(snake_connecting(inc, proj), c.k1, a.k0),
    }
    exact = tuple(cycle_exactness([maps[k] for k in SIX_MAPS]))
    return SixTerm((x1, x2, x3), (a, b, c), maps, exact)


def _with_groups(h: GroupHom, src: FinAbGroup, tgt: FinAbGroup) -> GroupHom:
    return GroupHom(src, tgt, h.matrix)


def six_term(g: Graph, u: Iterable[int], v: Iterable[int], w: Iterable[int]) -> SixTerm:
    """Six-term sequence of the ideal ``V/U`` in ``W/U`` with quotient ``W/V``."""
    u, v, w = frozenset(u), frozenset(v), frozenset(w)
    hs = set(_hs_sets(g))
    for h in (u, v, w):
        if h not in hs:
            raise NotNestedError(f"{sorted(h)} is not hereditary and saturated")
    if not (u <= v <= w):
        raise NotNestedError("expected U inside V inside W")
    return _six_from_sets(g, v - u, w - u, w - v)


# -- filtered K-theory ----------------------------------------------------


@dataclass(frozen=True)
class FilteredK:
    """K-groups over every locally closed set of Prim and the maps between them.

    ``groups`` is keyed by sets of Prim points; ``transforms`` by triples of
    open sets ``(U, V, W)`` with ``U < V < W``, each holding the six maps for
    ``Y1 = V - U``, ``Y2 = W - U``, ``Y3 = W - V`` in the coordinates of
    ``groups``.
    """

    prim: TemperedPoset
    points: tuple[PrimPoint, ...]
    groups: dict[frozenset[int], KPair]
    transforms: dict[tuple[frozenset[int], frozenset[int], frozenset[int]], dict[str, GroupHom]]
    exactness: dict[tuple[frozenset[int], frozenset[int], frozenset[int]], tuple[bool, ...]]

    @property
    def all_exact(self) -> bool:
        return all(all(e) for e in self.exactness.values())

    @cached_property
    def signature(self) -> Signature:
        return raw_signature(self.prim)

    def to_json(self) -> dict:
        def sset(s):
            return sorted(s)

        return {
            "prim": {
                "points": self.prim.n,
                "covers": [list(c) for c in transitive_reduction(self.prim.poset)],
                "temp": list(self.prim.temp),
            },
            "groups": [
                {"subset": sset(y), **kp.to_json()}
                for y, kp in sorted(self.groups.items(), key=lambda kv: _key(kv[0]))
            ],
            "sequences": [
                {
                    "triple": [sset(t) for t in trip],
                    "maps": {k: maps[k].matrix.tolist() for k in SIX_MAPS},
                    "exact": list(self.exactness[trip]),
                }
                for trip, maps in self.transforms.items()
            ],
        }


def _comparison(g: Graph, small: KPair, big: KPair) -> tuple[GroupHom, GroupHom]:
    """Isomorphisms induced by including a subquotient's vertices in an equivalent one."""
    if small.vertices == big.vertices:
        return GroupHom.identity(small.k0), GroupHom.identity(small.k1)
    cm = ChainMap(
        small.complex,
        big.complex,
        _inclusion(big.regular, small.regular),
        _inclusion(big.vertices, small.vertices),
    )
    return _with_groups(cm.on_h0(), small.k0, big.k0), cm.on_h1()


def filtered_k(g: Graph) -> FilteredK:
    pd = _prim(g)
    poset = pd.space.poset
    cache: dict[frozenset[int], KPair] = {}

    def kp(w):
        if w not in cache:
            cache[w] = _k_pair_unchecked(g, w)
        return cache[w]

    groups = {}
    for u, v in locally_closed_sets(poset):
        y = u - v
        groups[y] = kp(pd.lattice_element(u) - pd.lattice_element(v))

    opens = open_sets(poset)
    h_of = {o: pd.lattice_element(o) for o in opens}
    transforms = {}
    exactness = {}
    for u, v, w in combinations(opens, 3):
        if not (u < v < w):
            continue
        st = _six_from_sets(g, h_of[v] - h_of[u], h_of[w] - h_of[u], h_of[w] - h_of[v], cache)
        ys = (v - u, w - u, w - v)
        comps = [_comparison(g, groups[y], rep) for y, rep in zip(ys, st.groups)]
        inv = [(c0.inverse(), c1.inverse()) for c0, c1 in comps]
        # map name -> (source index, source degree, target index, target degree)
        shape = {
            "iota0": (0, 0, 1, 0),
            "pi0": (1, 0, 2, 0),
            "d0": (2, 0, 0, 1),
            "iota1": (0, 1, 1, 1),
            "pi1": (1, 1, 2, 1),
            "d1": (2, 1, 0, 0),
        }
        maps = {}
        for name, (si, sd, ti, td) in shape.items():
            h = inv[ti][td] @ st.maps[name] @ comps[si][sd]
            src = groups[ys[si]].k0 if sd == 0 else groups[ys[si]].k1
            tgt = groups[ys[ti]].k0 if td == 0 else groups[ys[ti]].k1
            maps[name] = GroupHom(src, tgt, h.matrix)
        transforms[(u, v, w)] = maps
        exactness[(u, v, w)] = tuple(cycle_exactness([maps[k] for k in SIX_MAPS]))
    return FilteredK(pd.space, pd.points, groups, transforms, exactness)


# -- isomorphism certificates ---------------------------------------------


class Verdict(enum.Enum):
    VALID = "valid"
    INVALID = "invalid"
    INDETERMINATE = "indeterminate"

    def __bool__(self) -> bool:
        return self is Verdict.VALID


Candidate = Mapping[frozenset[int], tuple[GroupHom, GroupHom]]


def identity_candidate(fk: FilteredK) -> dict[frozenset[int], tuple[GroupHom, GroupHom]]:
    return {y: (GroupHom.identity(kp.k0), GroupHom.identity(kp.k1)) for y, kp in fk.groups.items()}


def _in_semigroup_z(gens: Sequence[int], v: int) -> bool:
    """Whether ``v`` is a non-negative integer combination of ``gens``."""
    gens = [x for x in gens if x]
    if not gens:
        return v == 0
    if any(x > 0 for x in gens) and any(x < 0 for x in gens):
        return v % gcd_all(gens) == 0
    if gens[0] < 0:
        gens, v = [-x for x in gens], -v
    if v < 0:
        return False
    d = gcd_all(gens)
    if v % d:
        return False
    gens = sorted({x // d for x in gens})
    v //= d
    if v >= gens[-1] ** 2:
        return True
    reach = [False] * (v + 1)
    reach[0] = True
    for i in range(1, v + 1):
        reach[i] = any(i >= x and reach[i - x] for x in gens)
    return reach[v]


def _in_cone_cyclic(group: FinAbGroup, gens: Sequence[Sequence[int]], v: Sequence[int]) -> bool:
    if group.dim == 0:
        return True
    if group.free_rank:
        return _in_semigroup_z([x[0] for x in gens], v[0])
    # finite cyclic: non-negative combinations fill the generated subgroup
    d = group.torsion[0]
    return v[0] % gcd_all([x[0] for x in gens] + [d]) == 0


def _homeomorphism(fk1: FilteredK, fk2: FilteredK) -> tuple[int, ...]:
    if fk1.signature != fk2.signature:
        raise ShapeMismatchError(f"Prim spaces differ: {fk1.signature} vs {fk2.signature}")
    p1 = canonical_relabeling(fk1.prim)
    p2 = canonical_relabeling(fk2.prim)
    back = {pos: x for x, pos in enumerate(p2, start=1)}
    return tuple(back[p1[x - 1]] for x in fk1.prim.poset.points)


def iso_certificate_check(
    fk1: FilteredK,
    fk2: FilteredK,
    candidate: Candidate,
    homeomorphism: Sequence[int] | None = None,
) -> Verdict:
    """Check that ``candidate`` is an isomorphism of filtered, ordered K-theory.

    ``candidate[Y] = (alpha0, alpha1)`` for every locally closed ``Y`` of
    ``fk1``; ``homeomorphism[x-1]`` is the image of point ``x`` (by default
    one realising the canonical signatures). Positivity is decided exactly
    on singleton AF strata with cyclic K_0 and is INDETERMINATE on other
    AF strata.
    """
    phi = tuple(homeomorphism) if homeomorphism is not None else _homeomorphism(fk1, fk2)
    if fk1.signature != fk2.signature:
        raise ShapeMismatchError(f"Prim spaces differ: {fk1.signature} vs {fk2.signature}")

    def img(s):
        return frozenset(phi[x - 1] for x in s)

    for y, kp1 in fk1.groups.items():
        if y not in candidate:
            return Verdict.INVALID
        kp2 = fk2.groups[img(y)]
        a0, a1 = candidate[y]
        for a, s, t in ((a0, kp1.k0, kp2.k0), (a1, kp1.k1, kp2.k1)):
            if a.source != s or a.target != t or not a.is_iso():
                return Verdict.INVALID

    for (u, v, w), maps1 in fk1.transforms.items():
        maps2 = fk2.transforms[(img(u), img(v), img(w))]
        ys = (v - u, w - u, w - v)
        ends = {
            "iota0": (0, 0, 1, 0),
            "pi0": (1, 0, 2, 0),
            "d0": (2, 0, 0, 1),
            "iota1": (0, 1, 1, 1),
            "pi1": (1, 1, 2, 1),
            "d1": (2, 1, 0, 0),
        }
        for name, (si, sd, ti, td) in ends.items():
            left = maps2[name] @ candidate[ys[si]][sd]
            right = candidate[ys[ti]][td] @ maps1[name]
            if not left.same_as(right):
                return Verdict.INVALID

    undecided = False
    for x in fk1.prim.poset.points:
        if fk1.prim.temp[x - 1] == 1:
            continue
        y = frozenset({x})
        g1 = fk1.groups[y].k0
        g2 = fk2.groups[img(y)].k0
        a0 = candidate[y][0]
        if not g1.is_cyclic():
            undecided = True
            continue
        inv = a0.inverse()
        gens1, gens2 = g1.generator_images or (), g2.generator_images or ()
        if not all(_in_cone_cyclic(g2, gens2, a0(e)) for e in gens1):
            return Verdict.INVALID
        if not all(_in_cone_cyclic(g1, gens1, inv(e)) for e in gens2):
            return Verdict.INVALID
    return Verdict.INDETERMINATE if undecided else Verdict.VALID
