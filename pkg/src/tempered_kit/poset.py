"""Finite T0 spaces as partial orders on the points ``1..n``.

Convention: ``x <= y`` means ``x`` lies in the closure of ``{y}``. Closed
sets are the hereditary (down-closed) sets and open sets are the up-sets,
so open sets correspond to ideals.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from . import _kernels
from .errors import CycleError

MAX_POINTS = 16

PointSet = frozenset


def _check_point(n: int, i: int) -> None:
    if not isinstance(i, int) or not 1 <= i <= n:
        raise IndexError(f"point {i!r} outside 1..{n}")


@dataclass(frozen=True)
class Poset:
    """A partial order given by its full reflexive relation matrix.

    ``rel[i][j]`` is true iff point ``i+1 <= j+1``.
    """

    n: int
    rel: tuple[tuple[bool, ...], ...]

    def __post_init__(self):
        n = self.n
        if not 1 <= n <= MAX_POINTS:
            raise ValueError(f"point count must lie in 1..{MAX_POINTS}, got {n}")
        rel = tuple(tuple(bool(x) for x in row) for row in self.rel)
        if len(rel) != n or any(len(row) != n for row in rel):
            raise ValueError("relation matrix must be n x n")
        object.__setattr__(self, "rel", rel)
        for i in range(n):
            if not rel[i][i]:
                raise ValueError(f"relation is not reflexive at point {i + 1}")
            for j in range(n):
                if i != j and rel[i][j] and rel[j][i]:
                    raise CycleError(f"points {i + 1} and {j + 1} are mutually related")
                if rel[i][j]:
                    for k in range(n):
                        if rel[j][k] and not rel[i][k]:
                            raise ValueError("relation matrix is not transitive")

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_relation(cls, n: int, pairs: Iterable[Sequence[int]]) -> "Poset":
        """Reflexive-transitive closure of ``pairs`` (1-based ``(i, j)`` meaning i <= j)."""
        if not 1 <= n <= MAX_POINTS:
            raise ValueError(f"point count must lie in 1..{MAX_POINTS}, got {n}")
        m = [[i == j for j in range(n)] for i in range(n)]
        for i, j in pairs:
            _check_point(n, i)
            _check_point(n, j)
            m[i - 1][j - 1] = True
        for k in range(n):
            for i in range(n):
                if m[i][k]:
                    row_k = m[k]
                    row_i = m[i]
                    for j in range(n):
                        if row_k[j]:
                            row_i[j] = True
        for i in range(n):
            for j in range(i + 1, n):
                if m[i][j] and m[j][i]:
                    raise CycleError(f"points {i + 1} and {j + 1} lie on a cycle")
        return cls(n, tuple(tuple(r) for r in m))

    @classmethod
    def from_up_masks(cls, n: int, up: Sequence[int]) -> "Poset":
        """Build from 0-based strict up-set bitmasks (assumed transitive)."""
        return cls(n, tuple(tuple(i == j or bool(up[i] >> j & 1) for j in range(n)) for i in range(n)))

    @classmethod
    def chain(cls, n: int) -> "Poset":
        return cls.from_relation(n, [(i, i + 1) for i in range(1, n)])

    @classmethod
    def antichain(cls, n: int) -> "Poset":
        return cls.from_relation(n, [])

    # -- basic queries ----------------------------------------------------

    def le(self, i: int, j: int) -> bool:
        return self.rel[i - 1][j - 1]

    def lt(self, i: int, j: int) -> bool:
        return i != j and self.rel[i - 1][j - 1]

    @cached_property
    def up_masks(self) -> tuple[int, ...]:
        """0-based bitmask of points strictly above each point."""
        return tuple(
            sum(1 << j for j in range(self.n) if j != i and self.rel[i][j]) for i in range(self.n)
        )

    @property
    def points(self) -> range:
        return range(1, self.n + 1)

    def up(self, x: int) -> frozenset[int]:
        return frozenset(y for y in self.points if self.le(x, y))

    def down(self, x: int) -> frozenset[int]:
        return frozenset(y for y in self.points if self.le(y, x))

    def up_closure(self, s: Iterable[int]) -> frozenset[int]:
        return frozenset(y for x in s for y in self.up(x))

    def down_closure(self, s: Iterable[int]) -> frozenset[int]:
        return frozenset(y for x in s for y in self.down(x))

    def strict_pairs(self) -> list[tuple[int, int]]:
        return [(i, j) for i in self.points for j in self.points if self.lt(i, j)]

    def is_total(self) -> bool:
        return all(self.le(i, j) or self.le(j, i) for i in self.points for j in self.points)

    def minimal_points(self) -> list[int]:
        return [x for x in self.points if self.down(x) == {x}]

    def maximal_points(self) -> list[int]:
        return [x for x in self.points if self.up(x) == {x}]

    def relabel(self, perm: Sequence[int]) -> "Poset":
        """Rename point ``i`` to ``perm[i-1]`` (``perm`` a permutation of 1..n)."""
        pairs = [(perm[i - 1], perm[j - 1]) for i, j in self.strict_pairs()]
        return Poset.from_relation(self.n, pairs)

    def induced(self, pts: Sequence[int]) -> "Poset":
        """Subposet on ``pts``; new point ``k`` is ``pts[k-1]``."""
        pts = list(pts)
        return Poset(len(pts), tuple(tuple(self.le(a, b) for b in pts) for a in pts))

    def components(self) -> list[list[int]]:
        """Connected components of the comparability graph, each sorted."""
        seen: set[int] = set()
        comps = []
        for s in self.points:
            if s in seen:
                continue
            comp = []
            stack = [s]
            seen.add(s)
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in self.points:
                    if y not in seen and (self.le(x, y) or self.le(y, x)):
                        seen.add(y)
                        stack.append(y)
            comps.append(sorted(comp))
        return comps


@dataclass(frozen=True)
class TemperedPoset:
    """A poset together with a temperature in {0, 1} per point.

    Temperature 0 marks AF-type points, 1 purely-infinite-type points.
    """

    poset: Poset
    temp: tuple[int, ...]

    def __post_init__(self):
        temp = tuple(int(t) for t in self.temp)
        if len(temp) != self.poset.n:
            raise ValueError("temperature vector length must equal the point count")
        if any(t not in (0, 1) for t in temp):
            raise ValueError("temperatures must be 0 or 1")
        object.__setattr__(self, "temp", temp)

    @classmethod
    def cold(cls, poset: Poset) -> "TemperedPoset":
        return cls(poset, (0,) * poset.n)

    @property
    def n(self) -> int:
        return self.poset.n

    @property
    def tau_mask(self) -> int:
        return sum(1 << i for i, t in enumerate(self.temp) if t)

    @property
    def af_points(self) -> frozenset[int]:
        return frozenset(i + 1 for i, t in enumerate(self.temp) if t == 0)

    @property
    def pi_points(self) -> frozenset[int]:
        return frozenset(i + 1 for i, t in enumerate(self.temp) if t == 1)

    def relabel(self, perm: Sequence[int]) -> "TemperedPoset":
        temp = [0] * self.n
        for i, t in enumerate(self.temp):
            temp[perm[i] - 1] = t
        return TemperedPoset(self.poset.relabel(perm), tuple(temp))

    def induced(self, pts: Sequence[int]) -> "TemperedPoset":
        return TemperedPoset(self.poset.induced(pts), tuple(self.temp[p - 1] for p in pts))


def from_cover_relations(n: int, covers: Iterable[Sequence[int]]) -> Poset:
    """Poset generated by the 1-based cover pairs ``(i, j)``, meaning i < j."""
    return Poset.from_relation(n, covers)


def transitive_reduction(p: Poset) -> list[tuple[int, int]]:
    """Cover pairs ``(i, j)``: i < j with nothing strictly between."""
    out = []
    for i, j in p.strict_pairs():
        if not any(p.lt(i, k) and p.lt(k, j) for k in p.points):
            out.append((i, j))
    return out


def is_connected(p: Poset) -> bool:
    return len(p.components()) == 1


def _subset_key(s: frozenset[int]) -> tuple:
    return (len(s), sorted(s))


def open_sets(p: Poset) -> list[frozenset[int]]:
    """All up-sets, sorted by size then contents (a linear extension of inclusion)."""
    n = p.n
    up = p.up_masks
    out = []
    for mask in range(1 << n):
        if all(not mask >> i & 1 or up[i] & ~mask == 0 for i in range(n)):
            out.append(frozenset(i + 1 for i in range(n) if mask >> i & 1))
    out.sort(key=_subset_key)
    return out


def closed_sets(p: Poset) -> list[frozenset[int]]:
    """Hereditary sets: complements of the open sets."""
    full = frozenset(p.points)
    return sorted((full - u for u in open_sets(p)), key=_subset_key)


def is_locally_closed(p: Poset, y: Iterable[int]) -> bool:
    """Locally closed in an Alexandrov space means order-convex."""
    y = frozenset(y)
    return all(not (p.le(a, c) and p.le(c, b)) or c in y for a in y for b in y for c in p.points)


def canonical_pair(p: Poset, y: Iterable[int]) -> tuple[frozenset[int], frozenset[int]]:
    """The pair of opens ``(up(Y), up(Y) - Y)`` presenting a locally closed ``Y``."""
    y = frozenset(y)
    u = p.up_closure(y)
    return u, u - y


def locally_closed_sets(p: Poset) -> list[tuple[frozenset[int], frozenset[int]]]:
    """One canonical ``(U, V)`` per distinct difference ``U - V`` of nested opens.

    The empty set is included (as ``(empty, empty)``).
    """
    opens = open_sets(p)
    diffs = {u - v for u in opens for v in opens if v <= u}
    return [canonical_pair(p, d) for d in sorted(diffs, key=_subset_key)]


def linear_extensions(p: Poset) -> list[tuple[int, ...]]:
    """Orderings of the points (1-based) compatible with the order."""
    return [tuple(i + 1 for i in perm) for perm in _kernels.linear_extensions(p.n, p.up_masks)]


def all_isomorphisms(a: TemperedPoset, b: TemperedPoset) -> Iterable[tuple[int, ...]]:
    """Brute-force order- and temperature-preserving bijections ``a -> b``."""
    if a.n != b.n:
        return
    n = a.n
    for perm in itertools.permutations(range(1, n + 1)):
        if any(a.temp[i] != b.temp[perm[i] - 1] for i in range(n)):
            continue
        if all(a.poset.le(i, j) == b.poset.le(perm[i - 1], perm[j - 1]) for i in a.poset.points for j in a.poset.points):
            yield perm
