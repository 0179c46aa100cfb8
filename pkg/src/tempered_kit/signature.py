"""Canonical ``n.a.t`` signatures and shape tags of tempered finite T0 spaces.

The order bits ``a`` are read row by row from the strict upper triangle of
the full order relation, after permuting the points along a linear
extension; ``t`` lists the temperatures in the same order. The signature is
the lexicographically least pair ``(a, t)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from . import _kernels
from .errors import DisconnectedError, ParseError
from .poset import Poset, TemperedPoset, is_connected, transitive_reduction

# Display aliases for order codes the literature writes differently. The
# claw with a greatest element computes to 0x0B but is known as "4.A".
ALIASES: dict[tuple[int, int], str] = {(4, 0x0B): "A"}
_ALIAS_LOOKUP = {(n, label.upper()): a for (n, a), label in ALIASES.items()}

_SIG_RE = re.compile(r"^\s*(\d+)\.([0-9A-Fa-f]+)(?:\.(\d+))?\s*$")


@dataclass(frozen=True, order=True)
class Signature:
    """Point count, order code and (optionally) temperature code."""

    n: int
    a: int
    t: int | None = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("signature needs at least one point")
        if not 0 <= self.a < 1 << (self.n * (self.n - 1) // 2):
            raise ValueError(f"order code {self.a:#x} out of range for n={self.n}")
        if self.t is not None and not 0 <= self.t < 1 << self.n:
            raise ValueError(f"temperature code {self.t} out of range for n={self.n}")

    @property
    def space(self) -> "Signature":
        return Signature(self.n, self.a)

    def temperatures(self) -> tuple[int, ...]:
        """Temperatures of the points in canonical order."""
        if self.t is None:
            raise ValueError("signature carries no temperatures")
        return tuple(self.t >> (self.n - 1 - p) & 1 for p in range(self.n))

    def poset(self) -> Poset:
        """The poset encoded by ``a`` in canonical labelling (points 1..n)."""
        n = self.n
        width = n * (n - 1) // 2
        pairs = []
        idx = 0
        for i in range(1, n):
            for j in range(i + 1, n + 1):
                if self.a >> (width - 1 - idx) & 1:
                    pairs.append((i, j))
                idx += 1
        return Poset.from_relation(n, pairs)

    def tempered_poset(self) -> TemperedPoset:
        return TemperedPoset(self.poset(), self.temperatures())

    def __str__(self) -> str:
        return format_signature(self)


def format_signature(sig: Signature, computed: bool = False) -> str:
    """``n.A.t`` with ``a`` in uppercase hex and ``t`` in decimal.

    Alias labels are used unless ``computed`` is set.
    """
    label = None if computed else ALIASES.get((sig.n, sig.a))
    a_text = label if label is not None else f"{sig.a:X}"
    if sig.t is None:
        return f"{sig.n}.{a_text}"
    return f"{sig.n}.{a_text}.{sig.t}"


def display(sig: Signature) -> str:
    """Alias label, followed by the computed form when they differ."""
    shown = format_signature(sig)
    raw = format_signature(sig, computed=True)
    return shown if shown == raw else f"{shown} (computed {raw})"


def parse_signature(text: str) -> Signature:
    m = _SIG_RE.match(text)
    if not m:
        raise ParseError(f"malformed signature {text!r}")
    n = int(m.group(1))
    a_text = m.group(2).upper()
    a = _ALIAS_LOOKUP.get((n, a_text), int(a_text, 16))
    t = int(m.group(3)) if m.group(3) is not None else None
    try:
        return Signature(n, a, t)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


@lru_cache(maxsize=4096)
def _optimal_extensions(p: Poset) -> tuple[int, tuple[tuple[int, ...], ...]]:
    a, perms = _kernels.minimal_order_code(p.n, p.up_masks)
    return a, tuple(perms)


def _require_connected(p: Poset) -> None:
    if not is_connected(p):
        raise DisconnectedError("space is disconnected; compute per-component signatures")


def raw_signature(tp: TemperedPoset) -> Signature:
    """Least ``(a, t)`` without the connectivity requirement.

    Still a complete isomorphism invariant; used by the census.
    """
    a, perms = _optimal_extensions(tp.poset)
    tau = tp.tau_mask
    t = min(_kernels.temperature_code(tp.n, tau, perm) for perm in perms)
    return Signature(tp.n, a, t)


def canonical_signature(tp: TemperedPoset) -> Signature:
    """Canonical signature of a connected tempered space."""
    _require_connected(tp.poset)
    return raw_signature(tp)


def space_signature(p: Poset) -> Signature:
    """Temperature-free signature ``n.a`` of a connected space."""
    _require_connected(p)
    a, _ = _optimal_extensions(p)
    return Signature(p.n, a)


def component_signatures(tp: TemperedPoset) -> list[Signature]:
    """Canonical signature of each connected component, sorted."""
    return sorted(canonical_signature(tp.induced(c)) for c in tp.poset.components())


def canonical_relabeling(tp: TemperedPoset) -> tuple[int, ...]:
    """A permutation (1-based, point -> position) realising the canonical signature."""
    a, perms = _optimal_extensions(tp.poset)
    tau = tp.tau_mask
    best = min(perms, key=lambda perm: _kernels.temperature_code(tp.n, tau, perm))
    pos = [0] * tp.n
    for p, point in enumerate(best):
        pos[point] = p + 1
    return tuple(pos)


# -- shapes ---------------------------------------------------------------

SHAPE_ORDER = ("L", "A", "F", "Y", "O", "OTHER")


@dataclass(frozen=True)
class Shape:
    """Primary tag plus the full tag set, e.g. ``Shape("A", {"A", "F"})``."""

    primary: str
    tags: frozenset[str]

    def __str__(self) -> str:
        return ",".join(f"[{t}]" for t in SHAPE_ORDER if t in self.tags)


def _hasse_adjacency(p: Poset) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {x: set() for x in p.points}
    for i, j in transitive_reduction(p):
        adj[i].add(j)
        adj[j].add(i)
    return adj


def _is_fan(p: Poset) -> bool:
    for e in p.points:
        if p.up(e) != frozenset(p.points) and p.down(e) != frozenset(p.points):
            continue
        rest = [x for x in p.points if x != e]
        sub = p.induced(rest)
        if all(sub.induced(c).is_total() for c in sub.components()):
            return True
    return False


def classify_shape(p: Poset) -> Shape:
    """Shape tags of a connected space.

    L: total order. A: the Hasse diagram is a path. F: removing a least or
    greatest element leaves disjoint chains; reported alongside A only when
    the Hasse diagram is a star. O: the Hasse diagram is a cycle. Y: a tree
    with a single branch point of degree three. Anything else is OTHER.
    """
    _require_connected(p)
    adj = _hasse_adjacency(p)
    degrees = sorted(len(v) for v in adj.values())
    edges = sum(degrees) // 2
    is_tree = edges == p.n - 1
    is_path = is_tree and (p.n == 1 or degrees[-1] <= 2)
    is_star = is_tree and p.n >= 3 and degrees[-1] == p.n - 1
    tags = set()
    if p.is_total():
        tags.add("L")
    if is_path:
        tags.add("A")
    if "L" not in tags and _is_fan(p) and (not is_path or is_star):
        tags.add("F")
    if not tags:
        if not is_tree and all(d == 2 for d in degrees):
            tags.add("O")
        elif is_tree and sum(1 for d in degrees if d >= 3) == 1 and degrees[-1] == 3:
            tags.add("Y")
        else:
            tags.add("OTHER")
    primary = next(t for t in SHAPE_ORDER if t in tags)
    return Shape(primary, frozenset(tags))


def is_accordion(p: Poset) -> bool:
    return "A" in classify_shape(p).tags
