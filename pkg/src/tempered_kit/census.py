"""Census of finite T0 spaces and tempered spaces up to homeomorphism."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from . import _kernels
from .errors import NonIntegralError
from .poset import Poset, is_connected
from .signature import Signature

MAX_CENSUS_POINTS = 6


def _check_n(n: int) -> None:
    if not 1 <= n <= MAX_CENSUS_POINTS:
        raise ValueError(f"census supports 1..{MAX_CENSUS_POINTS} points, got {n}")


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("TEMPERED_KIT_THREADS", "1")))
    except ValueError:
        return 1


def _natural_posets(n: int) -> list[tuple[int, ...]]:
    """Every naturally labelled poset on 0..n-1 as a tuple of strict down-masks.

    Point ``k`` is added on top of a poset on ``0..k-1`` with any down-closed
    set of predecessors, so each naturally labelled order appears once.
    """
    layer: list[tuple[int, ...]] = [()]
    for k in range(n):
        nxt = []
        for down in layer:
            for mask in range(1 << k):
                if all(not mask >> i & 1 or down[i] & ~mask == 0 for i in range(k)):
                    nxt.append(down + (mask,))
        layer = nxt
    return layer


def _up_from_down(down: Sequence[int]) -> tuple[int, ...]:
    n = len(down)
    up = [0] * n
    for j, m in enumerate(down):
        for i in range(n):
            if m >> i & 1:
                up[i] |= 1 << j
    return tuple(up)


@lru_cache(maxsize=None)
def _order_codes(n: int) -> tuple[int, ...]:
    """Sorted minimal order codes, one per homeomorphism class."""
    codes = set()
    for down in _natural_posets(n):
        a, _ = _kernels.minimal_order_code(n, _up_from_down(down))
        codes.add(a)
    return tuple(sorted(codes))


def enumerate_posets(n: int, connected_only: bool = False) -> list[Poset]:
    """One canonically labelled poset per homeomorphism class, sorted by order code."""
    _check_n(n)
    out = []
    for a in _order_codes(n):
        p = Signature(n, a).poset()
        if not connected_only or is_connected(p):
            out.append(p)
    return out


def enumerate_spaces(n: int, connected_only: bool = False) -> list[Signature]:
    """Temperature-free signatures ``n.a``, sorted."""
    _check_n(n)
    out = []
    for a in _order_codes(n):
        sig = Signature(n, a)
        if not connected_only or is_connected(sig.poset()):
            out.append(sig)
    return out


def _temperings(p: Poset) -> list[int]:
    _, perms = _kernels.minimal_order_code(p.n, p.up_masks)
    return sorted(set(_kernels.minimal_temperature_codes(p.n, perms)))


def enumerate_tempered(n: int, connected_only: bool = False) -> list[Signature]:
    """Every tempered space on ``n`` points as a sorted list of signatures."""
    posets = enumerate_posets(n, connected_only)
    workers = _threads()
    if workers > 1 and len(posets) > 16:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            temps = list(pool.map(_temperings, posets, chunksize=8))
    else:
        temps = [_temperings(p) for p in posets]
    out = []
    for p, ts in zip(posets, temps):
        a = _kernels.minimal_order_code(p.n, p.up_masks)[0]
        out.extend(Signature(n, a, t) for t in ts)
    return sorted(out)


@dataclass(frozen=True)
class CensusRow:
    n: int
    spaces: int
    connected_spaces: int
    tempered: int
    connected_tempered: int


def census_row(n: int) -> CensusRow:
    """Counts by direct connectivity filtering."""
    posets = enumerate_posets(n)
    conn = [is_connected(p) for p in posets]
    counts = [len(_temperings(p)) for p in posets]
    return CensusRow(
        n=n,
        spaces=len(posets),
        connected_spaces=sum(conn),
        tempered=sum(counts),
        connected_tempered=sum(c for c, ok in zip(counts, conn) if ok),
    )


def census(max_n: int = MAX_CENSUS_POINTS) -> list[CensusRow]:
    return [census_row(n) for n in range(1, max_n + 1)]


# -- Euler transform ------------------------------------------------------


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def euler_transform(c: Sequence[int]) -> list[int]:
    """Counts of all structures from counts of connected ones.

    ``1 + sum a_n x^n = prod_k (1 - x^k)^(-c_k)``, sequences indexed from 1.
    """
    c = list(c)
    b = [sum(d * c[d - 1] for d in _divisors(n)) for n in range(1, len(c) + 1)]
    a: list[int] = []
    for n in range(1, len(c) + 1):
        s = b[n - 1] + sum(b[k - 1] * a[n - k - 1] for k in range(1, n))
        a.append(s // n)
    return a


def inverse_euler_transform(a: Sequence[int]) -> list[int]:
    """Counts of connected structures from counts of all structures."""
    a = list(a)
    b: list[int] = []
    for n in range(1, len(a) + 1):
        b.append(n * a[n - 1] - sum(b[k - 1] * a[n - k - 1] for k in range(1, n)))
    c: list[int] = []
    for n in range(1, len(a) + 1):
        rest = b[n - 1] - sum(d * c[d - 1] for d in _divisors(n) if d < n)
        if rest % n:
            raise NonIntegralError(f"term {n} is not integral ({rest}/{n})")
        c.append(rest // n)
    return c
