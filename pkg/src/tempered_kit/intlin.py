"""Exact integer linear algebra for finitely generated abelian groups.

Smith normal form with tracked unimodular transforms, kernels and cokernels
presented in invariant-factor coordinates, homomorphisms between such
groups, and the connecting map of the snake lemma for two-term complexes.

Group elements are integer vectors: free coordinates first, then one
residue per invariant factor.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from functools import cached_property, lru_cache
from math import gcd
from typing import Iterable, Sequence

from .errors import NonCommutingError, NotExactError


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix with explicit shape (zero rows/columns allowed)."""

    rows: int
    cols: int
    data: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        data = tuple(tuple(int(x) for x in row) for row in self.data)
        if len(data) != self.rows or any(len(r) != self.cols for r in data):
            raise ValueError(f"data does not match shape {self.rows}x{self.cols}")
        object.__setattr__(self, "data", data)

    @classmethod
    def _trusted(cls, rows: int, cols: int, data: tuple) -> "IntMatrix":
        """Skip validation for data built internally from ints."""
        m = object.__new__(cls)
        object.__setattr__(m, "rows", rows)
        object.__setattr__(m, "cols", cols)
        object.__setattr__(m, "data", data)
        return m

    @classmethod
    def of(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("column count required for a matrix without rows")
            cols = len(rows[0])
        return cls(len(rows), cols, tuple(tuple(r) for r in rows))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return _identity(n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> "IntMatrix":
        if any(len(c) != rows for c in columns):
            raise ValueError("column length does not match row count")
        return cls._trusted(rows, len(columns), tuple(tuple(int(c[i]) for c in columns) for i in range(rows)))

    @classmethod
    def diagonal(cls, entries: Sequence[int]) -> "IntMatrix":
        n = len(entries)
        return cls(n, n, tuple(tuple(entries[i] if i == j else 0 for j in range(n)) for i in range(n)))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.data[i][j]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.data)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    @property
    def T(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows, tuple(zip(*self.data)) if self.rows else tuple(() for _ in range(self.cols)))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        ocols = other.columns()
        return IntMatrix._trusted(
            self.rows,
            other.cols,
            tuple(tuple(sum(a * b for a, b in zip(row, c)) for c in ocols) for row in self.data),
        )

    def apply(self, vec: Sequence[int]) -> tuple[int, ...]:
        if len(vec) != self.cols:
            raise ValueError("vector length does not match column count")
        return tuple(sum(a * b for a, b in zip(row, vec)) for row in self.data)

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        self._same_shape(other)
        return IntMatrix(self.rows, self.cols, tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.data, other.data)))

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        self._same_shape(other)
        return IntMatrix(self.rows, self.cols, tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.data, other.data)))

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(tuple(-a for a in r) for r in self.data))

    def _same_shape(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")

    def hstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        return IntMatrix._trusted(self.rows, self.cols + other.cols, tuple(a + b for a, b in zip(self.data, other.data)))

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "IntMatrix":
        rows, cols = list(rows), list(cols)
        return IntMatrix._trusted(len(rows), len(cols), tuple(tuple(self.data[i][j] for j in cols) for i in rows))

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.data for x in row)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.data]

    def det(self) -> int:
        """Determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        a = self.tolist()
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k]:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1] if n else 1


@lru_cache(maxsize=64)
def _identity(n: int) -> IntMatrix:
    return IntMatrix(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))


# -- Smith normal form ----------------------------------------------------


@dataclass(frozen=True)
class SmithDecomposition:
    """``U @ M @ V == D`` with ``U``, ``V`` unimodular and ``D`` diagonal.

    The nonzero diagonal entries come first, are positive and form a
    divisibility chain. ``U_inv`` and ``V_inv`` are the exact inverses.
    """

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix
    U_inv: IntMatrix
    V_inv: IntMatrix

    @cached_property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.D[i, i] for i in range(min(self.D.rows, self.D.cols)))

    @cached_property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        return self.diagonal[: self.rank]


@lru_cache(maxsize=8192)
def smith(M: IntMatrix) -> SmithDecomposition:
    """Smith normal form. Pivot rule: least nonzero absolute value, then lowest index."""
    m, n = M.rows, M.cols
    D = M.tolist()
    U = IntMatrix.identity(m).tolist()
    Ui = IntMatrix.identity(m).tolist()
    V = IntMatrix.identity(n).tolist()
    Vi = IntMatrix.identity(n).tolist()

    def swap_rows(a, b):
        if a != b:
            D[a], D[b] = D[b], D[a]
            U[a], U[b] = U[b], U[a]
            for row in Ui:
                row[a], row[b] = row[b], row[a]

    def swap_cols(a, b):
        if a != b:
            for row in D:
                row[a], row[b] = row[b], row[a]
            for row in V:
                row[a], row[b] = row[b], row[a]
            Vi[a], Vi[b] = Vi[b], Vi[a]

    def add_row(target, src, c):
        # row_target += c * row_src
        D[target] = [x + c * y for x, y in zip(D[target], D[src])]
        U[target] = [x + c * y for x, y in zip(U[target], U[src])]
        for row in Ui:
            row[src] -= c * row[target]

    def add_col(target, src, c):
        # col_target += c * col_src
        for row in D:
            row[target] += c * row[src]
        for row in V:
            row[target] += c * row[src]
        Vi[src] = [x - c * y for x, y in zip(Vi[src], Vi[target])]

    t = 0
    while t < min(m, n):
        piv = None
        for i in range(t, m):
            for j in range(t, n):
                v = D[i][j]
                if v and (piv is None or abs(v) < abs(D[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            p = D[t][t]
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // p))
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // p))
            # remainders left in row/column t: move the smallest to the pivot
            best = None
            for i in range(t + 1, m):
                if D[i][t] and (best is None or abs(D[i][t]) < abs(best[2])):
                    best = ("r", i, D[i][t])
            for j in range(t + 1, n):
                if D[t][j] and (best is None or abs(D[t][j]) < abs(best[2])):
                    best = ("c", j, D[t][j])
            if best is not None:
                if best[0] == "r":
                    swap_rows(t, best[1])
                else:
                    swap_cols(t, best[1])
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
            for row in Ui:
                row[t] = -row[t]
        t += 1

    def frozen(rows, cols):
        return IntMatrix._trusted(len(rows), cols, tuple(tuple(r) for r in rows))

    return SmithDecomposition(
        U=frozen(U, m),
        D=frozen(D, n),
        V=frozen(V, n),
        U_inv=frozen(Ui, m),
        V_inv=frozen(Vi, n),
    )


def solve(A: IntMatrix, b: Sequence[int]) -> tuple[int, ...] | None:
    """An integer solution of ``A x = b``, or None if there is none."""
    s = smith(A)
    c = s.U.apply(b)
    y = [0] * A.cols
    for i, ci in enumerate(c):
        d = s.diagonal[i] if i < len(s.diagonal) else 0
        if d == 0:
            if ci:
                return None
        elif ci % d:
            return None
        else:
            y[i] = ci // d
    return s.V.apply(y)


def in_lattice(gens: IntMatrix, v: Sequence[int]) -> bool:
    """Whether ``v`` is an integer combination of the columns of ``gens``."""
    return solve(gens, v) is not None


def kernel_basis(M: IntMatrix) -> IntMatrix:
    """Columns form a Z-basis of ``{x : M x = 0}``."""
    s = smith(M)
    return s.V.submatrix(range(M.cols), range(s.rank, M.cols))


def rank(M: IntMatrix) -> int:
    return smith(M).rank


# -- groups ---------------------------------------------------------------


def invariant_factors_of(orders: Iterable[int]) -> tuple[int, tuple[int, ...]]:
    """Normalise a direct sum of cyclic groups Z/k (k=0 meaning Z)."""
    orders = list(orders)
    if not orders:
        return 0, ()
    s = smith(IntMatrix.diagonal(orders))
    free = sum(1 for d in s.diagonal if d == 0)
    return free, tuple(d for d in s.invariant_factors if d > 1)


@dataclass(frozen=True)
class FinAbGroup:
    """``Z^free_rank + Z/d_1 + ... + Z/d_k`` with ``d_1 | d_2 | ...``.

    ``generator_images`` optionally records distinguished elements (for
    K_0 of a graph algebra, the vertex classes that generate the positive
    cone), as coordinate vectors.
    """

    free_rank: int
    torsion: tuple[int, ...] = ()
    generator_images: tuple[tuple[int, ...], ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        torsion = tuple(int(d) for d in self.torsion)
        object.__setattr__(self, "torsion", torsion)
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        if any(d < 2 for d in torsion):
            raise ValueError("invariant factors must be at least 2")
        if any(b % a for a, b in zip(torsion, torsion[1:])):
            raise ValueError("invariant factors must form a divisibility chain")
        if self.generator_images is not None:
            imgs = tuple(self.reduce(v) for v in self.generator_images)
            object.__setattr__(self, "generator_images", imgs)

    @classmethod
    def free(cls, n: int) -> "FinAbGroup":
        return cls(n)

    @classmethod
    def from_orders(cls, free_rank: int, orders: Iterable[int]) -> "FinAbGroup":
        free, tors = invariant_factors_of([0] * free_rank + list(orders))
        return cls(free, tors)

    @property
    def dim(self) -> int:
        return self.free_rank + len(self.torsion)

    @property
    def moduli(self) -> tuple[int, ...]:
        return (0,) * self.free_rank + self.torsion

    def reduce(self, vec: Sequence[int]) -> tuple[int, ...]:
        if len(vec) != self.dim:
            raise ValueError(f"element has {len(vec)} coordinates, group has {self.dim}")
        return tuple(x % m if m else x for x, m in zip(vec, self.moduli))

    def zero(self) -> tuple[int, ...]:
        return (0,) * self.dim

    def relations(self) -> IntMatrix:
        """Columns generate the relation lattice in coordinate space."""
        cols = []
        for i, m in enumerate(self.moduli):
            if m:
                cols.append(tuple(m if k == i else 0 for k in range(self.dim)))
        return IntMatrix.from_columns(cols, self.dim)

    @property
    def order(self) -> int | None:
        """Group order, or None when infinite."""
        if self.free_rank:
            return None
        out = 1
        for d in self.torsion:
            out *= d
        return out

    def is_trivial(self) -> bool:
        return self.dim == 0

    def is_cyclic(self) -> bool:
        return self.dim <= 1

    def without_generators(self) -> "FinAbGroup":
        return FinAbGroup(self.free_rank, self.torsion)

    def __str__(self) -> str:
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {"rank": self.free_rank, "torsion": list(self.torsion)}


def iso_groups(G: FinAbGroup, H: FinAbGroup) -> bool:
    return G.free_rank == H.free_rank and G.torsion == H.torsion


@dataclass(frozen=True)
class GroupHom:
    """Homomorphism given by a matrix on coordinates, normalised modulo the target."""

    source: FinAbGroup
    target: FinAbGroup
    matrix: IntMatrix

    def __post_init__(self):
        mat = self.matrix
        if (mat.rows, mat.cols) != (self.target.dim, self.source.dim):
            raise ValueError(
                f"matrix {mat.rows}x{mat.cols} does not fit {self.source} -> {self.target}"
            )
        cols = [self.target.reduce(c) for c in mat.columns()]
        for j, d in enumerate(self.source.moduli):
            if d and any(self.target.reduce(tuple(d * x for x in cols[j]))):
                raise ValueError(f"not well defined: generator {j} of order {d} maps to an element of other order")
        object.__setattr__(self, "matrix", IntMatrix.from_columns(cols, self.target.dim))

    @classmethod
    def identity(cls, G: FinAbGroup) -> "GroupHom":
        return cls(G, G, IntMatrix.identity(G.dim))

    @classmethod
    def zero(cls, G: FinAbGroup, H: FinAbGroup) -> "GroupHom":
        return cls(G, H, IntMatrix.zeros(H.dim, G.dim))

    def __call__(self, vec: Sequence[int]) -> tuple[int, ...]:
        return self.target.reduce(self.matrix.apply(vec))

    def __matmul__(self, other: "GroupHom") -> "GroupHom":
        """Composition ``self after other``."""
        if not iso_groups(other.target, self.source):
            raise ValueError("composition of non-matching homomorphisms")
        return GroupHom(other.source, self.target, self.matrix @ other.matrix)

    def __neg__(self) -> "GroupHom":
        return GroupHom(self.source, self.target, -self.matrix)

    def same_as(self, other: "GroupHom") -> bool:
        return self.matrix == other.matrix

    def is_zero(self) -> bool:
        return self.matrix.is_zero()

    def _image_generators(self) -> IntMatrix:
        return self.matrix.hstack(self.target.relations())

    def kernel_generators(self) -> list[tuple[int, ...]]:
        """Generators of the kernel lattice in source coordinates."""
        basis = kernel_basis(self._image_generators())
        return [c[: self.source.dim] for c in basis.columns()]

    def is_injective(self) -> bool:
        return all(not any(self.source.reduce(v)) for v in self.kernel_generators())

    def is_surjective(self) -> bool:
        gens = self._image_generators()
        return all(
            in_lattice(gens, tuple(int(i == j) for i in range(self.target.dim))) for j in range(self.target.dim)
        )

    def is_iso(self) -> bool:
        return self.is_injective() and self.is_surjective()

    def inverse(self) -> "GroupHom":
        if not self.is_iso():
            raise ValueError("homomorphism is not invertible")
        gens = self._image_generators()
        cols = []
        for j in range(self.target.dim):
            x = solve(gens, tuple(int(i == j) for i in range(self.target.dim)))
            cols.append(x[: self.source.dim])
        return GroupHom(self.target, self.source, IntMatrix.from_columns(cols, self.source.dim))

    def in_image(self, vec: Sequence[int]) -> bool:
        return in_lattice(self._image_generators(), vec)


def exact_at(f: GroupHom, g: GroupHom) -> bool:
    """Whether ``image(f) == kernel(g)`` inside ``g.source``."""
    if not (g @ f).is_zero():
        return False
    return all(f.in_image(v) for v in g.kernel_generators())


def cycle_exactness(maps: Sequence[GroupHom]) -> list[bool]:
    """Exactness at each node of a cyclic sequence ``maps[0], maps[1], ...``.

    Entry ``k`` reports exactness at the target of ``maps[k]``.
    """
    k = len(maps)
    return [exact_at(maps[i], maps[(i + 1) % k]) for i in range(k)]


# -- presentations --------------------------------------------------------


@dataclass(frozen=True)
class Cokernel:
    """``Z^rows / image(M)`` with projection and lift matrices.

    ``proj`` sends ambient vectors to group coordinates; ``lift`` sends each
    group generator to an ambient representative.
    """

    group: FinAbGroup
    proj: IntMatrix
    lift: IntMatrix

    def classify(self, vec: Sequence[int]) -> tuple[int, ...]:
        return self.group.reduce(self.proj.apply(vec))


@dataclass(frozen=True)
class Kernel:
    """``{x : M x = 0}`` as a free group with basis and coordinate matrices."""

    group: FinAbGroup
    basis: IntMatrix
    coords: IntMatrix


def _present(M: IntMatrix) -> tuple[Cokernel, Kernel]:
    s = smith(M)
    diag = s.diagonal
    free_idx = list(range(s.rank, M.rows))
    tors_idx = [i for i in range(s.rank) if diag[i] > 1]
    idx = free_idx + tors_idx
    group = FinAbGroup(len(free_idx), tuple(diag[i] for i in tors_idx))
    coker = Cokernel(
        group=group,
        proj=s.U.submatrix(idx, range(M.rows)),
        lift=s.U_inv.submatrix(range(M.rows), idx),
    )
    kidx = list(range(s.rank, M.cols))
    ker = Kernel(
        group=FinAbGroup(len(kidx)),
        basis=s.V.submatrix(range(M.cols), kidx),
        coords=s.V_inv.submatrix(kidx, range(M.cols)),
    )
    return coker, ker


def cokernel(M: IntMatrix) -> Cokernel:
    return _present(M)[0]


def kernel(M: IntMatrix) -> Kernel:
    return _present(M)[1]


@dataclass(frozen=True)
class TwoTermComplex:
    """``C1 --d--> C0`` of free modules; H0 = coker d, H1 = ker d."""

    d: IntMatrix

    @cached_property
    def _pres(self):
        return _present(self.d)

    @property
    def h0(self) -> Cokernel:
        return self._pres[0]

    @property
    def h1(self) -> Kernel:
        return self._pres[1]

    @property
    def n0(self) -> int:
        return self.d.rows

    @property
    def n1(self) -> int:
        return self.d.cols


@dataclass(frozen=True)
class ChainMap:
    """Chain map ``(f1, f0)`` between two-term complexes; the square is checked."""

    source: TwoTermComplex
    target: TwoTermComplex
    f1: IntMatrix
    f0: IntMatrix

    def __post_init__(self):
        if self.target.d @ self.f1 != self.f0 @ self.source.d:
            raise NonCommutingError("chain map square does not commute")

    def on_h0(self) -> GroupHom:
        src, tgt = self.source.h0, self.target.h0
        return GroupHom(src.group, tgt.group, tgt.proj @ self.f0 @ src.lift)

    def on_h1(self) -> GroupHom:
        src, tgt = self.source.h1, self.target.h1
        return GroupHom(src.group, tgt.group, tgt.coords @ self.f1 @ src.basis)


def induced_map(
    f_amb: IntMatrix,
    M_src: IntMatrix,
    M_dst: IntMatrix,
    f_cols: IntMatrix | None = None,
) -> tuple[GroupHom, GroupHom]:
    """Homomorphisms induced on cokernels and kernels by an ambient map.

    ``f_cols`` is the map on column spaces; when omitted it is solved for,
    and NonCommutingError is raised if no integer solution exists.
    """
    if f_cols is None:
        target = f_amb @ M_src
        cols = []
        for c in target.columns():
            x = solve(M_dst, c)
            if x is None:
                raise NonCommutingError("ambient map does not send relations to relations")
            cols.append(x)
        f_cols = IntMatrix.from_columns(cols, M_dst.cols)
    cm = ChainMap(TwoTermComplex(M_src), TwoTermComplex(M_dst), f_cols, f_amb)
    return cm.on_h0(), cm.on_h1()


def _free_exact(f: IntMatrix, g: IntMatrix) -> bool:
    """``0 -> Z^a --f--> Z^b --g--> Z^c -> 0`` exact.

    Equivalent to: ``g f = 0``, ``f`` injective with torsion-free cokernel,
    ``g`` surjective and ``a + c = b`` (two saturated sublattices of equal
    rank, one inside the other, coincide).
    """
    if f.rows != g.cols or f.cols + g.rows != f.rows or not (g @ f).is_zero():
        return False
    sf, sg = smith(f), smith(g)
    return (
        sf.rank == f.cols
        and all(d == 1 for d in sf.invariant_factors)
        and sg.rank == g.rows
        and all(d == 1 for d in sg.invariant_factors)
    )


def snake_connecting(f: ChainMap, g: ChainMap) -> GroupHom:
    """Connecting map ``H1(quotient) -> H0(ideal)`` for ``0 -> A --f--> B --g--> C -> 0``."""
    A, B, C = f.source, f.target, g.target
    if g.source != B:
        raise NotExactError("chain maps do not compose")
    if not (_free_exact(f.f1, g.f1) and _free_exact(f.f0, g.f0)):
        raise NotExactError("rows are not short exact")
    cols = []
    for z in C.h1.basis.columns():
        y = solve(g.f1, z)
        w = B.d.apply(y)
        x = solve(f.f0, w)
        if y is None or x is None:  # pragma: no cover - excluded by the exactness check
            raise NotExactError("lifting failed")
        cols.append(A.h0.proj.apply(x))
    return GroupHom(C.h1.group, A.h0.group, IntMatrix.from_columns(cols, A.h0.group.dim))


def with_generators(G: FinAbGroup, images: Iterable[Sequence[int]]) -> FinAbGroup:
    return replace(G, generator_images=tuple(tuple(v) for v in images))


def gcd_all(values: Iterable[int]) -> int:
    g = 0
    for v in values:
        g = gcd(g, v)
    return g
