"""Exact integer matrices: Smith normal form, kernels, solving, cokernels.

Everything is plain Python ``int`` so entries never overflow.  Zero sized
matrices (``0 x n``, ``n x 0``) are legal and behave as expected.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

Vector = tuple[int, ...]


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entries do not match the declared shape")

    # construction -----------------------------------------------------
    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "IntMatrix":
        rows = [tuple(int(x) for x in r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, tuple(rows))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def diagonal(cls, diag: Sequence[int]) -> "IntMatrix":
        n = len(diag)
        return cls(n, n, tuple(tuple(diag[i] if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[int]], rows: int) -> "IntMatrix":
        return cls(rows, len(cols), tuple(tuple(c[i] for c in cols) for i in range(rows)))

    # algebra ------------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.entries)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows, tuple(self.column(j) for j in range(self.cols)))

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        return IntMatrix(self.rows, self.cols, tuple(
            tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)))

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(tuple(-a for a in r) for r in self.entries))

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self + (-other)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = [other.column(j) for j in range(other.cols)]
        return IntMatrix(self.rows, other.cols, tuple(
            tuple(sum(a * b for a, b in zip(r, c)) for c in cols) for r in self.entries))

    def apply(self, v: Sequence[int]) -> Vector:
        if len(v) != self.cols:
            raise ValueError(f"vector of length {len(v)} for {self.rows}x{self.cols} matrix")
        return tuple(sum(a * b for a, b in zip(r, v)) for r in self.entries)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "entries": [list(r) for r in self.entries]}

    @classmethod
    def from_json(cls, data: dict) -> "IntMatrix":
        return cls.from_rows(data["entries"], cols=data["cols"]) if data["rows"] else cls.zeros(0, data["cols"])

    def block_diag(self, other: "IntMatrix") -> "IntMatrix":
        rows = [r + (0,) * other.cols for r in self.entries]
        rows += [(0,) * self.cols + r for r in other.entries]
        return IntMatrix(self.rows + other.rows, self.cols + other.cols, tuple(rows))

    def stack(self, other: "IntMatrix") -> "IntMatrix":
        """Rows of ``self`` followed by rows of ``other``."""
        if self.cols != other.cols:
            raise ValueError("column mismatch")
        return IntMatrix(self.rows + other.rows, self.cols, self.entries + other.entries)


def _mat(rows: list[list[int]], ncols: int) -> IntMatrix:
    return IntMatrix(len(rows), ncols, tuple(tuple(r) for r in rows))


# -- Smith normal form ------------------------------------------------------

@dataclass(frozen=True)
class SmithDecomposition:
    """``M = U @ D @ V`` with ``U``, ``V`` unimodular and ``D`` diagonal.

    ``P = U^-1`` and ``Q = V^-1`` are kept as well, so that ``P @ M @ Q = D``.
    """

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix
    P: IntMatrix
    Q: IntMatrix

    @property
    def diagonal(self) -> Vector:
        return tuple(self.D[i, i] for i in range(min(self.D.shape)))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


def smith_normal_form(M: IntMatrix) -> SmithDecomposition:
    """Smith normal form with unimodular change of basis matrices.

    Pivot rule: the entry of smallest absolute value in the active
    submatrix, ties broken by lowest (row, col).  Deterministic.
    """
    m, n = M.shape
    A = [list(r) for r in M.entries]
    P = [[int(i == j) for j in range(m)] for i in range(m)]
    Pinv = [[int(i == j) for j in range(m)] for i in range(m)]
    Q = [[int(i == j) for j in range(n)] for i in range(n)]
    Qinv = [[int(i == j) for j in range(n)] for i in range(n)]

    # row_i += c * row_j : A, P on the left; Pinv gets col_j -= c * col_i
    def row_add(i, j, c):
        if c == 0:
            return
        A[i] = [a + c * b for a, b in zip(A[i], A[j])]
        P[i] = [a + c * b for a, b in zip(P[i], P[j])]
        for r in Pinv:
            r[j] -= c * r[i]

    def row_swap(i, j):
        if i == j:
            return
        A[i], A[j] = A[j], A[i]
        P[i], P[j] = P[j], P[i]
        for r in Pinv:
            r[i], r[j] = r[j], r[i]

    def row_neg(i):
        A[i] = [-a for a in A[i]]
        P[i] = [-a for a in P[i]]
        for r in Pinv:
            r[i] = -r[i]

    # col_i += c * col_j : A, Q on the right; Qinv gets row_j -= c * row_i
    def col_add(i, j, c):
        if c == 0:
            return
        for r in A:
            r[i] += c * r[j]
        for r in Q:
            r[i] += c * r[j]
        Qinv[j] = [a - c * b for a, b in zip(Qinv[j], Qinv[i])]

    def col_swap(i, j):
        if i == j:
            return
        for r in A:
            r[i], r[j] = r[j], r[i]
        for r in Q:
            r[i], r[j] = r[j], r[i]
        Qinv[i], Qinv[j] = Qinv[j], Qinv[i]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    a = A[i][j]
                    if a and (best is None or abs(a) < best[0]):
                        best = (abs(a), i, j)
            if best is None:
                break
            _, pi, pj = best
            row_swap(t, pi)
            col_swap(t, pj)
            p = A[t][t]
            dirty = False
            for i in range(t + 1, m):
                if A[i][t]:
                    row_add(i, t, -(A[i][t] // p))
                    dirty = dirty or A[i][t] != 0
            for j in range(t + 1, n):
                if A[t][j]:
                    col_add(j, t, -(A[t][j] // p))
                    dirty = dirty or A[t][j] != 0
            if dirty:
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p), None)
            if bad is not None:
                row_add(t, bad[0], 1)
                continue
            break
        if t < m and t < n and A[t][t] < 0:
            row_neg(t)

    return SmithDecomposition(
        U=_mat(Pinv, m), D=_mat(A, n), V=_mat(Qinv, n), P=_mat(P, m), Q=_mat(Q, n))


def kernel_basis(M: IntMatrix) -> list[Vector]:
    """A basis of the integer lattice ``{v : M v = 0}``."""
    snf = smith_normal_form(M)
    r = snf.rank
    return [snf.Q.column(j) for j in range(r, M.cols)]


def solve_integer(M: IntMatrix, c: Sequence[int], snf: Optional[SmithDecomposition] = None) -> Optional[Vector]:
    """An integer ``v`` with ``M v = c``, or ``None`` if there is none.

    The free coordinates are set to zero in the Smith basis, which makes the
    answer canonical (and unique when ``M`` is square and nonsingular).
    """
    if len(c) != M.rows:
        raise ValueError(f"right-hand side of length {len(c)} for {M.rows} rows")
    snf = snf or smith_normal_form(M)
    y = snf.P.apply(c)
    diag = snf.diagonal
    z = [0] * M.cols
    for i, yi in enumerate(y):
        d = diag[i] if i < len(diag) else 0
        if d == 0:
            if yi != 0:
                return None
        else:
            if yi % d:
                return None
            z[i] = yi // d
    return snf.Q.apply(z)


@dataclass(frozen=True)
class CokernelStructure:
    """``Z^k / im(M)`` as ``Z/d_1 + ... + Z/d_r + Z^q``.

    :meth:`project` maps a vector to canonical coordinates: torsion entries
    reduced into ``0..d_i - 1`` followed by the free entries.
    """

    torsion: tuple[int, ...]
    free_rank: int
    _P: IntMatrix
    _torsion_rows: tuple[int, ...]
    _free_rows: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return self._P.rows

    def project(self, c: Sequence[int]) -> Vector:
        if len(c) != self._P.cols:
            raise ValueError(f"vector of length {len(c)} for a rank {self._P.cols} cokernel")
        y = self._P.apply(c)
        tors = tuple(y[i] % d for i, d in zip(self._torsion_rows, self.torsion))
        return tors + tuple(y[i] for i in self._free_rows)

    def is_trivial(self) -> bool:
        return not self.torsion and self.free_rank == 0

    def order(self) -> Optional[int]:
        """Number of elements, ``None`` when infinite."""
        if self.free_rank:
            return None
        out = 1
        for d in self.torsion:
            out *= d
        return out


def cokernel(M: IntMatrix) -> CokernelStructure:
    snf = smith_normal_form(M)
    diag = snf.diagonal
    tors_rows = tuple(i for i, d in enumerate(diag) if d > 1)
    free_rows = tuple(i for i in range(M.rows) if i >= len(diag) or diag[i] == 0)
    return CokernelStructure(
        torsion=tuple(diag[i] for i in tors_rows),
        free_rank=len(free_rows),
        _P=snf.P,
        _torsion_rows=tors_rows,
        _free_rows=free_rows,
    )


def project_to_cokernel(cs: CokernelStructure, c: Sequence[int]) -> Vector:
    return cs.project(c)


def determinant(M: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if not M.is_square():
        raise ValueError(f"determinant of a non-square {M.rows}x{M.cols} matrix")
    n = M.rows
    if n == 0:
        return 1
    A = [list(r) for r in M.entries]
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def integer_inverse(M: IntMatrix) -> Optional[IntMatrix]:
    """The inverse of a unimodular matrix, ``None`` if ``M`` is not invertible over Z."""
    if not M.is_square():
        raise ValueError("inverse of a non-square matrix")
    if abs(determinant(M)) != 1:
        return None
    snf = smith_normal_form(M)
    # M = U D V with D = I  =>  M^-1 = Q P
    return snf.Q @ snf.P
