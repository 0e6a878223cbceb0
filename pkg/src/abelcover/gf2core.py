"""Dense linear algebra over GF(2) on bit-packed rows.

Rows are packed into little-endian uint64 words: column ``j`` lives in word
``j // 64`` at bit ``j % 64``.  Vectors at the API boundary are plain numpy
uint8 arrays of 0/1 values.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

_WORD = 64
_ONE = np.uint64(1)


def _nwords(cols: int) -> int:
    return (cols + _WORD - 1) // _WORD


def _pack(dense: np.ndarray) -> np.ndarray:
    rows, cols = dense.shape
    nw = _nwords(cols)
    padded = np.zeros((rows, nw * _WORD), dtype=np.uint8)
    padded[:, :cols] = dense & 1
    by = np.packbits(padded, axis=1, bitorder="little")
    return by.view("<u8").reshape(rows, nw).astype(np.uint64, copy=True)


def _unpack(data: np.ndarray, cols: int) -> np.ndarray:
    rows = data.shape[0]
    if rows == 0 or cols == 0:
        return np.zeros((rows, cols), dtype=np.uint8)
    by = np.ascontiguousarray(data.astype("<u8")).view(np.uint8).reshape(rows, -1)
    return np.unpackbits(by, axis=1, bitorder="little")[:, :cols].copy()


def as_bitvector(v: Iterable[int] | np.ndarray, length: int | None = None) -> np.ndarray:
    """Coerce a 0/1 sequence into a uint8 numpy vector, checking its length."""
    arr = np.asarray(list(v) if not isinstance(v, np.ndarray) else v, dtype=np.int64).reshape(-1)
    arr = (arr & 1).astype(np.uint8)
    if length is not None and arr.shape[0] != length:
        raise ValueError(f"vector length {arr.shape[0]} does not match {length}")
    return arr


class BitMatrix:
    """Immutable GF(2) matrix with packed rows."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: np.ndarray | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        nw = _nwords(cols)
        if data is None:
            data = np.zeros((rows, nw), dtype=np.uint64)
        if data.shape != (rows, nw):
            raise ValueError("packed data does not match dimensions")
        data = np.array(data, dtype=np.uint64, copy=True)
        data.flags.writeable = False
        self.rows = rows
        self.cols = cols
        self.data = data

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence[int]] | np.ndarray, cols: int | None = None) -> "BitMatrix":
        arr = np.asarray(dense, dtype=np.int64)
        if arr.size == 0 and arr.ndim < 2:
            arr = arr.reshape(0, cols or 0)
        if arr.ndim != 2:
            raise ValueError("dense input must be two-dimensional")
        if cols is not None and arr.shape[1] != cols:
            raise ValueError("column count mismatch")
        arr = (arr & 1).astype(np.uint8)
        return cls(arr.shape[0], arr.shape[1], _pack(arr))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls.from_dense(np.eye(n, dtype=np.uint8), cols=n)

    def to_dense(self) -> np.ndarray:
        return _unpack(self.data, self.cols)

    def __getitem__(self, idx: tuple[int, int]) -> int:
        i, j = idx
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError("matrix index out of range")
        return int((self.data[i, j // _WORD] >> np.uint64(j % _WORD)) & _ONE)

    def row(self, i: int) -> np.ndarray:
        return _unpack(self.data[i : i + 1], self.cols)[0]

    def transpose(self) -> "BitMatrix":
        return BitMatrix.from_dense(self.to_dense().T, cols=self.rows)

    def matvec(self, x: Iterable[int] | np.ndarray) -> np.ndarray:
        x = as_bitvector(x, self.cols)
        return (self.to_dense().astype(np.int64) @ x.astype(np.int64) & 1).astype(np.uint8)

    def __matmul__(self, other: "BitMatrix") -> "BitMatrix":
        return matmul(self, other)

    def vstack(self, other: "BitMatrix") -> "BitMatrix":
        if self.cols != other.cols:
            raise ValueError("column count mismatch")
        return BitMatrix(self.rows + other.rows, self.cols, np.vstack([self.data, other.data]))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols and bool(np.array_equal(self.data, other.data))

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.data.tobytes()))

    def __repr__(self) -> str:
        return f"BitMatrix({self.rows}x{self.cols})"


def matmul(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """Matrix product over GF(2)."""
    if a.cols != b.rows:
        raise ValueError("inner dimensions do not agree")
    if a.rows == 0 or b.cols == 0 or a.cols == 0:
        return BitMatrix.zeros(a.rows, b.cols)
    # float32 holds integers up to 2**24 exactly, so chunk the inner dimension
    left = a.to_dense().astype(np.float32)
    right = b.to_dense().astype(np.float32)
    acc = np.zeros((a.rows, b.cols), dtype=np.int64)
    step = 1 << 23
    for start in range(0, a.cols, step):
        acc += (left[:, start : start + step] @ right[start : start + step]).astype(np.int64)
    return BitMatrix.from_dense(acc & 1, cols=b.cols)


def _rref(data: np.ndarray, cols: int) -> tuple[np.ndarray, list[int]]:
    """Gauss-Jordan elimination on a packed copy; returns (rref, pivot columns)."""
    a = np.array(data, dtype=np.uint64, copy=True)
    nrows = a.shape[0]
    pivots: list[int] = []
    r = 0
    for col in range(cols):
        if r == nrows:
            break
        w, sh = divmod(col, _WORD)
        bits = (a[r:, w] >> np.uint64(sh)) & _ONE
        hits = np.flatnonzero(bits)
        if hits.size == 0:
            continue
        p = r + int(hits[0])
        if p != r:
            a[[r, p]] = a[[p, r]]
        colbits = ((a[:, w] >> np.uint64(sh)) & _ONE).astype(bool)
        colbits[r] = False
        if colbits.any():
            a[colbits, w:] ^= a[r, w:]
        pivots.append(col)
        r += 1
    return a[:r], pivots


def rank(m: BitMatrix) -> int:
    """Row rank over GF(2)."""
    return len(_rref(m.data, m.cols)[1])


def rref(m: BitMatrix) -> tuple[BitMatrix, list[int]]:
    """Reduced row-echelon form with zero rows dropped, plus pivot columns."""
    red, piv = _rref(m.data, m.cols)
    return BitMatrix(red.shape[0], m.cols, red), piv


def kernel_basis(m: BitMatrix) -> "Subspace":
    """Canonical basis of the right null space ``{x : m x = 0}``."""
    red, piv = _rref(m.data, m.cols)
    dense = _unpack(red, m.cols)
    pivset = set(piv)
    free = [j for j in range(m.cols) if j not in pivset]
    vecs = np.zeros((len(free), m.cols), dtype=np.uint8)
    vecs[np.arange(len(free)), free] = 1
    if piv and free:
        vecs[:, piv] = dense[:, free].T
    return Subspace.span(m.cols, vecs)


def solve(m: BitMatrix, b: Iterable[int] | np.ndarray) -> np.ndarray | None:
    """Return some ``x`` with ``m x = b`` (free variables zero), or None."""
    b = as_bitvector(b)
    if b.shape[0] != m.rows:
        raise ValueError(f"right-hand side has length {b.shape[0]}, expected {m.rows}")
    aug = np.zeros((m.rows, m.cols + 1), dtype=np.uint8)
    aug[:, : m.cols] = m.to_dense()
    aug[:, m.cols] = b
    red, piv = _rref(_pack(aug), m.cols + 1)
    if piv and piv[-1] == m.cols:
        return None
    dense = _unpack(red, m.cols + 1)
    x = np.zeros(m.cols, dtype=np.uint8)
    x[piv] = dense[:, m.cols]
    return x


class Subspace:
    """A subspace of GF(2)^n held as a canonical RREF basis.

    Two subspaces are equal exactly when their bases are equal row for row.
    """

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim: int, basis: BitMatrix, pivots: list[int]):
        self.ambient_dim = ambient_dim
        self.basis = basis
        self.pivots = tuple(pivots)

    @classmethod
    def span(cls, ambient_dim: int, vectors: Sequence[Sequence[int]] | np.ndarray | BitMatrix) -> "Subspace":
        if isinstance(vectors, BitMatrix):
            mat = vectors
        else:
            arr = np.asarray(vectors, dtype=np.uint8)
            if arr.size == 0:
                arr = arr.reshape(0, ambient_dim)
            mat = BitMatrix.from_dense(arr, cols=ambient_dim)
        if mat.cols != ambient_dim:
            raise ValueError("vectors do not live in the ambient space")
        red, piv = rref(mat)
        return cls(ambient_dim, red, piv)

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls.span(n, BitMatrix.zeros(0, n))

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls.span(n, BitMatrix.identity(n))

    @property
    def dim(self) -> int:
        return self.basis.rows

    def vectors(self) -> np.ndarray:
        return self.basis.to_dense()

    def _check(self, other: "Subspace") -> None:
        if self.ambient_dim != other.ambient_dim:
            raise ValueError(f"ambient mismatch: {self.ambient_dim} vs {other.ambient_dim}")

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.span(self.ambient_dim, self.basis.vstack(other.basis))

    def orthogonal_complement(self) -> "Subspace":
        return kernel_basis(self.basis)

    def intersection(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return (self.orthogonal_complement() + other.orthogonal_complement()).orthogonal_complement()

    def contains(self, v: Iterable[int] | np.ndarray) -> bool:
        v = as_bitvector(v, self.ambient_dim)
        stacked = self.basis.vstack(BitMatrix.from_dense(v.reshape(1, -1), cols=self.ambient_dim))
        return rank(stacked) == self.dim

    def contains_subspace(self, other: "Subspace") -> bool:
        self._check(other)
        return (self + other).dim == self.dim

    def coordinates(self, v: Iterable[int] | np.ndarray) -> np.ndarray | None:
        """Coefficients of ``v`` in the canonical basis, or None if ``v`` is outside."""
        v = as_bitvector(v, self.ambient_dim)
        coeffs = np.array([v[p] for p in self.pivots], dtype=np.uint8)
        back = (coeffs.astype(np.int64) @ self.vectors().astype(np.int64) & 1) if self.dim else np.zeros(self.ambient_dim, np.int64)
        return coeffs if np.array_equal(back.astype(np.uint8), v) else None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"
