"""Exact dense linear algebra over a prime field F_p.

Matrices are numpy int64 arrays with entries reduced into [0, p); all
arithmetic is exact and there are no tolerances anywhere in the package.

The whole package uses the row convention: a linear map K^m -> K^n is an
(m, n) matrix acting on row vectors by right multiplication, v |-> v @ f.
Composition "f then g" is therefore the plain matrix product f @ g.
"""

from __future__ import annotations

import numpy as np

from .errors import FieldTooSmallError

DEFAULT_PRIME = 32003


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class PrimeField:
    """Arithmetic and Gaussian elimination over F_p."""

    def __init__(self, p: int = DEFAULT_PRIME):
        if not _is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.p = int(p)

    def __repr__(self):
        return f"PrimeField({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    # -- element and matrix construction ---------------------------------

    def reduce(self, a) -> np.ndarray:
        return np.asarray(a, dtype=np.int64) % self.p

    def zeros(self, rows: int, cols: int) -> np.ndarray:
        return np.zeros((rows, cols), dtype=np.int64)

    def identity(self, n: int) -> np.ndarray:
        return np.eye(n, dtype=np.int64)

    def inv_scalar(self, x: int) -> int:
        x = int(x) % self.p
        if x == 0:
            raise ZeroDivisionError("inverse of 0 in F_p")
        return pow(x, self.p - 2, self.p)

    # -- arithmetic -------------------------------------------------------

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        # inner dimension * (p-1)^2 stays far below 2^63 at desk scale
        return (np.asarray(a, dtype=np.int64) @ np.asarray(b, dtype=np.int64)) % self.p

    def add(self, a, b) -> np.ndarray:
        return (np.asarray(a, dtype=np.int64) + np.asarray(b, dtype=np.int64)) % self.p

    def sub(self, a, b) -> np.ndarray:
        return (np.asarray(a, dtype=np.int64) - np.asarray(b, dtype=np.int64)) % self.p

    def scale(self, c: int, a) -> np.ndarray:
        return (int(c) % self.p) * np.asarray(a, dtype=np.int64) % self.p

    # -- elimination ------------------------------------------------------

    def rref(self, a: np.ndarray) -> tuple[np.ndarray, list[int]]:
        """Reduced row echelon form.

        Returns (r, pivots) where pivots lists the pivot column of each
        nonzero row of r, in order.
        """
        a = self.reduce(a).copy()
        rows, cols = a.shape
        pivots: list[int] = []
        r = 0
        for c in range(cols):
            if r == rows:
                break
            nz = np.nonzero(a[r:, c])[0]
            if nz.size == 0:
                continue
            piv = r + int(nz[0])
            if piv != r:
                a[[r, piv]] = a[[piv, r]]
            a[r] = (a[r] * self.inv_scalar(a[r, c])) % self.p
            col = a[:, c].copy()
            col[r] = 0
            a = (a - np.outer(col, a[r])) % self.p
            pivots.append(c)
            r += 1
        return a, pivots

    def rank(self, a: np.ndarray) -> int:
        if a.size == 0:
            return 0
        return len(self.rref(a)[1])

    def row_space_basis(self, a: np.ndarray) -> np.ndarray:
        """Rows forming a basis of the row space of a."""
        r, piv = self.rref(a)
        return r[: len(piv)].copy()

    def kernel_basis(self, a: np.ndarray) -> np.ndarray:
        """Rows v (of length a.shape[1]) spanning {v : a @ v = 0}."""
        rows, cols = a.shape
        r, piv = self.rref(a)
        pivset = set(piv)
        free = [c for c in range(cols) if c not in pivset]
        out = self.zeros(len(free), cols)
        for k, f in enumerate(free):
            out[k, f] = 1
            for i, c in enumerate(piv):
                out[k, c] = (-r[i, f]) % self.p
        return out

    def left_kernel_basis(self, a: np.ndarray) -> np.ndarray:
        """Rows v (of length a.shape[0]) spanning {v : v @ a = 0}."""
        return self.kernel_basis(a.T)

    def solve_right(self, a: np.ndarray, b: np.ndarray) -> np.ndarray | None:
        """Some X with a @ X = b, or None when the system is inconsistent."""
        a = self.reduce(a)
        b = self.reduce(b)
        if b.ndim == 1:
            sol = self.solve_right(a, b.reshape(-1, 1))
            return None if sol is None else sol[:, 0]
        if a.shape[0] != b.shape[0]:
            raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
        aug = np.hstack([a, b])
        r, piv = self.rref(aug)
        n = a.shape[1]
        if any(c >= n for c in piv):
            return None
        x = self.zeros(n, b.shape[1])
        for i, c in enumerate(piv):
            x[c] = r[i, n:]
        return x

    def solve_left(self, a: np.ndarray, b: np.ndarray) -> np.ndarray | None:
        """Some X with X @ a = b, or None."""
        sol = self.solve_right(a.T, b.T)
        return None if sol is None else sol.T

    def inverse(self, a: np.ndarray) -> np.ndarray:
        if a.shape[0] != a.shape[1]:
            raise ValueError("inverse of a non-square matrix")
        x = self.solve_right(a, self.identity(a.shape[0]))
        if x is None or self.rank(a) != a.shape[0]:
            raise ValueError("matrix is singular")
        return x

    def is_invertible(self, a: np.ndarray) -> bool:
        return a.shape[0] == a.shape[1] and self.rank(a) == a.shape[0]

    # -- guards -----------------------------------------------------------

    def check_trace_bound(self, dim: int):
        """Trace certificates need p comfortably above the dimensions in
        play; the session-wide margin is p > 4 * dim**2."""
        if self.p <= 4 * dim * dim:
            raise FieldTooSmallError(
                f"p = {self.p} too small for dimension {dim}: need p > {4 * dim * dim}"
            )
