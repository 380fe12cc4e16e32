"""Exact dense linear algebra over F_p and F_{p^2}.

Matrices are numpy int64 arrays whose entries encode field elements.
For the prime field the encoding is the residue itself.  For the
quadratic extension F_{p^2} = F_p[t]/(t^2 - c), with c the smallest
quadratic non-residue mod p, the element a + b*t is stored as the
integer a + p*b in [0, p^2).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def smallest_nonresidue(p: int) -> int:
    """Smallest quadratic non-residue mod an odd prime p."""
    for c in range(2, p):
        if pow(c, (p - 1) // 2, p) == p - 1:
            return c
    raise ValueError(f"no quadratic non-residue mod {p}")


@dataclass(frozen=True)
class GF:
    """The field F_q with q = p^k, k in {1, 2}."""

    p: int
    k: int = 1

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")
        if self.k not in (1, 2):
            raise ValueError(f"unsupported extension degree k = {self.k}")
        if self.k == 2 and self.p == 2:
            raise ValueError("quadratic extension of F_2 not supported")

    @property
    def q(self) -> int:
        return self.p**self.k

    @property
    def nonresidue(self) -> int:
        return smallest_nonresidue(self.p)

    # -- element helpers ------------------------------------------------

    def normalize(self, a):
        """Reduce plain integers into the field.

        For k=2 only prime-field integers (or already-encoded values in
        [0, q)) are meaningful; arbitrary ints are reduced mod q and
        reinterpreted through the positional encoding.
        """
        arr = np.asarray(a, dtype=np.int64)
        return arr % self.q if self.k == 2 else arr % self.p

    def _split(self, a):
        return a % self.p, a // self.p

    def add(self, a, b):
        if self.k == 1:
            return (a + b) % self.p
        a0, a1 = self._split(np.asarray(a, dtype=np.int64))
        b0, b1 = self._split(np.asarray(b, dtype=np.int64))
        return (a0 + b0) % self.p + self.p * ((a1 + b1) % self.p)

    def neg(self, a):
        if self.k == 1:
            return (-np.asarray(a, dtype=np.int64)) % self.p
        a0, a1 = self._split(np.asarray(a, dtype=np.int64))
        return (-a0) % self.p + self.p * ((-a1) % self.p)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.k == 1:
            return (np.asarray(a, dtype=np.int64) * b) % self.p
        a0, a1 = self._split(np.asarray(a, dtype=np.int64))
        b0, b1 = self._split(np.asarray(b, dtype=np.int64))
        c = self.nonresidue
        return (a0 * b0 + c * a1 * b1) % self.p + self.p * ((a0 * b1 + a1 * b0) % self.p)

    def inv(self, a) -> int:
        a = int(a)
        if a % self.q == 0:
            raise ZeroDivisionError("inverse of zero field element")
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        a0, a1 = a % self.p, a // self.p
        c = self.nonresidue
        norm = (a0 * a0 - c * a1 * a1) % self.p
        ninv = pow(norm, self.p - 2, self.p)
        return (a0 * ninv) % self.p + self.p * ((-a1 * ninv) % self.p)

    # -- matrix helpers -------------------------------------------------

    def zeros(self, rows: int, cols: int):
        return np.zeros((rows, cols), dtype=np.int64)

    def identity(self, n: int):
        return np.eye(n, dtype=np.int64)

    def matmul(self, A, B):
        A = np.asarray(A, dtype=np.int64)
        B = np.asarray(B, dtype=np.int64)
        if self.k == 1:
            return (A @ B) % self.p
        a0, a1 = self._split(A)
        b0, b1 = self._split(B)
        c = self.nonresidue
        c0 = (a0 @ b0 + c * (a1 @ b1)) % self.p
        c1 = (a0 @ b1 + a1 @ b0) % self.p
        return c0 + self.p * c1

    def matpow(self, A, e: int):
        n = A.shape[0]
        result = self.identity(n)
        base = np.asarray(A, dtype=np.int64)
        while e > 0:
            if e & 1:
                result = self.matmul(result, base)
            base = self.matmul(base, base)
            e >>= 1
        return result

    def kron(self, A, B):
        if self.k != 1:
            raise NotImplementedError("kron only needed over the prime field")
        return np.kron(A % self.p, B % self.p) % self.p

    def rref(self, A):
        """Reduced row echelon form.  Returns (R, pivot_columns)."""
        R = np.array(A, dtype=np.int64, copy=True)
        if self.k == 1:
            return self._rref_prime(R)
        return self._rref_generic(R)

    def _rref_prime(self, R):
        # Deferred reduction: off-pivot rows accumulate values bounded by
        # p^2 * (#pivots), far below int64 overflow for our sizes.
        p = self.p
        rows, cols = R.shape
        pivots = []
        r = 0
        for c in range(cols):
            if r == rows:
                break
            R[r:, c] %= p
            nz = np.nonzero(R[r:, c])[0]
            if nz.size == 0:
                continue
            i = r + int(nz[0])
            if i != r:
                R[[r, i]] = R[[i, r]]
            R[r] %= p
            pivot_inv = pow(int(R[r, c]), p - 2, p)
            R[r] = (R[r] * pivot_inv) % p
            factors = R[:, c].copy()
            factors[r] = 0
            nzrows = np.nonzero(factors)[0]
            if nzrows.size:
                R[nzrows] -= np.outer(factors[nzrows], R[r])
            pivots.append(c)
            r += 1
        R %= p
        return R, pivots

    def _rref_generic(self, R):
        rows, cols = R.shape
        pivots = []
        r = 0
        for c in range(cols):
            if r == rows:
                break
            nz = np.nonzero(R[r:, c])[0]
            if nz.size == 0:
                continue
            i = r + int(nz[0])
            if i != r:
                R[[r, i]] = R[[i, r]]
            R[r] = self.mul(R[r], self.inv(R[r, c]))
            for j in range(rows):
                if j != r and R[j, c] != 0:
                    R[j] = self.sub(R[j], self.mul(R[r], int(R[j, c])))
            pivots.append(c)
            r += 1
        return R, pivots

    def rank(self, A) -> int:
        if min(A.shape) == 0:
            return 0
        return len(self.rref(A)[1])

    def nullspace(self, A):
        """Columns form a basis of {x : A x = 0}."""
        A = np.asarray(A, dtype=np.int64)
        rows, cols = A.shape
        if cols == 0:
            return self.zeros(0, 0)
        if rows == 0:
            return self.identity(cols)
        R, pivots = self.rref(A)
        free = [c for c in range(cols) if c not in pivots]
        basis = self.zeros(cols, len(free))
        for idx, fc in enumerate(free):
            basis[fc, idx] = 1
            for prow, pc in enumerate(pivots):
                basis[pc, idx] = self.neg(R[prow, fc])
        return basis

    def solve(self, A, B):
        """Solve A X = B exactly; raises ValueError if inconsistent.

        When the system is underdetermined the free coordinates are set
        to zero, which is fine for the full-column-rank uses here.
        """
        A = np.asarray(A, dtype=np.int64)
        B = np.asarray(B, dtype=np.int64)
        single = B.ndim == 1
        if single:
            B = B[:, None]
        aug = np.hstack([A, B])
        R, pivots = self.rref(aug)
        ncols = A.shape[1]
        for prow, pc in enumerate(pivots):
            if pc >= ncols:
                raise ValueError("inconsistent linear system")
        X = self.zeros(ncols, B.shape[1])
        for prow, pc in enumerate(pivots):
            X[pc] = R[prow, ncols:]
        return X[:, 0] if single else X

    def inverse(self, A):
        A = np.asarray(A, dtype=np.int64)
        n = A.shape[0]
        if A.shape != (n, n):
            raise ValueError("inverse of non-square matrix")
        X = self.solve(A, self.identity(n))
        if not np.array_equal(self.matmul(A, X), self.identity(n)):
            raise ValueError("matrix is singular")
        return X

    def is_invertible(self, A) -> bool:
        A = np.asarray(A, dtype=np.int64)
        return A.shape[0] == A.shape[1] and self.rank(A) == A.shape[0]

    def random_matrix(self, rng: np.random.Generator, rows: int, cols: int):
        return rng.integers(0, self.q, size=(rows, cols), dtype=np.int64)

    def column_space_basis(self, A):
        """A maximal independent subset of the columns of A (as a matrix)."""
        A = np.asarray(A, dtype=np.int64)
        if A.shape[1] == 0:
            return A
        _, pivots = self.rref(A)
        return A[:, pivots]
