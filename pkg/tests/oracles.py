"""Slow, independent reference implementations used as test oracles.

Everything here is deliberately written without the package's linear
algebra so that agreement between the two paths means something: plain
python ints, list-of-list matrices, and direct definitions.
"""
from fractions import Fraction
from itertools import product


# -- prime field arithmetic on list-of-list matrices ---------------------

def mat_mul(A, B, p):
    n, k, m = len(A), len(B), len(B[0]) if B else 0
    return [[sum(A[i][t] * B[t][j] for t in range(k)) % p for j in range(m)]
            for i in range(n)]


def mat_rref(M, p):
    """Row reduce a copy of M over F_p; returns (rref, pivot_cols)."""
    M = [row[:] for row in M]
    rows = len(M)
    cols = len(M[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pr = next((i for i in range(r, rows) if M[i][c] % p != 0), None)
        if pr is None:
            continue
        M[r], M[pr] = M[pr], M[r]
        inv = pow(M[r][c], p - 2, p)
        M[r] = [(x * inv) % p for x in M[r]]
        for i in range(rows):
            if i != r and M[i][c] % p != 0:
                f = M[i][c] % p
                M[i] = [(a - f * b) % p for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    return M, pivots


def mat_rank(M, p):
    if not M or not M[0]:
        return 0
    return len(mat_rref(M, p)[1])


def mat_nullspace(M, p):
    """Basis vectors (as lists) of the kernel of M over F_p."""
    rows = len(M)
    cols = len(M[0]) if rows else 0
    if rows == 0:
        return [[1 if i == j else 0 for i in range(cols)] for j in range(cols)]
    R, pivots = mat_rref(M, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * cols
        v[fc] = 1
        for prow, pc in enumerate(pivots):
            v[pc] = (-R[prow][fc]) % p
        basis.append(v)
    return basis


def intertwiner_basis(acts_m, acts_n, p):
    """Basis of {H : H a_g = b_g H for all g}, solved entry by entry.

    acts_m, acts_n: dicts label -> list-of-list matrix.  H has shape
    (dim_n, dim_m) and is flattened row-major into the unknown vector.
    """
    dim_m = len(next(iter(acts_m.values()))) if acts_m else 0
    dim_n = len(next(iter(acts_n.values()))) if acts_n else 0
    unknowns = dim_n * dim_m
    rows = []
    for g in acts_m:
        A, B = acts_m[g], acts_n[g]
        for i in range(dim_n):
            for k in range(dim_m):
                row = [0] * unknowns
                for j in range(dim_m):
                    row[i * dim_m + j] = (row[i * dim_m + j] + A[j][k]) % p
                for j in range(dim_n):
                    row[j * dim_m + k] = (row[j * dim_m + k] - B[i][j]) % p
                rows.append(row)
    if not rows:
        return [[1 if i == j else 0 for i in range(unknowns)] for j in range(unknowns)]
    return mat_nullspace(rows, p)


# -- depth, regularity, blocks ------------------------------------------

def brute_depth(pairings, p, s_max=64):
    """Least s >= 1 with {a : p^s | a} != everything, by direct iteration.

    pairings: the integers <lambda+rho, alpha_v> over positive roots.
    Returns None when every pairing is zero (depth minus infinity).
    """
    if all(a == 0 for a in pairings):
        return None
    for s in range(s_max):
        if any(a % p**s != 0 for a in pairings):
            return s
    raise AssertionError("depth exceeded iteration bound")


def brute_lattice_member(columns, v, bound):
    """Is v an integer combination of the columns, searching |c_i| <= bound."""
    k = len(columns)
    for coeffs in product(range(-bound, bound + 1), repeat=k):
        cand = [sum(c * col[i] for c, col in zip(coeffs, columns))
                for i in range(len(v))]
        if cand == list(v):
            return True
    return False


def positive_definite(M):
    """Sylvester's criterion with exact rational arithmetic."""
    n = len(M)
    for t in range(1, n + 1):
        sub = [[Fraction(M[i][j]) for j in range(t)] for i in range(t)]
        det = _det(sub)
        if det <= 0:
            return False
    return True


def _det(M):
    n = len(M)
    if n == 0:
        return Fraction(1)
    M = [row[:] for row in M]
    det = Fraction(1)
    for c in range(n):
        pr = next((i for i in range(c, n) if M[i][c] != 0), None)
        if pr is None:
            return Fraction(0)
        if pr != c:
            M[c], M[pr] = M[pr], M[c]
            det = -det
        det *= M[c][c]
        inv = M[c][c]
        for i in range(c + 1, n):
            f = M[i][c] / inv
            M[i] = [a - f * b for a, b in zip(M[i], M[c])]
    return det


# -- matrix algebra radical (tiny cases only) ---------------------------

def is_nilpotent(M, p):
    n = len(M)
    P = M
    for _ in range(n):
        P = mat_mul(P, P, p)
    return all(all(x % p == 0 for x in row) for row in P)


def brute_radical(basis, p):
    """Jacobson radical of the span of `basis` (unital algebra) over F_p.

    Uses: x in J iff x*a is nilpotent for every a in the algebra.  Only
    feasible for q^dim tiny; used to pin down the fast algorithm.
    """
    dim = len(basis)
    elements = []
    for coeffs in product(range(p), repeat=dim):
        M = [[sum(c * B[i][j] for c, B in zip(coeffs, basis)) % p
              for j in range(len(basis[0][0]))] for i in range(len(basis[0]))]
        elements.append((coeffs, M))
    rad = []
    for coeffs, x in elements:
        if all(is_nilpotent(mat_mul(x, a, p), p) for _, a in elements):
            rad.append(coeffs)
    return rad
