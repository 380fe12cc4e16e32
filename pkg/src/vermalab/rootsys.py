"""Root systems from Cartan matrices, and the weight combinatorics on top.

Everything is exact integer arithmetic.  Weights live in the weight
lattice of the simply connected group and are written in the basis of
fundamental weights, so a weight is just a tuple of ints of length
`rank`.  Column j of the Cartan matrix gives the fundamental-weight
coordinates of the j-th simple root.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

Weight = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]

POSITIVE_ROOT_CAP = 240
WEYL_CAP = 10**6

NAMED_TYPES = {
    "A1": ((2,),),
    "A2": ((2, -1), (-1, 2)),
    "B2": ((2, -1), (-2, 2)),
    "G2": ((2, -1), (-3, 2)),
    "A1xA1": ((2, 0), (0, 2)),
}


class NotFiniteType(ValueError):
    """The Cartan matrix is not of finite type (or closure blew the cap)."""


@dataclass(frozen=True)
class CartanSpec:
    """A validated finite-type Cartan matrix."""

    matrix: Matrix

    def __post_init__(self):
        m = self.matrix
        n = len(m)
        if n == 0 or any(len(row) != n for row in m):
            raise NotFiniteType("Cartan matrix must be square and nonempty")
        for i in range(n):
            if m[i][i] != 2:
                raise NotFiniteType("diagonal entries must equal 2")
            for j in range(n):
                if i != j:
                    if m[i][j] > 0:
                        raise NotFiniteType("off-diagonal entries must be <= 0")
                    if (m[i][j] == 0) != (m[j][i] == 0):
                        raise NotFiniteType("zero pattern must be symmetric")
        if not _positive_definite(_symmetrize(m)):
            raise NotFiniteType("symmetrized matrix is not positive definite")

    @property
    def rank(self) -> int:
        return len(self.matrix)

    @property
    def rho(self) -> Weight:
        return (1,) * self.rank

    @classmethod
    def from_type(cls, name: str) -> "CartanSpec":
        try:
            return cls(NAMED_TYPES[name])
        except KeyError:
            raise NotFiniteType(f"unknown type name {name!r}") from None

    @classmethod
    def parse(cls, text: str) -> "CartanSpec":
        """Parse either 'type=A2' or explicit rows like '2,-1;-1,2'."""
        text = text.strip()
        if text.startswith("type="):
            return cls.from_type(text[len("type="):])
        try:
            rows = tuple(
                tuple(int(x) for x in row.split(","))
                for row in text.split(";")
            )
        except ValueError:
            raise NotFiniteType(f"cannot parse Cartan matrix from {text!r}") from None
        return cls(rows)


def _symmetrize(m: Matrix):
    """Diagonal scaling making D*A symmetric, or raise NotFiniteType."""
    n = len(m)
    d = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i == j or m[i][j] == 0:
                    continue
                want = d[i] * Fraction(m[i][j], m[j][i])
                if d[j] is None:
                    d[j] = want
                    stack.append(j)
                elif d[j] != want:
                    raise NotFiniteType("Cartan matrix is not symmetrizable")
    return [[d[i] * m[i][j] for j in range(n)] for i in range(n)]


def _positive_definite(b) -> bool:
    n = len(b)
    for t in range(1, n + 1):
        if _minor_det(b, t) <= 0:
            return False
    return True


def _minor_det(b, t: int) -> Fraction:
    m = [[Fraction(b[i][j]) for j in range(t)] for i in range(t)]
    det = Fraction(1)
    for c in range(t):
        pivot = next((i for i in range(c, t) if m[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            det = -det
        det *= m[c][c]
        for i in range(c + 1, t):
            f = m[i][c] / m[c][c]
            m[i] = [a - f * v for a, v in zip(m[i], m[c])]
    return det


@dataclass(frozen=True)
class PositiveRoot:
    """A positive root with its coroot, both over the simple basis."""

    coeffs: tuple[int, ...]
    coroot_coeffs: tuple[int, ...]

    @property
    def height(self) -> int:
        return sum(self.coeffs)


@dataclass(frozen=True)
class RootSystem:
    cartan: CartanSpec
    positive_roots: tuple[PositiveRoot, ...]
    weyl: tuple[Matrix, ...]
    coxeter_number: int

    @property
    def rank(self) -> int:
        return self.cartan.rank

    @property
    def rho(self) -> Weight:
        return self.cartan.rho


def _mat_vec(m: Matrix, v) -> tuple[int, ...]:
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in m)


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum(a[i][t] * b[t][j] for t in range(n)) for j in range(n))
        for i in range(n)
    )


def _identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


@lru_cache(maxsize=None)
def build_root_system(spec: CartanSpec) -> RootSystem:
    """Positive roots and Weyl group by reflection closure."""
    a = spec.matrix
    n = spec.rank
    at = tuple(tuple(a[j][i] for j in range(n)) for i in range(n))

    def reflect(pair, j):
        c, cv = pair
        fw_j = sum(a[j][i] * c[i] for i in range(n))
        cofw_j = sum(at[j][i] * cv[i] for i in range(n))
        new_c = tuple(c[i] - (fw_j if i == j else 0) for i in range(n))
        new_cv = tuple(cv[i] - (cofw_j if i == j else 0) for i in range(n))
        return new_c, new_cv

    unit = lambda i: tuple(1 if t == i else 0 for t in range(n))
    roots = {}
    work = [(unit(i), unit(i)) for i in range(n)]
    for pair in work:
        roots[pair[0]] = pair[1]
    while work:
        pair = work.pop()
        for j in range(n):
            c, cv = reflect(pair, j)
            if all(x >= 0 for x in c) and c not in roots:
                if len(roots) >= POSITIVE_ROOT_CAP:
                    raise NotFiniteType("positive root closure exceeded cap")
                roots[c] = cv
                work.append((c, cv))

    ordered = sorted(roots.items(), key=lambda item: (sum(item[0]), item[0]))
    positive = tuple(PositiveRoot(c, cv) for c, cv in ordered)

    gens = []
    for j in range(n):
        gens.append(tuple(
            tuple((1 if i == k else 0) - (a[i][j] if k == j else 0) for k in range(n))
            for i in range(n)
        ))
    seen = {_identity(n)}
    order = [_identity(n)]
    frontier = [_identity(n)]
    while frontier:
        nxt = []
        for w in frontier:
            for s in gens:
                ws = _mat_mul(w, s)
                if ws not in seen:
                    if len(seen) >= WEYL_CAP:
                        raise NotFiniteType("Weyl closure exceeded cap")
                    seen.add(ws)
                    order.append(ws)
                    nxt.append(ws)
        frontier = nxt

    h = 1 + max(r.height for r in positive)
    return RootSystem(spec, positive, tuple(order), h)


# -- weight operations --------------------------------------------------

def add_weights(a: Weight, b: Weight) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def sub_weights(a: Weight, b: Weight) -> Weight:
    return tuple(x - y for x, y in zip(a, b))


def pairing(rs: RootSystem, lam: Weight, root: PositiveRoot | int) -> int:
    """<lam, alpha_v> for a positive root (by value or index)."""
    if isinstance(root, int):
        root = rs.positive_roots[root]
    return sum(cv * l for cv, l in zip(root.coroot_coeffs, lam))

def apply_weyl(w: Matrix, lam: Weight) -> Weight:
    return _mat_vec(w, lam)


def dot_action(rs: RootSystem, w: Matrix, lam: Weight) -> Weight:
    """w . lam = w(lam + rho) - rho."""
    shifted = add_weights(lam, rs.rho)
    return sub_weights(apply_weyl(w, shifted), rs.rho)


def psi_set(rs: RootSystem, lam: Weight, p: int, r: int) -> tuple[int, ...]:
    """Indices of positive roots alpha with p^r | <lam + rho, alpha_v>."""
    if r < 0:
        raise ValueError("r must be >= 0")
    shifted = add_weights(lam, rs.rho)
    mod = p**r
    return tuple(
        i for i, root in enumerate(rs.positive_roots)
        if pairing(rs, shifted, root) % mod == 0
    )


def is_pr_regular(rs: RootSystem, lam: Weight, p: int, r: int) -> bool:
    return len(psi_set(rs, lam, p, r)) == 0


def restricted_decompose(lam: Weight, p: int, r: int) -> tuple[Weight, Weight]:
    """lam = lam0 + p^r * lam1 with lam0 coordinate-wise in [0, p^r)."""
    mod = p**r
    lam0 = tuple(x % mod for x in lam)
    lam1 = tuple((x - x % mod) // mod for x in lam)
    return lam0, lam1


def in_alcove_c0(rs: RootSystem, lam: Weight, p: int) -> bool:
    """Strictly between the walls: 0 < <lam+rho, alpha_v> < p for all alpha > 0."""
    shifted = add_weights(lam, rs.rho)
    return all(0 < pairing(rs, shifted, root) < p for root in rs.positive_roots)


def is_good_prime(rs: RootSystem, p: int) -> bool:
    """p divides no coefficient of a positive root over the simple roots."""
    return all(
        c % p != 0
        for root in rs.positive_roots
        for c in root.coeffs
        if c != 0
    )
