"""Decision procedures for baby Verma modules over Frobenius kernels.

All procedures are arithmetic on the weight side: depth of a weight,
the projectivity criterion, depth reduction to a depth-one weight, and
block membership.  `classify` bundles them into a report whose every
populated field carries a justification note; fields whose hypotheses
fail are simply absent.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .gf import is_prime
from .rootsys import (
    CartanSpec,
    RootSystem,
    Weight,
    add_weights,
    build_root_system,
    dot_action,
    is_good_prime,
    is_pr_regular,
    pairing,
    psi_set,
    sub_weights,
)

NEG_INFINITY = float("-inf")

AR_PROJECTIVE = "Projective"
AR_QUASI_SIMPLE = "QuasiSimpleAInfty"
AR_TUBE = "HomogeneousTube"
AR_TILDE_A12 = "TildeA12Possible"


class BadPrime(ValueError):
    """The prime is not good for the root system."""


class DepthOutOfRange(ValueError):
    """depth_reduce needs 2 <= depth(lam) <= r."""


def _p_adic_valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def depth(rs: RootSystem, lam: Weight, p: int) -> int | float:
    """Least s >= 1 such that not every pairing of lam+rho is divisible by p^s.

    Equals 1 + min p-adic valuation over the nonzero pairings, and
    NEG_INFINITY when every pairing vanishes (then divisibility holds
    for all s).
    """
    shifted = add_weights(lam, rs.rho)
    pairings = [pairing(rs, shifted, root) for root in rs.positive_roots]
    nonzero = [abs(a) for a in pairings if a != 0]
    if not nonzero:
        return NEG_INFINITY
    return 1 + min(_p_adic_valuation(a, p) for a in nonzero)


def is_projective_verma(rs: RootSystem, lam: Weight, p: int, r: int) -> bool:
    """Every pairing of lam+rho divisible by p^r; needs a good prime."""
    if not is_good_prime(rs, p):
        raise BadPrime(f"p = {p} divides a root coefficient of this system")
    return len(psi_set(rs, lam, p, r)) == len(rs.positive_roots)


def depth_reduce(rs: RootSystem, lam: Weight, p: int, r: int) -> tuple[int, Weight]:
    """Write lam = p^d * mu + (p^d - 1) * rho with depth(mu) = 1.

    Defined when 2 <= depth(lam) <= r; then d = depth(lam) - 1.
    """
    dep = depth(rs, lam, p)
    if dep == NEG_INFINITY or not 2 <= dep <= r:
        raise DepthOutOfRange(
            f"depth {dep} outside [2, {r}]; nothing to reduce"
        )
    d = int(dep) - 1
    q = p**d
    mu = []
    for x in lam:
        num = x - (q - 1)
        if num % q != 0:
            raise AssertionError("depth guarantees divisibility; got a remainder")
        mu.append(num // q)
    mu = tuple(mu)
    assert depth(rs, mu, p) == 1
    assert lam == add_weights(tuple(q * m for m in mu), tuple(q - 1 for _ in lam))
    return d, mu


# -- block membership ---------------------------------------------------

def smith_diagonalize(m):
    """Unimodular U with U*m*V diagonal; returns (diagonal entries, U).

    The right transform V is not tracked: column operations do not
    affect solvability of m*x = v, which is all the callers need.
    """
    m = [list(row) for row in m]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    u = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
    t = 0
    while t < min(rows, cols):
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                if m[i][j] != 0 and (
                    pivot is None or abs(m[i][j]) < abs(m[pivot[0]][pivot[1]])
                ):
                    pivot = (i, j)
        if pivot is None:
            break
        i0, j0 = pivot
        if i0 != t:
            m[t], m[i0] = m[i0], m[t]
            u[t], u[i0] = u[i0], u[t]
        if j0 != t:
            for row in m:
                row[t], row[j0] = row[j0], row[t]
        while True:
            dirty = False
            for i in range(t + 1, rows):
                if m[i][t] != 0:
                    q = _nearest_quotient(m[i][t], m[t][t])
                    m[i] = [a - q * b for a, b in zip(m[i], m[t])]
                    u[i] = [a - q * b for a, b in zip(u[i], u[t])]
                    if m[i][t] != 0:
                        m[t], m[i] = m[i], m[t]
                        u[t], u[i] = u[i], u[t]
                        dirty = True
            for j in range(t + 1, cols):
                if m[t][j] != 0:
                    q = _nearest_quotient(m[t][j], m[t][t])
                    for row in m:
                        row[j] -= q * row[t]
                    if m[t][j] != 0:
                        for row in m:
                            row[t], row[j] = row[j], row[t]
                        dirty = True
            if not dirty:
                break
        t += 1
    diag = [m[i][i] for i in range(t)]
    return diag, u


def _nearest_quotient(a: int, b: int) -> int:
    q, rem = divmod(a, b)
    if 2 * abs(rem) > abs(b):
        q += 1
    return q


@dataclass(frozen=True)
class _Lattice:
    """Integer column lattice with a precomputed Smith form."""

    diag: tuple[int, ...]
    u: tuple[tuple[int, ...], ...]
    ambient: int

    def contains(self, v) -> bool:
        w = [sum(row[i] * v[i] for i in range(self.ambient)) for row in self.u]
        for i, x in enumerate(w):
            if i < len(self.diag):
                if x % self.diag[i] != 0:
                    return False
            elif x != 0:
                return False
        return True


def translation_lattice(rs: RootSystem, dep: int | float, p: int, r: int) -> _Lattice:
    """The lattice p^depth * (root lattice) + p^r * (weight lattice)."""
    n = rs.rank
    cols = []
    if dep != NEG_INFINITY:
        scale = p ** int(dep)
        for j in range(n):
            cols.append([scale * rs.cartan.matrix[i][j] for i in range(n)])
    for i in range(n):
        cols.append([p**r if t == i else 0 for t in range(n)])
    m = [[col[i] for col in cols] for i in range(n)]
    diag, u = smith_diagonalize(m)
    return _Lattice(tuple(diag), tuple(tuple(row) for row in u), n)


def block_contains(rs: RootSystem, gamma: Weight, lam: Weight, p: int, r: int) -> bool:
    """Is gamma in the block of lam at level r?

    The block is the union over Weyl elements w of
    (w . lam) + p^depth(lam) * (root lattice) + p^r * (weight lattice),
    with the convention that p^depth vanishes at depth minus infinity.
    """
    lattice = translation_lattice(rs, depth(rs, lam, p), p, r)
    for w in rs.weyl:
        moved = dot_action(rs, w, lam)
        if lattice.contains(sub_weights(gamma, moved)):
            return True
    return False


# -- classification report ---------------------------------------------

@dataclass
class VermaReport:
    lam: Weight
    p: int
    r: int
    depth: int | float
    projective: bool
    reduction: tuple[int, Weight] | None
    cx_lower_bound: int
    variety_dim: int | None
    cx: int | None
    variety_irreducible: bool | None
    ar_position: str
    notes: list[str] = field(default_factory=list)

    def to_json_dict(self) -> dict:
        return {
            "lambda": list(self.lam),
            "p": self.p,
            "r": self.r,
            "depth": "-inf" if self.depth == NEG_INFINITY else int(self.depth),
            "projective": self.projective,
            "reduction": (
                None
                if self.reduction is None
                else {"d": self.reduction[0], "mu": list(self.reduction[1])}
            ),
            "cx_lower_bound": self.cx_lower_bound,
            "variety_dim": self.variety_dim,
            "cx": self.cx,
            "variety_irreducible": self.variety_irreducible,
            "ar_position": self.ar_position,
            "notes": list(self.notes),
        }


def _is_rank_one(spec: CartanSpec) -> bool:
    return spec.matrix == ((2,),)


def _is_rank_two_a(spec: CartanSpec) -> bool:
    return spec.matrix == ((2, -1), (-1, 2))


def classify(spec: CartanSpec, lam: Weight, p: int, r: int) -> VermaReport:
    """Full report for the level-r baby Verma module of highest weight lam."""
    if r < 1:
        raise ValueError("r must be >= 1")
    if p < 3 or not is_prime(p):
        raise ValueError("p must be an odd prime >= 3")
    rs = build_root_system(spec)
    if len(lam) != rs.rank:
        raise ValueError("weight length does not match the rank")

    dep = depth(rs, lam, p)
    projective = is_projective_verma(rs, lam, p, r)
    notes = []
    if dep == NEG_INFINITY:
        notes.append("depth: -inf, every pairing of lambda+rho vanishes")
    else:
        notes.append("depth: 1 + min p-adic valuation of the nonzero pairings of lambda+rho")
    if projective:
        notes.append("projective: every pairing of lambda+rho is divisible by p^r")
    else:
        notes.append("not projective: some pairing of lambda+rho is not divisible by p^r")

    reduction = None
    if dep != NEG_INFINITY and 2 <= dep <= r:
        reduction = depth_reduce(rs, lam, p, r)
        notes.append(
            "reduction: lambda = p^d*mu + (p^d-1)*rho with depth(mu) = 1, d = depth-1"
        )

    if projective:
        cx_lower = 0
        variety_dim: int | None = 0
        cx: int | None = 0
        irreducible: bool | None = True
        notes.append("support variety of a projective module is the origin")
    else:
        # not projective forces a finite depth in [1, r]
        d = int(dep) - 1
        cx_lower = r - d
        notes.append(
            "complexity lower bound r-d: reduction by d depth steps keeps complexity"
        )
        variety_dim = cx = None
        irreducible = None
        if _is_rank_one(spec):
            variety_dim = cx = r + 1 - int(dep)
            irreducible = True
            notes.append(
                "rank-one exact value: variety is an affine space of dim r+1-depth"
            )
        elif _is_rank_two_a(spec) and p >= rs.coxeter_number and is_pr_regular(
            rs, lam, p, int(dep)
        ):
            variety_dim = cx = 2 * (r - int(dep)) + 3
            irreducible = True
            notes.append(
                "rank-two exact value for p^depth-regular weights: 2(r-depth)+3"
            )
            if r >= 2:
                notes.append(
                    "formula-only value: not verifiable by the desk-scale module computations here"
                )
        elif _is_rank_two_a(spec):
            notes.append(
                "no exact variety value: weight is not p^depth-regular"
            )
        else:
            notes.append("no exact variety formula registered for this type")

    if projective:
        position = AR_PROJECTIVE
    elif cx == 1:
        position = AR_TUBE
        notes.append("complexity one: stable component is a homogeneous tube")
    else:
        position = AR_QUASI_SIMPLE
        notes.append("non-projective induced module: quasi-simple in an A-infinity component")

    if variety_dim is not None:
        assert variety_dim >= cx_lower, "exact value may not undercut the bound"

    return VermaReport(
        lam=tuple(lam),
        p=p,
        r=r,
        depth=dep,
        projective=projective,
        reduction=reduction,
        cx_lower_bound=cx_lower,
        variety_dim=variety_dim,
        cx=cx,
        variety_irreducible=irreducible,
        ar_position=position,
        notes=notes,
    )


def ar_position_for_simple(variety_dim: int) -> tuple[str, str]:
    """Stable-component label for a simple module with known variety dim.

    Returns (label, explanation).  Simple modules are projective, or
    quasi-simple in an A-infinity component, except that when the
    variety has dimension 2 a component of tree class tilde-A12 cannot
    be ruled out at this level of the theory.
    """
    if variety_dim == 0:
        return AR_PROJECTIVE, "zero-dimensional variety: the module is projective"
    if variety_dim == 2:
        return (
            AR_TILDE_A12,
            "two-dimensional variety: quasi-simple, or possibly in a tilde-A12 component",
        )
    return AR_QUASI_SIMPLE, "quasi-simple at the end of an A-infinity component"
