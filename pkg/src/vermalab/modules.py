"""Finite-dimensional modules over algebras given by labeled generators.

A module is a dictionary of generator action matrices over F_q.  On top
of that this file builds the homological toolkit: intertwiner spaces,
radicals and socles, projective covers and syzygies, extensions,
isomorphism and indecomposability certificates, and a text format.

The hom-space computation spins up a generating set of the source
module and solves only for the images of the generators, which keeps
the linear systems small for the cyclic modules that dominate here.
Randomized procedures take explicit seeds and either return a
certificate that is re-verified on the spot or raise Undecided.
"""
from __future__ import annotations

import itertools
import math
import random
from collections import deque
from dataclasses import dataclass

import numpy as np

from .gf import GF, is_prime


class SchemaMismatch(ValueError):
    """Operands have different generator labels or fields."""


class MissingProjective(KeyError):
    """The projective library lacks a cover summand that is needed."""


class Undecided(RuntimeError):
    """A randomized search exhausted its budget without a certificate."""


@dataclass
class FpModule:
    """dim-dimensional module; ops maps each generator label to a matrix."""

    field: GF
    dim: int
    ops: dict[str, np.ndarray]

    def __post_init__(self):
        fixed = {}
        for label, mat in self.ops.items():
            mat = self.field.normalize(np.asarray(mat, dtype=np.int64))
            if mat.shape != (self.dim, self.dim):
                raise ValueError(
                    f"operator {label} has shape {mat.shape}, expected square of size {self.dim}"
                )
            fixed[label] = mat
        self.ops = fixed

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(self.ops)

    def op(self, label: str) -> np.ndarray:
        return self.ops[label]


def _check_same_schema(m: FpModule, n: FpModule):
    if m.field != n.field:
        raise SchemaMismatch(f"fields differ: {m.field} vs {n.field}")
    if set(m.labels) != set(n.labels):
        raise SchemaMismatch(f"labels differ: {m.labels} vs {n.labels}")


def zero_module_like(m: FpModule) -> FpModule:
    return FpModule(m.field, 0, {l: m.field.zeros(0, 0) for l in m.labels})


def restrict_labels(m: FpModule, labels) -> FpModule:
    """Forget all generator actions except the given labels."""
    missing = [l for l in labels if l not in m.ops]
    if missing:
        raise SchemaMismatch(f"module has no operators {missing}")
    return FpModule(m.field, m.dim, {l: m.ops[l] for l in labels})


def direct_sum(mods: list[FpModule]) -> FpModule:
    if not mods:
        raise ValueError("direct_sum of an empty list is ambiguous")
    first = mods[0]
    for m in mods[1:]:
        _check_same_schema(first, m)
    dim = sum(m.dim for m in mods)
    ops = {}
    for label in first.labels:
        big = first.field.zeros(dim, dim)
        at = 0
        for m in mods:
            big[at : at + m.dim, at : at + m.dim] = m.ops[label]
            at += m.dim
        ops[label] = big
    return FpModule(first.field, dim, ops)


# -- hom spaces by spinning ---------------------------------------------

def hom_space(m: FpModule, n: FpModule) -> list[np.ndarray]:
    """Basis of the space of maps H with H g_M = g_N H for every generator.

    Each returned matrix (n.dim x m.dim) is re-verified against every
    generator before being emitted.
    """
    _check_same_schema(m, n)
    f = m.field
    if m.dim == 0 or n.dim == 0:
        return []
    labels = list(m.labels)

    basis_cols: list[np.ndarray] = []
    echelon: list[tuple[int, np.ndarray, np.ndarray]] = []
    images: list[np.ndarray] = []  # candidate images of basis vectors, n.dim x width
    width = 0
    queue: deque[int] = deque()

    def reduce_vec(w):
        w = w.copy()
        expr = np.zeros(m.dim, dtype=np.int64)
        for piv, r, e in echelon:
            c = int(w[piv])
            if c:
                w = f.sub(w, f.mul(r, c))
                expr = f.add(expr, f.mul(e, c))
        return w, expr

    def insert(orig, residue, expr, image):
        t = len(basis_cols)
        basis_cols.append(orig)
        scale = f.inv(int(residue[np.nonzero(residue)[0][0]]))
        piv = int(np.nonzero(residue)[0][0])
        evec = f.neg(expr)
        evec[t] = 1
        echelon.append((piv, f.mul(residue, scale), f.mul(evec, scale)))
        images.append(image)
        queue.append(t)

    def narrow(rows):
        # width 0 is not a dead end: it only says the map vanishes on
        # the submodule generated so far; later generators reopen it
        nonlocal width
        if not np.any(rows):
            return
        keep = f.nullspace(rows)
        for s in range(len(images)):
            images[s] = f.matmul(images[s], keep)
        width = keep.shape[1]

    for start in range(m.dim):
        if len(basis_cols) == m.dim:
            break
        vec = f.zeros(m.dim, 1)[:, 0]
        vec[start] = 1
        residue, expr = reduce_vec(vec)
        if not np.any(residue):
            continue
        # fresh generator: its image is a new free block of unknowns
        for s in range(len(images)):
            images[s] = np.hstack([images[s], f.zeros(n.dim, n.dim)])
        insert(vec, residue, expr, np.hstack([f.zeros(n.dim, width), f.identity(n.dim)]))
        width += n.dim
        while queue:
            t = queue.popleft()
            for label in labels:
                w = f.matmul(m.ops[label], basis_cols[t][:, None])[:, 0]
                residue, expr = reduce_vec(w)
                propagated = f.matmul(n.ops[label], images[t])
                if np.any(residue):
                    insert(w, residue, expr, propagated)
                else:
                    rows = propagated
                    for s in np.nonzero(expr)[0]:
                        rows = f.sub(rows, f.mul(images[int(s)], int(expr[s])))
                    narrow(rows)

    if width == 0:
        return []
    assert len(basis_cols) == m.dim
    bmat = np.column_stack(basis_cols)
    binv = f.inverse(bmat)
    homs = []
    for c in range(width):
        ymat = np.column_stack([images[s][:, c] for s in range(m.dim)])
        h = f.matmul(ymat, binv)
        for label in labels:
            lhs = f.matmul(h, m.ops[label])
            rhs = f.matmul(n.ops[label], h)
            assert np.array_equal(lhs, rhs), f"emitted map fails to intertwine {label}"
        homs.append(h)
    return homs


# -- submodules, quotients, radical, socle ------------------------------

def submodule_from_columns(m: FpModule, cols) -> tuple[FpModule, np.ndarray]:
    """Module structure on the span of the columns; returns it with the
    inclusion matrix.  Raises ValueError if the span is not stable."""
    f = m.field
    cols = f.normalize(np.asarray(cols, dtype=np.int64))
    if cols.size == 0:
        cols = cols.reshape(m.dim, 0)
    basis = f.column_space_basis(cols)
    k = basis.shape[1]
    ops = {}
    for label, mat in m.ops.items():
        moved = f.matmul(mat, basis)
        try:
            ops[label] = f.solve(basis, moved)
        except ValueError:
            raise ValueError(f"columns are not stable under operator {label}")
    sub = FpModule(f, k, ops)
    for label in m.labels:
        assert np.array_equal(
            f.matmul(m.ops[label], basis), f.matmul(basis, sub.ops[label])
        )
    return sub, basis


def quotient_by_columns(m: FpModule, cols) -> tuple[FpModule, np.ndarray, np.ndarray]:
    """Quotient of m by the span of the columns.

    Returns (quotient, projection, section) with projection @ section
    the identity of the quotient.  The span must be a submodule.
    """
    f = m.field
    cols = f.normalize(np.asarray(cols, dtype=np.int64))
    if cols.size == 0:
        cols = cols.reshape(m.dim, 0)
    basis = f.column_space_basis(cols)
    k = basis.shape[1]
    full = f.column_space_basis(np.hstack([basis, f.identity(m.dim)]))
    assert full.shape[1] == m.dim
    pinv = f.inverse(full)
    ops = {}
    for label, mat in m.ops.items():
        moved = f.matmul(pinv, f.matmul(mat, full))
        if k and not np.array_equal(moved[k:, :k], f.zeros(m.dim - k, k)):
            raise ValueError(f"columns are not stable under operator {label}")
        ops[label] = moved[k:, k:]
    quot = FpModule(f, m.dim - k, ops)
    projection = pinv[k:, :]
    section = full[:, k:]
    return quot, projection, section


def _assert_absolutely_simple(s: FpModule):
    if len(hom_space(s, s)) != 1:
        raise ValueError("simple module has endomorphism ring larger than the field")


def radical_submodule(m: FpModule, simples: dict[str, FpModule]) -> np.ndarray:
    """Columns spanning the intersection of kernels of all maps to simples.

    Correct only when the simples dictionary is complete for the
    algebra at hand.
    """
    f = m.field
    rows = []
    for s in simples.values():
        for h in hom_space(m, s):
            rows.append(h)
    if not rows:
        return f.identity(m.dim)
    return f.nullspace(np.vstack(rows))


def top_multiplicities(m: FpModule, simples: dict[str, FpModule]) -> dict[str, int]:
    out = {}
    for label, s in simples.items():
        _assert_absolutely_simple(s)
        count = len(hom_space(m, s))
        if count:
            out[label] = count
    return out


def socle_submodule(m: FpModule, simples: dict[str, FpModule]) -> np.ndarray:
    f = m.field
    blocks = [f.zeros(m.dim, 0)]
    for s in simples.values():
        for h in hom_space(s, m):
            blocks.append(h)
    return f.column_space_basis(np.hstack(blocks))


def socle_multiplicities(m: FpModule, simples: dict[str, FpModule]) -> dict[str, int]:
    out = {}
    for label, s in simples.items():
        _assert_absolutely_simple(s)
        count = len(hom_space(s, m))
        if count:
            out[label] = count
    return out


# -- projective covers and syzygies -------------------------------------

@dataclass
class ProjectiveCover:
    module: FpModule
    map: np.ndarray  # m.dim x cover.dim, surjective
    summand_labels: list[str]


def projective_cover(
    m: FpModule, simples: dict[str, FpModule], projectives: dict[str, FpModule]
) -> ProjectiveCover:
    """Minimal projective cover, assembled summand by summand.

    The chosen maps induce an isomorphism on tops, which is what makes
    the cover minimal; surjectivity is asserted on the result.
    """
    f = m.field
    if m.dim == 0:
        return ProjectiveCover(zero_module_like(m), f.zeros(0, 0), [])
    tops = top_multiplicities(m, simples)
    if not tops:
        raise ValueError("nonzero module with zero top; simples list incomplete?")
    for label in tops:
        if label not in projectives:
            raise MissingProjective(label)
    rad = radical_submodule(m, simples)
    _, q, _ = quotient_by_columns(m, rad)
    tdim = q.shape[0]
    chosen: list[tuple[str, np.ndarray]] = []
    covered = f.zeros(tdim, 0)
    for label in sorted(tops):
        want = tops[label]
        sdim = simples[label].dim
        got = 0
        for phi in hom_space(projectives[label], m):
            if got == want:
                break
            trial = f.column_space_basis(np.hstack([covered, f.matmul(q, phi)]))
            if trial.shape[1] == covered.shape[1] + sdim:
                covered = trial
                chosen.append((label, phi))
                got += 1
        assert got == want, f"could not reach top multiplicity for {label}"
    cover = direct_sum([projectives[label] for label, _ in chosen])
    theta = np.hstack([phi for _, phi in chosen])
    assert f.rank(theta) == m.dim, "cover map is not surjective"
    for label in m.labels:
        assert np.array_equal(
            f.matmul(theta, cover.ops[label]), f.matmul(m.ops[label], theta)
        )
    return ProjectiveCover(cover, theta, [label for label, _ in chosen])


@dataclass
class SyzygyData:
    module: FpModule
    inclusion: np.ndarray  # cover.dim x module.dim
    cover: ProjectiveCover


def syzygy(
    m: FpModule, simples: dict[str, FpModule], projectives: dict[str, FpModule]
) -> SyzygyData:
    """Kernel of a minimal projective cover."""
    cover = projective_cover(m, simples, projectives)
    f = m.field
    kernel = f.nullspace(cover.map) if cover.module.dim else f.zeros(0, 0)
    omega, incl = submodule_from_columns(cover.module, kernel)
    assert omega.dim == cover.module.dim - m.dim
    return SyzygyData(omega, incl, cover)


def ext1_dim(
    m: FpModule,
    n: FpModule,
    simples: dict[str, FpModule],
    projectives: dict[str, FpModule],
) -> int:
    """Dimension of the first extension group of m by n.

    Classes live in Hom(syzygy, n); the ones that extend to the cover
    are coboundaries and get quotiented out.  When n is simple the
    cover maps kill the syzygy (it sits inside the radical), so the
    subtraction is a no-op in that case.
    """
    syz = syzygy(m, simples, projectives)
    homs = hom_space(syz.module, n)
    if not homs:
        return 0
    coboundaries = ext1_coboundaries(syz, n)
    if not coboundaries:
        return len(homs)
    f = m.field
    stacked = np.stack([h.reshape(-1) for h in homs + coboundaries])
    assert f.rank(stacked) == len(homs), "coboundary escaped Hom(syzygy, n)"
    return len(homs) - f.rank(np.stack([h.reshape(-1) for h in coboundaries]))


def ext1_coboundaries(syz: SyzygyData, n: FpModule) -> list:
    """Restrictions to the syzygy of maps cover -> n (the trivial classes)."""
    f = n.field
    return [f.matmul(h, syz.inclusion) for h in hom_space(syz.cover.module, n)]


def is_projective_module(
    m: FpModule, simples: dict[str, FpModule], projectives: dict[str, FpModule]
) -> bool:
    """True iff every first extension group against a simple vanishes.

    Equivalent formulation used here: the syzygy of a minimal cover is
    zero.  A nonzero syzygy has a nonzero top, hence a nonzero
    extension group against some simple; a zero syzygy kills them all.
    """
    return syzygy(m, simples, projectives).module.dim == 0


# -- extensions ----------------------------------------------------------

@dataclass
class ExtensionData:
    module: FpModule
    inclusion: np.ndarray  # total.dim x n.dim
    projection: np.ndarray  # m.dim x total.dim


def build_extension(n: FpModule, syz: SyzygyData, cocycle) -> ExtensionData:
    """Extension of the covered module by n along a cocycle.

    The cocycle is a map from the syzygy to n (n.dim x syzygy.dim
    matrix, must intertwine).  The total space is the pushout
    (n + cover) / graph, which comes with the inclusion of n and the
    projection back onto the covered module.  A zero cocycle produces
    the split extension.
    """
    f = n.field
    omega = syz.module
    cover = syz.cover.module
    _check_same_schema(n, cover)
    cocycle = f.normalize(np.asarray(cocycle, dtype=np.int64))
    if cocycle.size == 0:
        cocycle = cocycle.reshape(n.dim, omega.dim)
    assert cocycle.shape == (n.dim, omega.dim)
    for label in omega.labels:
        lhs = f.matmul(cocycle, omega.ops[label])
        rhs = f.matmul(n.ops[label], cocycle)
        assert np.array_equal(lhs, rhs), "cocycle is not a module map"

    ambient = direct_sum([n, cover])
    graph = np.vstack([cocycle, f.neg(syz.inclusion)])
    total, projection_to_total, section = quotient_by_columns(ambient, graph)

    incl = projection_to_total[:, : n.dim]
    mdim = syz.cover.map.shape[0]
    onto_m = np.hstack([f.zeros(mdim, n.dim), syz.cover.map])
    assert not np.any(f.matmul(onto_m, graph)), "cover map must kill the graph"
    proj = f.matmul(onto_m, section)

    assert total.dim == mdim + n.dim
    assert f.rank(incl) == n.dim
    assert f.rank(proj) == mdim
    assert not np.any(f.matmul(proj, incl))
    for label in n.labels:
        assert np.array_equal(
            f.matmul(total.ops[label], incl), f.matmul(incl, n.ops[label])
        )
    return ExtensionData(total, incl, proj)


# -- isomorphism testing -------------------------------------------------

@dataclass
class IsoResult:
    isomorphic: bool
    witness: np.ndarray | None = None

    def __bool__(self) -> bool:
        return self.isomorphic


def is_isomorphic(
    m: FpModule,
    n: FpModule,
    seed: int = 0,
    tries: int = 200,
    exhaust_bound: int = 4096,
) -> IsoResult:
    """Search the intertwiner space for an invertible element.

    Returns a verified witness on success.  A negative answer is only
    returned when it is certain: zero hom space, dimension mismatch,
    or exhaustive enumeration of the hom space.  Otherwise Undecided.
    """
    _check_same_schema(m, n)
    f = m.field
    if m.dim != n.dim:
        return IsoResult(False)
    if m.dim == 0:
        return IsoResult(True, f.zeros(0, 0))
    homs = hom_space(m, n)
    if not homs:
        return IsoResult(False)

    def check(h):
        if not f.is_invertible(h):
            return None
        for label in m.labels:
            assert np.array_equal(f.matmul(h, m.ops[label]), f.matmul(n.ops[label], h))
        return IsoResult(True, h)

    for h in homs:
        hit = check(h)
        if hit:
            return hit
    rng = random.Random(seed)
    for _ in range(tries):
        combo = f.zeros(n.dim, m.dim)
        for h in homs:
            combo = f.add(combo, f.mul(h, rng.randrange(f.q)))
        hit = check(combo)
        if hit:
            return hit
    if f.q ** len(homs) <= exhaust_bound:
        for coeffs in itertools.product(range(f.q), repeat=len(homs)):
            if not any(coeffs):
                continue
            combo = f.zeros(n.dim, m.dim)
            for c, h in zip(coeffs, homs):
                combo = f.add(combo, f.mul(h, c))
            hit = check(combo)
            if hit:
                return hit
        return IsoResult(False)
    raise Undecided(
        f"no invertible intertwiner found in {tries} tries; hom space of dim "
        f"{len(homs)} too large to exhaust"
    )


# -- Fitting decomposition ----------------------------------------------

def fitting_split(m: FpModule, endo):
    """Split along the stable image/kernel of a high power of an endo.

    Returns ((image part, inclusion), (kernel part, inclusion)).  Both
    spans are submodules because the endomorphism commutes with every
    generator.  Raises ValueError if the power is invertible or zero.
    """
    f = m.field
    y = f.matpow(f.normalize(np.asarray(endo, dtype=np.int64)), max(m.dim, 1))
    image = f.column_space_basis(y)
    kernel = f.nullspace(y)
    r = image.shape[1]
    if r == 0 or r == m.dim:
        raise ValueError("endomorphism power gives no proper splitting")
    assert r + kernel.shape[1] == m.dim
    assert f.rank(np.hstack([image, kernel])) == m.dim
    return submodule_from_columns(m, image), submodule_from_columns(m, kernel)


def decompose(m: FpModule, seed: int = 0, tries: int = 80) -> list[FpModule]:
    """Indecomposable summands, found by repeated Fitting splitting.

    Every returned factor is certified indecomposable; if neither a
    splitting nor a certificate can be found, raises Undecided.
    """
    if m.dim == 0:
        return []
    f = m.field
    homs = hom_space(m, m)
    if len(homs) == 1:
        return [m]
    rng = random.Random(seed)
    candidates = list(homs)
    for _ in range(tries):
        combo = f.zeros(m.dim, m.dim)
        for h in homs:
            combo = f.add(combo, f.mul(h, rng.randrange(f.q)))
        candidates.append(combo)
    for h in candidates:
        y = f.matpow(h, m.dim)
        r = f.rank(y)
        if 0 < r < m.dim:
            (a, _), (b, _) = fitting_split(m, h)
            return decompose(a, seed=seed + 1, tries=tries) + decompose(
                b, seed=seed + 2, tries=tries
            )
    if is_indecomposable(m, seed=seed):
        return [m]
    raise Undecided("module is decomposable but no splitting endomorphism was found")


# -- radical of a matrix algebra ----------------------------------------

def _integer_power_trace(mat: np.ndarray, e: int) -> int:
    """Trace of the e-th power of the integer lift, computed exactly."""
    lifted = np.array(mat, dtype=object)
    n = lifted.shape[0]
    result = np.array(np.eye(n, dtype=np.int64), dtype=object)
    base = lifted
    k = e
    while k > 0:
        if k & 1:
            result = result @ base
        base = base @ base
        k >>= 1
    return int(np.trace(result))


def algebra_radical(mats: list[np.ndarray], field: GF) -> list[np.ndarray]:
    """Jacobson radical of a unital matrix algebra over a prime field.

    Input is a basis of the algebra (closed under products, containing
    the identity).  Uses the characteristic-p chain of trace conditions
    tr(lift(z)^(p^k)) / p^k mod p for p^k up to the matrix size; the
    result is verified to be a nil ideal before returning.
    """
    if field.k != 1:
        raise Undecided("radical computation implemented over prime fields only")
    if not mats:
        return []
    p = field.p
    n = mats[0].shape[0]
    current = [field.normalize(np.asarray(z, dtype=np.int64)) for z in mats]
    k = 0
    while p**k <= n:
        if not current:
            break
        gram = field.zeros(len(current) ** 2, len(current))
        row = 0
        for y in current:
            for i, x in enumerate(current):
                t = _integer_power_trace(field.matmul(x, y), p**k)
                assert t % p**k == 0, "trace lift divisibility failed"
                gram[row, i] = (t // p**k) % p
            row += 1
        combos = field.nullspace(gram[:row])
        nxt = []
        for c in range(combos.shape[1]):
            z = field.zeros(n, n)
            for i, x in enumerate(current):
                z = field.add(z, field.mul(x, int(combos[i, c])))
            nxt.append(z)
        current = nxt
        k += 1

    flat_alg = np.column_stack([z.reshape(-1) for z in mats])
    if current:
        flat_rad = np.column_stack([z.reshape(-1) for z in current])
        base_rank = field.rank(flat_rad)
        products = []
        for z in current:
            for b in mats:
                products.append(field.matmul(z, b).reshape(-1))
                products.append(field.matmul(b, z).reshape(-1))
        assert (
            field.rank(np.hstack([flat_rad, np.column_stack(products)])) == base_rank
        ), "radical candidate is not an ideal"
        for z in current:
            assert not np.any(field.matpow(z, n)), "radical element is not nilpotent"
    assert field.rank(flat_alg) == len(mats), "algebra basis is dependent"
    return current


# -- indecomposability ---------------------------------------------------

def _poly_mul_mod(a, b, f, p):
    prod = np.polymul(a[::-1], b[::-1])[::-1] % p
    return _poly_rem(prod, f, p)


def _poly_rem(a, f, p):
    a = np.array(a, dtype=np.int64) % p
    d = len(f) - 1
    inv_lead = pow(int(f[-1]), p - 2, p)
    while len(a) > d:
        c = (a[-1] * inv_lead) % p
        if c:
            a[-1 - d :] = (a[-1 - d :] - c * np.array(f, dtype=np.int64)) % p
        a = a[:-1]
    while len(a) > 1 and a[-1] == 0:
        a = a[:-1]
    return a


def _poly_powmod_x(e: int, f, p):
    """x^e mod f, binary powering; coefficients low to high."""
    result = np.array([1], dtype=np.int64)
    base = _poly_rem(np.array([0, 1], dtype=np.int64), f, p)
    while e > 0:
        if e & 1:
            result = _poly_mul_mod(result, base, f, p)
        base = _poly_mul_mod(base, base, f, p)
        e >>= 1
    return result


def _poly_gcd(a, b, p):
    a = np.trim_zeros(np.array(a, dtype=np.int64) % p, "b")
    b = np.trim_zeros(np.array(b, dtype=np.int64) % p, "b")
    while len(b):
        a, b = b, _poly_rem(a, b, p)
        b = np.trim_zeros(b, "b")
    return a


def is_irreducible_poly(coeffs, p: int) -> bool:
    """Rabin irreducibility test for a monic polynomial over F_p.

    Coefficients run low to high and the polynomial must be monic.
    """
    f = np.array(coeffs, dtype=np.int64) % p
    d = len(f) - 1
    if d < 1 or f[-1] != 1:
        raise ValueError("expected a monic polynomial of positive degree")
    if d == 1:
        return True
    top = _poly_powmod_x(p**d, f, p)
    diff = np.zeros(max(len(top), 2), dtype=np.int64)
    diff[: len(top)] = top
    diff[1] = (diff[1] - 1) % p
    if np.any(diff % p):
        return False
    for ell in {e for e in range(2, d + 1) if d % e == 0 and is_prime(e)}:
        sub = _poly_powmod_x(p ** (d // ell), f, p)
        padded = np.zeros(max(len(sub), 2), dtype=np.int64)
        padded[: len(sub)] = sub
        padded[1] = (padded[1] - 1) % p
        g = _poly_gcd(padded, f, p)
        if len(g) > 1:
            return False
    return True


class _QuotientAlgebra:
    """End(M) modulo its radical, in coordinates over the End basis."""

    def __init__(self, mod: FpModule, homs: list[np.ndarray], rad: list[np.ndarray]):
        f = mod.field
        self.f = f
        d = len(homs)
        flat = np.column_stack([h.reshape(-1) for h in homs])
        rhs = np.column_stack(
            [f.matmul(a, b).reshape(-1) for a in homs for b in homs]
        )
        table = f.solve(flat, rhs)
        # solve gives shape (d, d*d) with column i*d+j holding the product
        # E_i E_j; rearrange to tensor[i, j, c] = coordinate c of E_i E_j
        self.table = np.moveaxis(table.reshape(d, d, d), 0, 2)
        self.identity_coords = f.solve(flat, f.identity(mod.dim).reshape(-1))
        if rad:
            rad_coords = f.solve(
                flat, np.column_stack([z.reshape(-1) for z in rad])
            )
            r, pivots = f.rref(rad_coords.T)
            self.rad_rows = r[: len(pivots)]
            self.rad_pivots = pivots
        else:
            self.rad_rows = f.zeros(0, d)
            self.rad_pivots = []
        self.d = d
        self.free = [i for i in range(d) if i not in self.rad_pivots]

    @property
    def dim(self) -> int:
        return len(self.free)

    def reduce(self, v):
        v = self.f.normalize(np.asarray(v, dtype=np.int64)).copy()
        for row, piv in zip(self.rad_rows, self.rad_pivots):
            c = int(v[piv])
            if c:
                v = self.f.sub(v, self.f.mul(row, c))
        return v

    def mul(self, a, b):
        out = np.tensordot(np.tensordot(a, self.table, axes=(0, 0)), b, axes=(0, 0))
        return self.reduce(self.f.normalize(out))

    def is_commutative(self) -> bool:
        for i in self.free:
            for j in self.free:
                ei = self.f.zeros(self.d, 1)[:, 0]
                ei[i] = 1
                ej = self.f.zeros(self.d, 1)[:, 0]
                ej[j] = 1
                if not np.array_equal(self.mul(ei, ej), self.mul(ej, ei)):
                    return False
        return True

    def min_poly(self, v):
        """Monic minimal polynomial of v, coefficients low to high."""
        f = self.f
        powers = [self.reduce(self.identity_coords)]
        krylov = powers[0][:, None]
        while True:
            nxt = self.mul(powers[-1], v)
            try:
                c = f.solve(krylov, nxt)
                coeffs = np.concatenate([f.neg(c), np.array([1], dtype=np.int64)])
                return coeffs
            except ValueError:
                powers.append(nxt)
                krylov = np.hstack([krylov, nxt[:, None]])


def is_indecomposable(m: FpModule, seed: int = 0, tries: int = 60) -> bool:
    """Certify that the endomorphism ring is local, or that it is not.

    Local means the quotient by the radical is a field: decided by a
    commutativity check plus a search for an element whose minimal
    polynomial is irreducible of full degree.  Noncommutative
    quotients are never division rings over a finite field, so they
    certify decomposability immediately.
    """
    if m.dim == 0:
        raise ValueError("the zero module has no meaningful answer here")
    f = m.field
    homs = hom_space(m, m)
    if len(homs) == 1:
        return True
    rad = algebra_radical(homs, f)
    quot = _QuotientAlgebra(m, homs, rad)
    if quot.dim == 1:
        return True
    if not quot.is_commutative():
        return False
    rng = random.Random(seed)
    target = quot.dim

    def qualifies(v):
        poly = quot.min_poly(v)
        return len(poly) - 1 == target and is_irreducible_poly(poly, f.p)

    for _ in range(tries):
        v = f.zeros(quot.d, 1)[:, 0]
        for i in quot.free:
            v[i] = rng.randrange(f.q)
        if qualifies(quot.reduce(v)):
            return True
    if f.q**target <= 4096:
        for coeffs in itertools.product(range(f.q), repeat=target):
            v = f.zeros(quot.d, 1)[:, 0]
            for i, c in zip(quot.free, coeffs):
                v[i] = c
            if qualifies(quot.reduce(v)):
                return True
        return False
    raise Undecided(
        "no field generator found and the quotient algebra is too large to exhaust"
    )


# -- eigenvalue bookkeeping ---------------------------------------------

def eigenvalue_multiplicities(field: GF, mat) -> dict[int, int]:
    """Multiplicity of each prime-field eigenvalue c as dim ker(mat - c).

    Faithful for matrices satisfying x^p = x, which are diagonalizable
    with prime-field eigenvalues.
    """
    mat = field.normalize(np.asarray(mat, dtype=np.int64))
    n = mat.shape[0]
    out = {}
    total = 0
    for c in range(field.p):
        shifted = field.sub(mat, field.mul(field.identity(n), c))
        k = n - field.rank(shifted)
        if k:
            out[c] = k
            total += k
    assert total == n, "matrix is not diagonalizable over the prime field"
    return out


# -- text serialization --------------------------------------------------

def dump_text(m: FpModule) -> str:
    lines = [f"dim={m.dim} q={m.field.q} labels={','.join(m.labels)}"]
    for label in m.labels:
        for row in m.ops[label]:
            lines.append(",".join(str(int(x)) for x in row))
    return "\n".join(lines) + "\n"


def parse_text(text: str) -> FpModule:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty module text")
    header = lines[0].split()
    fields = dict(part.split("=", 1) for part in header)
    dim = int(fields["dim"])
    q = int(fields["q"])
    labels = [l for l in fields["labels"].split(",") if l]
    if is_prime(q):
        gf = GF(q)
    else:
        p = math.isqrt(q)
        if p * p != q or not is_prime(p):
            raise ValueError(f"q = {q} is not a prime or a prime square")
        gf = GF(p, 2)
    expected = 1 + dim * len(labels)
    if len(lines) != expected:
        raise ValueError(f"expected {expected} lines, found {len(lines)}")
    ops = {}
    at = 1
    for label in labels:
        rows = []
        for _ in range(dim):
            rows.append([int(x) for x in lines[at].split(",")])
            at += 1
        ops[label] = np.array(rows, dtype=np.int64).reshape(dim, dim)
    return FpModule(gf, dim, ops)
