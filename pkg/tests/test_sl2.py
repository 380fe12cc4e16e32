import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import intertwiner_basis
from vermalab.gf import GF
from vermalab.modules import (
    SchemaMismatch,
    ext1_dim,
    hom_space,
    is_indecomposable,
    is_isomorphic,
    is_projective_module,
    projective_cover,
    radical_submodule,
    socle_multiplicities,
    submodule_from_columns,
    syzygy,
    top_multiplicities,
)
from vermalab.sl2 import (
    DimensionNotDivisible,
    Sl2Schema,
    UnsupportedPrime,
    binom_mod,
    build_simple,
    build_verma_r1,
    build_verma_r2,
    frobenius_twist,
    hyper_simples,
    lifted_projectives,
    rank_variety_scan,
    restrict_to_r1,
    restricted_as_r2,
    restricted_projectives,
    restricted_simples,
    run_sl2_suites,
    schema_of,
    simple_key,
    steinberg,
    tensor,
    verify_dr2,
    verify_heart,
    verify_vv6,
)


def exact_binom(n: int, k: int) -> int:
    """C(n, k) as an exact integer, valid for negative n."""
    val = Fraction(1)
    for j in range(k):
        val *= Fraction(n - j, j + 1)
    assert val.denominator == 1
    return int(val)


def as_lists(mod):
    return {l: m.tolist() for l, m in mod.ops.items()}


# -- binomials -----------------------------------------------------------

def test_binom_matches_exact_integers():
    for p in (3, 5):
        for n in range(-60, 121, 7):
            for k in (0, 1, 2, 3, p, p + 1, 2 * p, p * p):
                assert binom_mod(n, k, p) == exact_binom(n, k) % p


def test_binom_rejects_negative_lower():
    with pytest.raises(ValueError):
        binom_mod(4, -1, 5)


# -- schema and builders -------------------------------------------------

def test_schema_validation():
    with pytest.raises(ValueError):
        Sl2Schema(4, 1)
    with pytest.raises(ValueError):
        Sl2Schema(2, 1)
    with pytest.raises(ValueError):
        Sl2Schema(5, 3)
    assert Sl2Schema(5, 2).labels == ("e", "f", "h", "e_p", "f_p")


def test_schema_of_rejects_foreign_labels():
    from vermalab.modules import FpModule

    m = FpModule(GF(3), 1, {"x": np.zeros((1, 1), dtype=np.int64)})
    with pytest.raises(SchemaMismatch):
        schema_of(m)


def test_trivial_simple_is_zero_action():
    s = Sl2Schema(5, 1)
    triv = build_simple(s, 0)
    assert triv.dim == 1
    assert all(not mat.any() for mat in triv.ops.values())


def test_natural_module_matrices():
    s = Sl2Schema(5, 1)
    nat = build_simple(s, 1)
    assert np.array_equal(nat.ops["e"], [[0, 1], [0, 0]])
    assert np.array_equal(nat.ops["f"], [[0, 0], [1, 0]])
    assert np.array_equal(nat.ops["h"], [[1, 0], [0, 4]])


def test_top_weight_simple_is_steinberg():
    for p in (3, 5):
        s = Sl2Schema(p, 1)
        top = build_simple(s, p - 1)
        st = steinberg(s)
        assert top.dim == p
        for label in top.labels:
            assert np.array_equal(top.ops[label], st.ops[label])


def test_simples_have_zero_radical():
    for p in (3, 5):
        s = Sl2Schema(p, 1)
        simples = restricted_simples(p)
        for m in range(p):
            assert radical_submodule(build_simple(s, m), simples).shape[1] == 0


def test_builder_range_errors():
    s1 = Sl2Schema(5, 1)
    s2 = Sl2Schema(5, 2)
    with pytest.raises(ValueError):
        build_simple(s1, 5)
    with pytest.raises(ValueError):
        build_simple(s1, -1)
    with pytest.raises(ValueError):
        build_verma_r1(s1, 5)
    with pytest.raises(ValueError):
        build_verma_r2(s2, 25)
    with pytest.raises(ValueError):
        build_simple(s2, 1)
    with pytest.raises(ValueError):
        build_verma_r1(s2, 1)
    with pytest.raises(ValueError):
        build_verma_r2(s1, 1)


def test_level2_unsupported_prime():
    with pytest.raises(UnsupportedPrime):
        build_verma_r2(Sl2Schema(7, 2), 1)


# -- level-1 Verma structure ---------------------------------------------

def test_verma_r1_composition_series_frozen():
    # p=5, weight 2: top L(2), radical is a copy of L(1)
    p = 5
    s = Sl2Schema(p, 1)
    simples = restricted_simples(p)
    z = build_verma_r1(s, 2)
    assert z.dim == p
    assert top_multiplicities(z, simples) == {"L2": 1}
    rad, _ = submodule_from_columns(z, radical_submodule(z, simples))
    assert rad.dim == 2
    assert top_multiplicities(rad, simples) == {"L1": 1}
    assert radical_submodule(rad, simples).shape[1] == 0


def test_verma_socle_is_reflected_weight():
    for p in (3, 5):
        s = Sl2Schema(p, 1)
        simples = restricted_simples(p)
        for lam in range(p - 1):
            z = build_verma_r1(s, lam)
            assert socle_multiplicities(z, simples) == {simple_key(p - 2 - lam): 1}


def test_verma_endomorphisms_are_scalars():
    for p in (3, 5):
        s = Sl2Schema(p, 1)
        for lam in range(p):
            z = build_verma_r1(s, lam)
            assert len(hom_space(z, z)) == 1


def test_verma_hom_dims_match_block_partner_rule():
    for p in (3, 5):
        s = Sl2Schema(p, 1)
        for a in range(p):
            za = build_verma_r1(s, a)
            for b in range(p):
                want = 1 if b == a or b == (p - 2 - a) % p else 0
                assert len(hom_space(za, build_verma_r1(s, b))) == want


def test_verma_homs_match_brute_oracle():
    p = 3
    s = Sl2Schema(p, 1)
    mods = [build_verma_r1(s, lam) for lam in range(p)]
    for a in mods:
        for b in mods:
            want = intertwiner_basis(as_lists(a), as_lists(b), p)
            assert len(hom_space(a, b)) == len(want)


def test_cover_and_syzygy_of_verma_frozen():
    # p=5, weight 2: cover has dim 10 over the single top, kernel dim 5,
    # and the second syzygy returns to the module itself
    p = 5
    simples = restricted_simples(p)
    covers = restricted_projectives(p)
    z = build_verma_r1(Sl2Schema(p, 1), 2)
    cover = projective_cover(z, simples, covers)
    assert cover.module.dim == 10
    assert cover.summand_labels == ["L2"]
    o1 = syzygy(z, simples, covers)
    assert o1.module.dim == 5
    o2 = syzygy(o1.module, simples, covers)
    assert bool(is_isomorphic(o2.module, z))


def test_ext_dims_frozen():
    p = 5
    s = Sl2Schema(p, 1)
    simples = restricted_simples(p)
    covers = restricted_projectives(p)
    # doubled simple in the heart forces a two-dimensional ext group
    assert ext1_dim(build_simple(s, 2), build_simple(s, 1), simples, covers) == 2
    assert ext1_dim(build_simple(s, 2), build_simple(s, 3), simples, covers) == 0
    z = build_verma_r1(s, 2)
    o2 = syzygy(syzygy(z, simples, covers).module, simples, covers)
    assert ext1_dim(z, o2.module, simples, covers) == 1
    st = steinberg(s)
    assert ext1_dim(st, build_simple(s, 2), simples, covers) == 0


def test_vermas_of_distinct_weights_not_isomorphic():
    s = Sl2Schema(5, 1)
    assert not is_isomorphic(build_verma_r1(s, 2), build_verma_r1(s, 1))


def test_cover_indecomposable_steinberg_projective_simple():
    p = 5
    simples = restricted_simples(p)
    covers = restricted_projectives(p)
    assert is_indecomposable(covers["L2"])
    st = steinberg(Sl2Schema(p, 1))
    assert is_projective_module(st, simples, covers)
    assert radical_submodule(st, simples).shape[1] == 0


# -- level-2 structure ---------------------------------------------------

def test_verma_r2_dimension_and_top_weight_case():
    for p in (3, 5):
        s2 = Sl2Schema(p, 2)
        z = build_verma_r2(s2, p * p - 1)
        assert z.dim == p * p
        st1 = steinberg(Sl2Schema(p, 1))
        from vermalab.modules import direct_sum

        assert bool(is_isomorphic(restrict_to_r1(z), direct_sum([st1] * p)))


@settings(max_examples=30, deadline=None)
@given(lam=st.integers(0, 24))
def test_verma_r2_character(lam):
    p = 5
    from vermalab.modules import eigenvalue_multiplicities

    z = build_verma_r2(Sl2Schema(p, 2), lam)
    got = eigenvalue_multiplicities(z.field, z.ops["h"])
    want: dict[int, int] = {}
    for i in range(p * p):
        w = (lam - 2 * i) % p
        want[w] = want.get(w, 0) + 1
    assert got == want


def test_hyper_simple_dims():
    p = 3
    simples = hyper_simples(p)
    for lam1 in range(p):
        for lam0 in range(p):
            mod = simples[simple_key(lam0 + p * lam1)]
            assert mod.dim == (lam0 + 1) * (lam1 + 1)
    assert radical_submodule(simples["L5"], simples).shape[1] == 0


def test_lifted_covers_restrict_to_level1_covers():
    p = 3
    covers = restricted_projectives(p)
    for lam, lifted in lifted_projectives(p).items():
        res = restrict_to_r1(lifted)
        assert bool(is_isomorphic(res, covers[simple_key(lam)]))


# -- tensor and twist ----------------------------------------------------

def test_tensor_dimension_and_unit():
    p = 5
    s = Sl2Schema(p, 1)
    triv = build_simple(s, 0)
    z = build_verma_r1(s, 3)
    t = tensor(z, triv)
    assert t.dim == z.dim
    assert bool(is_isomorphic(t, z))
    big = tensor(z, build_simple(s, 2))
    assert big.dim == z.dim * 3


def test_tensor_schema_mismatch():
    s1 = Sl2Schema(5, 1)
    with pytest.raises(SchemaMismatch):
        tensor(build_simple(s1, 1), restricted_as_r2(build_simple(s1, 1)))
    with pytest.raises(SchemaMismatch):
        tensor(build_simple(s1, 1), build_simple(Sl2Schema(3, 1), 1))


def test_steinberg_tensor_simple_is_projective():
    p = 5
    s = Sl2Schema(p, 1)
    simples = restricted_simples(p)
    covers = restricted_projectives(p)
    st = steinberg(s)
    for m in range(p):
        assert is_projective_module(tensor(st, build_simple(s, m)), simples, covers)


def test_twist_kills_level1_generators():
    s = Sl2Schema(3, 1)
    tw = frobenius_twist(build_verma_r1(s, 1))
    for label in ("e", "f", "h"):
        assert not tw.ops[label].any()
    assert np.array_equal(tw.ops["e_p"], build_verma_r1(s, 1).ops["e"])


def test_twist_of_trivial_is_trivial():
    s = Sl2Schema(3, 1)
    tw = frobenius_twist(build_simple(s, 0))
    assert tw.dim == 1
    assert all(not m.any() for m in tw.ops.values())


def test_depth_reduced_verma_factors_frozen():
    # p=3: twist of the weight-1 module tensored with the top simple
    # gives the level-2 module of weight 3*1 + 2 = 5
    p = 3
    s1 = Sl2Schema(p, 1)
    s2 = Sl2Schema(p, 2)
    left = build_verma_r2(s2, 5)
    right = tensor(frobenius_twist(build_verma_r1(s1, 1)), restricted_as_r2(steinberg(s1)))
    assert bool(is_isomorphic(left, right))


# -- rank varieties ------------------------------------------------------

def test_scan_of_steinberg_is_empty():
    p = 5
    st = steinberg(Sl2Schema(p, 1))
    for q in (p, p * p):
        scan = rank_variety_scan(st, q)
        assert scan.points == []
        assert scan.dim_estimate == 0


def test_scan_of_verma_frozen():
    # p=5, weight 2: non-free exactly at the raising direction
    p = 5
    z = build_verma_r1(Sl2Schema(p, 1), 2)
    for q in (p, p * p):
        scan = rank_variety_scan(z, q)
        assert scan.points == [(1, 0, 0)]
        assert scan.dim_estimate == 1


def test_scan_e_and_f_point_rule():
    for p in (3, 5):
        s = Sl2Schema(p, 1)
        for lam in range(p):
            pts = rank_variety_scan(build_verma_r1(s, lam), p).points
            assert (0, 0, 1) not in pts
            assert ((1, 0, 0) in pts) == (lam != p - 1)


def test_scan_of_zero_action_module_sees_everything():
    from vermalab.modules import FpModule

    p = 3
    f = GF(p)
    zero = f.zeros(p, p)
    mod = FpModule(f, p, {"e": zero, "f": zero.copy(), "h": zero.copy()})
    scan = rank_variety_scan(mod, p)
    assert len(scan.points) == p + 1
    assert scan.dim_estimate == 2


def test_scan_errors():
    s = Sl2Schema(3, 1)
    with pytest.raises(DimensionNotDivisible):
        rank_variety_scan(build_simple(s, 1), 3)
    with pytest.raises(ValueError):
        rank_variety_scan(build_verma_r1(s, 1), 27)
    with pytest.raises(SchemaMismatch):
        rank_variety_scan(restricted_as_r2(build_verma_r1(s, 1)), 3)


def test_scan_empty_iff_projective_on_corpus():
    p = 3
    s = Sl2Schema(p, 1)
    simples = restricted_simples(p)
    covers = restricted_projectives(p)
    corpus = [build_verma_r1(s, lam) for lam in range(p)]
    corpus += list(covers.values())
    corpus.append(tensor(steinberg(s), build_simple(s, 1)))
    for mod in corpus:
        empty = rank_variety_scan(mod, p).points == []
        assert empty == is_projective_module(mod, simples, covers)


# -- verification suites -------------------------------------------------

def test_suites_pass_p3():
    for r in (1, 2):
        for rep in run_sl2_suites(3, r):
            assert rep.passed, rep.check
            assert rep.p == 3 and rep.r == r


def test_suites_pass_p5_level1():
    for rep in run_sl2_suites(5, 1):
        assert rep.passed, rep.check


def test_depth_reduction_suite_p5():
    rep = verify_dr2(5)
    assert rep.passed
    assert [c["mu"] for c in rep.cases] == [0, 1, 2, 3]
    assert all(c["witness"] for c in rep.cases)


def test_projectivity_suite_identifies_exact_sets():
    rep = verify_vv6(5, 1)
    winners = [c["lambda"] for c in rep.cases if c["kind"] == "projectivity" and c["got"]]
    assert winners == [4]
    rep2 = verify_vv6(3, 2)
    winners2 = [c["lambda"] for c in rep2.cases if c["kind"] == "projectivity" and c["got"]]
    assert winners2 == [8]


def test_heart_partners_frozen():
    rep = verify_heart(5)
    partners = {c["lambda"]: c["mu"] for c in rep.cases}
    assert partners == {0: 3, 1: 2, 2: 1, 3: 0}


def test_suite_reports_serialize():
    rep = verify_dr2(3)
    d = rep.to_json_dict()
    assert d["check"] == "depth-reduction-tensor"
    assert d["pass"] is True
    assert isinstance(d["cases"], list)


def test_unsupported_prime_suites():
    with pytest.raises(UnsupportedPrime):
        verify_dr2(7)
    with pytest.raises(UnsupportedPrime):
        from vermalab.sl2 import verify_vv4_filtration

        verify_vv4_filtration(7)
