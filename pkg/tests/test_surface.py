import random

import pytest

from prymlab import corr, cover, lattice, surface, weyl
from prymlab.cover import MonodromyDatum, induce, random_simple
from prymlab.errors import DisconnectedError, EquivarianceError, UnsupportedError
from prymlab.lattice import det, eye, is_alternating, mat_equal, to_lists, zeros
from prymlab.weyl import OrbitKind, reflection, short_root


def _double_cover(points):
    s = reflection(short_root(1), 1)
    return induce(MonodromyDatum(1, 0, tuple([s] * points)), OrbitKind.VECTOR)


def test_torus_gram_is_the_standard_symplectic_form():
    H = surface.build(_double_cover(4))
    assert H.genus == 1
    assert to_lists(H.gram) in ([[0, 1], [-1, 0]], [[0, -1], [1, 0]])


def test_six_point_double_cover_is_genus_two_unimodular():
    H = surface.build(_double_cover(6))
    assert H.genus == 2
    assert is_alternating(H.gram)
    assert abs(det(H.gram)) == 1


def test_b3_spinor_rank_fourteen():
    d = random_simple(3, 4, 6, seed=1)
    H = surface.build(induce(d, OrbitKind.SPINOR))
    assert H.genus2 == 14
    assert abs(det(H.gram)) == 1


def test_build_is_deterministic():
    d = random_simple(2, 4, 4, seed=5)
    H1 = surface.build(induce(d, OrbitKind.SPINOR))
    H2 = surface.build(induce(d, OrbitKind.SPINOR))
    assert to_lists(H1.gram) == to_lists(H2.gram)
    assert H1.basis == H2.basis


def test_build_rejects_positive_base_genus():
    s = reflection(short_root(1), 1)
    d = MonodromyDatum(1, 1, (s, s), ((s, s),))
    with pytest.raises(UnsupportedError):
        surface.build(induce(d, OrbitKind.VECTOR))


def test_build_rejects_disconnected_cover():
    d = random_simple(3, 0, 10, seed=2)
    with pytest.raises(DisconnectedError):
        surface.build(induce(d, OrbitKind.SPINOR))


def test_gram_unimodular_alternating_on_random_data():
    rng = random.Random(31)
    cases = []
    for _ in range(6):
        cases.append((2, 2 * rng.randint(1, 3), 2 * rng.randint(1, 3)))
    for _ in range(4):
        cases.append((3, 2 * rng.randint(1, 2), 2 * rng.randint(2, 3)))
    cases.append((4, 2, 8))
    for n, ds, dl in cases:
        datum = random_simple(n, ds, dl, seed=rng.randint(0, 10**6))
        cm = induce(datum, OrbitKind.VECTOR)
        H = surface.build(cm)
        assert is_alternating(H.gram)
        if H.genus2:
            assert abs(det(H.gram)) == 1
        assert H.genus == cover.genus(cm)


def test_basis_cycles_are_cycles():
    d = random_simple(3, 4, 6, seed=4)
    H = surface.build(induce(d, OrbitKind.SPINOR))
    for z in H.basis:
        assert H.boundary(z) == {}
        assert H.intersection(z, z) == 0


def test_induced_identity_map():
    d = random_simple(2, 4, 4, seed=6)
    H = surface.build(induce(d, OrbitKind.SPINOR))
    N = surface.induced_map(H, H, eye(4))
    assert mat_equal(N, eye(H.genus2))


def test_induced_involution_squares_to_identity():
    d = random_simple(3, 4, 6, seed=7)
    HC = surface.build(induce(d, OrbitKind.VECTOR))
    iota = surface.induced_map(HC, HC, corr.negation_matrix(3))
    assert mat_equal(iota @ iota, eye(HC.genus2))


def test_induced_rejects_non_equivariant_matrix():
    d = random_simple(2, 4, 4, seed=8)
    H = surface.build(induce(d, OrbitKind.SPINOR))
    bad = zeros(4, 4)
    bad[0, 1] = 1
    with pytest.raises(EquivarianceError):
        surface.induced_map(H, H, bad)


def test_induced_rejects_mixed_data():
    d1 = random_simple(2, 4, 4, seed=1)
    d2 = random_simple(2, 4, 4, seed=2)
    H1 = surface.build(induce(d1, OrbitKind.SPINOR))
    H2 = surface.build(induce(d2, OrbitKind.SPINOR))
    with pytest.raises(ValueError):
        surface.induced_map(H1, H2, eye(4))


@pytest.mark.parametrize("n,ds,dl,seed", [(2, 4, 4, 3), (3, 4, 6, 3)])
def test_adjointness_of_transposed_correspondence(n, ds, dl, seed):
    datum = random_simple(n, ds, dl, seed=seed)
    HX = surface.build(induce(datum, OrbitKind.SPINOR))
    HC = surface.build(induce(datum, OrbitKind.VECTOR))
    s0 = corr.make_S_family(n)["S0"].matrix
    fwd = surface.induced_map(HX, HC, s0)
    bwd = surface.induced_map(HC, HX, s0.T)
    # pairing the image forward equals pairing against the transposed image
    assert mat_equal(fwd.T @ HC.gram, HX.gram @ bwd)


def test_functoriality_of_composition():
    datum = random_simple(3, 4, 6, seed=9)
    HX = surface.build(induce(datum, OrbitKind.SPINOR))
    HC = surface.build(induce(datum, OrbitKind.VECTOR))
    s0 = corr.make_S_family(3)["S0"].matrix
    neg = corr.negation_matrix(3)
    one = surface.induced_map(HX, HC, s0 @ neg)
    two = surface.induced_map(HC, HC, neg) @ surface.induced_map(HX, HC, s0)
    assert mat_equal(one, two)


def test_trace_correspondences_induce_zero():
    datum = random_simple(3, 4, 6, seed=10)
    HX = surface.build(induce(datum, OrbitKind.SPINOR))
    HC = surface.build(induce(datum, OrbitKind.VECTOR))
    fam = corr.make_S_family(3)
    assert mat_equal(
        surface.induced_map(HX, HX, fam["T1"].matrix), zeros(HX.genus2, HX.genus2)
    )
    assert mat_equal(
        surface.induced_map(HX, HC, fam["T"].matrix), zeros(HC.genus2, HX.genus2)
    )
    assert mat_equal(
        surface.induced_map(HC, HC, fam["T2"].matrix), zeros(HC.genus2, HC.genus2)
    )


def test_all_ones_image_lies_in_invariants():
    # the trace image is invariant under the sheet involution (here: zero)
    datum = random_simple(2, 4, 4, seed=12)
    HX = surface.build(induce(datum, OrbitKind.SPINOR))
    HC = surface.build(induce(datum, OrbitKind.VECTOR))
    t = surface.induced_map(HX, HC, corr.make_S_family(2)["T"].matrix)
    iota = surface.induced_map(HC, HC, corr.negation_matrix(2))
    assert mat_equal(iota @ t, t)


def test_build_all_split_cover():
    datum = random_simple(3, 0, 10, seed=2)
    H = surface.build_all(induce(datum, OrbitKind.SPINOR))
    assert len(H.parts) == 2
    assert H.rank == sum(p.genus2 for p in H.parts)
    # block diagonal gram
    g0 = H.parts[0].genus2
    for i in range(g0):
        for j in range(g0, H.rank):
            assert H.gram[i, j] == 0


def test_induced_map_all_sheet_involution_swaps_parts():
    datum = random_simple(3, 0, 10, seed=2)
    H = surface.build_all(induce(datum, OrbitKind.SPINOR))
    sig = surface.induced_map_all(H, H, corr.sigma_matrix(3))
    g0 = H.parts[0].genus2
    assert mat_equal(sig @ sig, eye(H.rank))
    for i in range(g0):
        for j in range(g0):
            assert sig[i, j] == 0  # odd-size subsets land in the other half


def test_gram_export_row_major():
    H = surface.build(_double_cover(4))
    assert H.gram_json() == to_lists(H.gram)
