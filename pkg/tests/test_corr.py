from fractions import Fraction

import pytest

from _oracles import pairing, spinor_weight_vectors
from prymlab import corr, cover
from prymlab.corr import (
    FiberMatrix,
    check_identity,
    identity_names,
    make_D,
    make_Di,
    make_S_family,
    orbit_gram,
)
from prymlab.errors import EquivarianceError, RankError, ScaleError
from prymlab.lattice import eye, intmat, mat_equal, to_lists, zeros
from prymlab.weyl import OrbitKind


def test_make_D_rank2_is_complementation():
    D = make_D(2).matrix
    assert to_lists(D) == [
        [0, 0, 0, 1],
        [0, 0, 1, 0],
        [0, 1, 0, 0],
        [1, 0, 0, 0],
    ]
    assert make_D(2).degree == 1


@pytest.mark.parametrize("n,deg", [(2, 1), (3, 5), (4, 17), (5, 49)])
def test_make_D_degree_closed_form(n, deg):
    assert make_D(n).degree == deg


def test_fiber_matrix_rejects_non_equivariant():
    m = zeros(4, 4)
    m[0, 1] = 1
    with pytest.raises(EquivarianceError):
        FiberMatrix(2, OrbitKind.SPINOR, OrbitKind.SPINOR, m)


def test_make_S_family_rows():
    fam = make_S_family(2)
    s0 = fam["S0"].matrix
    # labels: subsets (), (1,), (2,), (1,2); vector 1,-1,2,-2
    assert to_lists(s0)[0] == [0, 1, 0, 1]  # empty set selects -1 and -2
    assert to_lists(s0)[3] == [1, 0, 1, 0]
    assert fam["T"].degree == 4
    assert mat_equal(fam["S"].matrix, 2 * s0 + 2 * fam["T"].matrix)
    assert mat_equal(fam["S1"].matrix, fam["T"].matrix - s0)
    assert all(x == 1 for row in to_lists(fam["T1"].matrix) for x in row)
    assert all(x == 1 for row in to_lists(fam["T2"].matrix) for x in row)


def test_make_Di_shells():
    d0 = make_Di(4, 0)
    assert d0.degree == 4  # hypercube adjacency
    assert mat_equal(d0.matrix, d0.matrix.T)
    d3 = make_Di(4, 3)
    assert mat_equal(d3.matrix, corr.sigma_matrix(4))
    total = zeros(16, 16)
    for i in range(4):
        total = total + i * make_Di(4, i).matrix
    assert mat_equal(total, make_D(4).matrix)


def test_make_Di_requires_rank_four():
    with pytest.raises(RankError):
        make_Di(3, 0)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_orbit_gram_spinor_exponent(n):
    og, q = orbit_gram(n, "spinor", scale=-2)
    assert q == 2 ** (n - 1)
    assert mat_equal(og.gram, make_D(n).matrix - eye(1 << n))


def test_orbit_gram_vector_structure():
    og, q = orbit_gram(3, "vector", scale=-2)
    assert q == 4
    e = 6
    expected = 2 * (corr.negation_matrix(3) - eye(e)) + intmat([[1] * e] * e)
    assert mat_equal(og.gram, expected)


def test_orbit_gram_rank2_brute_force():
    # direct rational arithmetic on the half-sum vectors
    og, q = orbit_gram(2, "spinor", scale=-2)
    vecs = spinor_weight_vectors(2)
    self_pair = pairing(vecs[0], vecs[0], -2)
    for i in range(4):
        for j in range(4):
            expected = pairing(vecs[i], vecs[j], -2) - self_pair - 1
            assert expected == Fraction(int(og.gram[i, j]))
    assert q == 2


def test_orbit_gram_rejects_bad_scale():
    with pytest.raises(ScaleError):
        orbit_gram(3, "spinor", scale=-1)
    with pytest.raises(ScaleError):
        orbit_gram(3, "spinor", scale=2)


def test_identity_catalog_all_fiber_levels():
    for name in identity_names():
        for n in corr.applicable_ranks(name):
            result = check_identity(name, n)
            assert result.passed, (name, n, result.witness)


def test_identity_details_spot_checks():
    assert check_identity("s0_roundtrip_spinor", 3).details["coefficient"] == 2
    assert check_identity("quadratic_relation", 2).details["m"] == 0
    assert check_identity("s0_roundtrip_vector", 4).details["coefficient"] == 4
    g = check_identity("parity_pushforward", 3)
    assert g.details["M"] == g.details["binomial sum"] == 2


@pytest.mark.parametrize("n", [2, 3, 4])
def test_cross_composition_solved_constants(n):
    r = check_identity("cross_composition", n)
    assert r.passed
    # roundtrip trace multiple, from expanding the scaled incidence
    assert r.details["d1"] == 2 * n**3 + 4 * n**2 + 4 * n - 4
    assert r.details["q"] == 2 ** (n - 1)
    assert r.details["q'"] == 4


def test_identity_letter_aliases():
    assert check_identity("d", 4).name == "sigma_commutes_D"


def test_identity_unknown_name():
    with pytest.raises(KeyError):
        check_identity("nonsense", 3)


def test_identity_wrong_rank():
    with pytest.raises(RankError):
        check_identity("cube_adjacency_square", 3)


def test_identity_homology_level():
    datum = cover.random_simple(3, 4, 6, seed=11)
    for name in (
        "trace_products",
        "s0_roundtrip_spinor",
        "s0_roundtrip_vector",
        "sigma_commutes_D",
        "symmetrized_D_trace",
        "quadratic_relation",
        "parity_pushforward",
    ):
        r = check_identity(name, 3, level="homology", datum=datum)
        assert r.passed, (name, r.details)


@pytest.mark.parametrize("n", [2, 4])
def test_identity_homology_other_ranks(n):
    names = ["s0_roundtrip_spinor", "s0_roundtrip_vector", "quadratic_relation"]
    if n == 4:
        names.append("cube_adjacency_square")
    for name in names:
        r = check_identity(name, n, level="homology")
        assert r.passed, (name, n, r.details)


def test_identity_homology_split_case():
    r = check_identity("split_diagonal_annihilation", 3, level="homology")
    assert r.passed
    assert r.details["components"] == 2


def test_identity_homology_rejects_vector_statements():
    with pytest.raises(ValueError):
        check_identity("parity_pullback", 4, level="homology")


def test_degrees_constant_across_rows():
    for n in (2, 3, 4):
        for fm in (make_D(n), *make_S_family(n).values()):
            fm.degree  # raises if a row sum differs
