import random

import pytest

from prymlab import corr, cover, prym, surface
from prymlab.cover import MonodromyDatum, induce, random_simple
from prymlab.errors import DisconnectedError, ScenarioError
from prymlab.lattice import mat_equal, ptype
from prymlab.prym import (
    conjecture_probe,
    conjectured_type,
    mu_check,
    prym_lattice,
    prym_tyurin_lattice,
    duality_scaling_consistent,
    verify_scenario,
)
from prymlab.weyl import OrbitKind, reflection, short_root


def test_prym_of_rational_quotient_is_whole_jacobian():
    # double cover of the line with six branch points: quotient is rational,
    # so the anti-invariant lattice is everything, principally polarized
    s = reflection(short_root(1), 1)
    datum = MonodromyDatum(1, 0, tuple([s] * 6))
    cm = induce(datum, OrbitKind.VECTOR)
    L = prym_lattice(cm, corr.negation_matrix(1))
    assert L.rank == 4
    assert ptype(L) == (1, 1)


def test_prym_of_unramified_double_cover_of_genus_two():
    # tower realisation: index-2 stage unramified over a genus-2 middle curve
    datum = random_simple(2, 0, 6, seed=19)
    cm = induce(datum, OrbitKind.VECTOR)
    assert cover.genus(induce(datum, OrbitKind.PAIR_CLASS)) == 2
    L = prym_lattice(cm, corr.negation_matrix(2))
    assert L.rank == 2
    assert ptype(L) == (2,)


def test_prym_b2_types():
    datum = random_simple(2, 4, 4, seed=3)
    L = prym_lattice(induce(datum, OrbitKind.VECTOR), corr.negation_matrix(2))
    assert ptype(L) == (1, 2)


def test_saturation_index_on_genus_two_double_cover():
    # anti-invariant image vs its saturation: the index shows up as the
    # square ratio of the restricted gram determinants
    from prymlab.lattice import det, eye as _eye, image as _image, saturate as _sat

    s = reflection(short_root(1), 1)
    datum = MonodromyDatum(1, 0, tuple([s] * 6))
    H = surface.build(induce(datum, OrbitKind.VECTOR))
    iota = surface.induced_map(H, H, corr.negation_matrix(1))
    raw = _image(_eye(H.genus2) - iota)
    sat = _sat(raw)
    det_raw = det(raw.T @ H.gram @ raw)
    det_sat = det(sat.T @ H.gram @ sat)
    assert det_raw % det_sat == 0
    index_sq = det_raw // det_sat
    assert index_sq == 16 * 16  # (1 - iota) doubles each of the four directions
    assert sat.shape[1] == raw.shape[1]


def test_prym_lattice_requires_connected():
    datum = random_simple(3, 0, 10, seed=2)
    with pytest.raises(DisconnectedError):
        prym_lattice(induce(datum, OrbitKind.SPINOR), corr.sigma_matrix(3))


def test_prym_tyurin_b3():
    datum = random_simple(3, 4, 6, seed=1)
    L, cert = prym_tyurin_lattice(induce(datum, OrbitKind.SPINOR))
    assert ptype(L) == (2, 4)
    assert cert["exponent"] == 4
    assert cert["components"] == 1
    assert L.rank == 4


def test_prym_tyurin_hyperelliptic_case():
    datum = random_simple(3, 6, 4, seed=2)
    L, _ = prym_tyurin_lattice(induce(datum, OrbitKind.SPINOR))
    assert ptype(L) == (4, 4)


def test_prym_tyurin_split_etale_case():
    datum = random_simple(3, 0, 10, seed=2)
    L, cert = prym_tyurin_lattice(induce(datum, OrbitKind.SPINOR))
    assert ptype(L) == (2, 2)
    assert cert["components"] == 2


def test_mu_check_small_ranks():
    for n, ds, dl in [(2, 4, 4), (3, 4, 6)]:
        datum = random_simple(n, ds, dl, seed=5)
        mu = mu_check(induce(datum, OrbitKind.SPINOR), induce(datum, OrbitKind.VECTOR))
        assert mu.surjective and mu.scaling


def test_mu_scaling_at_rank_four():
    datum = random_simple(4, 4, 8, seed=5)
    mu = mu_check(induce(datum, OrbitKind.SPINOR), induce(datum, OrbitKind.VECTOR))
    assert mu.scaling  # the form identity holds regardless of surjectivity


def test_transpose_composition_is_multiplication_by_exponent():
    # on the Prym-Tyurin lattice the incidence roundtrip is the exponent
    datum = random_simple(3, 4, 6, seed=8)
    sp = induce(datum, OrbitKind.SPINOR)
    vec = induce(datum, OrbitKind.VECTOR)
    HX = surface.build_all(sp)
    HC = surface.build_all(vec)
    s0_mat = corr.make_S_family(3)["S0"].matrix
    s0 = surface.induced_map_all(HX, HC, s0_mat)
    ts0 = surface.induced_map_all(HC, HX, s0_mat.T)
    L, _ = prym_tyurin_lattice(sp)
    assert mat_equal(ts0 @ s0 @ L.basis, 4 * L.basis)


def test_isogenous_lattices_share_rank():
    rng = random.Random(17)
    for _ in range(4):
        n = rng.choice([2, 3])
        ds = 2 * rng.randint(1, 3)
        dl = 2 * rng.randint(2, 3)
        datum = random_simple(n, ds, dl, seed=rng.randint(0, 10**6))
        L, _ = prym_tyurin_lattice(induce(datum, OrbitKind.SPINOR))
        P = prym_lattice(induce(datum, OrbitKind.VECTOR), corr.negation_matrix(n))
        assert L.rank == P.rank


def test_duality_scaling_consistency_whenever_mu_passes():
    rng = random.Random(23)
    for _ in range(3):
        ds, dl = 2 * rng.randint(1, 3), 2 * rng.randint(2, 3)
        datum = random_simple(3, ds, dl, seed=rng.randint(0, 10**6))
        sp, vec = induce(datum, OrbitKind.SPINOR), induce(datum, OrbitKind.VECTOR)
        mu = mu_check(sp, vec)
        if not (mu.surjective and mu.scaling):
            continue
        L, _ = prym_tyurin_lattice(sp)
        P = prym_lattice(vec, corr.negation_matrix(3))
        assert duality_scaling_consistent(ptype(L), ptype(P), 3)


def test_types_invariant_under_braid_moves():
    # sliding one branch point past the next conjugates its monodromy but
    # leaves the covering surface unchanged, so every type must survive
    datum = random_simple(3, 4, 6, seed=14)
    gens = list(datum.gens)
    base_pt = ptype(prym_tyurin_lattice(induce(datum, OrbitKind.SPINOR))[0])
    base_pp = ptype(prym_lattice(induce(datum, OrbitKind.VECTOR), corr.negation_matrix(3)))
    rng = random.Random(7)
    for _ in range(4):
        i = rng.randrange(len(gens) - 1)
        a, b = gens[i], gens[i + 1]
        gens[i], gens[i + 1] = b, b.inverse() * a * b
        moved = MonodromyDatum(3, 0, tuple(gens))
        assert cover.validate(moved) is None
        assert ptype(prym_tyurin_lattice(induce(moved, OrbitKind.SPINOR))[0]) == base_pt
        assert (
            ptype(prym_lattice(induce(moved, OrbitKind.VECTOR), corr.negation_matrix(3)))
            == base_pp
        )


def test_types_invariant_under_global_conjugation():
    datum = random_simple(3, 4, 6, seed=15)
    w = cover.random_simple(3, 2, 4, seed=1).gens[0] * datum.gens[0]
    conj = MonodromyDatum(3, 0, tuple(w * g * w.inverse() for g in datum.gens))
    assert cover.validate(conj) is None
    a = ptype(prym_tyurin_lattice(induce(datum, OrbitKind.SPINOR))[0])
    b = ptype(prym_tyurin_lattice(induce(conj, OrbitKind.SPINOR))[0])
    assert a == b


def test_conjectured_type_counting():
    assert conjectured_type(4, 4, 8) == (4, 8)
    assert conjectured_type(4, 0, 12) == (4, 4)
    assert conjectured_type(4, 2, 8) == (4,)
    assert conjectured_type(3, 4, 6) == (2, 4)
    assert conjectured_type(4, 4, 4) is None  # negative multiplicity


@pytest.mark.parametrize(
    "name,kwargs",
    [
        ("pantazis_b2", {}),
        ("recillas_a3", {}),
        ("theorem2_b3", {}),
        ("theorem2_b3", {"counts": (6, 6)}),
        ("theorem2_b3", {"counts": (4, 8)}),
        ("hyperelliptic_4xi", {}),
        ("d3_antidiagonal", {}),
        ("etale_dn", {}),
        ("etale_dn", {"n": 4, "counts": (0, 12)}),
        ("b3_complement", {}),
        ("b4_structure", {}),
    ],
)
def test_scenarios_pass(name, kwargs):
    result = verify_scenario(name, seed=3, **kwargs)
    assert result.verdict, (result.computed, result.predicted, result.checks)


def test_scenario_serialization_round_trip():
    import json

    result = verify_scenario("theorem2_b3", seed=3)
    blob = json.dumps(result.as_dict(), sort_keys=True)
    assert "theorem2_b3" in blob


def test_scenario_unknown_name():
    with pytest.raises(ScenarioError):
        verify_scenario("no_such_scenario")


def test_scenario_constraint_violations_are_listed():
    datum = random_simple(2, 4, 4, seed=1)
    with pytest.raises(ScenarioError) as err:
        verify_scenario("theorem2_b3", datum=datum)
    assert any("rank" in v for v in err.value.violations)


def test_scenario_rejects_non_simple_datum():
    w = reflection(short_root(1), 2) * reflection(short_root(2), 2)
    datum = MonodromyDatum(2, 0, (w, w.inverse()))
    with pytest.raises(ScenarioError):
        verify_scenario("pantazis_b2", datum=datum)


def test_probe_reports_rows_and_agreement():
    rep = conjecture_probe(4, 4, 8, trials=2, seed=7)
    assert rep.trials == 2
    assert len(rep.rows) == 2
    for row in rep.rows:
        assert row["conjectured_type"] == [4, 8]
        assert isinstance(row["agree"], bool)
    assert not rep.asserted


def test_probe_asserts_in_unramified_regime():
    rep = conjecture_probe(4, 0, 12, trials=2, seed=9)
    assert rep.asserted
    assert rep.agreement == "2/2"


def test_probe_rejects_low_rank():
    with pytest.raises(ScenarioError):
        conjecture_probe(3, 4, 6, trials=1, seed=0)
