import random

import pytest

from nakaoka.errors import LevelError
from nakaoka.ghost import (
    GhostFunctor,
    check_ghost_morphism,
    check_monad_laws,
    finite_top_elements,
    ghost,
    ghost_element_json,
    ghost_kernel_probe,
    ghost_kernel_report,
    ghost_map,
    monad_mu,
    monad_unit,
)
from nakaoka.tambara import RU, Burnside, FixedPoint, FreeFixed, FreeUnderlying, ModPBurnside, catalog, nm, phi, res, tr
from nakaoka.tambara.sampling import Bounds

SMALL = Bounds(max_terms=3, max_exp=2, max_degree=2, coeff=3)


def test_phi_kills_t():
    F = FreeFixed(2)
    assert F.phi_reduce(phi(F, F.top("x^2 + 3*t"))) == F.phi_reduce(phi(F, F.top("x^2")))
    assert str(phi(F, F.top("x^2 + 3*t"))) == "x^2"


def test_phi_of_ru_norm_element_is_zero():
    R = RU(3)
    assert R.phi_reduce(phi(R, R.top("1 + x + x^2"))).is_zero()


def test_phi_kills_every_t_vector():
    U = FreeUnderlying(2)
    assert str(phi(U, U.top("n^2") + U.t(1, 1))) == "n^2"


def test_ghost_map_examples():
    B = Burnside(2)
    assert ghost_element_json(ghost_map(B, B.top("t"))) == {"top": {"fix": "2", "phi": "0"}}
    for k in range(-4, 5):
        g = ghost_map(B, nm(B, B.bottom(k)))
        assert g.payload[0] == B.bottom(k * k).payload and g.payload[1] == B.phi_ring.const(k)


def test_ghost_map_of_norm_in_free_underlying():
    U = FreeUnderlying(2)
    g = ghost_map(U, nm(U, U.bottom("x0 + x1")))
    fix, ph = g.payload
    assert fix == U.bottom("(x0 + x1)^2").payload
    assert str(ph) == "2*n"


def test_ghost_structure_maps_are_definitional():
    U = FreeUnderlying(3)
    G = ghost(U)
    f = U.bottom("x0^2 + x1")
    orbit_sum = U.bottom("x0^2 + x1 + x1^2 + x2 + x2^2 + x0")
    assert tr(G, G.bottom(f.payload)).payload[0] == orbit_sum.payload
    assert U.phi_reduce(tr(G, G.bottom(f.payload)).payload[1]).is_zero()
    z = G.top((orbit_sum.payload, U.phi_ring.var("n")))
    assert res(G, z).payload == orbit_sum.payload


def test_ghost_top_rejects_non_invariant_fixed_part():
    U = FreeUnderlying(2)
    G = ghost(U)
    with pytest.raises(LevelError):
        G.top((U.bottom("x0").payload, U.phi_ring.zero))


def test_kernel_probes():
    M = ModPBurnside(2)
    assert ghost_kernel_probe(M, M.top("t"))
    B = Burnside(2)
    assert not ghost_kernel_probe(B, B.top("t"))
    F = FreeFixed(2)
    assert not ghost_kernel_probe(F, F.top("t - 2"))


@pytest.mark.parametrize("p", [2, 3, 5])
def test_modp_kernel_is_nilpotent_and_p_torsion(p):
    M = ModPBurnside(p)
    report = ghost_kernel_report(M)
    assert report.ok
    assert [str(z) for z in report.kernel] == ["0"] + [f"{k}*t" if k > 1 else "t" for k in range(1, p)]
    assert len(finite_top_elements(M)) == p * p


@pytest.mark.parametrize("p", [2, 3, 5])
def test_ghost_map_is_a_tambara_morphism(p):
    for T in catalog(p):
        report = check_ghost_morphism(T, trials=30, seed=p, bounds=SMALL)
        assert report.ok, (T, report.failures)


@pytest.mark.parametrize("T", [Burnside(3), FreeFixed(2), FreeUnderlying(2), RU(5), ModPBurnside(3)], ids=str)
def test_monad_laws(T):
    report = check_monad_laws(T, trials=40, seed=1, bounds=SMALL)
    assert report.ok, report.failures


def test_mu_is_projection_onto_first_and_last():
    F = FreeFixed(2)
    G2 = GhostFunctor(F, 2)
    x = F.bottom("x^2 + 1").payload
    ph = F.phi_ring.var("n")
    z = G2.top((x, x, ph))
    assert monad_mu(z).payload == (x, ph)
    G = ghost(F)
    w = G.top((x, ph))
    assert monad_mu(monad_unit(w)) == w


def test_reciprocity_residue_vanishes():
    rng = random.Random(4)
    for p in (2, 3):
        for T in catalog(p):
            for _ in range(20):
                a, b = T.random_bottom(rng, SMALL), T.random_bottom(rng, SMALL)
                defect = nm(T, a + b) - nm(T, a) - nm(T, b)
                assert T.phi_reduce(phi(T, defect)).is_zero()


@pytest.mark.parametrize("T", [Burnside(2), Burnside(3), FreeFixed(2), FreeFixed(3)], ids=str)
def test_ghost_map_is_injective_on_samples(T):
    rng = random.Random(9)
    seen = {}
    for _ in range(200):
        z = T.random_top(rng, SMALL)
        key = ghost_map(T, z)
        if key in seen:
            assert seen[key] == z
        seen[key] = z


def test_fixed_point_ghost_has_finite_phi():
    T = FixedPoint(3, "trivial")
    report = ghost_kernel_report(T)
    assert report.ok
