import json
import random

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from nakaoka.errors import LevelError, NotPrimeError, UnsupportedError
from nakaoka.ghost import ghost
from nakaoka.polyalg import ZZ, PolyRing, parse_poly
from nakaoka.spectra import (
    LE,
    NOT_LE,
    TYPE1,
    TYPE2,
    GhostPairIdeal,
    GhostPrime,
    SymbolicPrime1V,
    UnitIdeal,
    ZeroIdeal,
    bottom_prime,
    compare,
    contains,
    coop_map,
    fixed_point_spec,
    ghost_prime,
    is_domain,
    krull_certificate,
    linearization_pullback,
    linearize,
    member_symbolic,
    norm_preimage,
    parse_ghost_prime,
    phi_prime,
    pullback,
    q_criterion,
    spec_burnside,
    spec_ru,
)
from nakaoka.tambara import RU, Burnside, FixedPoint, FreeFixed, FreeUnderlying, ModPBurnside, nm, phi, res, tr
from nakaoka.tambara.sampling import Bounds
from oracles import ZX, SymIdeal, poly_strategy, to_sympy

X, N = sympy.symbols("x n")


def T1(T, char, gens=()):
    return pullback(ghost_prime(T, TYPE1, char, list(gens)))


def T2(T, char, gens=()):
    return pullback(ghost_prime(T, TYPE2, char, list(gens)))


# ---------------------------------------------------------------- symbolic primes of Z[v]


def test_member_symbolic_examples():
    assert member_symbolic(parse_poly("6*x", ZX), SymbolicPrime1V.P("x", 3))
    assert member_symbolic(parse_poly("x^2 + 1", ZX), SymbolicPrime1V.Max("x", 2, "x + 1"))
    assert not member_symbolic(parse_poly("x^2 + 1", ZX), SymbolicPrime1V.Irr("x", "x - 1"))


def test_symbolic_shapes_are_validated():
    with pytest.raises(NotPrimeError):
        SymbolicPrime1V.Max("x", 2, "x^2 + 1")
    with pytest.raises(NotPrimeError):
        SymbolicPrime1V.Irr("x", "x^2 - 1")
    with pytest.raises(NotPrimeError):
        SymbolicPrime1V.P("x", 4)


SHAPES = [
    (SymbolicPrime1V.P("x", 3), SymIdeal(3, [], (X,))),
    (SymbolicPrime1V.Irr("x", "x^2 + 1"), SymIdeal(0, ["x^2 + 1"], (X,))),
    (SymbolicPrime1V.Irr("x", "2*x - 1"), SymIdeal(0, ["2*x - 1"], (X,))),
    (SymbolicPrime1V.Max("x", 3, "x^2 + 1"), SymIdeal(3, ["x^2 + 1"], (X,))),
    (SymbolicPrime1V.Max("x", 5, "x - 2"), SymIdeal(5, ["x - 2"], (X,))),
]


@settings(max_examples=150, deadline=None)
@given(g=poly_strategy(ZX, max_deg=4, coeff=9), k=st.integers(0, len(SHAPES) - 1), boost=st.booleans())
def test_member_symbolic_matches_sympy(g, k, boost):
    pr, oracle = SHAPES[k]
    if boost and pr.f is not None:
        g = g * pr.f
    assert member_symbolic(g, pr) == oracle.member(to_sympy(g))
    assert member_symbolic(g, pr) == pr.as_poly_prime().member(g)


@settings(max_examples=100, deadline=None)
@given(g=poly_strategy(PolyRing(("x", "n"), ZZ), max_deg=3, coeff=6), boost=st.booleans())
def test_poly_prime_membership_matches_sympy(g, boost):
    F = FreeFixed(3)
    ideals = [
        (phi_prime(F, 3, ["n - x^3", "x^2 + 1"]), SymIdeal(3, ["n - x^3", "x^2 + 1"], (X, N))),
        (phi_prime(F, 0, ["n - x^2 - 1"]), SymIdeal(0, ["n - x^2 - 1"], (X, N))),
        (phi_prime(F, 2, ["x", "n + 1"]), SymIdeal(2, ["x", "n + 1"], (X, N))),
    ]
    for ours, oracle in ideals:
        h = g * ours.z_generators()[-1] if boost else g
        assert ours.member(h) == oracle.member(to_sympy(h))


# ---------------------------------------------------------------- norm preimages


def test_norm_preimage_examples():
    F = FreeFixed(2)
    assert str(norm_preimage(F, phi_prime(F, 2, ["n - x^2", "x"]))) == "<2, x>"
    U = FreeUnderlying(2)
    pre = norm_preimage(U, phi_prime(U, 2, []))
    eps_plus_p = bottom_prime(U, 2, ["x0 - x1"])
    assert pre.equals(eps_plus_p)
    B = Burnside(3)
    assert str(norm_preimage(B, phi_prime(B, 5, []))) == "<5>"


@pytest.mark.parametrize("p", [2, 3])
def test_free_underlying_norm_preimage_is_diagonal_pull(p):
    U = FreeUnderlying(p)
    rng = random.Random(p)
    b = phi_prime(U, p, ["n^2 + n + 1"] if p == 2 else ["n^2 + 1"])
    pre = norm_preimage(U, b)
    for _ in range(60):
        f = U.random_bottom(rng, Bounds(max_terms=3, max_exp=2, max_degree=3, coeff=4))
        # f in nm^-1 b iff f(n, ..., n) in b
        assert pre.member(f.payload) == b.member(U.nu(f.payload))


# ---------------------------------------------------------------- ghost primes and pullbacks


def test_burnside_type2_membership_unfolds():
    B = Burnside(3)
    P = T2(B, 5)
    for a in range(-6, 7):
        for b in range(-6, 7):
            z = B.top((a, b))
            assert P.member(z) == ((a + 3 * b) % 5 == 0 and a % 5 == 0)


def test_free_fixed_type1_membership_is_constant_term_test():
    F = FreeFixed(2)
    P = T1(F, 2, ["x"])
    rng = random.Random(1)
    for _ in range(100):
        z = F.random_top(rng, Bounds())
        g0, _ = z.payload
        assert P.member(z) == (g0.constant_coeff() % 2 == 0)


def test_ru_generic_type1_is_augmentation_ideal():
    R = RU(3)
    P = T1(R, 0)
    assert P.member(R.top("1 - x"))
    rng = random.Random(2)
    for _ in range(100):
        z = R.random_top(rng, Bounds())
        assert P.member(z) == (sum(z.payload) == 0)


@pytest.mark.parametrize("q", [2, 5, 7])
def test_ru_type1_over_q_matches_symbolic_form(q):
    # (q; Z[xi]) pulls back to <q, 1 - gamma> at the top
    R = RU(3)
    P = T1(R, q)
    oracle = SymIdeal(q, ["1 - x", "x^3 - 1"], (X,))
    rng = random.Random(q)
    for _ in range(100):
        z = R.random_top(rng, Bounds())
        assert P.member(z) == oracle.member(sum(c * X**i for i, c in enumerate(z.payload)))


def test_invalid_pairs_are_rejected():
    F = FreeFixed(2)
    with pytest.raises(NotPrimeError):
        GhostPrime(F, TYPE2, a=bottom_prime(F, 3, ["x"]), b=phi_prime(F, 3, ["x"]))
    with pytest.raises(NotPrimeError):
        phi_prime(RU(3), 7, [])
    with pytest.raises(NotPrimeError):
        phi_prime(RU(3), 0, ["x"])


def test_type2_bottom_is_derived():
    F = FreeFixed(2)
    gp = ghost_prime(F, TYPE2, 3, ["x"])
    # nm^-1 <3, x> = <3>: no nonzero f(x) with f(n) in <3, x> outside 3 Z[x]
    assert str(gp.a) == "<3>"


def test_parse_ghost_prime_bracket_and_json():
    F = FreeFixed(2)
    a = parse_ghost_prime(F, "<type2 b=[p, n-x^p]>")
    b = parse_ghost_prime(F, json.dumps({"functor": "free-fixed", "p": 2, "kind": "type2", "b": {"char": 2, "gens": ["n - x^2"]}}))
    assert compare(pullback(a), pullback(b))[0] == "EQUAL"


# ---------------------------------------------------------------- containment


def test_free_fixed_coincidence():
    F = FreeFixed(2)
    status, _, _ = compare(T1(F, 2), T2(F, 2, ["n - x^2"]))
    assert status == "EQUAL"


def test_free_fixed_chain_link_and_reverse_witness():
    F = FreeFixed(2)
    lower, upper = T2(F, 3, ["x"]), T2(F, 3, ["x", "n"])
    assert contains(lower, upper).status == LE
    back = contains(upper, lower)
    assert back.status == NOT_LE and str(back.witness) == "n"


def test_free_underlying_coincidence():
    U = FreeUnderlying(3)
    status, _, _ = compare(T1(U, 3, ["x0 - x1", "x1 - x2"]), T2(U, 3))
    assert status == "EQUAL"


def test_cross_functor_comparison_raises():
    with pytest.raises(LevelError):
        contains(T1(Burnside(2), 0), T1(Burnside(3), 0))


def test_not_le_witnesses_are_members_of_left_only():
    F = FreeFixed(3)
    primes = [T1(F, 0), T1(F, 3, ["x"]), T2(F, 0), T2(F, 3, ["n - x^3"]), T2(F, 2, ["x", "n"]), T2(F, 0, ["n - x"])]
    for P in primes:
        for Q in primes:
            r = contains(P, Q)
            if r.status == NOT_LE:
                assert P.member(r.witness) and not Q.member(r.witness)


# ---------------------------------------------------------------- spectra as posets


def test_spec_burnside_small_window():
    S = spec_burnside(2, [0, 2, 3])
    assert len(S) == 5
    over3 = S.over(3)
    assert len(over3) == 2
    (p_point,) = S.over(2)
    generic = S.over(0)
    assert all(S.le(S.nodes.index(g), S.nodes.index(p_point)) for g in generic)


def test_spec_burnside_hasse_matches_figure():
    S = spec_burnside(2, [0, 2, 3, 5])
    edges = {(S.nodes[i].label, S.nodes[j].label) for i, j in S.hasse_edges()}
    expected = {
        ("(0;0)", "(0;Z)"),
        ("(0;0)", "(3;3)"),
        ("(0;0)", "(5;5)"),
        ("(3;3)", "(3;Z)"),
        ("(5;5)", "(5;Z)"),
        ("(0;Z)", "(3;Z)"),
        ("(0;Z)", "(5;Z)"),
        ("(0;Z)", "(2;2) = (2;Z)"),
    }
    assert edges == expected


def test_closure_of_generic_point_is_everything():
    S = spec_burnside(3, [0, 2, 3, 5])
    assert S.closure(["(0;0)"]) == list(range(len(S)))


@settings(max_examples=30, deadline=None)
@given(subset=st.sets(st.integers(0, 8), max_size=4))
def test_closure_is_idempotent(subset):
    S = _small_burnside()
    once = S.closure(sorted(subset))
    assert S.closure(once) == once


_CACHE = {}


def _small_burnside():
    if "S" not in _CACHE:
        _CACHE["S"] = spec_burnside(3, [0, 2, 3, 5, 7])
    return _CACHE["S"]


def test_poset_exports_are_deterministic():
    a, b = spec_burnside(2, [0, 2, 3]), spec_burnside(2, [0, 2, 3])
    assert a.to_json_text() == b.to_json_text()
    assert a.to_dot() == b.to_dot()
    assert a.to_dot().count("label=") == 5
    assert a.check_partial_order() == [] and a.invalid_witnesses() == []


def test_spec_ru_over_split_prime_keeps_every_factor():
    """Over q = 7 (e = 2) the two primes of Z[xi] stay distinct after pullback.

    A top element congruent to a generator of one factor, with augmentation
    divisible by 7, lies in one pulled-back prime and not the other, so the
    fiber over 7 has 1 + e points rather than 2.
    """
    S = spec_ru(3, [0, 3, 7])
    assert S.meta["splitting"]["7"] == {"f": 1, "e": 2, "ramified": False}
    assert len(S.over(7)) == 3
    t2 = [n for n in S.over(7) if n.meta.get("kind") == TYPE2]
    r = contains(t2[0].prime, t2[1].prime)
    assert r.status == NOT_LE


def test_ru_strictness_witness():
    R = RU(3)
    q = 7
    z = R.top(q - 3) + tr(R, R.bottom(1))
    assert res(R, z) == R.bottom(q)
    assert R.phi_reduce(phi(R, z)) == R.phi_reduce(phi(R, R.top(q - 3)))


def test_linearization_is_norm_compatible():
    from nakaoka.spectra.spaces import check_linearization

    for p in (3, 5):
        A, R = Burnside(p), RU(p)
        for k in range(-5, 6):
            expected = R.top(k) + ((k**p - k) // p) * tr(R, R.bottom(1))
            assert linearize(R, nm(A, A.bottom(k))) == expected == nm(R, R.bottom(k))
        assert check_linearization(p, trials=30, seed=1) == []


def test_linearization_pullback_bijective_without_split_primes():
    rep = linearization_pullback(3, [0, 2, 3, 5], samples=40, seed=0)
    assert rep.bijection
    assert len(rep.fibers()) == 7


def test_linearization_sends_upper_point_to_upper_point():
    rep = linearization_pullback(3, [0, 2, 3, 5], samples=40, seed=0)
    assert rep.fibers()["(2;Z)"] == ["(2;Z[xi])"]


# ---------------------------------------------------------------- Q-criterion


def test_q_criterion_zero_ideal_in_burnside():
    B = Burnside(2)
    t = B.top("t")
    assert not q_criterion(B, ZeroIdeal(), t, t)


def test_q_criterion_ghost_counterexample():
    B = Burnside(2)
    G = ghost(B)
    a = SymIdeal(0, [], ())
    b = SymIdeal(3, [], ())
    I = GhostPairIdeal(G, lambda f: a.member(to_sympy(f)), lambda g: b.member(to_sympy(g)))
    x = G.top((B.bottom(0).payload, B.phi_ring.const(1)))
    y = G.bottom(B.bottom(3).payload)
    assert q_criterion(G, I, x, y)
    assert not I.member(x) and not I.member(y)


def test_q_criterion_unit_ideal():
    rng = random.Random(0)
    for T in (Burnside(3), FreeFixed(2), RU(3)):
        for _ in range(10):
            x, y = T.random_top(rng, Bounds()), T.random_bottom(rng, Bounds())
            assert q_criterion(T, UnitIdeal(), x, y)


@pytest.mark.parametrize("P", [T2(Burnside(2), 3), T1(FreeFixed(2), 2, ["x"]), T2(FreeUnderlying(2), 0, ["n"])], ids=str)
def test_q_criterion_on_tambara_primes(P):
    T = P.T
    rng = random.Random(5)
    for _ in range(40):
        x = T.random_top(rng, Bounds()) if rng.random() < 0.5 else T.random_bottom(rng, Bounds())
        y = T.random_top(rng, Bounds()) if rng.random() < 0.5 else T.random_bottom(rng, Bounds())
        if q_criterion(T, P, x, y):
            assert P.member(x) or P.member(y)


# ---------------------------------------------------------------- domain criterion and dimension


def test_domain_examples():
    assert is_domain(Burnside(2)).verdict is True
    assert is_domain(FreeFixed(3)).verdict is True
    cert = is_domain(FreeUnderlying(3))
    assert cert.verdict is False
    U = cert.functor
    w_nu, w_res = cert.witnesses["nu_kernel"], cert.witnesses["res_kernel"]
    assert str(w_nu) == "x0 - x1"
    assert w_res == U.t(0, 0, 0) - 3
    assert U.phi_reduce(U.nu(w_nu.payload)).is_zero() and res(U, w_res).is_zero()


def test_domain_undecided_cases():
    assert is_domain(ModPBurnside(3)).verdict is None
    assert is_domain(FixedPoint(3, "cyclic")).verdict is None


def test_krull_burnside_chain_and_witnesses():
    c = krull_certificate(Burnside(3), q=2)
    assert [P.label for P in c.chain] == ["(0;0)", "(2;2)", "(2;Z)"]
    assert [str(w) for w in c.witnesses()] == ["2", "-1 + t"]
    assert c.dim == 2


def test_krull_free_underlying_chain():
    c = krull_certificate(FreeUnderlying(2), q=3)
    assert c.length == 3 and c.verified and c.dim == 3


def test_krull_requires_q_different_from_p():
    with pytest.raises(LevelError):
        krull_certificate(Burnside(3), q=3)


# ---------------------------------------------------------------- fixed points and co-maps


def test_swap_g_prime():
    T = FixedPoint(2, "swap")
    rep = fixed_point_spec("swap", [(0, ["x"])], p=2, samples=40, seed=3)
    assert rep.ok
    G = rep.rows[0].gprime
    assert G.member(T.bottom("x*y").payload) and not G.member(T.bottom("x").payload)


def test_trivial_fixed_point_spectrum_is_a_point():
    rep = fixed_point_spec("trivial", [(3, [])], p=3, samples=40, seed=3)
    assert rep.ok and len(rep.spectrum) == 1


def test_fixed_point_rejects_unsupported_ring():
    with pytest.raises(UnsupportedError):
        fixed_point_spec("cyclic", [(0, ["x0"])], p=3)


def test_corestriction_of_x():
    gp = coop_map("cores", ghost_prime(FreeFixed(2), TYPE1, 0, ["x"]))
    assert gp.kind == TYPE1 and str(gp.a) == "<x0, x1>"


def test_cotransfer_of_rational_prime():
    gp = coop_map("cotr", ghost_prime(FreeUnderlying(2), TYPE2, 3, []))
    assert gp.kind == TYPE2
    # {g : g(0, 2n) in 3 Z[n]} = <3, x>
    oracle = SymIdeal(3, ["x"], (X, N))
    for text in ("x", "n", "x*n + 3", "n^2 - x", "6*n + x^2"):
        g = parse_poly(text, PolyRing(("x", "n"), ZZ))
        assert gp.b.member(g) == oracle.member(to_sympy(g))


def test_coconjugation_is_identity():
    gp = ghost_prime(FreeUnderlying(2), TYPE1, 0, ["x0"])
    assert coop_map("coc", gp) is gp or str(coop_map("coc", gp)) == str(gp)


def test_coop_checks_source_functor():
    with pytest.raises(LevelError):
        coop_map("cores", ghost_prime(FreeUnderlying(2), TYPE1, 0, ["x0"]))


def test_ru_split_points_are_separated_by_an_oracle_element():
    # z = 4 + 2x + x^2: augmentation 7, image 3 + x in Z[xi]
    R = RU(3)
    z = R.top((4, 2, 1))
    image = sympy.rem(sum(c * X**i for i, c in enumerate(z.payload)), X**2 + X + 1, X)
    assert sum(z.payload) % 7 == 0 and sympy.expand(image - (X + 3)) == 0
    plus3 = SymIdeal(7, ["x + 3", "x^2 + x + 1"], (X,))
    minus2 = SymIdeal(7, ["x - 2", "x^2 + x + 1"], (X,))
    assert plus3.member(image) and not minus2.member(image)
    assert T2(R, 7, ["x + 3"]).member(z) and not T2(R, 7, ["x - 2"]).member(z)
