import itertools
import random

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from nakaoka.errors import LevelError, UnsupportedError
from nakaoka.tambara import (
    RU,
    Burnside,
    FixedPoint,
    FreeFixed,
    FreeUnderlying,
    ModPBurnside,
    burnside_norm_coeff,
    catalog,
    conj,
    make_functor,
    nm,
    phi,
    res,
    rotate,
    tr,
    tvec_canonical,
)
from nakaoka.tambara.axioms import check_axioms
from nakaoka.tambara.express import express_t_in_generators, evaluate_expression
from nakaoka.tambara.sampling import Bounds
from oracles import to_sympy

# ---------------------------------------------------------------- res / tr / conj / nm examples


def test_burnside_restriction_of_t_is_p():
    B = Burnside(2)
    assert res(B, B.top("3 + t")) == B.bottom(5)


def test_free_underlying_restriction_sums_the_orbit():
    U = FreeUnderlying(2)
    assert res(U, U.t(1, 0)) == U.bottom("x0 + x1")


def test_free_fixed_restriction_kills_n_minus_x_to_the_p():
    F = FreeFixed(3)
    assert res(F, F.top("n - x^3")).is_zero()


def test_transfers():
    U = FreeUnderlying(2)
    assert tr(U, U.bottom("x0^2*x1")) == U.t(2, 1)
    assert tr(U, U.bottom(3)) == 3 * U.t(0, 0)
    R = RU(3)
    assert str(tr(R, R.bottom(2))) == "2 + 2*x + 2*x^2"


def test_conjugation():
    U = FreeUnderlying(3)
    assert conj(U, U.bottom("x0*x1^2"), 1) == U.bottom("x1*x2^2")
    F = FreeFixed(2)
    assert conj(F, F.bottom("x"), 1) == F.bottom("x")
    for T in catalog(3):
        z = T.random_bottom(random.Random(0), Bounds())
        assert conj(T, z, 0) == z


def test_burnside_norm_of_2_for_p_3():
    B = Burnside(3)
    # the Burnside formula nm(k) = k + (k^p - k)/p t at k = 2
    assert nm(B, B.bottom(2)) == B.top(2) + ((2**3 - 2) // 3) * B.top("t")
    assert str(nm(B, B.bottom(2))) == "2 + 2*t"


def test_free_fixed_norm_of_x_is_n():
    F = FreeFixed(2)
    assert nm(F, F.bottom("x")) == F.top("n")


def test_free_underlying_norm_of_a_sum():
    U = FreeUnderlying(2)
    assert nm(U, U.bottom("x0 + x1")) == 2 * U.top("n") + U.t(2, 0)


def test_products_follow_the_presented_relations():
    U = FreeUnderlying(2)
    assert U.t(1, 0) * U.t(1, 0) == U.t(2, 0) + U.t(1, 1)
    assert U.top("n") * U.t(0, 0) == U.t(1, 1)
    B = Burnside(2)
    assert B.top("t") * B.top("t") == 2 * B.top("t")


def test_level_mismatch_raises():
    B = Burnside(2)
    with pytest.raises(LevelError):
        res(B, B.bottom(1))
    with pytest.raises(LevelError):
        B.top("t") + B.bottom(1)


def test_make_functor_rejects_unknown_tags_and_composite_p():
    with pytest.raises(LevelError):
        make_functor("nope", 2)
    with pytest.raises(LevelError):
        Burnside(4)


def test_swap_fixed_point_exists_only_for_p_2():
    assert any(isinstance(T, FixedPoint) and T.spec == "swap" for T in catalog(2))
    assert not any(isinstance(T, FixedPoint) and T.spec == "swap" for T in catalog(3))


# ---------------------------------------------------------------- norm against an independent oracle


def _orbit_oracle(U, f):
    """Ghost image of nm(f) computed with sympy: (product of the rotations of f, f on the diagonal)."""
    p = U.p
    xs = sympy.symbols(f"x0:{p}")
    g = to_sympy(f.payload, xs)
    prod = sympy.Integer(1)
    for i in range(p):
        prod *= g.subs({xs[j]: xs[(j + i) % p] for j in range(p)}, simultaneous=True)
    n = sympy.Symbol("n")
    return sympy.expand(prod), sympy.expand(g.subs({x: n for x in xs}, simultaneous=True))


@pytest.mark.parametrize("p", [2, 3])
def test_free_underlying_norm_matches_ghost_oracle(p):
    U = FreeUnderlying(p)
    rng = random.Random(p)
    xs = sympy.symbols(f"x0:{p}")
    for _ in range(40):
        f = U.random_bottom(rng, Bounds(max_terms=3, max_exp=2, max_degree=2, coeff=3))
        z = nm(U, f)
        fix, ph = _orbit_oracle(U, f)
        assert to_sympy(res(U, z).payload, xs) == fix
        assert to_sympy(U.phi_reduce(phi(U, z))) == ph


def test_free_underlying_ghost_oracle_example():
    U = FreeUnderlying(2)
    f = U.bottom("x0 + x1")
    fix, ph = _orbit_oracle(U, f)
    x0, x1, n = sympy.symbols("x0 x1 n")
    assert fix == sympy.expand((x0 + x1) ** 2) and ph == 2 * n


@pytest.mark.parametrize("p", [2, 3, 5])
def test_burnside_norm_formula(p):
    B = Burnside(p)
    for k in range(-6, 7):
        assert nm(B, B.bottom(k)) == B.top(k) + burnside_norm_coeff(k, p) * B.top("t")
        assert res(B, nm(B, B.bottom(k))) == B.bottom(k**p)


@given(k=st.integers(-10**6, 10**6), p=st.sampled_from([2, 3, 5, 7, 11]))
def test_burnside_norm_coefficient_is_integral(k, p):
    assert burnside_norm_coeff(k, p) * p == k**p - k


def test_res_of_norm_of_2_is_8():
    B = Burnside(3)
    assert res(B, nm(B, B.bottom(2))) == B.bottom(8)


def test_frobenius_example():
    U = FreeUnderlying(2)
    x0 = U.bottom("x0")
    lhs = tr(U, x0) * U.top("n")
    assert lhs == U.t(2, 1)
    assert lhs == tr(U, x0 * res(U, U.top("n")))


def test_transfer_of_zero():
    for T in catalog(3):
        assert tr(T, T.bottom(0)).is_zero()


# ---------------------------------------------------------------- normal forms


@settings(max_examples=200)
@given(v=st.lists(st.integers(0, 6), min_size=3, max_size=3), k=st.integers(0, 2))
def test_tvec_representative_is_rotation_invariant(v, k):
    v = tuple(v)
    assert tvec_canonical(v) == tvec_canonical(rotate(v, k))
    assert tvec_canonical(v) in {rotate(v, i) for i in range(3)}


def test_equal_rotations_give_equal_elements():
    U = FreeUnderlying(3)
    assert U.t(0, 1, 2) == U.t(1, 2, 0) == U.t(2, 0, 1)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_multiplication_is_confluent(p):
    rng = random.Random(100 + p)
    bounds = Bounds(max_terms=3, max_exp=2, max_degree=2, coeff=3)
    for T in catalog(p):
        for _ in range(200):
            a, b, c = (T.random_top(rng, bounds) for _ in range(3))
            assert (a * b) * c == a * (b * c)
            assert a * b == b * a


def test_free_fixed_normal_form_has_no_hidden_t_n():
    F = FreeFixed(2)
    z = F.top("t*n + t*x^3")
    g0, g1 = z.payload
    assert g1.vars == ("x",)
    # t n = t x^2, so the element is t (x^2 + x^3)
    assert z == F.top("t*x^2 + t*x^3")


# ---------------------------------------------------------------- axioms


@pytest.mark.parametrize("p", [2, 3])
def test_axioms_hold_on_a_small_run(p):
    for T in catalog(p):
        report = check_axioms(T, trials=15, seed=11)
        assert report.ok, report.lines()


def test_axiom_report_json_lists_every_law():
    report = check_axioms(RU(3), trials=3, seed=7)
    laws = report.to_json()["laws"]
    for law in ("tr_additive", "nm_multiplicative", "res_homomorphism", "frobenius"):
        assert law in laws


def test_axiom_report_is_reproducible():
    a = check_axioms(FreeFixed(2), trials=10, seed=5).to_json()
    b = check_axioms(FreeFixed(2), trials=10, seed=5).to_json()
    assert a == b


# ---------------------------------------------------------------- generator recursion


def test_express_examples():
    assert str(express_t_in_generators(2, (2, 1))) == "t[1,0]*n"
    e = express_t_in_generators(2, (3, 0))
    assert str(e) == "t[2,0]*t[1,0] - t[1,0]*n"
    assert str(express_t_in_generators(2, (0, 0))) == "t[0,0]"


@pytest.mark.parametrize("p", [2, 3])
def test_express_reexpands_exactly(p):
    U = FreeUnderlying(p)
    seen = set()
    for total in range(9):
        for v in itertools.product(range(total + 1), repeat=p):
            if sum(v) != total or tvec_canonical(v) in seen:
                continue
            seen.add(tvec_canonical(v))
            e = express_t_in_generators(p, v)
            assert all(name == "n" or sum(map(int, name[2:-1].split(","))) <= p for name in e.vars)
            assert evaluate_expression(U, e) == U.t(v)
    assert len(seen) >= 40 if p == 3 else len(seen) >= 20


def test_express_unsupported_prime():
    with pytest.raises(UnsupportedError):
        express_t_in_generators(5, (1, 0, 0, 0, 0))


def test_modp_burnside_top_is_finite_arithmetic():
    M = ModPBurnside(3)
    assert M.top("t") * M.top("t") == M.top(0)
    assert res(M, M.top("t")).is_zero()
    assert 3 * M.top("1 + t") == M.top(0)
