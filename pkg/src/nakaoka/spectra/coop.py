"""Maps on spectra induced by the co-Tambara structure between the two free functors.

Each map sends a ghost prime to the ghost prime obtained by contracting its
bottom part and its Phi part along a ring map:

    cores (free-fixed -> free-underlying):  x_i -> x  and  n -> n (Z[n] inside Z[x, n])
    cotr  (free-underlying -> free-fixed):  x -> sum x_i  and  (x, n) -> (0, p n)
    conm  (free-underlying -> free-fixed):  x -> prod x_i and  (x, n) -> (n, n^p)
    coc   (free-underlying -> free-underlying): the identity
"""

from __future__ import annotations

from ..errors import LevelError
from ..polyalg import PolyRing, ZZ, elim_intersection
from ..tambara.catalog import FreeFixed, FreeUnderlying
from .ideals import CpPrime, PolyPrime, diagonal_pull
from .primes import TYPE1, TYPE2, GhostPrime, action_perms

WHICH = ("cores", "cotr", "conm", "coc")


def contract(prime, target_vars, images):
    """{g in Z[target_vars] : g(images) in prime} for a PolyPrime of Z[source vars].

    ``images`` maps each target variable to a polynomial in the prime's ring.
    Computed by eliminating the source variables from prime + <t - image(t)>.
    """
    src = prime.vars
    clash = set(src) & set(target_vars)
    rename = {v: f"{v}_" for v in target_vars if v in clash}
    tvars = tuple(rename.get(v, v) for v in target_vars)
    big = PolyRing(src + tvars, ZZ)
    gens = [g.to_ring(big) for g in prime.canonical_gens()]
    for v, t in zip(target_vars, tvars):
        gens.append(big.var(t) - images[v].to_ring(big))
    fring = big.with_domain(prime.fring.domain)
    fgens = [g.to_domain(fring.domain) for g in gens]
    fgens = [g for g in fgens if not g.is_zero()]
    kept = elim_intersection(fgens, tvars)
    out_ring = PolyRing(tuple(target_vars), ZZ)
    back = {t: out_ring.var(v) for v, t in zip(target_vars, tvars)}
    lifted = []
    for g in kept:
        g = g.lift() if prime.char else g.clear_denominators()
        lifted.append(g.substitute(back, out_ring))
    return PolyPrime(target_vars, prime.char, lifted, zgens_known=bool(prime.char))


def _first(a):
    return a.components[0] if isinstance(a, CpPrime) else a


def coop_map(which, gp):
    """Image of a ghost prime under cores, cotr, conm or coc."""
    T = gp.T
    p = T.p
    if which not in WHICH:
        raise LevelError(f"unknown co-operation {which!r}; choose from {WHICH}")
    if which == "cores":
        if not isinstance(T, FreeFixed):
            raise LevelError("cores starts from the free functor on a fixed generator")
        U = FreeUnderlying(p)
        if gp.kind == TYPE1:
            a = diagonal_pull(_first(gp.a), p, U.bottom_ring.vars)
            return GhostPrime(U, TYPE1, a=CpPrime.from_prime(a, action_perms(U)))
        b = _first(gp.b)
        n_ring = PolyRing(("n",), ZZ)
        b2 = contract(b, ("n",), {"n": b.zring.var("n")})
        return GhostPrime(U, TYPE2, b=PolyPrime(n_ring.vars, b2.char, b2.canonical_gens()))
    if not isinstance(T, FreeUnderlying):
        raise LevelError(f"{which} starts from the free functor on an underlying generator")
    if which == "coc":
        return gp
    F = FreeFixed(p)
    xs = [gp.a.components[0].zring.var(v) for v in T.bottom_ring.vars]
    if gp.kind == TYPE1:
        comp = gp.a.components[0]
        if which == "cotr":
            image = xs[0]
            for v in xs[1:]:
                image = image + v
        else:
            image = xs[0]
            for v in xs[1:]:
                image = image * v
        # an invariant image makes every conjugate contract to the same prime
        return GhostPrime(F, TYPE1, a=contract(comp, ("x",), {"x": image}))
    b = gp.b
    n = b.zring.var("n")
    if which == "cotr":
        images = {"x": b.zring.zero, "n": n * p}
    else:
        images = {"x": n, "n": n**p}
    return GhostPrime(F, TYPE2, b=contract(b, ("x", "n"), images))
