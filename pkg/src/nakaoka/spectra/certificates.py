"""Primality, domain and Krull-dimension certificates."""

from __future__ import annotations

import random

from ..errors import LevelError
from ..ghost import GhostFunctor
from ..tambara.catalog import RU, Burnside, FixedPoint, FreeFixed, FreeUnderlying, ModPBurnside
from ..tambara.functor import Level, conj, nm, res, tr
from ..tambara.sampling import DEFAULT_BOUNDS
from .primes import TYPE1, TYPE2, bottom_prime, contains, ghost_prime, GhostPrime, pullback

# ---------------------------------------------------------------- Q-criterion


def translates(T, z):
    """Multiplicative translates of z, grouped by level."""
    if z.level == Level.BOTTOM:
        bottom = [conj(T, z, i) for i in range(T.p)]
        return {Level.BOTTOM: bottom, Level.TOP: [nm(T, z)]}
    r = res(T, z)
    return {Level.TOP: [z, nm(T, r)], Level.BOTTOM: [conj(T, r, i) for i in range(T.p)]}


def generalized_products(T, x, y):
    tx, ty = translates(T, x), translates(T, y)
    return [a * b for level in (Level.BOTTOM, Level.TOP) for a in tx[level] for b in ty[level]]


def q_criterion(T, ideal, x, y):
    """True iff every same-level product of a translate of x with a translate of y lies in the ideal.

    ``ideal`` is anything with a ``member(z)`` method.  An ideal is prime
    exactly when this forces x or y into it.
    """
    if x.functor != T or y.functor != T:
        raise LevelError("q_criterion needs elements of the given functor")
    return all(ideal.member(z) for z in generalized_products(T, x, y))


class UnitIdeal:
    def member(self, z):
        return True


class ZeroIdeal:
    def member(self, z):
        return z.is_zero()


class GhostPairIdeal:
    """The ideal (a; b) of ghost(T): bottom a, top a^{C_p} x b, from two ring-level oracles."""

    def __init__(self, G, a_member, b_member):
        if not isinstance(G, GhostFunctor) or G.depth != 1:
            raise LevelError("pair ideals live in ghost(T)")
        self.G = G
        self.a_member = a_member
        self.b_member = b_member

    def member(self, z):
        if z.level == Level.BOTTOM:
            return self.a_member(z.payload)
        fix, ph = z.payload
        return self.a_member(fix) and self.b_member(ph)


# ---------------------------------------------------------------- domain criterion


class DomainCertificate:
    def __init__(self, functor, verdict, reason, witnesses=None, checks=None):
        self.functor = functor
        self.verdict = verdict  # True, False, or None when neither criterion applies
        self.reason = reason
        self.witnesses = witnesses or {}
        self.checks = checks or {}

    def to_json(self):
        return {
            "functor": self.functor.tag,
            "p": self.functor.p,
            "domain": self.verdict,
            "reason": self.reason,
            "witnesses": {k: str(v) for k, v in self.witnesses.items()},
            "checks": self.checks,
        }


def _structure(T):
    """(Phi is a domain, top level is p-torsion free, nu injective, res injective), by shape."""
    if isinstance(T, Burnside):
        return True, True, True, False
    if isinstance(T, RU):
        return True, True, True, False
    if isinstance(T, FreeFixed):
        return True, True, True, False
    if isinstance(T, FreeUnderlying):
        return True, True, False, False
    if isinstance(T, ModPBurnside):
        return True, False, True, False
    if isinstance(T, FixedPoint):
        nu_injective = T.spec == "trivial"
        return True, False, nu_injective, True
    raise LevelError(f"no domain data for {T}")


def _nu_kernel_witness(T):
    if isinstance(T, FreeUnderlying):
        return T.bottom("x0 - x1")
    if isinstance(T, FixedPoint):
        v = T.bottom_ring.vars
        return T.bottom(f"{v[0]} - {v[1]}")
    return None


def _res_kernel_witness(T):
    if isinstance(T, FreeUnderlying):
        return T.t(*([0] * T.p)) - T.p
    ks = T.restriction_kernel_gens()
    return ks[0] if ks else None


def is_domain(T, samples=200, seed=0, bounds=DEFAULT_BOUNDS):
    """Apply the ghost domain criterion; the structural facts are spot-checked on samples."""
    phi_domain, torsion_free, nu_inj, res_inj = _structure(T)
    rng = random.Random(seed)
    checks = {}
    if nu_inj:
        bad = 0
        for _ in range(samples):
            f = T.random_bottom(rng, bounds)
            if not f.is_zero() and T.phi_reduce(T.nu(f.payload)).is_zero():
                bad += 1
        checks["nu_injective_samples"] = {"checked": samples, "failures": bad}
        if bad:
            return DomainCertificate(T, None, "nu sampled non-injective", checks=checks)
    if phi_domain and torsion_free and nu_inj:
        return DomainCertificate(T, True, "nu injective, Phi a domain, top level p-torsion free", checks=checks)
    if not nu_inj and not res_inj:
        w_nu = _nu_kernel_witness(T)
        w_res = _res_kernel_witness(T)
        ok_nu = not w_nu.is_zero() and T.phi_reduce(T.nu(w_nu.payload)).is_zero()
        ok_res = not w_res.is_zero() and res(T, w_res).is_zero()
        checks["witnesses_validated"] = ok_nu and ok_res
        if ok_nu and ok_res:
            return DomainCertificate(
                T,
                False,
                "nu and res both have nonzero kernels",
                witnesses={"nu_kernel": w_nu, "res_kernel": w_res},
                checks=checks,
            )
    return DomainCertificate(T, None, "neither criterion applies", checks=checks)


# ---------------------------------------------------------------- Krull dimension


class ChainLink:
    def __init__(self, lower, upper, witness, named):
        self.lower = lower
        self.upper = upper
        self.witness = witness
        self.named = named  # the witness was one of the preferred ones

    @property
    def verified(self):
        return (
            self.witness is not None
            and self.upper.member(self.witness)
            and not self.lower.member(self.witness)
            and contains(self.lower, self.upper).status == "LE"
        )


class KrullCertificate:
    def __init__(self, functor, chain, links, upper, upper_reason):
        self.functor = functor
        self.chain = chain
        self.links = links
        self.upper = upper
        self.upper_reason = upper_reason

    @property
    def length(self):
        return len(self.chain) - 1

    @property
    def verified(self):
        return all(link.verified for link in self.links)

    @property
    def dim(self):
        return self.length if self.verified and self.length == self.upper else None

    def witnesses(self):
        return [link.witness for link in self.links]

    def to_json(self):
        return {
            "functor": self.functor.tag,
            "p": self.functor.p,
            "chain": [P.label for P in self.chain],
            "witnesses": [
                {"element": str(link.witness), "level": link.witness.level.value, "preferred": link.named}
                for link in self.links
            ],
            "verified": self.verified,
            "upper_bound": self.upper,
            "upper_reason": self.upper_reason,
            "dim": self.dim,
        }

    def lines(self):
        out = [" < ".join(P.label for P in self.chain)]
        for i, link in enumerate(self.links, 1):
            mark = "ok" if link.verified else "FAILED"
            out.append(f"  a_{i} = {link.witness} [{link.witness.level.value}] {mark}")
        out.append(f"upper bound {self.upper}: {self.upper_reason}")
        out.append(f"dim = {self.dim}")
        return out


def _link(lower, upper, preferred):
    for w in preferred:
        if upper.member(w) and not lower.member(w):
            return ChainLink(lower, upper, w, True)
    r = contains(upper, lower)
    return ChainLink(lower, upper, r.witness, False)


def _default_q(p):
    return 3 if p == 2 else 2


def krull_certificate(T, q=None):
    """A maximal chain with strictness witnesses and the matching upper bound."""
    p = T.p
    q = q or _default_q(p)
    if q == p:
        raise LevelError("the chain is built over a rational prime q different from p")
    if isinstance(T, (Burnside, RU)):
        if isinstance(T, RU):
            from ..polyalg import factor_cyclotomic_mod_q

            g = factor_cyclotomic_mod_q(p, q, T.phi_ring)[0]
            mid = ghost_prime(T, TYPE2, q, [g])
            one = tr(T, T.bottom(1))
            upper = (2, "dim T <= dim ghost(T) = max(dim Z, dim Z[xi]) = 2")
        else:
            mid = ghost_prime(T, TYPE2, q, [])
            one = T.top("t")
            upper = (2, "dim T <= dim ghost(T) = dim Z = 2 levels of one-dimensional rings")
        chain = [pullback(ghost_prime(T, TYPE2, 0, [])), pullback(mid), pullback(ghost_prime(T, TYPE1, q, []))]
        # z = r - a tr(1) with r = q, a = 1, shifted so res(z) = q and phi(z) = q - p
        preferred = [[T.top(q)], [T.top(q - p) + one]]
    elif isinstance(T, FreeFixed):
        chain = [
            pullback(ghost_prime(T, TYPE2, 0, [])),
            pullback(ghost_prime(T, TYPE2, q, [])),
            pullback(ghost_prime(T, TYPE2, q, ["x"])),
            pullback(ghost_prime(T, TYPE2, q, ["x", "n"])),
            pullback(ghost_prime(T, TYPE1, q, ["x"])),
        ]
        preferred = [[T.top(q)], [T.top("x"), T.bottom("x")], [T.top("n")], [T.top(q - p) + T.top("t")]]
        upper = (4, "dim T <= 1 + height(b) + coheight(nm^-1 b) <= 4 for every prime b of Z[x,n]")
    elif isinstance(T, FreeUnderlying):
        xs = T.bottom_ring.vars
        chain = [pullback(GhostPrime(T, TYPE1, a=bottom_prime(T, 0, []))), pullback(ghost_prime(T, TYPE1, q, []))]
        for k in range(1, p + 1):
            chain.append(pullback(GhostPrime(T, TYPE1, a=bottom_prime(T, q, list(xs[:k])))))
        preferred = [[T.bottom(q)]] + [[] for _ in range(p)]
        upper = (p + 1, "dim T = dim ghost(T) = dim Z[x_0..x_{p-1}] = p + 1")
    else:
        raise LevelError(f"no dimension certificate for {T}")
    links = [_link(chain[i], chain[i + 1], preferred[i]) for i in range(len(chain) - 1)]
    return KrullCertificate(T, chain, links, upper[0], upper[1])
