"""The ghost construction, the ghost map and the ghost monad.

For a C_p-Tambara functor T the ghost keeps the bottom ring and replaces the
top by  T(C_p/e)^{C_p} x Phi(T),  where Phi(T) is the top modulo the transfer
ideal.  Iterating k times gives a top of shape

    fix  x  (fix / rho)^(k-1)  x  Phi(T)

with rho = res(image of tr) inside the fixed subring.  Residues mod rho are
stored as representatives; every law checked here lands in ghost(T), where
equality is exact.
"""

from __future__ import annotations

import random

from .errors import LevelError
from .tambara.functor import Level, TambaraFunctorCp, nm, phi, res, tr
from .tambara.sampling import DEFAULT_BOUNDS


class GhostFunctor(TambaraFunctorCp):
    """ghost^depth(T) as a Tambara functor in its own right."""

    def __init__(self, base, depth=1):
        if depth < 1:
            raise LevelError("ghost depth must be at least 1")
        self.base = base
        self.depth = depth
        self.p = base.p
        self.bottom_ring = base.bottom_ring
        self.phi_ring = base.phi_ring
        self.trivial_action = base.trivial_action
        self.tag = "ghost" if depth == 1 else f"ghost{depth}"

    def key(self):
        return (self.tag, self.base.key())

    def __str__(self):
        return f"{self.tag}({self.base})"

    __repr__ = __str__

    # payload: tuple (fix, r_1, ..., r_{depth-1}, phi)
    def _orbit_sum(self, f):
        out = f
        for i in range(1, self.p):
            out = out + self.base._conj(f, i)
        return out

    def _orbit_product(self, f):
        out = f
        for i in range(1, self.p):
            out = out * self.base._conj(f, i)
        return out

    def is_invariant(self, f):
        return all(self.base._conj(f, i) == f for i in range(1, self.p))

    def _top_normalize(self, a):
        a = tuple(a)
        if len(a) != self.depth + 1:
            raise LevelError(f"{self} top elements have {self.depth + 1} components")
        fixed = []
        for f in a[:-1]:
            if f.ring != self.bottom_ring:
                f = f.to_ring(self.bottom_ring)
            if not self.is_invariant(f):
                raise LevelError(f"ghost component {f} is not C_{self.p}-invariant")
            fixed.append(f)
        g = a[-1]
        if g.ring != self.phi_ring:
            g = g.to_ring(self.phi_ring)
        return tuple(fixed) + (self.base.phi_reduce(g),)

    def _top_const(self, k):
        return tuple(self.bottom_ring.const(k) for _ in range(self.depth)) + (self.phi_ring.const(k),)

    def _top_add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def _top_neg(self, a):
        return tuple(-x for x in a)

    def _top_mul(self, a, b):
        out = tuple(x * y for x, y in zip(a, b))
        return out[:-1] + (self.base.phi_reduce(out[-1]),)

    def _res(self, a):
        return a[0]

    def _tr(self, f):
        return (self._orbit_sum(f),) + tuple(self.bottom_ring.zero for _ in range(self.depth - 1)) + (
            self.phi_ring.zero,
        )

    def _nm(self, f):
        prod = self._orbit_product(f)
        return (prod,) * self.depth + (self.nu(f),)

    def _conj(self, f, i):
        return self.base._conj(f, i)

    def _phi(self, a):
        # projection to the last factor; it kills the transfer ideal
        return a[-1]

    def nu(self, f):
        return self.base.phi_reduce(self.base.nu(f))

    def phi_reduce(self, g):
        return self.base.phi_reduce(g)

    def format_top(self, a):
        return "(" + ", ".join(str(x) for x in a) + ")"

    def random_top(self, rng, bounds):
        T = self.base
        fix = res(T, T.random_top(rng, bounds)) + res(T, tr(T, T.random_bottom(rng, bounds)))
        comps = [fix.payload]
        for _ in range(self.depth - 1):
            comps.append(res(T, T.random_top(rng, bounds)).payload)
        comps.append(phi(T, T.random_top(rng, bounds)))
        return self.top(tuple(comps))

    def describe(self):
        d = super().describe()
        d["base"] = str(self.base)
        d["depth"] = self.depth
        return d


def ghost(T):
    return GhostFunctor(T, 1)


def ghost_element_json(z):
    """{"bottom": ...} or {"top": {"fix": ..., "phi": ...}} for a ghost(T) element."""
    if z.level == Level.BOTTOM:
        return {"bottom": str(z.payload)}
    fix, *mid, ph = z.payload
    out = {"fix": str(fix), "phi": str(ph)}
    if mid:
        out["rho_residues"] = [str(m) for m in mid]
    return {"top": out}


def ghost_map(T, z):
    """Identity on the bottom; (res z, phi z) on the top."""
    G = ghost(T)
    if z.level == Level.BOTTOM:
        return G.bottom(z.payload)
    return G.top((res(T, z).payload, phi(T, z)))


def ghost_kernel_probe(T, z):
    """True iff z lies in the kernel of the ghost map."""
    return res(T, z) == 0 and T.phi_reduce(phi(T, z)) == 0


def finite_top_elements(T):
    """Every top element of a functor whose top level is a finite F_p-algebra."""
    from .tambara.catalog import FixedPoint, ModPBurnside

    p = T.p
    if isinstance(T, ModPBurnside):
        return [T.top((a, b)) for a in range(p) for b in range(p)]
    if isinstance(T, FixedPoint) and T.spec == "trivial":
        return [T.top(k) for k in range(p)]
    raise LevelError(f"the top level of {T} is not a finite set")


class KernelReport:
    """The kernel K of the ghost map, enumerated, with the identities p*K = 0 and K*K = 0."""

    def __init__(self, functor, kernel, p_torsion_failures, square_failures):
        self.functor = functor
        self.kernel = kernel
        self.p_torsion_failures = p_torsion_failures
        self.square_failures = square_failures

    @property
    def ok(self):
        return not self.p_torsion_failures and not self.square_failures

    def to_json(self):
        return {
            "functor": self.functor.tag,
            "p": self.functor.p,
            "kernel": [str(z) for z in self.kernel],
            "p_times_K_zero": not self.p_torsion_failures,
            "K_squared_zero": not self.square_failures,
        }


def ghost_kernel_report(T):
    K = [z for z in finite_top_elements(T) if ghost_kernel_probe(T, z)]
    p_bad = [str(z) for z in K if not (z * T.p).is_zero()]
    sq_bad = [(str(a), str(b)) for a in K for b in K if not (a * b).is_zero()]
    return KernelReport(T, K, p_bad, sq_bad)


# ---------------------------------------------------------------- monad structure


def _check_depth(z, depth):
    if not isinstance(z.functor, GhostFunctor) or z.functor.depth != depth:
        raise LevelError(f"expected an element of ghost^{depth}, got {z.functor}")


def monad_unit(z):
    """ghost_{ghost(T)}: (x, phi) -> (x, x + rho, phi)."""
    _check_depth(z, 1)
    G2 = GhostFunctor(z.functor.base, 2)
    if z.level == Level.BOTTOM:
        return G2.bottom(z.payload)
    x, ph = z.payload
    return G2.top((x, x, ph))


def ghost_of_unit(z):
    """ghost(ghost_T): (x, phi) -> (x, res(y) + rho, phi) for any top y with Phi-image phi."""
    _check_depth(z, 1)
    T = z.functor.base
    G2 = GhostFunctor(T, 2)
    if z.level == Level.BOTTOM:
        return G2.bottom(z.payload)
    x, ph = z.payload
    y = T.phi_lift(ph)
    return G2.top((x, res(T, y).payload, ph))


def monad_mu(z):
    """mu_T: ghost^2(T) -> ghost(T), the projection (pi_1, pi_3)."""
    _check_depth(z, 2)
    G = ghost(z.functor.base)
    if z.level == Level.BOTTOM:
        return G.bottom(z.payload)
    a, _, ph = z.payload
    return G.top((a, ph))


def mu_of_ghost(z):
    """mu_{ghost(T)}: ghost^3(T) -> ghost^2(T), the projection (pi_1, pi_3, pi_4)."""
    _check_depth(z, 3)
    G2 = GhostFunctor(z.functor.base, 2)
    if z.level == Level.BOTTOM:
        return G2.bottom(z.payload)
    a, _, c, ph = z.payload
    return G2.top((a, c, ph))


def ghost_of_mu(z):
    """ghost(mu_T): ghost^3(T) -> ghost^2(T), the projection (pi_1, pi_2, pi_4)."""
    _check_depth(z, 3)
    G2 = GhostFunctor(z.functor.base, 2)
    if z.level == Level.BOTTOM:
        return G2.bottom(z.payload)
    a, b, _, ph = z.payload
    return G2.top((a, b, ph))


class MonadReport:
    def __init__(self):
        self.checked = {"left_unit": 0, "right_unit": 0, "associativity": 0, "mu_morphism": 0}
        self.failures = {k: [] for k in self.checked}

    def record(self, law, ok, witness):
        self.checked[law] += 1
        if not ok:
            self.failures[law].append(str(witness))

    @property
    def ok(self):
        return not any(self.failures.values())


def check_monad_laws(T, trials=200, seed=0, bounds=DEFAULT_BOUNDS):
    """Unit and associativity diagrams, plus mu commuting with res/tr/nm."""
    rng = random.Random(seed)
    G = ghost(T)
    G2 = GhostFunctor(T, 2)
    G3 = GhostFunctor(T, 3)
    report = MonadReport()
    for _ in range(trials):
        z = G.random_top(rng, bounds)
        report.record("left_unit", monad_mu(monad_unit(z)) == z, z)
        report.record("right_unit", monad_mu(ghost_of_unit(z)) == z, z)
        w = G3.random_top(rng, bounds)
        report.record("associativity", monad_mu(mu_of_ghost(w)) == monad_mu(ghost_of_mu(w)), w)
        a = T.random_bottom(rng, bounds)
        b2 = G2.bottom(a.payload)
        ok = (
            monad_mu(nm(G2, b2)) == nm(G, G.bottom(a.payload))
            and monad_mu(tr(G2, b2)) == tr(G, G.bottom(a.payload))
        )
        u = G2.random_top(rng, bounds)
        v = G2.random_top(rng, bounds)
        ok = ok and monad_mu(u * v) == monad_mu(u) * monad_mu(v) and res(G, monad_mu(u)).payload == res(G2, u).payload
        report.record("mu_morphism", ok, a)
    return report


class GhostMorphismReport:
    def __init__(self):
        self.checked = {"res": 0, "tr": 0, "nm": 0, "conj": 0, "add": 0, "mul": 0}
        self.failures = {k: [] for k in self.checked}

    def record(self, law, ok, witness):
        self.checked[law] += 1
        if not ok:
            self.failures[law].append(str(witness))

    @property
    def ok(self):
        return not any(self.failures.values())


def check_ghost_morphism(T, trials=200, seed=0, bounds=DEFAULT_BOUNDS):
    """The ghost map commutes with res, tr, nm, conj and the ring operations."""
    from .tambara.functor import conj

    rng = random.Random(seed)
    G = ghost(T)
    report = GhostMorphismReport()
    for _ in range(trials):
        y = T.random_top(rng, bounds)
        w = T.random_top(rng, bounds)
        a = T.random_bottom(rng, bounds)
        i = rng.randrange(T.p)
        ga = ghost_map(T, a)
        report.record("res", ghost_map(T, res(T, y)) == res(G, ghost_map(T, y)), y)
        report.record("tr", ghost_map(T, tr(T, a)) == tr(G, ga), a)
        report.record("nm", ghost_map(T, nm(T, a)) == nm(G, ga), a)
        report.record("conj", ghost_map(T, conj(T, a, i)) == conj(G, ga, i), a)
        report.record("add", ghost_map(T, y + w) == ghost_map(T, y) + ghost_map(T, w), (y, w))
        report.record("mul", ghost_map(T, y * w) == ghost_map(T, y) * ghost_map(T, w), (y, w))
    return report


__all__ = [
    "GhostFunctor",
    "check_ghost_morphism",
    "check_monad_laws",
    "ghost",
    "ghost_element_json",
    "finite_top_elements",
    "ghost_kernel_probe",
    "ghost_kernel_report",
    "ghost_map",
    "ghost_of_mu",
    "ghost_of_unit",
    "monad_mu",
    "monad_unit",
    "mu_of_ghost",
]
