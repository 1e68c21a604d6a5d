"""Whole spectra over a window of rational primes: the Burnside ring and RU.

For both functors the top level is small enough that every prime is one of
the ghost pullbacks listed here; coincidences are found by the containment
decision itself, not assumed.
"""

from __future__ import annotations

import random

from ..errors import DomainError
from ..polyalg import factor_cyclotomic_mod_q, is_prime, multiplicative_order
from ..tambara.catalog import RU, Burnside
from ..tambara.functor import Level, conj, nm, res, tr
from .poset import SpecPoset
from .primes import TYPE1, TYPE2, ghost_prime, pullback


def check_window(window):
    window = sorted(set(int(q) for q in window))
    for q in window:
        if q != 0 and not is_prime(q):
            raise DomainError(f"window entry {q} is neither 0 nor prime")
    return window


def primes_up_to(n):
    return [q for q in range(2, n + 1) if is_prime(q)]


def spec_burnside(p, window):
    """Spec of the Burnside Tambara functor with characteristics in the window."""
    A = Burnside(p)
    cands = []
    for q in check_window(window):
        cands.append((pullback(ghost_prime(A, TYPE2, q, [])), q, {"kind": TYPE2}))
        cands.append((pullback(ghost_prime(A, TYPE1, q, [])), q, {"kind": TYPE1}))
    return SpecPoset.build(A, cands, meta={"window": check_window(window)})


def ru_splitting(p, q):
    """(f, e) for q != p: Phi_p splits mod q into e factors of degree f."""
    return multiplicative_order(q, p)


def spec_ru(p, window):
    """Spec of RU over the window.  Every prime of Z[xi] over q gives a Type2 point."""
    R = RU(p)
    window = check_window(window)
    cands = []
    splitting = {}
    for q in window:
        cands.append((pullback(ghost_prime(R, TYPE1, q, [])), q, {"kind": TYPE1}))
        if q == 0:
            cands.append((pullback(ghost_prime(R, TYPE2, 0, [])), 0, {"kind": TYPE2}))
            continue
        factors = factor_cyclotomic_mod_q(p, q, R.phi_ring)
        if q == p:
            splitting[q] = {"f": 1, "e": 1, "ramified": True}
        else:
            f, e = ru_splitting(p, q)
            splitting[q] = {"f": f, "e": e, "ramified": False}
        for g in factors:
            cands.append((pullback(ghost_prime(R, TYPE2, q, [g])), q, {"kind": TYPE2, "factor": str(g)}))
    return SpecPoset.build(R, cands, meta={"window": window, "splitting": {str(k): v for k, v in splitting.items()}})


# ---------------------------------------------------------------- linearization A -> RU


def linearize(R, z):
    """The Tambara morphism A -> RU: identity on the bottom, a + b t -> a + b (1 + gamma + ... )."""
    if z.level == Level.BOTTOM:
        return R.bottom(z.payload)
    a, b = z.payload
    return R.top((a + b,) + (b,) * (R.p - 1))


def check_linearization(p, trials=100, seed=0):
    """Sampled morphism check; returns the list of failing law names."""
    A, R = Burnside(p), RU(p)
    rng = random.Random(seed)
    bad = []
    for _ in range(trials):
        k, m = rng.randint(-20, 20), rng.randint(-20, 20)
        y = A.top((rng.randint(-20, 20), rng.randint(-20, 20)))
        w = A.top((rng.randint(-20, 20), rng.randint(-20, 20)))
        kb = A.bottom(k)
        checks = {
            "nm": linearize(R, nm(A, kb)) == nm(R, linearize(R, kb)),
            "tr": linearize(R, tr(A, kb)) == tr(R, linearize(R, kb)),
            "res": linearize(R, res(A, y)) == res(R, linearize(R, y)),
            "conj": linearize(R, conj(A, kb, 1)) == conj(R, linearize(R, kb), 1),
            "add": linearize(R, y + w) == linearize(R, y) + linearize(R, w),
            "mul": linearize(R, y * w) == linearize(R, y) * linearize(R, w),
            "nm_add": linearize(R, nm(A, A.bottom(k + m))) == nm(R, R.bottom(k + m)),
        }
        bad.extend(name for name, ok in checks.items() if not ok)
    return sorted(set(bad))


class _PulledBack:
    """Oracle for {z in A : linearize(z) in P}."""

    def __init__(self, R, prime):
        self.R = R
        self.prime = prime

    def member(self, z):
        return self.prime.member(linearize(self.R, z))


class LinearizationReport:
    def __init__(self, p, window, morphism_failures, mapping, a_poset, ru_poset, sample_disagreements):
        self.p = p
        self.window = window
        self.morphism_failures = morphism_failures
        self.mapping = mapping
        self.a_poset = a_poset
        self.ru_poset = ru_poset
        self.sample_disagreements = sample_disagreements

    @property
    def injective(self):
        return len(set(self.mapping.values())) == len(self.mapping)

    @property
    def surjective(self):
        return set(self.mapping.values()) == set(range(len(self.a_poset)))

    @property
    def order_embedding(self):
        ru, a = self.ru_poset, self.a_poset
        return all(
            ru.le(i, j) == a.le(self.mapping[i], self.mapping[j]) for i in self.mapping for j in self.mapping
        )

    @property
    def bijection(self):
        return (
            not self.morphism_failures
            and not self.sample_disagreements
            and self.injective
            and self.surjective
            and self.order_embedding
        )

    def fibers(self):
        out = {}
        for i, j in self.mapping.items():
            out.setdefault(self.a_poset.nodes[j].label, []).append(self.ru_poset.nodes[i].label)
        return out

    def to_json(self):
        return {
            "p": self.p,
            "window": self.window,
            "morphism_failures": self.morphism_failures,
            "ru_points": len(self.ru_poset),
            "burnside_points": len(self.a_poset),
            "fibers": self.fibers(),
            "injective": self.injective,
            "surjective": self.surjective,
            "order_embedding": self.order_embedding,
            "bijection": self.bijection,
            "sample_disagreements": self.sample_disagreements,
        }


def linearization_pullback(p, window, samples=200, seed=0):
    """Pull every RU point back to A and identify it with a point of Spec(A).

    A pulled-back Type1 prime is the Type1 prime with the same bottom.  For a
    Type2 prime over b, the top condition becomes a in b, i.e. a in b meets Z,
    which is the Burnside Type2 prime over that characteristic.  The symbolic
    identification is confirmed on random elements against the composed oracle.
    """
    window = check_window(window)
    a_poset = spec_burnside(p, window)
    ru_poset = spec_ru(p, window)
    A = a_poset.functor
    rng = random.Random(seed)
    sample = [A.top((rng.randint(-60, 60), rng.randint(-60, 60))) for _ in range(samples)]
    for q in window:
        sample += [A.top((q, 0)), A.top((0, q)), A.top((q - p, 1)), A.top((q, -1)), A.top((q * (q - p), q))]
    mapping = {}
    disagreements = []
    for i, node in enumerate(ru_poset.nodes):
        src = node.prime.source
        kind = src.kind
        q = node.char
        target = pullback(ghost_prime(A, kind, q, []))
        composed = _PulledBack(ru_poset.functor, node.prime)
        for z in sample:
            if composed.member(z) != target.member(z):
                disagreements.append({"ru_point": node.label, "element": str(z)})
                break
        mapping[i] = a_poset.index(target.label)
    return LinearizationReport(p, window, check_linearization(p, seed=seed), mapping, a_poset, ru_poset, disagreements)
