"""Primes of a fixed-point Tambara functor FP(R) from primes of R."""

from __future__ import annotations

import random

from ..errors import UnsupportedError
from ..tambara.catalog import FixedPoint
from ..tambara.functor import Level
from ..tambara.sampling import DEFAULT_BOUNDS
from .ideals import PolyPrime
from .poset import SpecPoset
from .primes import TYPE1, TYPE2, GhostPrime, action_perms, bottom_prime, ghost_prime, pullback

SUPPORTED = ("swap", "trivial")


class FixedPointRow:
    def __init__(self, prime, gprime, tambara):
        self.prime = prime
        self.gprime = gprime
        self.tambara = tambara
        self.gprime_violations = []
        self.levelwise_violations = []
        self.invariance_violations = []

    @property
    def ok(self):
        return not (self.gprime_violations or self.levelwise_violations or self.invariance_violations)

    def to_json(self):
        return {
            "prime": str(self.prime),
            "g_prime": str(self.gprime),
            "components": len(self.gprime.components),
            "g_prime_violations": self.gprime_violations,
            "levelwise_violations": self.levelwise_violations,
            "invariance_violations": self.invariance_violations,
            "ok": self.ok,
        }


class FixedPointReport:
    def __init__(self, functor, rows, separations, spectrum=None):
        self.functor = functor
        self.rows = rows
        self.separations = separations
        self.spectrum = spectrum

    @property
    def ok(self):
        return all(r.ok for r in self.rows) and all(s["separated"] for s in self.separations)

    def to_json(self):
        out = {
            "functor": str(self.functor),
            "rows": [r.to_json() for r in self.rows],
            "separations": self.separations,
            "ok": self.ok,
        }
        if self.spectrum is not None:
            out["spectrum_points"] = [n.label for n in self.spectrum.nodes]
        return out


def _invariant_candidates(T, w):
    """Invariant elements built from w: orbit product, orbit sum, and their squares."""
    prod, total = w, w
    for i in range(1, T.p):
        prod = prod * T._conj(w, i)
        total = total + T._conj(w, i)
    return [prod, total, prod * prod]


def fixed_point_spec(spec, primes, p=2, samples=100, seed=0, bounds=DEFAULT_BOUNDS):
    """Check the prime correspondence for FP(R) on the given primes of R.

    ``primes`` is a list of (char, generators) pairs.  For each prime the
    report records: the C_p-prime condition on random pairs, the levelwise
    identity (top part = invariants inside the bottom part), and invariance of
    the bottom.  Distinct C_p-primes are separated by an invariant element
    whenever one of the orbit constructions finds it.
    """
    if spec not in SUPPORTED:
        raise UnsupportedError(f"fixed-point spectra are supported for {SUPPORTED}, not {spec!r}")
    if spec == "swap":
        p = 2
    T = FixedPoint(p, spec)
    rng = random.Random(seed)
    rows = []
    for char, gens in primes:
        pr = PolyPrime(T.bottom_ring.vars, char, gens, trusted=True)
        gp = GhostPrime(T, TYPE1, a=bottom_prime(T, char, gens, trusted=True))
        row = FixedPointRow(pr, gp.a, pullback(gp))
        for _ in range(samples):
            x = T.random_bottom(rng, bounds)
            y = T.random_bottom(rng, bounds)
            if all(row.tambara.member(x * T._wrap(Level.BOTTOM, T._conj(y.payload, i))) for i in range(T.p)):
                if not (row.tambara.member(x) or row.tambara.member(y)):
                    row.gprime_violations.append([str(x), str(y)])
            z = T.random_top(rng, bounds)
            direct = gp.a.member(z.payload)
            if row.tambara.member(z) != direct:
                row.levelwise_violations.append(str(z))
            if row.tambara.member(x) != row.tambara.member(T._wrap(Level.BOTTOM, T._conj(x.payload, 1))):
                row.invariance_violations.append(str(x))
        rows.append(row)
    separations = []
    for i, a in enumerate(rows):
        for j, b in enumerate(rows):
            if i >= j or a.gprime.equals(b.gprime):
                continue
            ok, w = a.gprime.subset(b.gprime)
            src, dst = (a, b) if not ok else (b, a)
            if ok:
                _, w = b.gprime.subset(a.gprime)
            found = None
            for c in _invariant_candidates(T, w):
                if src.gprime.member(c) and not dst.gprime.member(c):
                    found = c
                    break
            separations.append(
                {"pair": [str(src.prime), str(dst.prime)], "separated": found is not None, "invariant": str(found)}
            )
    spectrum = None
    if spec == "trivial":
        spectrum = SpecPoset.build(
            T,
            [
                (pullback(ghost_prime(T, TYPE1, p, [])), p, {"kind": TYPE1}),
                (pullback(ghost_prime(T, TYPE2, p, [])), p, {"kind": TYPE2}),
            ],
        )
    return FixedPointReport(T, rows, separations, spectrum)
