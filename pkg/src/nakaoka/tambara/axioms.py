"""Randomized verification of the Tambara functor laws on a catalog entry."""

from __future__ import annotations

import random

from .functor import Level, conj, nm, phi, res, tr
from .sampling import DEFAULT_BOUNDS

LAWS = (
    "tr_additive",
    "nm_multiplicative",
    "res_homomorphism",
    "conj_homomorphism",
    "conj_order_p",
    "nm_conj_invariant",
    "tr_conj_invariant",
    "frobenius",
    "res_tr_orbit_sum",
    "res_nm_orbit_product",
    "reciprocity_residue",
)


class AxiomReport:
    """Per-law sample counts and verbatim counterexamples."""

    def __init__(self, functor, trials, seed):
        self.functor = functor
        self.trials = trials
        self.seed = seed
        self.checked = {law: 0 for law in LAWS}
        self.failures = {law: [] for law in LAWS}

    def record(self, law, ok, **witness):
        self.checked[law] += 1
        if not ok:
            self.failures[law].append({k: str(v) for k, v in witness.items()})

    @property
    def ok(self):
        return not any(self.failures.values())

    def violations(self):
        return sum(len(v) for v in self.failures.values())

    def to_json(self):
        return {
            "functor": self.functor.tag if not hasattr(self.functor, "spec") else f"{self.functor.tag}:{self.functor.spec}",
            "p": self.functor.p,
            "trials": self.trials,
            "seed": self.seed,
            "ok": self.ok,
            "laws": {
                law: {"checked": self.checked[law], "failures": self.failures[law]} for law in LAWS
            },
        }

    def lines(self):
        name = self.to_json()["functor"]
        out = []
        for law in LAWS:
            status = "PASS" if not self.failures[law] else f"FAIL ({len(self.failures[law])})"
            out.append(f"{name} p={self.functor.p} {law}: {status} [{self.checked[law]} samples]")
        return out


def _orbit_sum(T, x):
    out = x
    for i in range(1, T.p):
        out = out + conj(T, x, i)
    return out


def _orbit_product(T, x):
    out = x
    for i in range(1, T.p):
        out = out * conj(T, x, i)
    return out


def check_axioms(T, trials=200, seed=0, bounds=DEFAULT_BOUNDS):
    rng = random.Random(seed)
    report = AxiomReport(T, trials, seed)
    one_b = T.one(Level.BOTTOM)
    one_t = T.one(Level.TOP)
    report.record("nm_multiplicative", nm(T, one_b) == one_t, x=one_b)
    report.record("res_homomorphism", res(T, one_t) == one_b, y=one_t)
    for _ in range(trials):
        a = T.random_bottom(rng, bounds)
        b = T.random_bottom(rng, bounds)
        y = T.random_top(rng, bounds)
        w = T.random_top(rng, bounds)
        i = rng.randrange(1, T.p) if T.p > 1 else 0

        report.record("tr_additive", tr(T, a + b) == tr(T, a) + tr(T, b), a=a, b=b)
        nm_a, nm_b = nm(T, a), nm(T, b)
        report.record("nm_multiplicative", nm(T, a * b) == nm_a * nm_b, a=a, b=b)
        report.record(
            "res_homomorphism",
            res(T, y * w) == res(T, y) * res(T, w) and res(T, y + w) == res(T, y) + res(T, w),
            y=y,
            w=w,
        )
        report.record(
            "conj_homomorphism",
            conj(T, a * b, i) == conj(T, a, i) * conj(T, b, i) and conj(T, a + b, i) == conj(T, a, i) + conj(T, b, i),
            a=a,
            b=b,
            i=i,
        )
        c = a
        for _ in range(T.p):
            c = conj(T, c, 1)
        report.record("conj_order_p", c == a, a=a)
        report.record("nm_conj_invariant", nm(T, conj(T, a, i)) == nm_a, a=a, i=i)
        report.record("tr_conj_invariant", tr(T, conj(T, a, i)) == tr(T, a), a=a, i=i)
        report.record("frobenius", tr(T, a) * y == tr(T, a * res(T, y)), a=a, y=y)
        report.record("res_tr_orbit_sum", res(T, tr(T, a)) == _orbit_sum(T, a), a=a)
        report.record("res_nm_orbit_product", res(T, nm_a) == _orbit_product(T, a), a=a)
        defect = phi(T, nm(T, a + b) - nm_a - nm_b)
        report.record("reciprocity_residue", T.phi_reduce(defect) == 0, a=a, b=b)
    return report
