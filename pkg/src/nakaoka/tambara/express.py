"""Write t_v in the free functor on an underlying generator as a polynomial in
n and the finitely many t_w with |w| <= p.

The recursion follows the finite-generation induction: on the total |v|, then
on the pattern of zeros.  Two rewrites are used:

    t_v = n * t_{v - 1}                                   (no zero entry)
    t_v = t_{v - e(A)} * t_{e(A)} - sum_{i=1}^{p-1} t_{v - e(A) + gamma^i e(A)}

where e(A) is the indicator vector of A = {k : v_k >= i} for a level i.  The
second rewrite keeps |v| fixed on the subtracted terms, so the choice of
level is searched (depth first, never revisiting a vector on the current
path) until every term bottoms out.
"""

from __future__ import annotations

from itertools import product

from ..errors import UnsupportedError
from ..polyalg import ZZ, PolyRing
from .catalog import FreeUnderlying, rotate, tvec_canonical

SUPPORTED_PRIMES = (2, 3)


def tname(v):
    return f"t[{','.join(map(str, v))}]"


def generator_vectors(p):
    """Canonical t-vectors of total at most p, sorted by total then lexicographically."""
    seen = set()
    for v in product(range(p + 1), repeat=p):
        if sum(v) <= p:
            seen.add(tvec_canonical(v))
    return sorted(seen, key=lambda v: (sum(v), v))


class _Expander:
    def __init__(self, p):
        self.p = p
        self.gens = generator_vectors(p)
        names = tuple(tname(v) for v in reversed(self.gens))
        self.ring = PolyRing(names + ("n",), ZZ)
        self.memo = {}

    def gen(self, v):
        return self.ring.var(tname(tvec_canonical(v)))

    def expand(self, v, path=frozenset()):
        v = tvec_canonical(v)
        if v in self.memo:
            return self.memo[v]
        if v in path:
            return None
        if sum(v) <= self.p:
            out = self.gen(v)
        elif min(v) >= 1:
            inner = self.expand(tuple(e - 1 for e in v), path)
            out = self.ring.var("n") * inner
        else:
            out = self._split(v, path | {v})
        if out is not None:
            self.memo[v] = out
        return out

    def _split(self, v, path):
        p = self.p
        for level in range(1, max(v) + 1):
            w = tuple(1 if e >= level else 0 for e in v)
            rest = tuple(a - b for a, b in zip(v, w))
            head = self.expand(rest, path)
            if head is None:
                continue
            out = head * self.gen(w)
            for i in range(1, p):
                term = self.expand(tuple(a + b for a, b in zip(rest, rotate(w, i))), path)
                if term is None:
                    break
                out = out - term
            else:
                return out
        return None


_EXPANDERS = {}


def express_t_in_generators(p, v):
    """Polynomial (MultiPoly over n and the t_w, |w| <= p) equal to t_v."""
    if p not in SUPPORTED_PRIMES:
        raise UnsupportedError(f"generator recursion is implemented for p in {SUPPORTED_PRIMES}, not p={p}")
    v = tuple(v)
    if len(v) != p or any(e < 0 for e in v):
        raise UnsupportedError(f"t-vector must have {p} nonnegative entries")
    ex = _EXPANDERS.get(p)
    if ex is None:
        ex = _EXPANDERS[p] = _Expander(p)
    out = ex.expand(v)
    if out is None:
        raise UnsupportedError(f"no rewrite sequence found for t{list(v)}")
    return out


def evaluate_expression(T, expr):
    """Evaluate a generator polynomial inside FreeUnderlying(p) (re-expansion)."""
    if not isinstance(T, FreeUnderlying):
        raise UnsupportedError("re-expansion needs the free functor on an underlying generator")
    values = [
        T.top("n") if name == "n" else T.t(tuple(int(x) for x in name[2:-1].split(",")))
        for name in expr.vars
    ]
    total = T.top(0)
    for exps, c in expr.terms():
        term = T.top(c)
        for val, e in zip(values, exps):
            if e:
                term = term * val**e
        total = total + term
    return total
