"""Buchberger's algorithm over Q and F_q, ideal membership, elimination."""

from __future__ import annotations

import os

from ..errors import DomainError, ResourceExceeded
from .poly import MultiPoly, PolyRing, _clean, _order_key

DEFAULT_GB_CAP = 40


def default_gb_cap():
    env = os.environ.get("NAKAOKA_GB_CAP")
    if env:
        try:
            return int(env)
        except ValueError:
            raise DomainError(f"NAKAOKA_GB_CAP must be an integer, got {env!r}") from None
    return DEFAULT_GB_CAP


class GroebnerBasis:
    """A reduced Gröbner basis; generators are monic and sorted by leading term."""

    def __init__(self, ring, gens, order="grlex"):
        self.ring = ring
        self.order = order
        self.gens = tuple(gens)
        self.reduced = True
        key = _order_key(ring.layout, order)
        self._lead = [(g.leading(order)[0], g) for g in self.gens]
        self._key = key

    def __iter__(self):
        return iter(self.gens)

    def __len__(self):
        return len(self.gens)

    def is_unit(self):
        return any(g.is_constant() for g in self.gens)

    def reduce(self, f):
        """Normal form of f modulo the basis."""
        f = _to_ring(f, self.ring)
        return MultiPoly(self.ring, _normal_form(dict(f._t), self._lead, self.ring, self._key))

    def contains(self, f):
        return self.reduce(f).is_zero()

    def __repr__(self):
        return f"GroebnerBasis({self.ring}, [{', '.join(map(str, self.gens))}])"


def _to_ring(f, ring):
    if f.ring == ring:
        return f
    return f.to_ring(ring)


def _normal_form(p, lead, ring, key):
    """Fully reduce the packed dict p by (leading monomial, monic poly) pairs."""
    lay = ring.layout
    dom = ring.domain
    q = dom.q if dom.kind == "F" else 0
    divides = lay.divides
    rem = {}
    while p:
        lt = max(p, key=key)
        c = p[lt]
        for lm, g in lead:
            if divides(lm, lt):
                shift = lt - lm
                for k, gc in g._t.items():
                    nk = k + shift
                    v = p.get(nk, 0) - c * gc
                    if q:
                        v %= q
                    if v:
                        p[nk] = v
                    else:
                        p.pop(nk, None)
                break
        else:
            rem[lt] = c
            del p[lt]
    return rem


def _lcm(a, b, lay):
    ea, eb = lay.unpack(a), lay.unpack(b)
    return lay.pack(tuple(max(x, y) for x, y in zip(ea, eb)))


def groebner(gens, order="grlex", cap=None, ring=None):
    """Reduced Gröbner basis of the ideal generated by gens.

    Coefficients must lie in a field; integer input is rejected so callers
    choose explicitly between working over Q and reducing mod q.
    """
    gens = list(gens)
    if ring is None:
        if not gens:
            raise DomainError("groebner needs at least one generator or an explicit ring")
        ring = gens[0].ring
    if not ring.domain.is_field:
        raise DomainError("groebner needs coefficients in Q or F_q; localize or reduce first")
    if cap is None:
        cap = default_gb_cap()
    lay = ring.layout
    key = _order_key(lay, order)
    deg_shift = lay.deg_shift
    basis = []  # list of (leading key, monic poly)
    for g in gens:
        g = _to_ring(g, ring)
        if not g.is_zero():
            basis.append(_monic_pair(g, order))
    if any(g.is_constant() for _, g in basis):
        return GroebnerBasis(ring, [ring.one], order)
    basis = _interreduce(basis, ring, key, order)
    pairs = set()
    for i in range(len(basis)):
        for j in range(i):
            pairs.add((j, i))
    while pairs:
        i, j = min(pairs, key=lambda ij: (_lcm(basis[ij[0]][0], basis[ij[1]][0], lay), ij))
        pairs.discard((i, j))
        li, gi = basis[i]
        lj, gj = basis[j]
        lcm = _lcm(li, lj, lay)
        if lcm == li + lj:
            continue  # coprime leading monomials
        if lcm >> deg_shift > cap:
            raise ResourceExceeded(
                f"Gröbner basis computation exceeded degree cap {cap} (set NAKAOKA_GB_CAP)"
            )
        s = gi.mul_monomial(lcm - li, 1) - gj.mul_monomial(lcm - lj, 1)
        r = _normal_form(dict(s._t), basis, ring, key)
        if r:
            r = MultiPoly(ring, r)
            if r.is_constant():
                return GroebnerBasis(ring, [ring.one], order)
            basis.append(_monic_pair(r, order))
            n = len(basis) - 1
            for k in range(n):
                pairs.add((k, n))
    return GroebnerBasis(ring, _reduce_basis(basis, ring, key, order), order)


def _monic_pair(g, order):
    g = g.monic(order)
    return (g.leading(order)[0], g)


def _interreduce(basis, ring, key, order):
    changed = True
    while changed:
        changed = False
        for idx, (lm, g) in enumerate(basis):
            others = [b for k, b in enumerate(basis) if k != idx]
            r = _normal_form(dict(g._t), others, ring, key)
            if r != g._t:
                changed = True
                del basis[idx]
                if r:
                    basis.append(_monic_pair(MultiPoly(ring, r), order))
                break
    return basis


def _reduce_basis(basis, ring, key, order):
    lay = ring.layout
    minimal = []
    for i, (lm, g) in enumerate(basis):
        redundant = False
        for j, (lm2, _) in enumerate(basis):
            if j == i:
                continue
            if lay.divides(lm2, lm) and (lm2 != lm or j < i):
                redundant = True
                break
        if not redundant:
            minimal.append((lm, g))
    out = []
    for i, (lm, g) in enumerate(minimal):
        others = [b for k, b in enumerate(minimal) if k != i]
        tail = dict(g._t)
        lc = tail.pop(lm)
        r = _normal_form(tail, others, ring, key)
        r[lm] = lc
        out.append(MultiPoly(ring, _clean(r, ring.domain)).monic(order))
    out.sort(key=lambda g: key(g.leading(order)[0]), reverse=True)
    return out


def ideal_member(f, basis):
    return basis.contains(f)


def elim_intersection(gens, keep, cap=None):
    """Generators of the ideal intersected with the subring in the kept variables.

    Accepts a GroebnerBasis or a list of generators.  A lex basis with the
    eliminated variables ordered first is computed internally; the returned
    polynomials live in the ring of the kept variables.
    """
    if isinstance(gens, GroebnerBasis):
        ring, gens = gens.ring, list(gens.gens)
    else:
        gens = list(gens)
        ring = gens[0].ring
    if isinstance(keep, str):
        keep = (keep,)
    keep = tuple(keep)
    for v in keep:
        if v not in ring.vars:
            raise DomainError(f"no variable {v!r} in {ring}")
    elim = tuple(v for v in ring.vars if v not in keep)
    lex_ring = PolyRing(elim + keep, ring.domain)
    gb = groebner([g.to_ring(lex_ring) for g in gens], order="lex", cap=cap, ring=lex_ring)
    sub = PolyRing(keep, ring.domain)
    out = []
    for g in gb.gens:
        if not (g.variables_used() & set(elim)):
            out.append(g.to_ring(sub))
    return out
