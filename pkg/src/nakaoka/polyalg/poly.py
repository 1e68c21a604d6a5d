"""Exact multivariate polynomials over Z, Q and F_q.

Monomials are packed into a single Python int: one 16-bit field per
variable (15 value bits plus a guard bit) with the total degree stored
above all fields.  With the first variable in the most significant field,
integer comparison of packed keys is graded lex order, and comparison of
the field bits alone is lex order.  Multiplying monomials is integer
addition; divisibility is one subtraction and a mask test.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ..errors import DomainError

_W = 16
_MAXEXP = (1 << (_W - 1)) - 1


@dataclass(frozen=True)
class Domain:
    kind: str  # "Z", "Q" or "F"
    q: int = 0

    def __str__(self):
        return f"F_{self.q}" if self.kind == "F" else self.kind

    @property
    def is_field(self):
        return self.kind != "Z"

    @property
    def characteristic(self):
        return self.q if self.kind == "F" else 0

    def coerce(self, c):
        if self.kind == "Z":
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise DomainError(f"{c} is not an integer")
                return c.numerator
            return int(c)
        if self.kind == "Q":
            return Fraction(c)
        if isinstance(c, Fraction):
            den = c.denominator % self.q
            if den == 0:
                raise DomainError(f"denominator of {c} vanishes mod {self.q}")
            return c.numerator * pow(den, -1, self.q) % self.q
        return int(c) % self.q


ZZ = Domain("Z")
QQ = Domain("Q")


def GF(q):
    return Domain("F", q)


class _Layout:
    __slots__ = ("n", "shifts", "deg_shift", "guard", "fields", "one")

    def __init__(self, n):
        self.n = n
        self.shifts = tuple((n - 1 - i) * _W for i in range(n))
        self.deg_shift = n * _W
        self.guard = sum(1 << (s + _W - 1) for s in self.shifts)
        self.fields = (1 << self.deg_shift) - 1
        self.one = tuple(1 << self.deg_shift | 1 << s for s in self.shifts)

    def pack(self, exps):
        key = sum(exps) << self.deg_shift
        for e, s in zip(exps, self.shifts):
            if e < 0 or e > _MAXEXP:
                raise DomainError(f"exponent {e} out of range")
            key |= e << s
        return key

    def unpack(self, key):
        return tuple((key >> s) & _MAXEXP for s in self.shifts)

    def divides(self, a, b):
        g = self.guard
        return ((b | g) - a) & g == g


@lru_cache(maxsize=None)
def _layout(n):
    return _Layout(n)


@dataclass(frozen=True)
class PolyRing:
    """A polynomial ring: ordered variable names plus a coefficient domain."""

    vars: tuple
    domain: Domain = ZZ

    def __post_init__(self):
        object.__setattr__(self, "vars", tuple(self.vars))
        if len(set(self.vars)) != len(self.vars):
            raise DomainError(f"repeated variable in {self.vars}")

    def __str__(self):
        return f"{self.domain}[{', '.join(self.vars)}]"

    @property
    def layout(self):
        return _layout(len(self.vars))

    @property
    def zero(self):
        return MultiPoly(self, {})

    @property
    def one(self):
        return self.const(1)

    @property
    def gens(self):
        return tuple(self.var(v) for v in self.vars)

    def const(self, c):
        c = self.domain.coerce(c)
        return MultiPoly(self, {0: c} if c else {})

    def var(self, name):
        try:
            i = self.vars.index(name)
        except ValueError:
            raise DomainError(f"no variable {name!r} in {self}") from None
        return MultiPoly(self, {self.layout.one[i]: self.domain.coerce(1)})

    def monomial(self, exps, c=1):
        c = self.domain.coerce(c)
        return MultiPoly(self, {self.layout.pack(tuple(exps)): c} if c else {})

    def from_terms(self, terms):
        """Build from a map exponent-tuple -> coefficient."""
        lay = self.layout
        out = {}
        for exps, c in terms.items():
            if len(exps) != lay.n:
                raise DomainError("exponent vector length differs from variable count")
            k = lay.pack(tuple(exps))
            out[k] = out.get(k, 0) + self.domain.coerce(c)
        return MultiPoly(self, _clean(out, self.domain))

    def with_domain(self, domain):
        return PolyRing(self.vars, domain)

    def with_vars(self, vars):
        return PolyRing(tuple(vars), self.domain)


def _clean(d, dom):
    if dom.kind == "F":
        q = dom.q
        return {k: c % q for k, c in d.items() if c % q}
    return {k: c for k, c in d.items() if c}


class MultiPoly:
    """Immutable polynomial in canonical form (no zero coefficients)."""

    __slots__ = ("ring", "_t", "_hash")

    def __init__(self, ring, packed_terms):
        self.ring = ring
        self._t = packed_terms
        self._hash = None

    # construction helpers
    def _new(self, d):
        return MultiPoly(self.ring, d)

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.ring != self.ring:
                raise DomainError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    @property
    def vars(self):
        return self.ring.vars

    @property
    def domain(self):
        return self.ring.domain

    # predicates and accessors
    def is_zero(self):
        return not self._t

    def __bool__(self):
        return bool(self._t)

    def is_constant(self):
        return all(k == 0 for k in self._t)

    def constant_coeff(self):
        return self._t.get(0, 0)

    def __len__(self):
        return len(self._t)

    def coeff(self, exps):
        return self._t.get(self.ring.layout.pack(tuple(exps)), 0)

    def terms(self, order="grlex"):
        """List of (exponent tuple, coefficient), largest monomial first."""
        lay = self.ring.layout
        keys = sorted(self._t, key=_order_key(lay, order), reverse=True)
        return [(lay.unpack(k), self._t[k]) for k in keys]

    def packed_items(self):
        return self._t.items()

    def total_degree(self):
        if not self._t:
            return -1
        return max(self._t) >> self.ring.layout.deg_shift

    def degree(self, var=None):
        if not self._t:
            return -1
        if var is None:
            if len(self.vars) != 1:
                return self.total_degree()
            var = self.vars[0]
        i = self.vars.index(var)
        s = self.ring.layout.shifts[i]
        return max((k >> s) & _MAXEXP for k in self._t)

    def leading(self, order="grlex"):
        """(packed monomial, coefficient) of the leading term."""
        k = max(self._t, key=_order_key(self.ring.layout, order))
        return k, self._t[k]

    def leading_coeff(self, order="grlex"):
        return self.leading(order)[1] if self._t else 0

    def variables_used(self):
        lay = self.ring.layout
        used = set()
        for k in self._t:
            for i, e in enumerate(lay.unpack(k)):
                if e:
                    used.add(self.vars[i])
        return used

    # arithmetic
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = dict(self._t)
        for k, c in other._t.items():
            d[k] = d.get(k, 0) + c
        return self._new(_clean(d, self.domain))

    __radd__ = __add__

    def __neg__(self):
        return self._new(_clean({k: -c for k, c in self._t.items()}, self.domain))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = dict(self._t)
        for k, c in other._t.items():
            d[k] = d.get(k, 0) - c
        return self._new(_clean(d, self.domain))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._t, other._t
        if not a or not b:
            return self._new({})
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1 and 0 in b:
            c = b[0]
            return self._new(_clean({k: v * c for k, v in a.items()}, self.domain))
        out = {}
        get = out.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                out[k] = get(k, 0) + ca * cb
        guard = self.ring.layout.guard
        if guard and any(k & guard for k in out):
            raise DomainError("exponent overflow")
        return self._new(_clean(out, self.domain))

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise DomainError("exponent must be a nonnegative integer")
        result = self.ring.one
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def scale(self, c):
        c = self.domain.coerce(c)
        return self._new(_clean({k: v * c for k, v in self._t.items()}, self.domain))

    def mul_monomial(self, key, c):
        """Multiply by c times the packed monomial key."""
        return self._new(_clean({k + key: v * c for k, v in self._t.items()}, self.domain))

    def exact_div_int(self, d):
        """Divide every coefficient by the integer d, which must divide exactly."""
        out = {}
        for k, c in self._t.items():
            qt, r = divmod(c, d)
            if r:
                raise DomainError(f"coefficient {c} not divisible by {d}")
            out[k] = qt
        return self._new(out)

    # equality
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.ring == other.ring and self._t == other._t

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._t.items())))
        return self._hash

    # conversions
    def to_domain(self, domain):
        """Reinterpret coefficients in another domain (Z->Q, Z->F_q, Q->F_q, F_q->Z lift)."""
        if domain == self.domain:
            return self
        ring = self.ring.with_domain(domain)
        return MultiPoly(ring, _clean({k: domain.coerce(c) for k, c in self._t.items()}, domain))

    def to_ring(self, ring):
        """Move into a ring with other variables (by name) and possibly another domain."""
        src = self.ring
        if ring.vars == src.vars:
            return self.to_domain(ring.domain) if ring.domain != src.domain else self
        idx = []
        for v in src.vars:
            idx.append(ring.vars.index(v) if v in ring.vars else None)
        lay_src, lay_dst = src.layout, ring.layout
        out = {}
        for k, c in self._t.items():
            exps = lay_src.unpack(k)
            new = [0] * lay_dst.n
            for i, e in enumerate(exps):
                if e:
                    if idx[i] is None:
                        raise DomainError(f"variable {src.vars[i]} not in {ring}")
                    new[idx[i]] = e
            nk = lay_dst.pack(new)
            out[nk] = out.get(nk, 0) + ring.domain.coerce(c)
        return MultiPoly(ring, _clean(out, ring.domain))

    def content(self):
        from math import gcd

        g = 0
        for c in self._t.values():
            g = gcd(g, int(c))
        return g

    def primitive(self):
        """Primitive part over Z with positive leading coefficient."""
        if self.domain.kind != "Z":
            raise DomainError("primitive part needs integer coefficients")
        if not self._t:
            return self
        g = self.content()
        if self.leading_coeff() < 0:
            g = -g
        return self._new({k: c // g for k, c in self._t.items()})

    def monic(self, order="grlex"):
        if not self.domain.is_field:
            raise DomainError("monic needs a field")
        if not self._t:
            return self
        c = self.leading_coeff(order)
        inv = Fraction(1) / c if self.domain.kind == "Q" else pow(c, -1, self.domain.q)
        return self.scale(inv)

    def clear_denominators(self):
        """Integer polynomial: a primitive Z-multiple of a Q-polynomial."""
        from math import lcm

        den = 1
        for c in self._t.values():
            den = lcm(den, Fraction(c).denominator)
        ring = self.ring.with_domain(ZZ)
        p = MultiPoly(ring, {k: int(Fraction(c) * den) for k, c in self._t.items()})
        return p.primitive()

    def lift(self):
        """Integer polynomial with coefficients in (-q/2, q/2] from an F_q polynomial."""
        q = self.domain.q
        ring = self.ring.with_domain(ZZ)
        return MultiPoly(ring, {k: (c - q if c > q // 2 else c) for k, c in self._t.items()})

    def substitute(self, assignment, target=None):
        """Image under the ring map sending each variable to assignment[var].

        Values may be MultiPolys over one common ring or plain integers; the
        target ring defaults to the ring of the first polynomial value.
        """
        if target is None:
            for v in assignment.values():
                if isinstance(v, MultiPoly):
                    target = v.ring
                    break
            else:
                target = PolyRing((), self.domain)
        vals = []
        for v in self.vars:
            if v not in assignment:
                raise DomainError(f"unassigned variable {v!r}")
            a = assignment[v]
            if isinstance(a, MultiPoly):
                if a.ring != target:
                    a = a.to_ring(target)
            else:
                a = target.const(a)
            vals.append(a)
        lay = self.ring.layout
        powers = [{0: target.one, 1: a} for a in vals]
        result = {}
        for k, c in self._t.items():
            term = target.const(target.domain.coerce(c))
            for i, e in enumerate(lay.unpack(k)):
                if e:
                    cache = powers[i]
                    if e not in cache:
                        cache[e] = vals[i] ** e
                    term = term * cache[e]
            for tk, tc in term._t.items():
                result[tk] = result.get(tk, 0) + tc
        return MultiPoly(target, _clean(result, target.domain))

    def permute_vars(self, perm):
        """Rename variable i to variable perm[i] inside the same ring."""
        lay = self.ring.layout
        out = {}
        for k, c in self._t.items():
            exps = lay.unpack(k)
            new = [0] * lay.n
            for i, e in enumerate(exps):
                new[perm[i]] = e
            out[lay.pack(new)] = c
        return self._new(out)

    # printing
    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"MultiPoly({self.ring}, {format_poly(self)!r})"


def _identity(k):
    return k


def _order_key(lay, order):
    if order == "grlex":
        return _identity
    if order == "lex":
        f = lay.fields
        return lambda k: k & f
    raise DomainError(f"unknown monomial order {order!r}")


def format_monomial(vars, exps):
    parts = []
    for v, e in zip(vars, exps):
        if e == 1:
            parts.append(v)
        elif e:
            parts.append(f"{v}^{e}")
    return "*".join(parts)


def format_terms(pieces):
    """Join (coefficient, monomial-string) pairs into a signed sum."""
    out = []
    for c, mono in pieces:
        neg = c < 0
        a = -c if neg else c
        if mono:
            body = mono if a == 1 else f"{a}*{mono}"
        else:
            body = str(a)
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out) if out else "0"


def format_poly(p):
    return format_terms((c, format_monomial(p.vars, e)) for e, c in p.terms())
