"""The catalog of concrete C_p-Tambara functors.

Burnside           top Z[t]/(t^2 - pt), bottom Z
ModPBurnside       top F_p[t]/(t^2), bottom F_p
RU                 top Z[C_p] = Z[x]/(x^p - 1) with x = gamma, bottom Z
FreeFixed          free on a fixed generator: top Z[x,n,t]/(t^2 - pt, tn - tx^p), bottom Z[x]
FreeUnderlying     free on an underlying generator: top Z[n] + Z{t_v}, bottom Z[x_0..x_{p-1}]
FixedPoint         top R^{C_p}, bottom R, for a few presented rings R
"""

from __future__ import annotations

from functools import lru_cache

from ..errors import LevelError, ParseError
from ..polyalg import GF, ZZ, PolyRing, format_terms, udivmod
from ..polyalg.poly import format_monomial
from ..polyalg.univariate import cyclotomic
from .functor import Level, TambaraFunctorCp
from .sampling import random_coeff, random_exponents, random_poly

_Z = PolyRing((), ZZ)


def burnside_norm_coeff(k, p):
    """(k^p - k) / p, exact by Fermat's little theorem."""
    num = k**p - k
    assert num % p == 0, "Fermat quotient must be integral"
    return num // p


# ---------------------------------------------------------------- Burnside


class Burnside(TambaraFunctorCp):
    tag = "burnside"
    bottom_ring = _Z
    phi_ring = _Z

    def _top_const(self, k):
        return (k, 0)

    def _top_add(self, a, b):
        return (a[0] + b[0], a[1] + b[1])

    def _top_neg(self, a):
        return (-a[0], -a[1])

    def _top_mul(self, a, b):
        return (a[0] * b[0], a[0] * b[1] + a[1] * b[0] + self.p * a[1] * b[1])

    def _res(self, a):
        return _Z.const(a[0] + self.p * a[1])

    def _tr(self, f):
        return (0, f.constant_coeff())

    def _nm(self, f):
        k = f.constant_coeff()
        return (k, burnside_norm_coeff(k, self.p))

    def _phi(self, a):
        return _Z.const(a[0])

    def nu(self, f):
        return f

    def phi_lift(self, g):
        return self.top((g.constant_coeff(), 0))

    def restriction_kernel_gens(self):
        return [self.top((-self.p, 1))]

    def format_top(self, a):
        return format_terms([(c, m) for c, m in ((a[0], ""), (a[1], "t")) if c])

    def top_symbol(self, name, index, pos):
        if name == "t" and index is None:
            return self.top((0, 1))
        return super().top_symbol(name, index, pos)

    def random_top(self, rng, bounds):
        return self.top((rng.randint(-bounds.coeff, bounds.coeff), rng.randint(-bounds.coeff, bounds.coeff)))


class ModPBurnside(TambaraFunctorCp):
    tag = "modp-burnside"
    torsion_free_top = False

    def __init__(self, p):
        super().__init__(p)
        self.bottom_ring = PolyRing((), GF(p))
        self.phi_ring = self.bottom_ring

    def _top_normalize(self, a):
        return (a[0] % self.p, a[1] % self.p)

    def _top_const(self, k):
        return (k % self.p, 0)

    def _top_add(self, a, b):
        return ((a[0] + b[0]) % self.p, (a[1] + b[1]) % self.p)

    def _top_neg(self, a):
        return (-a[0] % self.p, -a[1] % self.p)

    def _top_mul(self, a, b):
        return (a[0] * b[0] % self.p, (a[0] * b[1] + a[1] * b[0]) % self.p)

    def _res(self, a):
        return self.bottom_ring.const(a[0])

    def _tr(self, f):
        return (0, f.constant_coeff())

    def _nm(self, f):
        return (f.constant_coeff(), 0)

    def _phi(self, a):
        return self.phi_ring.const(a[0])

    def nu(self, f):
        return f

    def phi_lift(self, g):
        return self.top((g.constant_coeff(), 0))

    def restriction_kernel_gens(self):
        return [self.top((0, 1))]

    def format_top(self, a):
        return format_terms([(c, m) for c, m in ((a[0], ""), (a[1], "t")) if c])

    def top_symbol(self, name, index, pos):
        if name == "t" and index is None:
            return self.top((0, 1))
        return super().top_symbol(name, index, pos)

    def random_top(self, rng, bounds):
        return self.top((rng.randrange(self.p), rng.randrange(self.p)))


# ---------------------------------------------------------------- RU


class RU(TambaraFunctorCp):
    """Complex representation ring: top Z[C_p], bottom Z (restriction = dimension)."""

    tag = "ru"
    bottom_ring = _Z

    def __init__(self, p):
        super().__init__(p)
        self.phi_ring = PolyRing(("x",), ZZ)
        self.cyclotomic = cyclotomic(p, self.phi_ring)

    def _top_normalize(self, a):
        a = tuple(a)
        if len(a) != self.p:
            raise LevelError(f"RU top elements need {self.p} coefficients")
        return a

    def _top_const(self, k):
        return (k,) + (0,) * (self.p - 1)

    def _top_add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def _top_neg(self, a):
        return tuple(-x for x in a)

    def _top_mul(self, a, b):
        p = self.p
        out = [0] * p
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[(i + j) % p] += x * y
        return tuple(out)

    def _res(self, a):
        return _Z.const(sum(a))

    def _tr(self, f):
        return (f.constant_coeff(),) * self.p

    def _nm(self, f):
        k = f.constant_coeff()
        c = burnside_norm_coeff(k, self.p)
        return (k + c,) + (c,) * (self.p - 1)

    def phi_reduce(self, g):
        return udivmod(g, self.cyclotomic)[1]

    def _phi(self, a):
        g = self.phi_ring.from_terms({(i,): c for i, c in enumerate(a) if c})
        return self.phi_reduce(g)

    def nu(self, f):
        return self.phi_ring.const(f.constant_coeff())

    def phi_lift(self, g):
        g = self.phi_reduce(g)
        coeffs = [0] * self.p
        for (e,), c in g.terms():
            coeffs[e] = c
        return self.top(tuple(coeffs))

    def restriction_kernel_gens(self):
        return [self.top((1, -1) + (0,) * (self.p - 2))]

    def format_top(self, a):
        return format_terms([(c, format_monomial(("x",), (i,))) for i, c in enumerate(a) if c])

    def top_symbol(self, name, index, pos):
        if name in ("x", "g") and index is None:
            return self.top((0, 1) + (0,) * (self.p - 2))
        return super().top_symbol(name, index, pos)

    def random_top(self, rng, bounds):
        return self.top(tuple(rng.randint(-bounds.coeff, bounds.coeff) for _ in range(self.p)))

    def describe(self):
        d = super().describe()
        d["phi"] = f"Z[x]/({self.cyclotomic})"
        return d


# ---------------------------------------------------------------- free on a fixed generator


class FreeFixed(TambaraFunctorCp):
    """Top elements are pairs (g0, g1) meaning g0(x, n) + t*g1(x)."""

    tag = "free-fixed"

    def __init__(self, p):
        super().__init__(p)
        self.bottom_ring = PolyRing(("x",), ZZ)
        self.phi_ring = PolyRing(("x", "n"), ZZ)
        x = self.bottom_ring.var("x")
        self._frob = {"x": x, "n": x**p}
        self._zero_g1 = self.bottom_ring.zero

    def _at_frobenius(self, g0):
        """g0(x, x^p), the image of g0 under n -> x^p."""
        return g0.substitute(self._frob, self.bottom_ring)

    def _top_normalize(self, a):
        g0, g1 = a
        if g0.ring != self.phi_ring:
            g0 = g0.to_ring(self.phi_ring)
        if g1.ring != self.bottom_ring:
            g1 = g1.to_ring(self.bottom_ring)
        return (g0, g1)

    def _top_const(self, k):
        return (self.phi_ring.const(k), self._zero_g1)

    def _top_add(self, a, b):
        return (a[0] + b[0], a[1] + b[1])

    def _top_neg(self, a):
        return (-a[0], -a[1])

    def _top_mul(self, a, b):
        g0, g1 = a
        h0, h1 = b
        t_part = self.p * g1 * h1
        if h1:
            t_part = t_part + self._at_frobenius(g0) * h1
        if g1:
            t_part = t_part + self._at_frobenius(h0) * g1
        return (g0 * h0, t_part)

    def _res(self, a):
        return self._at_frobenius(a[0]) + self.p * a[1]

    def _tr(self, f):
        return (self.phi_ring.zero, f)

    def _nm(self, f):
        # phi-part f(n); the t-part is forced by res(nm f) = f^p
        p = self.p
        fn = self.nu(f)
        frob = f.substitute({"x": self._frob["n"]}, self.bottom_ring)
        return (fn, (f**p - frob).exact_div_int(p))

    def _phi(self, a):
        return a[0]

    def nu(self, f):
        return f.substitute({"x": self.phi_ring.var("n")}, self.phi_ring)

    def phi_lift(self, g):
        return self.top((g, self._zero_g1))

    def restriction_kernel_gens(self):
        x, n = self.phi_ring.gens
        return [self.top((self.phi_ring.const(-self.p), self.bottom_ring.one)), self.top((n - x**self.p, self._zero_g1))]

    def format_top(self, a):
        g0, g1 = a
        pieces = [(c, format_monomial(g0.vars, e)) for e, c in g0.terms()]
        for e, c in g1.terms():
            mono = format_monomial(g1.vars, e)
            pieces.append((c, f"t*{mono}" if mono else "t"))
        return format_terms(pieces)

    def top_symbol(self, name, index, pos):
        if index is None:
            if name == "t":
                return self.top((self.phi_ring.zero, self.bottom_ring.one))
            if name in ("x", "n"):
                return self.top((self.phi_ring.var(name), self._zero_g1))
        return super().top_symbol(name, index, pos)

    def random_top(self, rng, bounds):
        return self.top((random_poly(rng, self.phi_ring, bounds), random_poly(rng, self.bottom_ring, bounds)))

    def _payload_key(self, level, a):
        return a


# ---------------------------------------------------------------- free on an underlying generator


def rotate(v, i):
    """Exponent vector of gamma^i * x^v: entry k is v[k - i]."""
    p = len(v)
    i %= p
    if i == 0:
        return tuple(v)
    return tuple(v[(k - i) % p] for k in range(p))


@lru_cache(maxsize=1 << 16)
def tvec_canonical(v):
    """Canonical orbit representative: the lexicographically greatest rotation."""
    v = tuple(v)
    return max(rotate(v, i) for i in range(len(v)))


def _tvec_sort_key(v):
    return (sum(v), v)


class FreeUnderlying(TambaraFunctorCp):
    """Top elements are pairs (h, ts): h(n) plus sum of c * t_v over canonical vectors v."""

    tag = "free-underlying"
    trivial_action = False

    def __init__(self, p):
        super().__init__(p)
        self.xvars = tuple(f"x{i}" for i in range(p))
        self.bottom_ring = PolyRing(self.xvars, ZZ)
        self.phi_ring = PolyRing(("n",), ZZ)
        self._prod = self.bottom_ring.one
        for v in self.bottom_ring.gens:
            self._prod = self._prod * v
        self._perms = [tuple((j + i) % p for j in range(p)) for i in range(p)]

    def _top_normalize(self, a):
        h, ts = a
        if isinstance(h, int):
            h = self.phi_ring.const(h)
        elif h.ring != self.phi_ring:
            h = h.to_ring(self.phi_ring)
        out = {}
        for v, c in ts.items():
            if len(v) != self.p:
                raise LevelError(f"t-vectors need length {self.p}")
            k = tvec_canonical(tuple(v))
            out[k] = out.get(k, 0) + c
        return (h, {k: c for k, c in out.items() if c})

    def _payload_eq(self, level, a, b):
        if level == Level.BOTTOM:
            return a == b
        return a[0] == b[0] and a[1] == b[1]

    def _payload_key(self, level, a):
        if level == Level.BOTTOM:
            return a
        return (a[0], frozenset(a[1].items()))

    def _top_const(self, k):
        return (self.phi_ring.const(k), {})

    def _top_add(self, a, b):
        ts = dict(a[1])
        for v, c in b[1].items():
            s = ts.get(v, 0) + c
            if s:
                ts[v] = s
            else:
                ts.pop(v, None)
        return (a[0] + b[0], ts)

    def _top_neg(self, a):
        return (-a[0], {v: -c for v, c in a[1].items()})

    def _top_mul(self, a, b):
        h1, t1 = a
        h2, t2 = b
        acc = {}

        def put(v, c):
            k = tvec_canonical(v)
            acc[k] = acc.get(k, 0) + c

        for hh, tt in ((h1, t2), (h2, t1)):
            for (k,), c in hh.terms():
                for v, d in tt.items():
                    put(tuple(e + k for e in v), c * d)
        for v, c in t1.items():
            for w, d in t2.items():
                for i in range(self.p):
                    put(tuple(a_ + b_ for a_, b_ in zip(v, rotate(w, i))), c * d)
        return (h1 * h2, {k: c for k, c in acc.items() if c})

    def _res(self, a):
        h, ts = a
        out = h.substitute({"n": self._prod}, self.bottom_ring)
        terms = {}
        for v, c in ts.items():
            for i in range(self.p):
                r = rotate(v, i)
                terms[r] = terms.get(r, 0) + c
        return out + self.bottom_ring.from_terms(terms)

    def _tr(self, f):
        ts = {}
        for v, c in f.terms():
            k = tvec_canonical(v)
            ts[k] = ts.get(k, 0) + c
        return (self.phi_ring.zero, {k: c for k, c in ts.items() if c})

    def _conj(self, f, i):
        return f.permute_vars(self._perms[i % self.p])

    def orbit_product_poly(self, f):
        out = f
        for i in range(1, self.p):
            out = out * f.permute_vars(self._perms[i])
        return out

    def _nm(self, f):
        # nm(sum u_j) = sum nm(u_j) + (1/p) tr(prod gamma^i z - sum prod gamma^i u_j);
        # the bracket is invariant and tr o gamma = tr, so this is the orbit expansion
        p = self.p
        h = {}
        ts = {}
        y = self.orbit_product_poly(f)
        for v, c in f.terms():
            k = sum(v)
            h[(k,)] = h.get((k,), 0) + c
            q = burnside_norm_coeff(c, p)
            if q:
                key = (k,) * p
                ts[key] = ts.get(key, 0) + q
            y = y - self.bottom_ring.monomial((k,) * p, c**p)
        acc = {}
        for v, c in y.terms():
            key = tvec_canonical(v)
            acc[key] = acc.get(key, 0) + c
        for key, c in acc.items():
            qt, r = divmod(c, p)
            assert r == 0, "norm cross terms must be divisible by p"
            if qt:
                ts[key] = ts.get(key, 0) + qt
        return (self.phi_ring.from_terms(h), {k: c for k, c in ts.items() if c})

    def _phi(self, a):
        return a[0]

    def nu(self, f):
        n = self.phi_ring.var("n")
        return f.substitute({v: n for v in self.xvars}, self.phi_ring)

    def phi_lift(self, g):
        return self.top((g, {}))

    def restriction_kernel_gens(self):
        return [self.top((self.phi_ring.const(-self.p), {(0,) * self.p: 1}))]

    def t(self, *v):
        """The top element t_v."""
        if len(v) == 1 and isinstance(v[0], (tuple, list)):
            v = tuple(v[0])
        return self.top((self.phi_ring.zero, {tuple(v): 1}))

    def format_top(self, a):
        h, ts = a
        pieces = [(c, format_monomial(("n",), e)) for e, c in h.terms()]
        for v in sorted(ts, key=_tvec_sort_key, reverse=True):
            pieces.append((ts[v], f"t[{','.join(map(str, v))}]"))
        return format_terms(pieces)

    def top_symbol(self, name, index, pos):
        if name == "n" and index is None:
            return self.top((self.phi_ring.var("n"), {}))
        if name == "t":
            if index is None:
                index = [0] * self.p
            if len(index) != self.p:
                raise ParseError(f"t[...] needs {self.p} entries", pos)
            return self.t(tuple(index))
        return super().top_symbol(name, index, pos)

    def random_top(self, rng, bounds):
        h = random_poly(rng, self.phi_ring, bounds)
        ts = {}
        for _ in range(rng.randint(0, bounds.max_terms)):
            v = random_exponents(rng, self.p, bounds)
            ts[v] = ts.get(v, 0) + random_coeff(rng, bounds)
        return self.top((h, ts))


# ---------------------------------------------------------------- fixed point functors


class FixedPoint(TambaraFunctorCp):
    """FP(R): top R^{C_p}, bottom R, res the inclusion, tr/nm the orbit sum/product.

    Supported rings: ``cyclic`` (Z[x_0..x_{p-1}] permuted cyclically),
    ``trivial`` (Z/p with trivial action), ``swap`` (Z[x, y], p = 2).
    Phi is F_p[n] where n is the product of all variables (F_p for ``trivial``).
    """

    tag = "fixed-point"
    SPECS = ("cyclic", "trivial", "swap")

    def __init__(self, p, spec="cyclic"):
        super().__init__(p)
        if spec not in self.SPECS:
            raise LevelError(f"unsupported fixed-point ring {spec!r}; choose from {self.SPECS}")
        if spec == "swap" and p != 2:
            raise LevelError("the swap action on Z[x, y] needs p = 2")
        self.spec = spec
        if spec == "cyclic":
            self.bottom_ring = PolyRing(tuple(f"x{i}" for i in range(p)), ZZ)
            self._perms = [tuple((j + i) % p for j in range(p)) for i in range(p)]
        elif spec == "swap":
            self.bottom_ring = PolyRing(("x", "y"), ZZ)
            self._perms = [(0, 1), (1, 0)]
        else:
            self.bottom_ring = PolyRing((), GF(p))
            self._perms = [()] * p
        self.trivial_action = spec == "trivial"
        self.torsion_free_top = spec != "trivial"
        if spec == "trivial":
            self.phi_ring = self.bottom_ring
        else:
            self.phi_ring = PolyRing(("n",), GF(p))

    def key(self):
        return (self.tag, self.p, self.spec)

    def __str__(self):
        return f"{self.tag}[{self.spec}](p={self.p})"

    __repr__ = __str__

    def _conj(self, f, i):
        perm = self._perms[i % self.p]
        return f.permute_vars(perm) if perm else f

    def is_invariant(self, f):
        return all(self._conj(f, i) == f for i in range(1, self.p))

    def _top_normalize(self, f):
        if f.ring != self.bottom_ring:
            f = f.to_ring(self.bottom_ring)
        if not self.is_invariant(f):
            raise LevelError(f"{f} is not invariant, so it is not a top-level element")
        return f

    def _top_const(self, k):
        return self.bottom_ring.const(k)

    def _top_add(self, a, b):
        return a + b

    def _top_neg(self, a):
        return -a

    def _top_mul(self, a, b):
        return a * b

    def _res(self, a):
        return a

    def _tr(self, f):
        out = f
        for i in range(1, self.p):
            out = out + self._conj(f, i)
        return out

    def _nm(self, f):
        out = f
        for i in range(1, self.p):
            out = out * self._conj(f, i)
        return out

    def _phi(self, a):
        if self.spec == "trivial":
            return a
        terms = {}
        for e, c in a.terms():
            if len(set(e)) == 1:
                terms[(e[0],)] = c
        return self.phi_ring.from_terms(terms)

    def nu(self, f):
        if self.spec == "trivial":
            return f**self.p
        n = self.phi_ring.var("n")
        return f.substitute({v: n for v in self.bottom_ring.vars}, self.phi_ring)

    def phi_lift(self, g):
        if self.spec == "trivial":
            return self.top(g)
        prod = self.bottom_ring.one
        for v in self.bottom_ring.gens:
            prod = prod * v
        out = self.bottom_ring.zero
        for (k,), c in g.terms():
            out = out + prod**k * c
        return self.top(out)

    def restriction_kernel_gens(self):
        return []

    def format_top(self, a):
        return str(a)

    def parse(self, text, level):
        from ..polyalg import parse_poly

        f = parse_poly(text, self.bottom_ring)
        return self.bottom(f) if level == Level.BOTTOM else self.top(f)

    def random_top(self, rng, bounds):
        if self.spec == "trivial":
            return self.top(self.bottom_ring.const(rng.randrange(self.p)))
        out = self.bottom_ring.zero
        for _ in range(rng.randint(0, bounds.max_terms)):
            mono = self.bottom_ring.monomial(random_exponents(rng, len(self.bottom_ring.vars), bounds))
            orbit = {self._conj(mono, i) for i in range(self.p)}
            c = random_coeff(rng, bounds)
            for m in orbit:
                out = out + m * c
        return self.top(out)

    def describe(self):
        d = super().describe()
        d["ring"] = self.spec
        return d


CATALOG_TAGS = (
    "burnside",
    "free-fixed",
    "free-underlying",
    "ru",
    "modp-burnside",
    "fixed-point:cyclic",
    "fixed-point:trivial",
    "fixed-point:swap",
)


def make_functor(tag, p):
    """Build a catalog functor from its tag (see CATALOG_TAGS)."""
    tag = tag.lower()
    if tag in ("burnside", "a"):
        return Burnside(p)
    if tag in ("free-fixed", "freefixed"):
        return FreeFixed(p)
    if tag in ("free-underlying", "freeunderlying"):
        return FreeUnderlying(p)
    if tag == "ru":
        return RU(p)
    if tag in ("modp-burnside", "modpburnside", "modp"):
        return ModPBurnside(p)
    if tag.startswith("fixed-point"):
        spec = tag.split(":", 1)[1] if ":" in tag else "cyclic"
        return FixedPoint(p, spec)
    raise LevelError(f"unknown functor {tag!r}; choose from {', '.join(CATALOG_TAGS)}")


def catalog(p):
    """Every catalog functor that exists for the prime p."""
    out = [Burnside(p), FreeFixed(p), FreeUnderlying(p), RU(p), ModPBurnside(p)]
    out.append(FixedPoint(p, "cyclic"))
    out.append(FixedPoint(p, "trivial"))
    if p == 2:
        out.append(FixedPoint(p, "swap"))
    return out
