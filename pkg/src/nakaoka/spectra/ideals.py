"""Prime ideals of polynomial rings over Z with decidable membership.

A prime of Z[vars] meets Z in <q> or in 0.  In the first case everything
happens in F_q[vars]; in the second, membership is tested over Q, which is
exact because such a prime equals its extension to Q[vars] contracted back
to Z[vars].
"""

from __future__ import annotations

from ..errors import NotPrimeError, UndecidedError
from ..polyalg import GF, QQ, ZZ, GroebnerBasis, MultiPoly, PolyRing, groebner, parse_poly
from ..polyalg.univariate import divides_over_Z, irreducible_mod_q, is_prime, udivmod


def _as_poly(g, ring):
    if isinstance(g, int):
        return ring.const(g)
    if isinstance(g, str):
        return parse_poly(g, ring)
    if g.ring.vars == ring.vars and g.domain == ring.domain:
        return g
    if g.domain.kind == "F":
        g = g.lift()
    if g.domain.kind == "Q":
        g = g.clear_denominators()
    return g.to_ring(ring)


def _bracket(items):
    return "<" + ", ".join(items) + ">"


class PolyPrime:
    """A prime ideal of Z[vars] given by generators, with a Gröbner basis oracle.

    ``char`` is q when the prime contains the rational prime q, else 0.
    ``zgens`` is a generator list over Z when one is known; subset tests of a
    characteristic-0 prime inside a characteristic-q prime need it.
    ``trusted`` records that primality was not certified (user input).
    """

    def __init__(self, vars, char=0, gens=(), label=None, zgens_known=True, trusted=False, cap=None):
        self.vars = tuple(vars)
        self.char = char
        if char and not is_prime(char):
            raise NotPrimeError(f"characteristic {char} is not a prime")
        self.zring = PolyRing(self.vars, ZZ)
        self.fring = PolyRing(self.vars, GF(char) if char else QQ)
        zg = [_as_poly(g, self.zring) for g in gens]
        fg = [g.to_domain(self.fring.domain) for g in zg]
        fg = [g for g in fg if not g.is_zero()]
        if fg:
            self.basis = groebner(fg, ring=self.fring, cap=cap)
        else:
            self.basis = GroebnerBasis(self.fring, [])
        if self.basis.is_unit() or (char == 0 and any(g.is_constant() and not g.is_zero() for g in zg)):
            raise NotPrimeError(f"generators {[str(g) for g in zg]} give the unit ideal")
        self.zgens = [g for g in zg if not g.is_zero()] if zgens_known else None
        self.trusted = trusted
        self.label = label

    # generators -------------------------------------------------------
    def canonical_gens(self):
        """Canonical Z-polynomials generating the prime (over Q in characteristic 0)."""
        if self.char:
            return [self.zring.const(self.char)] + [g.lift() for g in self.basis]
        return [g.clear_denominators() for g in self.basis]

    def z_generators(self):
        """Z-generators, or UndecidedError when only a Q-basis is known."""
        if self.char:
            return [self.zring.const(self.char)] + [g.lift() for g in self.basis]
        if self.zgens is None:
            raise UndecidedError(f"{self} has no known generator list over Z")
        return list(self.zgens)

    def key(self):
        return (self.vars, self.char, tuple(self.basis.gens))

    def __eq__(self, other):
        return isinstance(other, PolyPrime) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __str__(self):
        if self.label:
            return self.label
        gens = self.canonical_gens()
        if not gens:
            return "<0>"
        return _bracket([str(g) for g in gens])

    __repr__ = __str__

    def to_json(self):
        return {"char": self.char, "gens": [str(g) for g in self.canonical_gens()], "vars": list(self.vars)}

    # membership -------------------------------------------------------
    def member(self, f):
        if isinstance(f, int):
            f = self.zring.const(f)
        if f.ring.vars != self.vars:
            f = _as_poly(f, self.zring)
        if f.domain.kind == "F" and f.domain.q != self.char:
            f = f.lift()
        return self.basis.contains(f.to_domain(self.fring.domain))

    def __contains__(self, f):
        return self.member(f)

    def subset(self, other):
        """(True, None) if self is inside other, else (False, witness in self - other).

        Raises UndecidedError when a characteristic-0 prime without Z-generators
        is compared with a characteristic-q prime.
        """
        if self.vars != other.vars:
            raise NotPrimeError("primes live in different rings")
        if self.char and other.char != self.char:
            return False, self.zring.const(self.char)
        if self.char == 0 and other.char:
            gens = self.z_generators()
        elif self.char == 0:
            # a Q-basis suffices: d*h in <basis> and d is not in a char-0 prime
            gens = self.canonical_gens()
        else:
            gens = self.z_generators()
        for g in gens:
            if not other.member(g):
                return False, g
        return True, None

    def equals(self, other):
        return self.subset(other)[0] and other.subset(self)[0]

    def permuted(self, perm, label=None):
        """Image under the variable permutation x_j -> x_{perm[j]}."""
        gens = self.zgens if self.zgens is not None else self.canonical_gens()
        return PolyPrime(
            self.vars,
            self.char,
            [g.permute_vars(perm) for g in gens],
            label=label,
            zgens_known=self.zgens is not None or self.char != 0,
            trusted=self.trusted,
        )

    def __add__(self, extra):
        """Ideal generated by self and extra generators (caller asserts primality)."""
        gens = list(self.z_generators()) + [_as_poly(g, self.zring) for g in extra]
        return PolyPrime(self.vars, self.char, gens, zgens_known=True, trusted=self.trusted)


def zero_prime(vars=()):
    return PolyPrime(vars, 0, [], label="<0>")


def rational_prime(q, vars=()):
    """<q> in Z[vars] (for vars=() this is the prime (q) of Z)."""
    if q == 0:
        return zero_prime(vars)
    return PolyPrime(vars, q, [], label=f"<{q}>")


# ---------------------------------------------------------------- univariate shapes


def irreducible_over_Q(f):
    """Irreducibility of a primitive univariate f over Q, certified at desk scale.

    Degree 1 is irreducible; degrees 2 and 3 use the rational root test; higher
    degrees look for a prime q (not dividing the leading coefficient) with f
    irreducible mod q.  Raises UndecidedError when no certificate is found.
    """
    d = f.total_degree()
    if d <= 0:
        return False
    if d == 1:
        return f.content() == 1
    if f.content() != 1:
        return False
    var = f.vars[0]
    coeffs = {e[0]: c for e, c in f.terms()}
    lead, const = coeffs[d], coeffs.get(0, 0)
    if const == 0:
        return False
    if d <= 3:
        return not _has_rational_root(coeffs, lead, const)
    if _has_rational_root(coeffs, lead, const):
        return False
    for q in range(2, 100):
        if is_prime(q) and lead % q:
            if irreducible_mod_q(f, q):
                return True
    raise UndecidedError(f"cannot certify irreducibility of {f} over Q in {var}")


def _divisors(n):
    n = abs(n)
    return [k for k in range(1, n + 1) if n % k == 0]


def _has_rational_root(coeffs, lead, const):
    from fractions import Fraction

    for a in _divisors(const):
        for b in _divisors(lead):
            for r in (Fraction(a, b), Fraction(-a, b)):
                if sum(c * r**e for e, c in coeffs.items()) == 0:
                    return True
    return False


class SymbolicPrime1V:
    """A prime of Z[v] in one of the shapes Zero, P(q), Irr(f), Max(q, f)."""

    SHAPES = ("zero", "p", "irr", "max")

    def __init__(self, var, shape, q=None, f=None, validate=True):
        self.var = var
        self.shape = shape
        self.ring = PolyRing((var,), ZZ)
        self.q = q
        self.f = _as_poly(f, self.ring) if f is not None else None
        if shape not in self.SHAPES:
            raise NotPrimeError(f"unknown prime shape {shape!r}")
        if validate:
            self._validate()

    def _validate(self):
        s = self.shape
        if s in ("p", "max") and (self.q is None or not is_prime(self.q)):
            raise NotPrimeError(f"shape {s} needs a prime q, got {self.q}")
        if s in ("irr", "max") and (self.f is None or self.f.total_degree() < 1):
            raise NotPrimeError(f"shape {s} needs a nonconstant polynomial")
        if s == "irr":
            if self.f.content() != 1:
                raise NotPrimeError(f"{self.f} is not primitive")
            if not irreducible_over_Q(self.f):
                raise NotPrimeError(f"{self.f} is reducible over Q")
        if s == "max":
            if self.f.leading_coeff() != 1:
                raise NotPrimeError(f"{self.f} is not monic")
            if not irreducible_mod_q(self.f, self.q):
                raise NotPrimeError(f"{self.f} is reducible mod {self.q}")

    @classmethod
    def zero(cls, var):
        return cls(var, "zero")

    @classmethod
    def P(cls, var, q):
        return cls(var, "p", q=q)

    @classmethod
    def Irr(cls, var, f):
        return cls(var, "irr", f=f)

    @classmethod
    def Max(cls, var, q, f):
        return cls(var, "max", q=q, f=f)

    def __str__(self):
        if self.shape == "zero":
            return "<0>"
        if self.shape == "p":
            return f"<{self.q}>"
        if self.shape == "irr":
            return f"<{self.f}>"
        return f"<{self.q}, {self.f}>"

    __repr__ = __str__

    def to_json(self):
        out = {"shape": self.shape, "var": self.var}
        if self.q is not None:
            out["q"] = self.q
        if self.f is not None:
            out["f"] = str(self.f)
        return out

    def gens(self):
        if self.shape == "zero":
            return []
        if self.shape == "p":
            return [self.ring.const(self.q)]
        if self.shape == "irr":
            return [self.f]
        return [self.ring.const(self.q), self.f]

    def as_poly_prime(self, vars=None, rename=None):
        """The same prime as a PolyPrime, optionally embedded in Z[vars] with var renamed."""
        vars = tuple(vars) if vars is not None else (self.var,)
        gens = self.gens()
        if rename:
            target = PolyRing((rename,), ZZ)
            gens = [g.substitute({self.var: target.var(rename)}, target) for g in gens]
        char = self.q if self.shape in ("p", "max") else 0
        return PolyPrime(vars, char, gens, label=None)


def member_symbolic(g, pr):
    """Membership of a univariate integer polynomial in a symbolic prime, without Gröbner bases."""
    g = _as_poly(g, pr.ring)
    if pr.shape == "zero":
        return g.is_zero()
    if pr.shape == "p":
        return all(c % pr.q == 0 for _, c in g.terms())
    if pr.shape == "irr":
        return divides_over_Z(pr.f, g)
    rem = udivmod(g.to_domain(GF(pr.q)), pr.f.to_domain(GF(pr.q)))[1]
    return rem.is_zero()


# ---------------------------------------------------------------- C_p-primes of a bottom ring


class CpPrime:
    """A C_p-prime of a bottom ring: the intersection of the conjugates of a prime.

    ``components`` holds the distinct conjugates.  Trivial actions give a
    single component.
    """

    def __init__(self, components, label=None):
        comps = []
        for c in components:
            if not any(c.equals(d) for d in comps):
                comps.append(c)
        self.components = tuple(comps)
        self.vars = comps[0].vars
        self.label = label

    @classmethod
    def from_prime(cls, prime, perms=None, label=None):
        """The orbit intersection of prime under the given variable permutations."""
        comps = [prime]
        for perm in perms or ():
            comps.append(prime.permuted(perm))
        return cls(comps, label=label)

    @property
    def char(self):
        return self.components[0].char

    def is_prime_ideal(self):
        return len(self.components) == 1

    def member(self, f):
        return all(c.member(f) for c in self.components)

    def subset(self, other):
        """Containment of intersections: every component of other contains some component of self."""
        for target in other.components:
            witnesses = []
            for c in self.components:
                ok, w = c.subset(target)
                if ok:
                    break
                witnesses.append(w)
            else:
                w = witnesses[0]
                for extra in witnesses[1:]:
                    w = w * extra
                return False, w
        return True, None

    def equals(self, other):
        return self.subset(other)[0] and other.subset(self)[0]

    def __str__(self):
        if self.label:
            return self.label
        return " & ".join(str(c) for c in self.components)

    __repr__ = __str__

    def to_json(self):
        return {"components": [c.to_json() for c in self.components]}


def epsilon_gens(p, ring):
    """Generators x_i - x_{i+1} of the diagonal ideal epsilon in Z[x_0..x_{p-1}]."""
    xs = ring.gens
    return [xs[i] - xs[i + 1] for i in range(p - 1)]


def diagonal_pull(pr, p, xvars):
    """Preimage of a prime of Z[x] (or Z[n]) under x_i -> x: pr(x_0) + epsilon."""
    ring = PolyRing(tuple(xvars), ZZ)
    src = pr if isinstance(pr, PolyPrime) else pr.as_poly_prime()
    (v,) = src.vars
    x0 = ring.var(xvars[0])
    gens = [g.substitute({v: x0}, ring) for g in src.z_generators()]
    return PolyPrime(ring.vars, src.char, gens + epsilon_gens(p, ring), zgens_known=src.zgens is not None or src.char != 0)
