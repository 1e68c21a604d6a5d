"""Ghost primes, their pullbacks along the ghost map, and containment between them."""

from __future__ import annotations

import json
import re

from ..errors import LevelError, NotPrimeError, ParseError, UndecidedError
from ..polyalg import GF, ZZ, PolyRing, divides_over_Z, elim_intersection, irreducible_mod_q, parse_poly, ugcd
from ..tambara.catalog import RU, Burnside, FixedPoint, FreeFixed, FreeUnderlying, ModPBurnside
from ..tambara.functor import Level, LevelElement, phi, res
from .ideals import CpPrime, PolyPrime, diagonal_pull, rational_prime

TYPE1 = "type1"
TYPE2 = "type2"


def action_perms(T):
    """Variable permutations realizing gamma^i (i = 1..p-1) on the bottom ring."""
    perms = getattr(T, "_perms", None)
    if T.trivial_action or not perms:
        return []
    return [perms[i] for i in range(1, T.p)]


def phi_ring_vars(T):
    return T.phi_ring.vars


def phi_ring_name(T):
    if isinstance(T, RU):
        return "Z[xi]"
    if isinstance(T, (ModPBurnside,)) or (isinstance(T, FixedPoint) and T.spec == "trivial"):
        return f"F_{T.p}"
    if isinstance(T, FixedPoint):
        return f"F_{T.p}[n]"
    if not T.phi_ring.vars:
        return "Z"
    return f"Z[{','.join(T.phi_ring.vars)}]"


def phi_prime(T, char=0, gens=(), label=None, trusted=False):
    """A prime of Phi(T) as a PolyPrime in the Phi variables (RU adds the cyclotomic relation)."""
    gens = list(gens)
    if isinstance(T, RU):
        gens = _ru_phi_gens(T, char, gens)
    if isinstance(T, FixedPoint) or isinstance(T, ModPBurnside):
        if char not in (0, T.p):
            raise NotPrimeError(f"Phi({T}) has characteristic {T.p}")
        char = T.p
    return PolyPrime(phi_ring_vars(T), char, gens, label=label, trusted=trusted)


def _ru_phi_gens(T, char, gens):
    """Check that <char, gens, Phi_p> is a prime of Z[xi] and return its generators."""
    ring = T.phi_ring
    gens = [parse_poly(g, ring) if isinstance(g, str) else g.to_ring(ring) for g in gens]
    if not char:
        for g in gens:
            if not divides_over_Z(T.cyclotomic, g):
                raise NotPrimeError("nonzero primes of Z[xi] contain a rational prime")
        return [T.cyclotomic]
    fq = ring.with_domain(GF(char))
    d = T.cyclotomic.to_domain(GF(char))
    for g in gens:
        d = ugcd(d, g.to_domain(GF(char)))
    if d.is_constant() or not irreducible_mod_q(d.lift(), char):
        raise NotPrimeError(f"<{char}, {', '.join(map(str, gens))}> is not a prime of Z[xi]")
    return [d.to_ring(fq).lift()]


def bottom_prime(T, char=0, gens=(), label=None, trusted=False):
    """The C_p-prime of the bottom ring generated by the conjugates of a prime."""
    if isinstance(T, ModPBurnside) or (isinstance(T, FixedPoint) and T.spec == "trivial"):
        if char not in (0, T.p):
            raise NotPrimeError(f"the bottom ring of {T} has characteristic {T.p}")
        char = T.p
    pr = PolyPrime(T.bottom_ring.vars, char, gens, trusted=trusted)
    return CpPrime.from_prime(pr, action_perms(T), label=label)


def norm_preimage(T, b):
    """nm^{-1}(b): the contraction of a Phi-prime along the ring map nu: bottom -> Phi."""
    vars = T.bottom_ring.vars
    if isinstance(T, (Burnside, ModPBurnside)) or (isinstance(T, FixedPoint) and T.spec == "trivial"):
        pr = PolyPrime(vars, b.char, b.z_generators())
    elif isinstance(T, RU):
        pr = rational_prime(b.char)
    elif isinstance(T, FreeFixed):
        pr = _contract_x_to_n(b)
    elif isinstance(T, FreeUnderlying) or isinstance(T, FixedPoint):
        pr = diagonal_pull(b, T.p, vars)
    else:
        raise LevelError(f"no norm preimage rule for {T}")
    return CpPrime([pr])


def _contract_x_to_n(b):
    """{f(x) : f(n) in b} for a prime b of Z[x, n]: eliminate x, rename n to x."""
    xring = PolyRing(("x",), ZZ)
    if b.basis.gens:
        kept = elim_intersection(b.basis, "n")
    else:
        kept = []
    gens = []
    for g in kept:
        g = g.lift() if b.char else g.clear_denominators()
        gens.append(g.substitute({"n": xring.var("x")}, xring))
    return PolyPrime(("x",), b.char, gens)


def _short(pr):
    """Compact text for a prime: rational primes of Z print as the integer."""
    if isinstance(pr, CpPrime) and len(pr.components) == 1:
        pr = pr.components[0]
    if isinstance(pr, PolyPrime) and not pr.vars:
        return str(pr.char)
    return str(pr)


def _phi_short(T, b):
    if isinstance(T, RU):
        # the zero prime and the inert primes <q> of Z[xi] print as the integer
        gens = b.canonical_gens()
        if not b.char or (len(gens) == 2 and gens[1].degree() == T.p - 1):
            return str(b.char)
    return _short(b)


class GhostPrime:
    """A prime of ghost(T): Type1 (a; Phi) or Type2 (nm^{-1} b; b)."""

    def __init__(self, T, kind, a=None, b=None, name=None):
        self.T = T
        self.kind = kind
        if kind == TYPE1:
            if a is None or b is not None:
                raise NotPrimeError("a Type1 ghost prime takes exactly a bottom C_p-prime a")
            self.a = a if isinstance(a, CpPrime) else CpPrime.from_prime(a, action_perms(T))
            self.b = None
        elif kind == TYPE2:
            if b is None:
                raise NotPrimeError("a Type2 ghost prime takes a Phi-prime b")
            self.b = b
            derived = norm_preimage(T, b)
            if a is not None and not derived.equals(a if isinstance(a, CpPrime) else CpPrime([a])):
                raise NotPrimeError("(a; b) is prime only when a = nm^{-1}(b) or b is everything")
            self.a = derived
        else:
            raise NotPrimeError(f"unknown ghost prime kind {kind!r}")
        self.name = name

    @property
    def label(self):
        if self.kind == TYPE1:
            return f"({_short(self.a)};{phi_ring_name(self.T)})"
        return f"({_short(self.a)};{_phi_short(self.T, self.b)})"

    def __str__(self):
        return self.name or self.label

    __repr__ = __str__

    def to_json(self):
        out = {"functor": self.T.tag, "p": self.T.p, "kind": self.kind}
        if self.kind == TYPE1:
            comps = self.a.components
            out["a"] = {"char": comps[0].char, "gens": [str(g) for g in comps[0].canonical_gens()]}
            if len(comps) > 1:
                out["a"]["conjugates"] = len(comps)
        else:
            out["b"] = {"char": self.b.char, "gens": [str(g) for g in self.b.canonical_gens()]}
            out["a"] = {"char": self.a.char, "gens": [str(g) for g in self.a.components[0].canonical_gens()]}
        return out


def ghost_prime(T, kind, char=0, gens=(), name=None, trusted=False):
    """Build a ghost prime from a characteristic and generators (bottom for Type1, Phi for Type2)."""
    if kind == TYPE1:
        return GhostPrime(T, TYPE1, a=bottom_prime(T, char, gens, trusted=trusted), name=name)
    return GhostPrime(T, TYPE2, b=phi_prime(T, char, gens, trusted=trusted), name=name)


class TambaraPrime:
    """The pullback of a ghost prime: levelwise membership oracles."""

    def __init__(self, source):
        self.source = source
        self.T = source.T

    @property
    def label(self):
        return str(self.source)

    def __str__(self):
        return self.label

    __repr__ = __str__

    def bottom_member(self, f):
        if isinstance(f, LevelElement):
            f = f.payload
        return self.source.a.member(f)

    def top_member(self, z):
        T = self.T
        if not self.source.a.member(res(T, z).payload):
            return False
        if self.source.kind == TYPE2:
            return self.source.b.member(T.phi_reduce(phi(T, z)))
        return True

    def member(self, z):
        if z.functor != self.T:
            raise LevelError(f"element of {z.functor} tested against a prime of {self.T}")
        return self.bottom_member(z) if z.level == Level.BOTTOM else self.top_member(z)

    def to_json(self):
        return self.source.to_json()


def pullback(gp):
    return TambaraPrime(gp)


# ---------------------------------------------------------------- containment


LE = "LE"
NOT_LE = "NOT-LE"
UNKNOWN = "UNKNOWN"


class Containment:
    def __init__(self, status, witness=None, reason=""):
        self.status = status
        self.witness = witness
        self.reason = reason

    def __bool__(self):
        return self.status == LE

    def __repr__(self):
        w = f" witness={self.witness}" if self.witness is not None else ""
        return f"<{self.status}{w}>"

    def to_json(self):
        out = {"status": self.status, "reason": self.reason}
        if self.witness is not None:
            out["witness"] = str(self.witness)
            out["witness_level"] = self.witness.level.value
        return out


def kernel_phi_images(T):
    """Pairs (k, phi(k)) for top generators k of ker(res) whose Phi-images generate phi(ker res)."""
    return [(k, T.phi_reduce(phi(T, k))) for k in T.restriction_kernel_gens()]


def contains(P1, P2):
    """Decide P1 <= P2 for pullbacks of ghost primes of the same functor.

    The rules hold for every catalog functor:
      (a; Phi) <= (a'; Phi)       iff a <= a'
      (nm^-1 b; b) <= (a'; Phi)   iff nm^-1 b <= a'
      (a; Phi) <= (nm^-1 b'; b')  iff phi(ker res) <= b' and a <= nm^-1 b'
      (nm^-1 b; b) <= (nm^-1 b'; b')
          if b <= b'; otherwise, when phi(ker res) <= b' the right side equals
          (nm^-1 b'; Phi) and the Type2 <= Type1 rule applies; otherwise a
          witness k * lift(g) with k in ker res, g in b - b' separates them.
    NOT-LE answers carry a witness in P1 but not in P2, verified before return.
    """
    if P1.T != P2.T:
        raise LevelError(f"cannot compare primes of {P1.T} and {P2.T}")
    T = P1.T
    g1, g2 = P1.source, P2.source
    try:
        out = _decide(T, g1, g2)
    except UndecidedError as exc:
        return Containment(UNKNOWN, reason=str(exc))
    if out.status == NOT_LE:
        w = out.witness
        if not (P1.member(w) and not P2.member(w)):
            raise AssertionError(f"invalid containment witness {w} for {P1} vs {P2}")
    return out


def _bottom_witness(T, w):
    return T.bottom(w)


def _decide(T, g1, g2):
    if g2.kind == TYPE1:
        ok, w = g1.a.subset(g2.a)
        if ok:
            return Containment(LE, reason="bottom ideals nested")
        return Containment(NOT_LE, _bottom_witness(T, w), "bottom ideal not contained")
    if g1.kind == TYPE1:
        for k, pk in kernel_phi_images(T):
            if not g2.b.member(pk):
                return Containment(NOT_LE, k, "restriction-kernel element survives in Phi")
        ok, w = g1.a.subset(g2.a)
        if ok:
            return Containment(LE, reason="phi(ker res) in b' and a in nm^-1 b'")
        return Containment(NOT_LE, _bottom_witness(T, w), "a not inside nm^-1 b'")
    ok, g = g1.b.subset(g2.b)
    if ok:
        return Containment(LE, reason="Phi ideals nested")
    bad = [(k, pk) for k, pk in kernel_phi_images(T) if not g2.b.member(pk)]
    if not bad:
        ok, w = g1.a.subset(g2.a)
        if ok:
            return Containment(LE, reason="right side coincides with a Type1 prime")
        return Containment(NOT_LE, _bottom_witness(T, w), "nm^-1 b not inside nm^-1 b'")
    lift = T.phi_lift(g.to_ring(T.phi_ring))
    if g1.a.member(res(T, lift).payload):
        return Containment(NOT_LE, lift, "a lift of b - b'")
    k, _ = bad[0]
    return Containment(NOT_LE, k * lift, "ker(res) times a lift of b - b'")


def compare(P1, P2):
    """EQUAL, LE, GE, INCOMPARABLE, or UNKNOWN, with the two directed results."""
    a = contains(P1, P2)
    b = contains(P2, P1)
    if UNKNOWN in (a.status, b.status):
        return UNKNOWN, a, b
    if a and b:
        return "EQUAL", a, b
    if a:
        return LE, a, b
    if b:
        return "GE", a, b
    return "INCOMPARABLE", a, b


# ---------------------------------------------------------------- text / JSON input


_BRACKET = re.compile(r"^\s*<\s*(type1|type2)\s+([ab])\s*=\s*\[(.*)\]\s*>\s*$", re.IGNORECASE)


def _split_top_level(text):
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
            continue
        depth += ch == "("
        depth -= ch == ")"
        cur.append(ch)
    if "".join(cur).strip():
        parts.append("".join(cur))
    return [s.strip() for s in parts if s.strip()]


def _gens_and_char(T, ring_vars, exprs):
    ring = PolyRing(ring_vars, ZZ)
    gens, char = [], 0
    for e in exprs:
        e = re.sub(r"\bp\b", str(T.p), e)
        g = parse_poly(e, ring)
        if g.is_constant():
            c = abs(g.constant_coeff())
            if c == 0:
                continue
            if char and char != c:
                raise NotPrimeError(f"two different rational primes {char} and {c} in one prime")
            char = c
            continue
        gens.append(g)
    return char, gens


def parse_ghost_prime(T, text):
    """Read '<type1 a=[...]>', '<type2 b=[...]>' or the JSON encoding."""
    text = text.strip()
    if text.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad prime JSON: {exc.msg}", exc.pos) from None
        kind = data.get("kind")
        side = "a" if kind == TYPE1 else "b"
        spec = data.get(side) or {}
        char = int(spec.get("char", 0))
        exprs = [str(g) for g in spec.get("gens", [])]
        if char:
            exprs.append(str(char))
    else:
        m = _BRACKET.match(text)
        if not m:
            raise ParseError("expected '<type1 a=[...]>', '<type2 b=[...]>' or prime JSON", 0, text)
        kind, side, body = m.group(1).lower(), m.group(2), m.group(3)
        if (kind == TYPE1) != (side == "a"):
            raise ParseError("type1 primes take a=[...], type2 primes take b=[...]", 0, text)
        exprs = _split_top_level(body)
    vars = T.bottom_ring.vars if kind == TYPE1 else phi_ring_vars(T)
    char, gens = _gens_and_char(T, vars, exprs)
    return ghost_prime(T, kind, char, gens, trusted=True)
