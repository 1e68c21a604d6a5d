"""Two-level C_p-Tambara functors (Lewis diagrams) and their elements."""

from __future__ import annotations

from enum import Enum

from ..errors import LevelError, ParseError
from ..polyalg import parse_expression
from ..polyalg.univariate import is_prime


class Level(Enum):
    BOTTOM = "bottom"
    TOP = "top"

    @classmethod
    def parse(cls, name):
        name = name.lower()
        if name in ("bottom", "e", "underlying"):
            return cls.BOTTOM
        if name in ("top", "g", "fixed"):
            return cls.TOP
        raise LevelError(f"unknown level {name!r}")


class LevelElement:
    """An element of one level of a Tambara functor, stored in normal form."""

    __slots__ = ("functor", "level", "payload")

    def __init__(self, functor, level, payload):
        self.functor = functor
        self.level = level
        self.payload = payload

    def _partner(self, other):
        if isinstance(other, LevelElement):
            if other.functor != self.functor:
                raise LevelError(f"cannot combine elements of {self.functor} and {other.functor}")
            if other.level != self.level:
                raise LevelError("cannot combine elements of different levels")
            return other
        if isinstance(other, int):
            return self.functor.const(self.level, other)
        return NotImplemented

    def __add__(self, other):
        other = self._partner(other)
        if other is NotImplemented:
            return other
        return self.functor._wrap(self.level, self.functor._add(self.level, self.payload, other.payload))

    __radd__ = __add__

    def __neg__(self):
        return self.functor._wrap(self.level, self.functor._neg(self.level, self.payload))

    def __sub__(self, other):
        other = self._partner(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._partner(other)
        if other is NotImplemented:
            return other
        return self.functor._wrap(self.level, self.functor._mul(self.level, self.payload, other.payload))

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise LevelError("exponent must be a nonnegative integer")
        result = self.functor.const(self.level, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def is_zero(self):
        return self == self.functor.const(self.level, 0)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.functor.const(self.level, other)
        if not isinstance(other, LevelElement):
            return NotImplemented
        return (
            self.functor == other.functor
            and self.level == other.level
            and self.functor._payload_eq(self.level, self.payload, other.payload)
        )

    def __hash__(self):
        return hash((self.functor, self.level, self.functor._payload_key(self.level, self.payload)))

    def __str__(self):
        return self.functor.format(self.level, self.payload)

    def __repr__(self):
        return f"<{self.functor} {self.level.value}: {self}>"

    def to_json(self):
        return {"level": self.level.value, "value": str(self)}


class TambaraFunctorCp:
    """Base class: the catalog entries override the payload-level hooks.

    Bottom payloads are MultiPolys in ``bottom_ring``; top payloads are
    catalog specific.  Phi-elements (geometric fixed points) are MultiPolys
    in ``phi_ring``.
    """

    tag = "abstract"
    bottom_ring = None
    phi_ring = None
    trivial_action = True
    torsion_free_top = True

    def __init__(self, p):
        if not isinstance(p, int) or not is_prime(p):
            raise LevelError(f"p must be prime, got {p!r}")
        self.p = p

    # identity
    def key(self):
        return (self.tag, self.p)

    def __eq__(self, other):
        return isinstance(other, TambaraFunctorCp) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __str__(self):
        return f"{self.tag}(p={self.p})"

    __repr__ = __str__

    # element construction
    def _wrap(self, level, payload):
        return LevelElement(self, level, payload)

    def bottom(self, f):
        """Wrap a bottom-level value (MultiPoly, int or text)."""
        if isinstance(f, str):
            return self.parse(f, Level.BOTTOM)
        if isinstance(f, int):
            return self.const(Level.BOTTOM, f)
        if f.ring != self.bottom_ring:
            f = f.to_ring(self.bottom_ring)
        return self._wrap(Level.BOTTOM, f)

    def top(self, payload):
        if isinstance(payload, str):
            return self.parse(payload, Level.TOP)
        if isinstance(payload, int):
            return self.const(Level.TOP, payload)
        return self._wrap(Level.TOP, self._top_normalize(payload))

    def const(self, level, k):
        if level == Level.BOTTOM:
            return self._wrap(level, self.bottom_ring.const(k))
        return self._wrap(level, self._top_const(k))

    def zero(self, level):
        return self.const(level, 0)

    def one(self, level):
        return self.const(level, 1)

    # level dispatch for ring operations
    def _add(self, level, a, b):
        return a + b if level == Level.BOTTOM else self._top_add(a, b)

    def _neg(self, level, a):
        return -a if level == Level.BOTTOM else self._top_neg(a)

    def _mul(self, level, a, b):
        return a * b if level == Level.BOTTOM else self._top_mul(a, b)

    def _payload_eq(self, level, a, b):
        return a == b

    def _payload_key(self, level, a):
        return a

    def _top_normalize(self, payload):
        return payload

    # hooks every catalog entry implements
    def _top_const(self, k):
        raise NotImplementedError

    def _top_add(self, a, b):
        raise NotImplementedError

    def _top_neg(self, a):
        raise NotImplementedError

    def _top_mul(self, a, b):
        raise NotImplementedError

    def _res(self, a):
        raise NotImplementedError

    def _tr(self, f):
        raise NotImplementedError

    def _nm(self, f):
        raise NotImplementedError

    def _conj(self, f, i):
        return f

    def _phi(self, a):
        raise NotImplementedError

    def nu(self, f):
        """The norm followed by the quotient to Phi, as a ring map on bottoms."""
        raise NotImplementedError

    def phi_reduce(self, g):
        return g

    def phi_lift(self, g):
        """A top element whose Phi-image is g."""
        raise NotImplementedError

    def restriction_kernel_gens(self):
        """Top elements with zero restriction whose Phi-images generate phi(ker res)."""
        raise NotImplementedError

    def format_top(self, a):
        raise NotImplementedError

    def top_symbol(self, name, index, pos):
        raise ParseError(f"unknown symbol {name!r} for {self}", pos)

    def bottom_symbol(self, name, index, pos):
        if index is None and name in self.bottom_ring.vars:
            return self.bottom(self.bottom_ring.var(name))
        raise ParseError(f"unknown symbol {name!r} at the bottom level of {self}", pos)

    def random_bottom(self, rng, bounds):
        from .sampling import random_poly

        return self.bottom(random_poly(rng, self.bottom_ring, bounds))

    def random_top(self, rng, bounds):
        raise NotImplementedError

    # formatting and parsing
    def format(self, level, payload):
        if level == Level.BOTTOM:
            return str(payload)
        return self.format_top(payload)

    def parse(self, text, level):
        return parse_expression(text, _ElementContext(self, level))

    def bottom_poly(self, z):
        """The bottom payload as a MultiPoly (identity hook for membership tests)."""
        return z.payload

    def describe(self):
        return {
            "functor": self.tag,
            "p": self.p,
            "bottom": str(self.bottom_ring),
            "phi": str(self.phi_ring),
        }


class _ElementContext:
    def __init__(self, functor, level):
        self.functor = functor
        self.level = level

    def const(self, c):
        return self.functor.const(self.level, c)

    def symbol(self, name, index, pos):
        if self.level == Level.BOTTOM:
            return self.functor.bottom_symbol(name, index, pos)
        return self.functor.top_symbol(name, index, pos)


def _require(T, z, level, op):
    if not isinstance(z, LevelElement):
        raise LevelError(f"{op} expects a LevelElement")
    if z.functor != T:
        raise LevelError(f"{op}: element belongs to {z.functor}, not {T}")
    if z.level != level:
        raise LevelError(f"{op} needs a {level.value}-level element, got {z.level.value}")


def res(T, z):
    _require(T, z, Level.TOP, "res")
    return T._wrap(Level.BOTTOM, T._res(z.payload))


def tr(T, z):
    _require(T, z, Level.BOTTOM, "tr")
    return T._wrap(Level.TOP, T._tr(z.payload))


def nm(T, z):
    _require(T, z, Level.BOTTOM, "nm")
    return T._wrap(Level.TOP, T._nm(z.payload))


def conj(T, z, i=1):
    _require(T, z, Level.BOTTOM, "conj")
    i %= T.p
    if i == 0:
        return z
    return T._wrap(Level.BOTTOM, T._conj(z.payload, i))


def add(T, a, b):
    _require(T, a, a.level, "add")
    return a + b


def mul(T, a, b):
    _require(T, a, a.level, "mul")
    return a * b


def phi(T, z):
    _require(T, z, Level.TOP, "phi")
    return T._phi(z.payload)


def orbit_sum(T, z):
    """Sum of the conjugates of a bottom element."""
    out = z
    for i in range(1, T.p):
        out = out + conj(T, z, i)
    return out


def orbit_product(T, z):
    """Product of the conjugates of a bottom element."""
    out = z
    for i in range(1, T.p):
        out = out * conj(T, z, i)
    return out


__all__ = [
    "Level",
    "LevelElement",
    "TambaraFunctorCp",
    "add",
    "conj",
    "mul",
    "nm",
    "orbit_product",
    "orbit_sum",
    "phi",
    "res",
    "tr",
]
