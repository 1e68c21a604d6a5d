"""Univariate helpers: division, gcd, irreducibility mod q, cyclotomic splitting."""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from ..errors import DomainError
from .poly import GF, QQ, ZZ, MultiPoly, PolyRing


def _check_univariate(f):
    if len(f.vars) != 1:
        raise DomainError(f"expected a univariate polynomial, got ring {f.ring}")


def coeff_list(f):
    """Coefficients [c_0, c_1, ..., c_d] of a univariate polynomial."""
    _check_univariate(f)
    d = f.degree()
    out = [0] * (d + 1)
    for (e,), c in f.terms():
        out[e] = c
    return out


def from_coeffs(ring, coeffs):
    return ring.from_terms({(i,): c for i, c in enumerate(coeffs) if c})


def udivmod(f, g):
    """Quotient and remainder; g must be monic unless the domain is a field."""
    _check_univariate(f)
    if g.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    dom = f.domain
    a = coeff_list(f)
    b = coeff_list(g)
    db = len(b) - 1
    lc = b[-1]
    if dom.kind == "Z":
        if lc not in (1, -1):
            raise DomainError("integer division needs a monic divisor")
        inv = lc
    elif dom.kind == "Q":
        inv = Fraction(1) / lc
    else:
        inv = pow(lc, -1, dom.q)
    quo = [0] * max(len(a) - db, 1)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if dom.kind == "F":
            c %= dom.q
        if not c:
            continue
        m = c * inv
        if dom.kind == "F":
            m %= dom.q
        quo[i - db] = m
        for j, bc in enumerate(b):
            a[i - db + j] -= m * bc
    if dom.kind == "F":
        a = [c % dom.q for c in a]
    return from_coeffs(f.ring, quo), from_coeffs(f.ring, a[:db] if db else [])


def ugcd(f, g):
    """Monic gcd over a field."""
    if not f.domain.is_field:
        raise DomainError("gcd needs a field")
    while not g.is_zero():
        f, g = g, udivmod(f, g)[1]
    return f.monic() if not f.is_zero() else f


def divides_over_Z(f, g):
    """True iff g lies in the principal ideal (f) of Z[x].

    By Gauss's lemma, f = c * f0 with f0 primitive divides g exactly when f0
    divides g over Q and c divides the content of g.
    """
    _check_univariate(f)
    if f.is_zero():
        raise DomainError("f must be nonzero")
    if g.is_zero():
        return True
    c = f.content()
    f0 = f.primitive()
    r = udivmod(g.to_domain(QQ), f0.to_domain(QQ))[1]
    if not r.is_zero():
        return False
    return g.content() % c == 0


def _monic_polys(ring, degree, q):
    for tail in product(range(q), repeat=degree):
        yield from_coeffs(ring, list(tail) + [1])


def irreducible_mod_q(f, q):
    """Irreducibility of f mod q by trial division (desk scale only)."""
    _check_univariate(f)
    fq = f.to_domain(GF(q))
    if fq.is_zero():
        raise DomainError(f"{f} vanishes mod {q}")
    d = fq.degree()
    if d <= 0:
        return False
    if d == 1:
        return True
    for k in range(1, d // 2 + 1):
        for g in _monic_polys(fq.ring, k, q):
            if udivmod(fq, g)[1].is_zero():
                return False
    return True


def is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def multiplicative_order(q, p):
    """Least f >= 1 with q^f = 1 mod p, together with e = (p - 1) / f."""
    if q % p == 0:
        raise DomainError(f"q = {q} is the ramified prime; no multiplicative order")
    f, acc = 1, q % p
    while acc != 1:
        acc = acc * q % p
        f += 1
    return f, (p - 1) // f


def cyclotomic(p, ring):
    """Phi_p = 1 + x + ... + x^(p-1) in the given univariate ring."""
    return from_coeffs(ring, [1] * p)


def factor_cyclotomic_mod_q(p, q, ring):
    """Monic irreducible factors of Phi_p mod q, as integer polynomials.

    For q = p the factorization is (x - 1)^(p-1); the single factor x - 1 is
    returned.  Otherwise Phi_p splits into e distinct factors of degree f.
    """
    zx = ring.with_domain(ZZ) if ring.domain != ZZ else ring
    fring = zx.with_domain(GF(q))
    x = fring.gens[0]
    if q == p:
        return [_lift(x - 1)]
    f, e = multiplicative_order(q, p)
    phi = cyclotomic(p, fring)
    if e == 1:
        return [_lift(phi)]
    factors = []
    rest = phi
    for g in _monic_polys(fring, f, q):
        if udivmod(rest, g)[1].is_zero():
            factors.append(_lift(g))
            rest = udivmod(rest, g)[0]
            if rest.degree() == f:
                factors.append(_lift(rest.monic()))
                break
    if len(factors) != e:
        raise DomainError(f"failed to split Phi_{p} mod {q}")
    return sorted(factors, key=lambda g: coeff_list(g))


def _lift(g):
    """Integer lift with coefficients in [0, q)."""
    return g.to_domain(ZZ)
