"""Exact polynomial arithmetic over Z, Q and F_q with Gröbner bases."""

from .groebner import (
    DEFAULT_GB_CAP,
    GroebnerBasis,
    default_gb_cap,
    elim_intersection,
    groebner,
    ideal_member,
)
from .parse import parse_expression, parse_poly
from .poly import GF, QQ, ZZ, Domain, MultiPoly, PolyRing, format_terms
from .univariate import (
    coeff_list,
    cyclotomic,
    divides_over_Z,
    factor_cyclotomic_mod_q,
    from_coeffs,
    irreducible_mod_q,
    is_prime,
    multiplicative_order,
    udivmod,
    ugcd,
)

__all__ = [
    "DEFAULT_GB_CAP",
    "GF",
    "QQ",
    "ZZ",
    "Domain",
    "GroebnerBasis",
    "MultiPoly",
    "PolyRing",
    "coeff_list",
    "cyclotomic",
    "default_gb_cap",
    "divides_over_Z",
    "elim_intersection",
    "factor_cyclotomic_mod_q",
    "format_terms",
    "from_coeffs",
    "groebner",
    "ideal_member",
    "irreducible_mod_q",
    "is_prime",
    "multiplicative_order",
    "parse_expression",
    "parse_poly",
    "udivmod",
    "ugcd",
]
