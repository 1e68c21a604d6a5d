"""Prime spectra of C_p-Tambara functors through the ghost construction."""

from .certificates import (
    DomainCertificate,
    GhostPairIdeal,
    KrullCertificate,
    UnitIdeal,
    ZeroIdeal,
    generalized_products,
    is_domain,
    krull_certificate,
    q_criterion,
    translates,
)
from .coop import WHICH as COOP_MAPS
from .coop import contract, coop_map
from .fixed import fixed_point_spec
from .ideals import (
    CpPrime,
    PolyPrime,
    SymbolicPrime1V,
    diagonal_pull,
    epsilon_gens,
    irreducible_over_Q,
    member_symbolic,
    rational_prime,
    zero_prime,
)
from .poset import SpecNode, SpecPoset
from .primes import (
    LE,
    NOT_LE,
    TYPE1,
    TYPE2,
    UNKNOWN,
    Containment,
    GhostPrime,
    TambaraPrime,
    bottom_prime,
    compare,
    contains,
    ghost_prime,
    norm_preimage,
    parse_ghost_prime,
    phi_prime,
    pullback,
)
from .spaces import linearization_pullback, linearize, primes_up_to, ru_splitting, spec_burnside, spec_ru

__all__ = [
    "COOP_MAPS",
    "LE",
    "NOT_LE",
    "TYPE1",
    "TYPE2",
    "UNKNOWN",
    "Containment",
    "CpPrime",
    "DomainCertificate",
    "GhostPairIdeal",
    "GhostPrime",
    "KrullCertificate",
    "PolyPrime",
    "SpecNode",
    "SpecPoset",
    "SymbolicPrime1V",
    "TambaraPrime",
    "UnitIdeal",
    "ZeroIdeal",
    "bottom_prime",
    "compare",
    "contains",
    "contract",
    "coop_map",
    "diagonal_pull",
    "epsilon_gens",
    "fixed_point_spec",
    "generalized_products",
    "ghost_prime",
    "irreducible_over_Q",
    "is_domain",
    "krull_certificate",
    "linearization_pullback",
    "linearize",
    "member_symbolic",
    "norm_preimage",
    "parse_ghost_prime",
    "phi_prime",
    "primes_up_to",
    "pullback",
    "q_criterion",
    "rational_prime",
    "ru_splitting",
    "spec_burnside",
    "spec_ru",
    "translates",
    "zero_prime",
]
