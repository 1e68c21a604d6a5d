"""C_p-Tambara functors: the catalog, element arithmetic and axiom checks."""

from .catalog import (
    CATALOG_TAGS,
    RU,
    Burnside,
    FixedPoint,
    FreeFixed,
    FreeUnderlying,
    ModPBurnside,
    burnside_norm_coeff,
    catalog,
    make_functor,
    rotate,
    tvec_canonical,
)
from .functor import (
    Level,
    LevelElement,
    TambaraFunctorCp,
    add,
    conj,
    mul,
    nm,
    orbit_product,
    orbit_sum,
    phi,
    res,
    tr,
)
from .sampling import DEFAULT_BOUNDS, Bounds
