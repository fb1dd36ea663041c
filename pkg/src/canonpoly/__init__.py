"""Finite fields, Frobenius-orbit labels, and the monoid of canonical
subfield-preserving polynomials: exact structure, counts, and densities,
validated by an exhaustive brute-force oracle at desk scale.
"""

from . import errors
from .census import (
    CensusReport,
    available_backends,
    brute_force_census,
    census_report,
    convergence_csv,
    convergence_table,
    default_backend,
    log_monoid_density,
    monoid_density,
    monoid_order,
    preserving_count,
    unit_density,
    unit_group_order,
)
from .gf import Field, FieldElement, PrimePoly, find_irreducible, is_irreducible
from .monoid import (
    FuncTable,
    MonoidElem,
    MonoidShape,
    compose,
    enumerate_monoid,
    factor_unit,
    from_function,
    identity,
    invert,
    is_invertible,
    random_element,
    random_unit,
    to_function,
)
from .orbits import OrbitTable, irreducible_count, minimal_polynomial, orbit_partition
from .polys import (
    FieldPoly,
    commutes_with_frobenius,
    compose_polys,
    evaluate,
    func_from_poly,
    interpolate,
    is_canonical,
    is_member,
    is_subfield_preserving,
    is_subfield_preserving_literal,
)

__version__ = "0.1.0"
