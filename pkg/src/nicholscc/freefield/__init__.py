"""Exact free-boson operator algebra."""

from .fields import Field, dot, momentum, monomials
from .ope import (OpeExpansion, build_T, centralizer_basis, find_primary,
                  gram_inverse, is_primary, is_total_derivative, mode_action,
                  ope, primary_conditions, screening_residue, total_derivative,
                  unit)
from .verify import (coset_currents, find_unique_primary, primary_report,
                     regular_gram, verify_coset_currents, verify_virasoro,
                     verify_w3_generator, w3_expected, wb2_expected)
from .octuplet import (OCTUPLET_GOLDEN, OctupletFields, build_octuplet,
                       octuplet, octuplet_opes)

__all__ = [
    "Field",
    "dot",
    "momentum",
    "monomials",
    "OpeExpansion",
    "build_T",
    "centralizer_basis",
    "find_primary",
    "gram_inverse",
    "is_primary",
    "is_total_derivative",
    "mode_action",
    "ope",
    "primary_conditions",
    "screening_residue",
    "total_derivative",
    "unit",
    "coset_currents",
    "find_unique_primary",
    "primary_report",
    "regular_gram",
    "verify_coset_currents",
    "verify_virasoro",
    "verify_w3_generator",
    "w3_expected",
    "wb2_expected",
    "OCTUPLET_GOLDEN",
    "OctupletFields",
    "build_octuplet",
    "octuplet",
    "octuplet_opes",
]
