"""Exact verification of symmetry identities for generalized Euler polynomials
attached to Dirichlet characters."""

from __future__ import annotations

from .dirichlet import (
    DirichletCharacter,
    char_value,
    conductor,
    enumerate_characters,
    get_character,
    quadratic_character,
    trivial_character,
)
from .euler import (
    alt_power_sum,
    euler_numbers,
    euler_polynomial,
    power_sum_series_check,
)
from .exactnum import (
    CycNumber,
    DomainError,
    cyc_eq,
    cyc_inv,
    cyc_mul,
    cyclotomic_modulus,
)
from .fermionic import convergence_trace, finite_level_shift_check, vp
from .series import TruncSeries, coeff_egf, exp_arg, series_div, series_mul
from .symmetry import (
    REDUNDANCIES,
    THEOREMS,
    ExpansionForm,
    FormId,
    cross_form_check,
    expansion_value,
    multinomial,
    redundancy_check,
    verify_theorem,
)

__version__ = "0.1.0"

__all__ = [
    "CycNumber", "DirichletCharacter", "DomainError", "ExpansionForm", "FormId",
    "REDUNDANCIES", "THEOREMS", "TruncSeries", "alt_power_sum", "char_value",
    "coeff_egf", "conductor", "convergence_trace", "cross_form_check", "cyc_eq",
    "cyc_inv", "cyc_mul", "cyclotomic_modulus", "enumerate_characters",
    "euler_numbers", "euler_polynomial", "exp_arg", "expansion_value",
    "finite_level_shift_check", "get_character", "multinomial",
    "power_sum_series_check", "quadratic_character", "redundancy_check",
    "series_div", "series_mul", "trivial_character", "verify_theorem", "vp",
]
