"""Quasi-symmetric design parameters: feasibility, sieves and enumerators."""

from .families import (
    Quadruple,
    affine_resolvable,
    check_symplectic,
    compose_params,
    compose_quadruple,
    conference_mu_window,
    enum_cotriangular,
    enum_multipartite,
    enum_steiner,
    family_feasibility,
    family_mu_window,
    quadruple_for,
    search_symplectic,
    triangular_stream,
)
from .params import (
    Condition,
    DesignParams,
    FeasibilityReport,
    InfeasibleError,
    complement,
    derive_params,
    feasibility,
    mu_window,
    spectral_from_design,
)
from .sieve import (
    cor_4_3,
    cor_4_5,
    cor_4_6,
    cor_4_7,
    family_corollary,
    family_corollary_or_none,
    family_main_test,
    main_test,
)
from .symmetric import chowla_ryser, schutzenberger, symmetric_test
from .table import TableCaps, render, table1

__all__ = [
    "Quadruple",
    "affine_resolvable",
    "check_symplectic",
    "compose_params",
    "compose_quadruple",
    "conference_mu_window",
    "enum_cotriangular",
    "enum_multipartite",
    "enum_steiner",
    "family_feasibility",
    "family_mu_window",
    "quadruple_for",
    "search_symplectic",
    "triangular_stream",
    "Condition",
    "DesignParams",
    "FeasibilityReport",
    "InfeasibleError",
    "complement",
    "derive_params",
    "feasibility",
    "mu_window",
    "spectral_from_design",
    "cor_4_3",
    "cor_4_5",
    "cor_4_6",
    "cor_4_7",
    "family_corollary",
    "family_corollary_or_none",
    "family_main_test",
    "main_test",
    "chowla_ryser",
    "schutzenberger",
    "symmetric_test",
    "TableCaps",
    "render",
    "table1",
]
