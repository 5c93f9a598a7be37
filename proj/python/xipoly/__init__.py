"""Exact computation of the edge-elimination polynomial xi and its companion psi."""

from ._xipoly import (
    DEFAULT_SEED,
    Multigraph,
    XipolyError,
    bivariate_chromatic,
    cone,
    disjoint_union,
    family_names,
    generate_family,
    hardness_pipeline,
    parse_graph,
    psi_eval,
    psi_polynomial,
    render_xi,
    run_suite,
    serialize_graph,
    thicken,
    xi_eval,
    xi_json,
    xi_polynomial,
)

__all__ = [
    "DEFAULT_SEED",
    "Multigraph",
    "XipolyError",
    "bivariate_chromatic",
    "cone",
    "disjoint_union",
    "family_names",
    "generate_family",
    "hardness_pipeline",
    "parse_graph",
    "psi_eval",
    "psi_polynomial",
    "render_xi",
    "run_suite",
    "serialize_graph",
    "thicken",
    "xi_eval",
    "xi_json",
    "xi_polynomial",
]
