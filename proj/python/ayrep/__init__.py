"""Exact representations of the symmetric and hyperoctahedral groups on cells."""

from ._core import (
    Cell,
    Error,
    FloatRepresentation,
    GenericityError,
    Representation,
    build_from_functional,
    build_orthogonal,
    cli,
    content_vector,
    descent_cell,
    extend_to_bn,
    induce,
    is_generic,
    is_generic_integer,
    is_minimal_ay_cell,
    mn_character,
    run_suite,
    standard_tableaux,
    suite_names,
    tableau_from_content,
    top_elements,
    young_orthogonal,
    young_seminormal,
)

__all__ = [
    "Cell",
    "Error",
    "FloatRepresentation",
    "GenericityError",
    "Representation",
    "build_from_functional",
    "build_orthogonal",
    "cli",
    "content_vector",
    "descent_cell",
    "extend_to_bn",
    "induce",
    "is_generic",
    "is_generic_integer",
    "is_minimal_ay_cell",
    "mn_character",
    "run_suite",
    "standard_tableaux",
    "suite_names",
    "tableau_from_content",
    "top_elements",
    "young_orthogonal",
    "young_seminormal",
]
