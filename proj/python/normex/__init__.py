"""Defeasible logic, normative explanations and deontic neighborhood models.

Thin wrapper over the C++ core. The main entry points:

    Theory.parse(text)        -- parse the .dfl rule language
    extension(theory)         -- the four proof-tag sets
    justify(theory)           -- justified / rejected arguments
    explanations(theory, lit) -- minimal normative explanations
    stable(theory, lit)       -- stability over fact supersets
    model(theory)             -- the neighborhood D-model
    eval_formula(theory, f)   -- OBL/PERM evaluation
"""

from ._normex import (  # noqa: F401
    ReasoningError,
    Theory,
    arguments,
    d_extension,
    dependency_graph,
    eval_formula,
    explanations,
    extension,
    framework_dot,
    generate,
    is_acyclic_setup,
    justify,
    model,
    run_cli,
    semantic_stability,
    stable,
    submodel,
    theorem2_check,
    validate,
)

__all__ = [
    "ReasoningError",
    "Theory",
    "arguments",
    "d_extension",
    "dependency_graph",
    "eval_formula",
    "explanations",
    "extension",
    "framework_dot",
    "generate",
    "is_acyclic_setup",
    "justify",
    "model",
    "run_cli",
    "semantic_stability",
    "stable",
    "submodel",
    "theorem2_check",
    "validate",
]
