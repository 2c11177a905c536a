"""Closure and boundary operators on finite universes."""

from .axioms import (
    ALL_AXIOMS,
    BETA,
    DELTA,
    AxiomId,
    AxiomSystem,
    CheckReport,
    Violation,
    check_axiom,
    check_system,
    classify,
)
from .setcore import (
    OperatorTable,
    SubsetMask,
    Universe,
    apply,
    operators_equal,
    parse,
    serialize,
)
from .transforms import TopologyFamily, closed_sets, closure_from_family, phi, psi

__all__ = [
    "ALL_AXIOMS", "BETA", "DELTA", "AxiomId", "AxiomSystem", "CheckReport",
    "Violation", "check_axiom", "check_system", "classify", "OperatorTable",
    "SubsetMask", "Universe", "apply", "operators_equal", "parse", "serialize",
    "TopologyFamily", "closed_sets", "closure_from_family", "phi", "psi",
]
