"""Janet bases over skew polynomial rings, applied to Anderson t-modules.

Typical use::

    from tmotives import FunctionField, TModuleData, analyze_tmodule, tau_ring

    K = FunctionField.of_order(3)
    T, tau = K.theta(), tau_ring(K).rho()
    result = analyze_tmodule(TModuleData(K, [[T + tau]]))
    result.verdict, result.rank, result.model.action
"""

__version__ = "0.1.0"

from .anderson import (
    COMOTIVE,
    MOTIVE,
    Analysis,
    MotiveData,
    NotAnderson,
    NotEffective,
    TModuleData,
    analyze_tmodule,
    check_effective,
    presentation_from_motive,
    presentation_from_tmodule,
    reverse_ring,
    tau_ring,
    tmodule_from_motive,
)
from .coeff import FieldElem, FunctionField
from .freemod import ModElem, OrderSpec
from .janet import ConePair, JanetSet, janet_algorithm, janet_decomposition, normal_form
from .oracle import DegreeBox, truncated_submodule, verify_janet
from .parsing import InputError, parse_expr, parse_input
from .skew import SkewPoly, SkewRing, TwistPair, left_divmod, right_divmod, skew_mul, star
from .structure import FreeModel, StructureReport, analyze, free_model, quantities

__all__ = [
    "COMOTIVE",
    "MOTIVE",
    "Analysis",
    "ConePair",
    "DegreeBox",
    "FieldElem",
    "FreeModel",
    "FunctionField",
    "InputError",
    "JanetSet",
    "ModElem",
    "MotiveData",
    "NotAnderson",
    "NotEffective",
    "OrderSpec",
    "SkewPoly",
    "SkewRing",
    "StructureReport",
    "TModuleData",
    "TwistPair",
    "analyze",
    "analyze_tmodule",
    "check_effective",
    "free_model",
    "janet_algorithm",
    "janet_decomposition",
    "left_divmod",
    "normal_form",
    "parse_expr",
    "parse_input",
    "presentation_from_motive",
    "presentation_from_tmodule",
    "quantities",
    "reverse_ring",
    "right_divmod",
    "skew_mul",
    "star",
    "tau_ring",
    "tmodule_from_motive",
    "truncated_submodule",
    "verify_janet",
]
