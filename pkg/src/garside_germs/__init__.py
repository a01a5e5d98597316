from .analyzer import (
    closure_report,
    i_set,
    i_value,
    is_garside_germ,  # the decider: left-assoc + left-canc + greatest J-elements
    j_set,
    lcm_criteria,
    max_j_function,
    noetherian_report,
    verify_laws,  # sharp J/I/H laws on every composable triple
)
from .category import GermCategory, NormalForm, PathWord, pi, rewrite_step
from .config import Config
from .coxeter import (
    CoxeterGroup,
    GeneratorSet,
    TightContext,
    build_group,
    check_derivation_hypotheses,
    classical_germ,  # Artin-Tits germ: whole group, simple reflections
    coxeter_element,
    derive_germ,
    dual_germ,  # dual braid germ: Div(c), all reflections
    is_prefix,
    is_suffix,
    is_tight,
    prefix_lub,
    sigma_length,
)
from .errors import (
    DerivationError,
    EnumerationLimitError,
    GermError,
    InvalidMoveError,
    NormalizationError,
    PreconditionError,
    StructuralError,
    UnsupportedGermError,
)
from .germ import (
    Element,
    GermTable,
    axiom_report,
    eqir_class_selector,
    local_divisibility,
    validate_germ,
)
from .germfile import dump_germ, load_germ, parse_germ, serialize_germ
from .models import (
    AxiomReport,
    ClosureReport,
    CoxeterSpec,
    DerivationReport,
    Division,
    FailedCriterion,
    GarsideVerdict,
    JTable,
    LawReport,
    LawViolation,
    LcmReport,
    NoetherianReport,
    Report,
)
from .version import __version__

__all__ = [
    "__version__",
    "Config",
    # Germs
    "Element",
    "GermTable",
    "axiom_report",
    "eqir_class_selector",
    "local_divisibility",
    "validate_germ",
    # Recognition
    "closure_report",
    "i_set",
    "i_value",
    "is_garside_germ",
    "j_set",
    "lcm_criteria",
    "max_j_function",
    "noetherian_report",
    "verify_laws",
    # The generated category
    "GermCategory",
    "NormalForm",
    "PathWord",
    "pi",
    "rewrite_step",
    # Coxeter groups
    "CoxeterGroup",
    "GeneratorSet",
    "TightContext",
    "build_group",
    "check_derivation_hypotheses",
    "classical_germ",
    "coxeter_element",
    "derive_germ",
    "dual_germ",
    "is_prefix",
    "is_suffix",
    "is_tight",
    "prefix_lub",
    "sigma_length",
    # Germ files
    "dump_germ",
    "load_germ",
    "parse_germ",
    "serialize_germ",
    # Reports and verdicts
    "AxiomReport",
    "ClosureReport",
    "CoxeterSpec",
    "DerivationReport",
    "Division",
    "FailedCriterion",
    "GarsideVerdict",
    "JTable",
    "LawReport",
    "LawViolation",
    "LcmReport",
    "NoetherianReport",
    "Report",
    # Errors
    "DerivationError",
    "EnumerationLimitError",
    "GermError",
    "InvalidMoveError",
    "NormalizationError",
    "PreconditionError",
    "StructuralError",
    "UnsupportedGermError",
]
