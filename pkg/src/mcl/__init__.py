"""Modular multi-concept lexicographic closure for defeasible ALC."""
from .canonical import AtomCapError, CanonicalDomain, SignatureError, enumerate_types
from .concepts import (
    BOT,
    TOP,
    And,
    Bot,
    Exists,
    Forall,
    Name,
    Not,
    Or,
    Top,
    negate,
    nnf,
    to_string,
)
from .entailment import (
    InconsistentKBError,
    QueryVerdict,
    Session,
    entails,
    entails_classical,
    entails_mcl,
    entails_mclt,
    entails_module,
)
from .estimator import LexicographicReasoner, fit_reasoner
from .kb import (
    ConceptAssertion,
    DefModule,
    ModularKB,
    RoleAssertion,
    StrictInclusion,
    TypicalityInclusion,
    signature,
    validate,
)
from .parser import KBSyntaxError, format_kb, load_kb, parse_concept, parse_kb, parse_query
from .preference import GlobalPref, ModulePref, global_order, lex_less, module_order, t_compliant
from .ranking import INF, RankTable, compute_ranks
from .tableau import ResourceLimitError, TBoxView, is_satisfiable, kb_consistent, subsumes

__version__ = "0.1.0"

__all__ = [
    "And",
    "AtomCapError",
    "BOT",
    "Bot",
    "CanonicalDomain",
    "ConceptAssertion",
    "DefModule",
    "Exists",
    "Forall",
    "GlobalPref",
    "INF",
    "InconsistentKBError",
    "KBSyntaxError",
    "LexicographicReasoner",
    "ModularKB",
    "ModulePref",
    "Name",
    "Not",
    "Or",
    "QueryVerdict",
    "RankTable",
    "ResourceLimitError",
    "RoleAssertion",
    "Session",
    "SignatureError",
    "StrictInclusion",
    "TBoxView",
    "TOP",
    "Top",
    "TypicalityInclusion",
    "compute_ranks",
    "entails",
    "entails_classical",
    "entails_mcl",
    "entails_mclt",
    "entails_module",
    "enumerate_types",
    "fit_reasoner",
    "format_kb",
    "global_order",
    "is_satisfiable",
    "kb_consistent",
    "lex_less",
    "load_kb",
    "module_order",
    "negate",
    "nnf",
    "parse_concept",
    "parse_kb",
    "parse_query",
    "signature",
    "subsumes",
    "t_compliant",
    "to_string",
    "validate",
]
