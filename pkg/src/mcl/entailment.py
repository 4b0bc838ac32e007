"""Query answering over the combined lexicographic model.

Every verdict is decided on one canonical combined model: the canonical
domain with one element per consistent type. That is enough because the
violation vectors of an element depend on its type alone, so copies of a type
tie in every module order, and canonicity forces every consistent type to
occur. All canonical combined models therefore agree with the type-level one
on whether the minimal ``C``-elements are ``D``-elements. The duplicate
invariance tests exercise exactly this argument.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from .canonical import DEFAULT_MAX_ATOMS, CanonicalDomain, enumerate_types
from .concepts import And, Exists, Forall, Name, Not, nnf, subconcepts
from .kb import (
    ConceptAssertion,
    ModularKB,
    RoleAssertion,
    StrictInclusion,
    TypicalityInclusion,
    query_concepts,
    signature,
)
from .preference import GlobalPref, ModulePref, module_order, t_compliant
from .ranking import RankTable, compute_ranks
from .tableau import DEFAULT_NODE_LIMIT, TBoxView

DEFEASIBLE_MODES = ("mcl", "mclt")


class InconsistentKBError(ValueError):
    """The strict TBox and ABox have no classical model."""


@dataclass
class QueryVerdict:
    entailed: bool
    mode: str
    query: str
    t_compliance: str | None = None  # "compliant" | "violated" | "not-applicable"
    violated: list[str] = field(default_factory=list)
    vacuous: bool = False
    witness: int | None = None
    witness_bits: dict[str, bool] | None = None
    stats: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.entailed

    @property
    def label(self) -> str:
        if self.vacuous:
            return "vacuous"
        return "entailed" if self.entailed else "not entailed"


def _coerce_query(q):
    if isinstance(q, str):
        from .parser import parse_query

        return parse_query(q)
    return q


class Session:
    """KB, signature, ranks, canonical domain and orders, built once.

    A session is immutable after construction and can answer any query whose
    concepts fall inside its signature; pass the queries up front (or use
    :class:`mcl.estimator.LexicographicReasoner`, which rebuilds as needed).
    """

    def __init__(
        self,
        kb: ModularKB,
        queries=(),
        max_atoms: int = DEFAULT_MAX_ATOMS,
        node_limit: int = DEFAULT_NODE_LIMIT,
        tbox: TBoxView | None = None,
        ranks: RankTable | None = None,
        domain: CanonicalDomain | None = None,
    ):
        start = time.perf_counter()
        self.kb = kb
        self.queries = [_coerce_query(q) for q in queries]
        self.tbox = tbox if tbox is not None else TBoxView(kb.strict, node_limit)
        if not self.tbox.abox_consistent(kb.abox):
            raise InconsistentKBError("the strict part of the knowledge base is classically inconsistent")
        self.ranks = ranks if ranks is not None else compute_ranks(kb, self.tbox)
        if domain is None:
            sig = signature(kb, self.queries)
            domain = enumerate_types(kb, sig, self.ranks, self.tbox, max_atoms)
        self.domain = domain
        self.prefs: dict[str, ModulePref] = {m.name: module_order(domain, m, self.ranks) for m in kb.modules}
        if self.prefs:
            self.glob = GlobalPref.combine(self.prefs.values())
        else:
            self.glob = GlobalPref(np.zeros((0, len(domain)), dtype=np.int64))
        self._compliance = None
        self.build_millis = (time.perf_counter() - start) * 1000

    def with_domain(self, domain: CanonicalDomain) -> "Session":
        return Session(self.kb, self.queries, tbox=self.tbox, ranks=self.ranks, domain=domain)

    def covers(self, q) -> bool:
        """True iff every name and quantified subconcept of ``q`` has a bit."""
        index = self.domain.index
        for c in query_concepts(_coerce_query(q)):
            for s in subconcepts(nnf(c)):
                if isinstance(s, (Name, Exists, Forall)) and s not in index:
                    return False
        return True

    def compliance(self):
        if self._compliance is None:
            self._compliance = t_compliant(self.domain, self.glob, self.kb)
        return self._compliance

    def _check(self, q: TypicalityInclusion, pref, mode: str) -> QueryVerdict:
        start = time.perf_counter()
        ext_c = self.domain.extension(q.antecedent)
        ext_d = self.domain.extension(q.consequent)
        low = pref.minimal_mask(ext_c)
        bad = np.flatnonzero(low & ~ext_d)
        verdict = QueryVerdict(entailed=len(bad) == 0, mode=mode, query=str(q))
        if len(bad):
            verdict.witness = int(bad[0])
            verdict.witness_bits = self.domain.assignment(verdict.witness)
        verdict.stats = {
            "types": len(self.domain),
            "atoms": len(self.domain.atoms),
            "millis": round(self.build_millis + (time.perf_counter() - start) * 1000, 3),
        }
        return verdict

    def entails(self, q, mode: str = "mcl") -> QueryVerdict:
        q = _coerce_query(q)
        if mode == "classical":
            return classical_verdict(self.kb, q, self.tbox)
        if not isinstance(q, TypicalityInclusion):
            raise TypeError(f"mode {mode} needs a query of the form T(C) <= D, got {q}")
        if mode == "mcl":
            v = self._check(q, self.glob, mode)
            v.t_compliance = "not-applicable"
            return v
        if mode == "mclt":
            ok, bad = self.compliance()
            v = self._check(q, self.glob, mode)
            if ok:
                v.t_compliance = "compliant"
                return v
            # no T-compliant canonical model exists, so entailment holds vacuously
            v.t_compliance = "violated"
            v.violated = [str(d) for d in bad]
            v.entailed, v.vacuous = True, True
            v.witness = v.witness_bits = None
            return v
        if mode.startswith("module="):
            name = mode.split("=", 1)[1]
            if name not in self.prefs:
                raise KeyError(f"unknown module {name!r}")
            v = self._check(q, self.prefs[name], mode)
            v.t_compliance = "not-applicable"
            return v
        raise ValueError(f"unknown mode {mode!r}")


def _session(kb, q, **kw) -> Session:
    return Session(kb, [q], **kw)


def entails_mcl(kb: ModularKB, q, **kw) -> QueryVerdict:
    q = _coerce_query(q)
    return _session(kb, q, **kw).entails(q, "mcl")


def entails_mclt(kb: ModularKB, q, **kw) -> QueryVerdict:
    q = _coerce_query(q)
    return _session(kb, q, **kw).entails(q, "mclt")


def entails_module(kb: ModularKB, module: str, q, **kw) -> QueryVerdict:
    kb.module(module)  # KeyError before any heavy lifting
    q = _coerce_query(q)
    return _session(kb, q, **kw).entails(q, f"module={module}")


def entails_classical(kb: ModularKB, f, tbox: TBoxView | None = None) -> bool:
    """Classical entailment from the strict TBox and the ABox; defaults are ignored."""
    f = _coerce_query(f)
    t = tbox if tbox is not None else TBoxView(kb.strict)
    if not t.abox_consistent(kb.abox):
        return True
    if isinstance(f, StrictInclusion):
        return not t.satisfiable(And(f.lhs, Not(f.rhs))).satisfiable
    if isinstance(f, ConceptAssertion):
        return not t.abox_consistent(kb.abox + (ConceptAssertion(Not(f.concept), f.individual),))
    if isinstance(f, RoleAssertion):
        # no role axioms in ALC: a role assertion follows only if stated
        return f in kb.abox
    raise TypeError(f"classical entailment needs a strict inclusion or an assertion, got {f}")


def classical_verdict(kb: ModularKB, f, tbox: TBoxView | None = None) -> QueryVerdict:
    start = time.perf_counter()
    f = _coerce_query(f)
    ok = entails_classical(kb, f, tbox)
    millis = round((time.perf_counter() - start) * 1000, 3)
    return QueryVerdict(entailed=ok, mode="classical", query=str(f), stats={"millis": millis})


def entails(kb: ModularKB, q, mode: str = "mcl", **kw) -> QueryVerdict:
    q = _coerce_query(q)
    if mode == "classical":
        return classical_verdict(kb, q)
    return _session(kb, q, **kw).entails(q, mode)


__all__ = [
    "InconsistentKBError",
    "QueryVerdict",
    "Session",
    "entails",
    "entails_classical",
    "entails_mcl",
    "entails_mclt",
    "entails_module",
]
