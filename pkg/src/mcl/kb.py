"""Modular knowledge-base data model, closure signature and diagnostics."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .concepts import Bot, Concept, Name, concept_names, negate, nnf, subconcepts, to_string


@dataclass(frozen=True)
class StrictInclusion:
    lhs: Concept
    rhs: Concept

    def __str__(self) -> str:
        return f"{to_string(self.lhs)} <= {to_string(self.rhs)}."


@dataclass(frozen=True)
class TypicalityInclusion:
    """``T(antecedent) <= consequent``; also used as a defeasible query."""

    antecedent: Concept
    consequent: Concept

    def __str__(self) -> str:
        return f"T({to_string(self.antecedent)}) <= {to_string(self.consequent)}."


@dataclass(frozen=True)
class ConceptAssertion:
    concept: Concept
    individual: str

    def __str__(self) -> str:
        c = self.concept
        text = c.name if isinstance(c, Name) else f"({to_string(c)})"
        return f"{text}({self.individual})."


@dataclass(frozen=True)
class RoleAssertion:
    role: str
    subject: str
    object: str

    def __str__(self) -> str:
        return f"{self.role}({self.subject}, {self.object})."


Assertion = Union[ConceptAssertion, RoleAssertion]
Query = Union[TypicalityInclusion, StrictInclusion, ConceptAssertion, RoleAssertion]


@dataclass(frozen=True)
class DefModule:
    name: str
    subject: Concept
    defaults: tuple[TypicalityInclusion, ...] = ()

    def __post_init__(self):
        if len(set(self.defaults)) != len(self.defaults):
            raise ValueError(f"module {self.name!r} lists the same default twice")


@dataclass(frozen=True)
class ModularKB:
    strict: tuple[StrictInclusion, ...] = ()
    modules: tuple[DefModule, ...] = ()
    abox: tuple[Assertion, ...] = ()
    _defaults: tuple[TypicalityInclusion, ...] = field(init=False, repr=False, compare=False, default=())

    def __post_init__(self):
        object.__setattr__(self, "strict", tuple(self.strict))
        object.__setattr__(self, "modules", tuple(self.modules))
        object.__setattr__(self, "abox", tuple(self.abox))
        names = [m.name for m in self.modules]
        if len(set(names)) != len(names):
            dup = next(n for n in names if names.count(n) > 1)
            raise ValueError(f"duplicate module name {dup!r}")
        # the global defeasible set is the union of the modules, never declared
        seen = dict.fromkeys(d for m in self.modules for d in m.defaults)
        object.__setattr__(self, "_defaults", tuple(seen))

    @property
    def defaults(self) -> tuple[TypicalityInclusion, ...]:
        return self._defaults

    def module(self, name: str) -> DefModule:
        for m in self.modules:
            if m.name == name:
                return m
        raise KeyError(f"unknown module {name!r}")

    def concepts(self):
        """Every concept occurring in the KB, in file order."""
        for ax in self.strict:
            yield ax.lhs
            yield ax.rhs
        for m in self.modules:
            yield m.subject
            for d in m.defaults:
                yield d.antecedent
                yield d.consequent
        for a in self.abox:
            if isinstance(a, ConceptAssertion):
                yield a.concept

    def __str__(self) -> str:
        from .parser import format_kb

        return format_kb(self)


def query_concepts(q: Query | None):
    if q is None or isinstance(q, RoleAssertion):
        return
    if isinstance(q, TypicalityInclusion):
        yield q.antecedent
        yield q.consequent
    elif isinstance(q, StrictInclusion):
        yield q.lhs
        yield q.rhs
    elif isinstance(q, ConceptAssertion):
        yield q.concept
    else:
        yield q


def signature(kb: ModularKB, q=None, extra=()) -> list[Concept]:
    """Closure signature of ``kb`` and the query ``q``.

    Every concept is put in NNF, then all subconcepts and their (NNF)
    complements are collected in first-occurrence order. ``q`` may be a
    query, a concept, or an iterable of either; ``extra`` adds more concepts.
    Module subjects are always included so subject membership is decidable
    from a type.
    """
    roots = list(kb.concepts())
    if isinstance(q, (list, tuple, set, frozenset)):
        for item in q:
            roots.extend(query_concepts(item))
    else:
        roots.extend(query_concepts(q))
    roots.extend(extra)
    seen: dict[Concept, None] = {}
    for c in roots:
        for s in subconcepts(nnf(c)):
            seen.setdefault(s, None)
    for s in list(seen):
        seen.setdefault(negate(s), None)
    return list(seen)


@dataclass(frozen=True)
class Diagnostic:
    level: str  # "info" | "warning"
    message: str

    def __str__(self) -> str:
        return f"{self.level}: {self.message}"


def validate(kb: ModularKB) -> list[Diagnostic]:
    """Report shared defaults, empty modules and suspicious subjects.

    Never rejects a KB; everything here is advisory.
    """
    out = []
    owners: dict[TypicalityInclusion, list[str]] = {}
    for m in kb.modules:
        for d in m.defaults:
            owners.setdefault(d, []).append(m.name)
    for d, mods in owners.items():
        if len(mods) > 1:
            out.append(Diagnostic("info", f"{d} belongs to modules {', '.join(mods)}"))
    for m in kb.modules:
        if not m.defaults:
            out.append(Diagnostic("warning", f"module {m.name} has no defaults"))
        if isinstance(nnf(m.subject), Bot):
            out.append(Diagnostic("warning", f"module {m.name} has subject Bot; its defaults never apply"))
        for d in m.defaults:
            if isinstance(nnf(d.antecedent), Bot):
                out.append(Diagnostic("warning", f"{d} has antecedent Bot"))
    return out


def kb_names(kb: ModularKB) -> set[str]:
    names: set[str] = set()
    for c in kb.concepts():
        names |= concept_names(c)
    return names
