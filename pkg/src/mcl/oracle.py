"""Brute-force propositional rational and lexicographic closure.

Works on truth tables over concept names and shares no reasoning code with
the main engine: its own evaluator, exceptionality test, world ordering and
minimisation. Only the concept syntax tree is common.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .concepts import And, Bot, Exists, Forall, Name, Not, Or, Top, concept_names
from .kb import DefModule, ModularKB

MAX_PROP_ATOMS = 22


class OracleError(ValueError):
    pass


def holds(c, world: dict) -> bool:
    if isinstance(c, Top):
        return True
    if isinstance(c, Bot):
        return False
    if isinstance(c, Name):
        return world[c.name]
    if isinstance(c, Not):
        return not holds(c.arg, world)
    if isinstance(c, And):
        return holds(c.left, world) and holds(c.right, world)
    if isinstance(c, Or):
        return holds(c.left, world) or holds(c.right, world)
    if isinstance(c, (Exists, Forall)):
        raise OracleError("the propositional oracle does not handle role restrictions")
    raise TypeError(f"not a concept: {c!r}")


@dataclass(frozen=True)
class PropKB:
    names: tuple[str, ...]
    strict: tuple[tuple, ...]  # (antecedent, consequent) formula pairs
    defaults: tuple[tuple, ...]  # (antecedent, consequent) conditionals

    @classmethod
    def from_kb(cls, kb: ModularKB, extra=()) -> "PropKB":
        if kb.abox:
            raise OracleError("the propositional oracle takes no ABox")
        names: set[str] = set()
        for c in list(kb.concepts()) + list(extra):
            names |= concept_names(c)
        strict = tuple((ax.lhs, ax.rhs) for ax in kb.strict)
        defaults = tuple((d.antecedent, d.consequent) for d in kb.defaults)
        return cls(tuple(sorted(names)), strict, defaults)

    def with_names(self, extra) -> "PropKB":
        names = set(self.names)
        for c in extra:
            names |= concept_names(c)
        return PropKB(tuple(sorted(names)), self.strict, self.defaults)

    def worlds(self):
        if len(self.names) > MAX_PROP_ATOMS:
            raise OracleError(f"{len(self.names)} atoms exceed the oracle cap of {MAX_PROP_ATOMS}")
        for values in itertools.product((False, True), repeat=len(self.names)):
            w = dict(zip(self.names, values))
            if all(not holds(a, w) or holds(b, w) for a, b in self.strict):
                yield w


def _material(w, conditionals) -> bool:
    return all(not holds(a, w) or holds(b, w) for a, b in conditionals)


def _exceptional(worlds, conditionals, formula) -> bool:
    return not any(holds(formula, w) and _material(w, conditionals) for w in worlds)


def _chain(kb: PropKB, worlds):
    levels = [list(kb.defaults)]
    while True:
        nxt = [d for d in levels[-1] if _exceptional(worlds, levels[-1], d[0])]
        if len(nxt) == len(levels[-1]):
            return levels
        levels.append(nxt)


def formula_rank(kb: PropKB, formula, worlds=None, levels=None) -> float:
    worlds = list(kb.worlds()) if worlds is None else worlds
    levels = _chain(kb, worlds) if levels is None else levels
    for i, level in enumerate(levels):
        if not _exceptional(worlds, level, formula):
            return i
    return math.inf


def prop_ranks(kb: PropKB) -> dict[tuple, float]:
    """Rank of every default, keyed by its (antecedent, consequent) pair."""
    worlds = list(kb.worlds())
    if not worlds:
        raise OracleError("the strict part is unsatisfiable")
    levels = _chain(kb, worlds)
    return {d: formula_rank(kb, d[0], worlds, levels) for d in kb.defaults}


def lex_entails(kb: PropKB, antecedent, consequent) -> bool:
    """Propositional lexicographic closure by explicit world ordering."""
    kb = kb.with_names([antecedent, consequent])
    worlds = list(kb.worlds())
    if not worlds:
        raise OracleError("the strict part is unsatisfiable")
    ranks = prop_ranks(kb)
    hard = [d for d, r in ranks.items() if r == math.inf]
    finite = sorted({int(r) for r in ranks.values() if r != math.inf}, reverse=True)
    candidates = []
    for w in worlds:
        if not _material(w, hard) or not holds(antecedent, w):
            continue
        tup = tuple(
            sum(1 for d, r in ranks.items() if r == h and holds(d[0], w) and not holds(d[1], w)) for h in finite
        )
        candidates.append((tup, w))
    if not candidates:
        return True
    best = min(t for t, _ in candidates)
    return all(holds(consequent, w) for t, w in candidates if t == best)


def as_single_module(kb: ModularKB, name: str = "all") -> ModularKB:
    """All defaults gathered in one module whose subject is Top."""
    return ModularKB(kb.strict, (DefModule(name, Top(), tuple(kb.defaults)),), kb.abox)


@dataclass
class CrossCheckReport:
    queries: int
    disagreements: list[tuple[str, bool, bool]]
    rank_mismatches: list[tuple[str, float, float]]

    @property
    def ok(self) -> bool:
        return not self.disagreements and not self.rank_mismatches


def cross_check(kb: ModularKB, queries, max_atoms: int = 20) -> CrossCheckReport:
    """Compare the engine on the single-module view of ``kb`` against the oracle."""
    from .entailment import Session

    flat = as_single_module(kb)
    queries = list(queries)
    session = Session(flat, queries, max_atoms=max_atoms)
    prop = PropKB.from_kb(flat)
    disagreements = []
    for q in queries:
        engine = session.entails(q, "mcl").entailed
        oracle = lex_entails(prop, q.antecedent, q.consequent)
        if engine != oracle:
            disagreements.append((str(q), engine, oracle))
    oracle_ranks = prop_ranks(prop.with_names([c for q in queries for c in (q.antecedent, q.consequent)]))
    mismatches = []
    for d in flat.defaults:
        mine = session.ranks.default_rank[d]
        theirs = oracle_ranks[(d.antecedent, d.consequent)]
        if mine != theirs:
            mismatches.append((str(d), mine, theirs))
    return CrossCheckReport(len(queries), disagreements, mismatches)

