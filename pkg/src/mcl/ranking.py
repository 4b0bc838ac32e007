"""Rational-closure ranks of concepts and defaults.

Standard materialisation-based construction: a concept ``C`` is exceptional
for a set of defaults ``E`` when the strict TBox entails that the
materialisation of ``E`` excludes ``C``. Starting from all defaults, keep the
defaults with exceptional antecedents until nothing changes; the rank of a
concept is the first level of that chain at which it stops being exceptional,
or infinity if it never does.
"""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field

from .concepts import And, Concept, Not, Or, conjunction
from .kb import ModularKB, TypicalityInclusion
from .tableau import TBoxView

INF = math.inf


def materialize(defaults) -> Concept:
    """Conjunction of ``not C or D`` over the defaults ``T(C) <= D``; ``Top`` if empty."""
    return conjunction(Or(Not(d.antecedent), d.consequent) for d in defaults)


def exceptional(t, e, c: Concept) -> bool:
    return not TBoxView.of(t).satisfiable(And(materialize(e), c)).satisfiable


@dataclass
class RankTable:
    concept_rank: dict[Concept, float]
    default_rank: dict[TypicalityInclusion, float]
    order: int
    sequence: tuple[tuple[TypicalityInclusion, ...], ...]
    tbox: TBoxView = field(repr=False)
    _memo: dict = field(default_factory=dict, repr=False, compare=False)
    _memo_lock: threading.Lock = field(default_factory=threading.Lock, repr=False, compare=False)

    @property
    def infinite(self) -> tuple[TypicalityInclusion, ...]:
        """Defaults of infinite rank (the fixpoint of the exceptionality chain)."""
        return self.sequence[-1]

    def rank(self, c: Concept) -> float:
        return concept_rank(self, self.tbox, c)

    def defaults_by_rank(self) -> dict[float, list[TypicalityInclusion]]:
        out: dict[float, list[TypicalityInclusion]] = {}
        for d, r in self.default_rank.items():
            out.setdefault(r, []).append(d)
        return out


def _first_unexceptional(t: TBoxView, sequence, c: Concept) -> float:
    for i, level in enumerate(sequence):
        if not exceptional(t, level, c):
            return i
    return INF


def compute_ranks(kb: ModularKB, t=None) -> RankTable:
    """Rank every default antecedent and module subject of ``kb``.

    The ABox plays no part; ranks are computed from the strict TBox alone.
    """
    t = TBoxView.of(kb if t is None else t)
    sequence = [tuple(kb.defaults)]
    while True:
        current = sequence[-1]
        nxt = tuple(d for d in current if exceptional(t, current, d.antecedent))
        if nxt == current:
            break
        sequence.append(nxt)
    concept_ranks: dict[Concept, float] = {}
    for c in [d.antecedent for d in kb.defaults] + [m.subject for m in kb.modules]:
        if c not in concept_ranks:
            concept_ranks[c] = _first_unexceptional(t, sequence, c)
    default_ranks = {d: concept_ranks[d.antecedent] for d in kb.defaults}
    finite = [r for r in default_ranks.values() if r != INF]
    order = int(max(finite)) + 1 if finite else 0
    return RankTable(concept_ranks, default_ranks, order, tuple(sequence), t)


def concept_rank(rt: RankTable, t, c: Concept) -> float:
    """Rank of an arbitrary concept against the stored exceptionality chain (memoised)."""
    hit = rt.concept_rank.get(c, rt._memo.get(c))
    if hit is not None:
        return hit
    r = _first_unexceptional(TBoxView.of(t), rt.sequence, c)
    with rt._memo_lock:
        rt._memo.setdefault(c, r)
    return r


def format_rank(r: float) -> str:
    return "inf" if r == INF else str(int(r))

