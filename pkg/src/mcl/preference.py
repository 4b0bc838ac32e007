"""Per-module lexicographic orders and their Pareto combination.

An element violates ``T(C) <= D`` in a module with subject ``S`` when it is
an ``S``, a ``C`` and not a ``D``. Violation counts are bucketed by default
rank, most specific rank first, and compared lexicographically: fewer
violations of a higher rank always wins. Infinite-rank defaults are never
counted since every type satisfies them by construction.

Types are ranked per module by the position of their count tuple among all
distinct tuples. The global order is Pareto dominance on those per-module
levels; it is materialised over distinct level profiles, which are far
fewer than types.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .canonical import CanonicalDomain
from .kb import DefModule, ModularKB, TypicalityInclusion
from .ranking import INF, RankTable


def violation_matrix(dom: CanonicalDomain, m: DefModule, rt: RankTable) -> np.ndarray:
    """Counts per type, one column per finite rank from ``order - 1`` down to 0."""
    r = rt.order
    out = np.zeros((len(dom), r), dtype=np.int64)
    if not m.defaults or r == 0:
        return out
    subject = dom.extension(m.subject)
    for d in m.defaults:
        h = rt.default_rank[d]
        if h == INF:
            continue
        hit = subject & dom.extension(d.antecedent) & ~dom.extension(d.consequent)
        out[:, r - 1 - int(h)] += hit
    return out


def violations(x: int, m: DefModule, rt: RankTable, dom: CanonicalDomain) -> tuple[int, ...]:
    return tuple(int(v) for v in violation_matrix(dom.with_rows([x]), m, rt)[0])


def lex_less(v, w) -> bool:
    if len(v) != len(w):
        raise ValueError(f"violation vectors of different length: {len(v)} vs {len(w)}")
    return tuple(v) < tuple(w)


def _levels(vectors: np.ndarray) -> np.ndarray:
    if vectors.shape[0] == 0 or vectors.shape[1] == 0:
        return np.zeros(vectors.shape[0], dtype=np.int64)
    # np.unique sorts rows lexicographically, so the inverse is a dense lex rank
    _, inverse = np.unique(vectors, axis=0, return_inverse=True)
    return inverse.reshape(-1).astype(np.int64)


@dataclass
class ModulePref:
    name: str
    vectors: np.ndarray
    level: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        self.level = _levels(self.vectors)

    def vector(self, x: int) -> tuple[int, ...]:
        return tuple(int(v) for v in self.vectors[x])

    def less(self, x: int, y: int) -> bool:
        return bool(self.level[x] < self.level[y])

    def leq(self, x: int, y: int) -> bool:
        """``x <=_i y`` iff not ``y <_i x``; a total preorder."""
        return not self.less(y, x)

    @property
    def matrix(self) -> np.ndarray:
        return self.level[:, None] < self.level[None, :]

    def minimal_mask(self, mask: np.ndarray) -> np.ndarray:
        if not mask.any():
            return mask.copy()
        return mask & (self.level == self.level[mask].min())


def module_order(dom: CanonicalDomain, m: DefModule, rt: RankTable) -> ModulePref:
    return ModulePref(m.name, violation_matrix(dom, m, rt))


@dataclass
class GlobalPref:
    """Pareto combination: ``x < y`` iff ``x <_i y`` for some i and ``x <=_j y`` for all j."""

    levels: np.ndarray  # (modules, types)
    profile: np.ndarray = field(init=False, repr=False)  # type -> profile id
    profiles: np.ndarray = field(init=False, repr=False)  # (profiles, modules)
    profile_less: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        k, n = self.levels.shape
        if k == 0 or n == 0:
            self.profiles = np.zeros((1 if n else 0, k), dtype=np.int64)
            self.profile = np.zeros(n, dtype=np.int64)
        else:
            self.profiles, inverse = np.unique(self.levels.T, axis=0, return_inverse=True)
            self.profile = inverse.reshape(-1)
        a = self.profiles[:, None, :]
        b = self.profiles[None, :, :]
        self.profile_less = (a <= b).all(axis=2) & (a < b).any(axis=2)

    @classmethod
    def combine(cls, prefs) -> "GlobalPref":
        prefs = list(prefs)
        if prefs:
            return cls(np.stack([p.level for p in prefs]))
        return cls(np.zeros((0, 0), dtype=np.int64))

    def less(self, x: int, y: int) -> bool:
        return bool(self.profile_less[self.profile[x], self.profile[y]])

    @property
    def matrix(self) -> np.ndarray:
        p = self.profile
        return self.profile_less[np.ix_(p, p)]

    def minimal_mask(self, mask: np.ndarray) -> np.ndarray:
        if not mask.any():
            return mask.copy()
        present = np.unique(self.profile[mask])
        sub = self.profile_less[np.ix_(present, present)]
        keep = present[~sub.any(axis=0)]
        return mask & np.isin(self.profile, keep)


def global_order(prefs, n_types: int | None = None) -> GlobalPref:
    prefs = list(prefs)
    if not prefs:
        return GlobalPref(np.zeros((0, n_types or 0), dtype=np.int64))
    return GlobalPref.combine(prefs)


def global_less(x: int, y: int, prefs) -> bool:
    """The Pareto condition evaluated directly on the module orders."""
    prefs = list(prefs)
    return any(p.less(x, y) for p in prefs) and all(p.leq(x, y) for p in prefs)


def minimal(s, less) -> set:
    """Elements of ``s`` with nothing in ``s`` strictly below them.

    ``less`` is a callable ``less(z, u)`` or a boolean matrix indexed the same way.
    """
    s = list(s)
    if not callable(less):
        matrix = less
        less = lambda z, u: bool(matrix[z, u])  # noqa: E731
    return {u for u in s if not any(less(z, u) for z in s)}


def t_compliant(
    dom: CanonicalDomain, glob: GlobalPref, kb: ModularKB
) -> tuple[bool, list[TypicalityInclusion]]:
    """Check every default at the globally minimal instances of its antecedent."""
    bad = []
    for d in kb.defaults:
        low = glob.minimal_mask(dom.extension(d.antecedent))
        if (low & ~dom.extension(d.consequent)).any():
            bad.append(d)
    return not bad, bad
