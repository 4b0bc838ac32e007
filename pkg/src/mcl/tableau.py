"""Tableau decision procedure for ALC with general TBoxes.

Each axiom ``C <= D`` is internalised as ``nnf(not C or D)`` and added to the
label of every node. Termination comes from subset blocking against ancestor
labels. Rules run in a fixed order (clash checks while adding, conjunctions
before disjunctions, the first open disjunction first, successors in label
order), so runs are reproducible.

A :class:`TBoxView` keeps the completion graph and caches between calls:
unsatisfiable labels are cached unconditionally, satisfiable ones only when
their subtree never relied on blocking by an outside ancestor.
"""
from __future__ import annotations

import sys
import threading
from dataclasses import dataclass, field

from .concepts import And, Bot, Concept, Exists, Forall, Name, Not, Or, Top, nnf
from .kb import ConceptAssertion, RoleAssertion

DEFAULT_NODE_LIMIT = 200_000
_INF = float("inf")


class ResourceLimitError(RuntimeError):
    """The node budget ran out before the tableau reached a verdict."""


@dataclass
class Completion:
    """A finite completion structure: labelled nodes and role edges.

    Blocked nodes are already redirected to their blocker, so the structure
    reads directly as an interpretation (a name holds at a node iff it is in
    the label).
    """

    root: int
    labels: dict[int, frozenset]
    edges: dict[int, list[tuple[str, int]]]

    def __len__(self) -> int:
        return len(self.labels)


@dataclass(frozen=True)
class TableauResult:
    satisfiable: bool
    witness: Completion | None = field(default=None, compare=False)

    def __bool__(self) -> bool:
        return self.satisfiable


class TBoxView:
    """Strict axioms preprocessed for the tableau, plus per-TBox caches."""

    def __init__(self, axioms=(), node_limit: int = DEFAULT_NODE_LIMIT):
        self.axioms = tuple(axioms)
        gcis = (nnf(Or(Not(ax.lhs), ax.rhs)) for ax in self.axioms)
        self.gcis = tuple(dict.fromkeys(g for g in gcis if not isinstance(g, Top)))
        self.node_limit = node_limit
        self._labels: dict[int, frozenset] = {}
        self._edges: dict[int, list[tuple[str, int]]] = {}
        self._sat: dict[frozenset, int] = {}
        self._unsat: set[frozenset] = set()
        self._budget = 0
        self._lock = threading.RLock()

    @classmethod
    def of(cls, kb_or_axioms, node_limit: int = DEFAULT_NODE_LIMIT) -> "TBoxView":
        if isinstance(kb_or_axioms, TBoxView):
            return kb_or_axioms
        axioms = getattr(kb_or_axioms, "strict", kb_or_axioms)
        return cls(axioms, node_limit)

    def __repr__(self) -> str:
        return f"TBoxView({len(self.axioms)} axioms)"

    # propositional saturation

    @staticmethod
    def _add(label: dict, stack: list) -> dict | None:
        while stack:
            c = stack.pop()
            if c in label or isinstance(c, Top):
                continue
            if isinstance(c, Bot):
                return None
            if isinstance(c, Name) and Not(c) in label:
                return None
            if isinstance(c, Not) and c.arg in label:
                return None
            label[c] = None
            if isinstance(c, And):
                stack.append(c.right)
                stack.append(c.left)
        return label

    def _branches(self, label: dict):
        for c in label:
            if isinstance(c, Or) and c.left not in label and c.right not in label:
                for pick in (c.left, c.right):
                    nxt = self._add(dict(label), [pick])
                    if nxt is not None:
                        yield from self._branches(nxt)
                return
        yield label

    def completions(self, initial):
        """Clash-free saturated labels for a single node (no successors)."""
        label = self._add({}, list(reversed(tuple(initial))))
        if label is not None:
            yield from self._branches(label)

    # nodes

    def _new_node(self, label: frozenset) -> int:
        self._budget -= 1
        if self._budget < 0:
            raise ResourceLimitError(f"tableau node limit {self.node_limit} exceeded")
        nid = len(self._labels)
        self._labels[nid] = label
        self._edges[nid] = []
        return nid

    def _successor_seed(self, label, ex: Exists) -> tuple:
        seed = [ex.filler]
        seed.extend(c.filler for c in label if isinstance(c, Forall) and c.role == ex.role)
        seed.extend(self.gcis)
        return tuple(dict.fromkeys(seed))

    def _node(self, initial: tuple, ancestors: list) -> tuple[int | None, float]:
        """Return ``(node id or None, shallowest ancestor depth used for blocking)``."""
        key = frozenset(initial)
        if key in self._unsat:
            return None, _INF
        hit = self._sat.get(key)
        if hit is not None:
            return hit, _INF
        depth = len(ancestors)
        for label in self.completions(initial):
            flabel = frozenset(label)
            for j, (anc_label, anc_id) in enumerate(ancestors):
                if flabel <= anc_label:
                    return anc_id, j
            nid = self._new_node(flabel)
            path = ancestors + [(flabel, nid)]
            low = _INF
            for c in label:
                if isinstance(c, Exists):
                    sid, used = self._node(self._successor_seed(label, c), path)
                    if sid is None:
                        break
                    self._edges[nid].append((c.role, sid))
                    low = min(low, used)
            else:
                if low >= depth:
                    self._sat[key] = nid
                return nid, low
        self._unsat.add(key)
        return None, _INF

    def _witness(self, root: int) -> Completion:
        labels, edges, todo = {}, {}, [root]
        while todo:
            n = todo.pop()
            if n in labels:
                continue
            labels[n] = self._labels[n]
            edges[n] = list(self._edges[n])
            todo.extend(m for _, m in edges[n])
        return Completion(root, labels, edges)

    def satisfiable(self, c: Concept, witness: bool = False) -> TableauResult:
        with self._lock:
            self._budget = self.node_limit
            limit = sys.getrecursionlimit()
            sys.setrecursionlimit(max(limit, 20_000))
            try:
                nid, _ = self._node(tuple(dict.fromkeys((nnf(c),) + self.gcis)), [])
            finally:
                sys.setrecursionlimit(limit)
            if nid is None:
                return TableauResult(False)
            return TableauResult(True, self._witness(nid) if witness else None)

    def label_satisfiable(self, concepts) -> bool:
        """Satisfiability of a node seeded with ``concepts`` (already NNF) plus the TBox."""
        with self._lock:
            self._budget = self.node_limit
            nid, _ = self._node(tuple(dict.fromkeys(tuple(concepts) + self.gcis)), [])
            return nid is not None

    # ABox

    def abox_consistent(self, assertions) -> bool:
        with self._lock:
            self._budget = self.node_limit
            inds: dict[str, list] = {}
            out: dict[str, list[tuple[str, str]]] = {}
            for a in assertions:
                if isinstance(a, ConceptAssertion):
                    inds.setdefault(a.individual, []).append(nnf(a.concept))
                elif isinstance(a, RoleAssertion):
                    inds.setdefault(a.subject, [])
                    inds.setdefault(a.object, [])
                    out.setdefault(a.subject, []).append((a.role, a.object))
                else:
                    raise TypeError(f"not an assertion: {a!r}")
            if not inds:
                return self.satisfiable(Top()).satisfiable
            labels = {i: {} for i in inds}
            stacks = {i: list(reversed(cs + list(self.gcis))) for i, cs in inds.items()}
            for labs in self._abox_branches(labels, stacks, out):
                if all(
                    self._node(self._successor_seed(lab, c), [])[0] is not None
                    for lab in labs.values()
                    for c in lab
                    if isinstance(c, Exists)
                ):
                    return True
            return False

    def _abox_add(self, labels, stacks, out) -> bool:
        pending = True
        while pending:
            pending = False
            for ind, stack in stacks.items():
                while stack:
                    pending = True
                    c = stack.pop()
                    label = labels[ind]
                    if c in label or isinstance(c, Top):
                        continue
                    if isinstance(c, Bot):
                        return False
                    if isinstance(c, Name) and Not(c) in label:
                        return False
                    if isinstance(c, Not) and c.arg in label:
                        return False
                    label[c] = None
                    if isinstance(c, And):
                        stack.append(c.right)
                        stack.append(c.left)
                    elif isinstance(c, Forall):
                        for role, other in out.get(ind, ()):
                            if role == c.role:
                                stacks[other].append(c.filler)
        return True

    def _abox_branches(self, labels, stacks, out):
        if not self._abox_add(labels, stacks, out):
            return
        for ind, label in labels.items():
            for c in label:
                if isinstance(c, Or) and c.left not in label and c.right not in label:
                    for pick in (c.left, c.right):
                        copy = {i: dict(lab) for i, lab in labels.items()}
                        new_stacks = {i: [] for i in labels}
                        new_stacks[ind].append(pick)
                        yield from self._abox_branches(copy, new_stacks, out)
                    return
        yield labels


def is_satisfiable(c: Concept, t, witness: bool = True) -> TableauResult:
    """Concept satisfiability with respect to a TBox (a :class:`TBoxView` or axiom list)."""
    return TBoxView.of(t).satisfiable(c, witness=witness)


def subsumes(t, c: Concept, d: Concept) -> bool:
    """True iff ``c <= d`` follows from the TBox."""
    return not TBoxView.of(t).satisfiable(And(c, Not(d))).satisfiable


def kb_consistent(t, assertions=()) -> bool:
    return TBoxView.of(t).abox_consistent(tuple(assertions))


def equivalent(t, c: Concept, d: Concept) -> bool:
    view = TBoxView.of(t)
    return subsumes(view, c, d) and subsumes(view, d, c)

