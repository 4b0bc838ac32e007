"""Evaluate concepts on a finite completion structure.

Kept apart from the tableau on purpose: it re-reads a witness as a plain
interpretation and checks it, sharing no rule logic with the prover.
"""
from __future__ import annotations

from functools import lru_cache

from .concepts import And, Bot, Exists, Forall, Name, Not, Or, Top


def holds_at(witness, concept, node: int) -> bool:
    labels, edges = witness.labels, witness.edges

    @lru_cache(maxsize=None)
    def ev(c, n):
        if isinstance(c, Top):
            return True
        if isinstance(c, Bot):
            return False
        if isinstance(c, Name):
            return c in labels[n]
        if isinstance(c, Not):
            return not ev(c.arg, n)
        if isinstance(c, And):
            return ev(c.left, n) and ev(c.right, n)
        if isinstance(c, Or):
            return ev(c.left, n) or ev(c.right, n)
        if isinstance(c, Exists):
            return any(ev(c.filler, m) for r, m in edges[n] if r == c.role)
        if isinstance(c, Forall):
            return all(ev(c.filler, m) for r, m in edges[n] if r == c.role)
        raise TypeError(f"not a concept: {c!r}")

    return ev(concept, node)


def check_witness(witness, concept, axioms) -> bool:
    """True iff ``concept`` holds at the root and every axiom holds at every node."""
    if not holds_at(witness, concept, witness.root):
        return False
    for ax in axioms:
        gci = Or(Not(ax.lhs), ax.rhs)
        if not all(holds_at(witness, gci, n) for n in witness.labels):
            return False
    return True
