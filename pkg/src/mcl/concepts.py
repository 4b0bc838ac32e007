"""ALC concept syntax trees, negation normal form and the canonical printer."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Union


class _Node:
    """Mixin giving frozen concept nodes a precomputed hash.

    Concepts are used as set members and dict keys all over the tableau, so
    recomputing a recursive dataclass hash on every lookup is too slow.
    """

    __slots__ = ()

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        return to_string(self)


def _fix_hash(obj, *parts) -> None:
    object.__setattr__(obj, "_hash", hash((type(obj).__name__,) + parts))


@dataclass(frozen=True, eq=True)
class Top(_Node):
    _hash: int = field(init=False, repr=False, compare=False, default=0)

    def __post_init__(self):
        _fix_hash(self)

    __hash__ = _Node.__hash__


@dataclass(frozen=True, eq=True)
class Bot(_Node):
    _hash: int = field(init=False, repr=False, compare=False, default=0)

    def __post_init__(self):
        _fix_hash(self)

    __hash__ = _Node.__hash__


@dataclass(frozen=True, eq=True)
class Name(_Node):
    name: str
    _hash: int = field(init=False, repr=False, compare=False, default=0)

    def __post_init__(self):
        if not self.name:
            raise ValueError("concept names must be non-empty")
        _fix_hash(self, self.name)

    __hash__ = _Node.__hash__


@dataclass(frozen=True, eq=True)
class Not(_Node):
    arg: "Concept"
    _hash: int = field(init=False, repr=False, compare=False, default=0)

    def __post_init__(self):
        _fix_hash(self, self.arg)

    __hash__ = _Node.__hash__


@dataclass(frozen=True, eq=True)
class And(_Node):
    left: "Concept"
    right: "Concept"
    _hash: int = field(init=False, repr=False, compare=False, default=0)

    def __post_init__(self):
        _fix_hash(self, self.left, self.right)

    __hash__ = _Node.__hash__


@dataclass(frozen=True, eq=True)
class Or(_Node):
    left: "Concept"
    right: "Concept"
    _hash: int = field(init=False, repr=False, compare=False, default=0)

    def __post_init__(self):
        _fix_hash(self, self.left, self.right)

    __hash__ = _Node.__hash__


@dataclass(frozen=True, eq=True)
class Exists(_Node):
    role: str
    filler: "Concept"
    _hash: int = field(init=False, repr=False, compare=False, default=0)

    def __post_init__(self):
        if not self.role:
            raise ValueError("role names must be non-empty")
        _fix_hash(self, self.role, self.filler)

    __hash__ = _Node.__hash__


@dataclass(frozen=True, eq=True)
class Forall(_Node):
    role: str
    filler: "Concept"
    _hash: int = field(init=False, repr=False, compare=False, default=0)

    def __post_init__(self):
        if not self.role:
            raise ValueError("role names must be non-empty")
        _fix_hash(self, self.role, self.filler)

    __hash__ = _Node.__hash__


Concept = Union[Top, Bot, Name, Not, And, Or, Exists, Forall]

TOP = Top()
BOT = Bot()


def conjunction(concepts) -> Concept:
    """Left-nested conjunction; ``Top`` for an empty iterable."""
    result = None
    for c in concepts:
        result = c if result is None else And(result, c)
    return TOP if result is None else result


def disjunction(concepts) -> Concept:
    result = None
    for c in concepts:
        result = c if result is None else Or(result, c)
    return BOT if result is None else result


def nnf(c: Concept) -> Concept:
    """Push negation inward until it sits only on concept names."""
    if isinstance(c, (Top, Bot, Name)):
        return c
    if isinstance(c, And):
        return And(nnf(c.left), nnf(c.right))
    if isinstance(c, Or):
        return Or(nnf(c.left), nnf(c.right))
    if isinstance(c, Exists):
        return Exists(c.role, nnf(c.filler))
    if isinstance(c, Forall):
        return Forall(c.role, nnf(c.filler))
    return negate(c.arg)


def negate(c: Concept) -> Concept:
    """NNF of the complement of ``c``."""
    if isinstance(c, Top):
        return BOT
    if isinstance(c, Bot):
        return TOP
    if isinstance(c, Name):
        return Not(c)
    if isinstance(c, Not):
        return nnf(c.arg)
    if isinstance(c, And):
        return Or(negate(c.left), negate(c.right))
    if isinstance(c, Or):
        return And(negate(c.left), negate(c.right))
    if isinstance(c, Exists):
        return Forall(c.role, negate(c.filler))
    if isinstance(c, Forall):
        return Exists(c.role, negate(c.filler))
    raise TypeError(f"not a concept: {c!r}")


def subconcepts(c: Concept) -> Iterator[Concept]:
    """Post-order walk over every subconcept, ``c`` itself last."""
    if isinstance(c, Not):
        yield from subconcepts(c.arg)
    elif isinstance(c, (And, Or)):
        yield from subconcepts(c.left)
        yield from subconcepts(c.right)
    elif isinstance(c, (Exists, Forall)):
        yield from subconcepts(c.filler)
    yield c


def concept_names(c: Concept) -> set[str]:
    return {s.name for s in subconcepts(c) if isinstance(s, Name)}


def role_names(c: Concept) -> set[str]:
    return {s.role for s in subconcepts(c) if isinstance(s, (Exists, Forall))}


def is_quantified(c: Concept) -> bool:
    return isinstance(c, (Exists, Forall))


# printer precedence: or < and < unary
_PREC = {Or: 1, And: 2}


def to_string(c: Concept) -> str:
    """Canonical text form; ``parse_concept(to_string(c)) == c``."""
    if isinstance(c, Top):
        return "Top"
    if isinstance(c, Bot):
        return "Bot"
    if isinstance(c, Name):
        return c.name
    if isinstance(c, Not):
        return "not " + _operand(c.arg, 3)
    if isinstance(c, (And, Or)):
        kw = " and " if isinstance(c, And) else " or "
        prec = _PREC[type(c)]
        # binary operators are left-associative; a same-level right child needs parens
        return _operand(c.left, prec) + kw + _operand(c.right, prec + 1)
    if isinstance(c, Exists):
        return f"exists {c.role}. {to_string(c.filler)}"
    if isinstance(c, Forall):
        return f"forall {c.role}. {to_string(c.filler)}"
    raise TypeError(f"not a concept: {c!r}")


def _operand(c: Concept, prec: int) -> str:
    text = to_string(c)
    if isinstance(c, (Exists, Forall)):
        return f"({text})"
    p = _PREC.get(type(c))
    if p is not None and p < prec:
        return f"({text})"
    return text
