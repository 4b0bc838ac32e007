"""Canonical domain: one element per consistent type over the closure signature.

A type fixes every independent atom of the signature (concept names and one
representative per complementary pair of quantified concepts); the truth of
every other signature concept follows from boolean structure. A candidate
assignment is kept iff

* it satisfies every internalised strict axiom and the materialisation of
  every infinite-rank default (checked on the assignment itself), and
* for each true ``exists r.C``, the filler ``C`` together with the fillers of
  all true ``forall r.D`` is satisfiable with respect to the strict TBox.

Together these say exactly that the conjunction of the type's literals has
finite rank, i.e. the tableau accepts it with the infinite-rank
materialisation at the root. Splitting the check this way lets the
successor tests be shared by all types with the same quantified part.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .concepts import And, Bot, Concept, Exists, Forall, Name, Not, Or, Top, negate, nnf, to_string
from .kb import ModularKB, StrictInclusion, signature as build_signature
from .ranking import RankTable, materialize
from .tableau import TBoxView

DEFAULT_MAX_ATOMS = 20
_CHUNK = 1 << 18


class AtomCapError(ValueError):
    def __init__(self, count: int, cap: int):
        super().__init__(
            f"signature has {count} independent atoms, above the cap of {cap}; "
            "prune the knowledge base or raise --max-atoms"
        )
        self.count = count
        self.cap = cap


class SignatureError(KeyError):
    """A concept mentions something the domain was not built for."""

    def __str__(self) -> str:
        return f"{self.args[0]} is not in the signature; rebuild the domain with this query included"


@dataclass(frozen=True)
class DomainType:
    id: int
    membership: tuple[bool, ...]  # one entry per independent atom


def _atoms_of(sig):
    atoms, index = [], {}
    for c in sig:
        if isinstance(c, Name) and c not in index:
            index[c] = (len(atoms), True)
            atoms.append(c)
    for c in sig:
        if isinstance(c, (Exists, Forall)) and c not in index:
            index[c] = (len(atoms), True)
            index[negate(c)] = (len(atoms), False)
            atoms.append(c)
    return atoms, index


def _evaluate(c: Concept, column, index, size: int, memo: dict) -> np.ndarray:
    hit = memo.get(c)
    if hit is not None:
        return hit
    if isinstance(c, Top):
        out = np.ones(size, dtype=bool)
    elif isinstance(c, Bot):
        out = np.zeros(size, dtype=bool)
    elif isinstance(c, (Name, Exists, Forall)):
        try:
            pos, positive = index[c]
        except KeyError:
            raise SignatureError(to_string(c)) from None
        out = column(pos) if positive else ~column(pos)
    elif isinstance(c, Not):
        out = ~_evaluate(c.arg, column, index, size, memo)
    elif isinstance(c, And):
        out = _evaluate(c.left, column, index, size, memo) & _evaluate(c.right, column, index, size, memo)
    elif isinstance(c, Or):
        out = _evaluate(c.left, column, index, size, memo) | _evaluate(c.right, column, index, size, memo)
    else:
        raise TypeError(f"not a concept: {c!r}")
    memo[c] = out
    return out


class CanonicalDomain:
    """Types as rows of a boolean matrix over the independent atoms."""

    def __init__(self, signature, atoms, index, bits: np.ndarray, codes=None):
        self.signature = tuple(signature)
        self.atoms = tuple(atoms)
        self.index = index
        self.bits = bits
        self.codes = codes

    def __len__(self) -> int:
        return self.bits.shape[0]

    def __repr__(self) -> str:
        return f"CanonicalDomain({len(self)} types over {len(self.atoms)} atoms)"

    @property
    def signature_index(self) -> dict[Concept, int]:
        return {c: pos for c, (pos, _) in self.index.items()}

    @property
    def types(self) -> list[DomainType]:
        return [DomainType(i, tuple(bool(b) for b in row)) for i, row in enumerate(self.bits)]

    def extension(self, c: Concept) -> np.ndarray:
        """Boolean mask over types of the instances of ``c``."""
        return _evaluate(nnf(c), lambda pos: self.bits[:, pos], self.index, len(self), {})

    def assignment(self, i: int) -> dict[str, bool]:
        """Truth value of every signature concept at type ``i``, keyed by printed concept."""
        row = self.bits[i : i + 1]
        memo: dict = {}
        return {
            to_string(c): bool(_evaluate(c, lambda pos: row[:, pos], self.index, 1, memo)[0])
            for c in self.signature
        }

    def positive_atoms(self, i: int) -> list[str]:
        return [to_string(a) for a, b in zip(self.atoms, self.bits[i]) if b]

    def with_rows(self, rows) -> "CanonicalDomain":
        """A domain whose elements are the given rows (repetition allowed)."""
        rows = np.asarray(rows, dtype=np.int64)
        codes = None if self.codes is None else self.codes[rows]
        return CanonicalDomain(self.signature, self.atoms, self.index, self.bits[rows], codes)


def enumerate_types(
    kb: ModularKB,
    sig=None,
    rt: RankTable | None = None,
    t=None,
    max_atoms: int = DEFAULT_MAX_ATOMS,
) -> CanonicalDomain:
    from .ranking import compute_ranks

    t = TBoxView.of(kb if t is None else t)
    if sig is None:
        sig = build_signature(kb)
    if rt is None:
        rt = compute_ranks(kb, t)
    atoms, index = _atoms_of(sig)
    n = len(atoms)
    if n > max_atoms:
        raise AtomCapError(n, max_atoms)

    constraints = list(t.gcis)
    constraints += [nnf(Or(Not(d.antecedent), d.consequent)) for d in rt.infinite]
    for c in constraints:
        # strict axioms only mention signature concepts; fail loudly if not
        _evaluate(c, lambda pos: np.ones(1, dtype=bool), index, 1, {})

    kept = []
    for start in range(0, 1 << n, _CHUNK):
        codes = np.arange(start, min(start + _CHUNK, 1 << n), dtype=np.int64)
        cols: dict[int, np.ndarray] = {}

        def column(pos, codes=codes, cols=cols):
            if pos not in cols:
                cols[pos] = ((codes >> pos) & 1).astype(bool)
            return cols[pos]

        ok = np.ones(len(codes), dtype=bool)
        memo: dict = {}
        for c in constraints:
            ok &= _evaluate(c, column, index, len(codes), memo)
        kept.append(codes[ok])
    codes = np.concatenate(kept) if kept else np.zeros(0, dtype=np.int64)
    bits = ((codes[:, None] >> np.arange(n, dtype=np.int64)) & 1).astype(bool)

    quant = [p for p, a in enumerate(atoms) if isinstance(a, (Exists, Forall))]
    if quant and len(codes):
        # successors are domain elements too, so rank-inf materialisations bind them
        hard = t
        if rt.infinite:
            hard = TBoxView(t.axioms + (StrictInclusion(Top(), materialize(rt.infinite)),), t.node_limit)
        patterns, inverse = np.unique(bits[:, quant], axis=0, return_inverse=True)
        good = np.array([_successors_ok(hard, atoms, quant, row) for row in patterns], dtype=bool)
        mask = good[inverse.reshape(-1)]
        codes, bits = codes[mask], bits[mask]
    return CanonicalDomain(sig, atoms, index, bits, codes)


def _successors_ok(t: TBoxView, atoms, quant, row) -> bool:
    true = []
    for p, b in zip(quant, row):
        true.append(atoms[p] if b else negate(atoms[p]))
    for ex in true:
        if isinstance(ex, Exists):
            seed = [ex.filler] + [f.filler for f in true if isinstance(f, Forall) and f.role == ex.role]
            if not t.label_satisfiable(seed):
                return False
    return True


def type_concept(dom: CanonicalDomain, i: int) -> Concept:
    """Conjunction of the literals fixed by type ``i``."""
    lits = []
    for a, b in zip(dom.atoms, dom.bits[i]):
        lits.append(a if b else negate(a))
    result = lits[0] if lits else Top()
    for lit in lits[1:]:
        result = And(result, lit)
    return result


def extension(c: Concept, dom: CanonicalDomain) -> np.ndarray:
    return dom.extension(c)
