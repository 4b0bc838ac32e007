import random

import pytest

from mcl import AtomCapError, SignatureError, TBoxView, compute_ranks, enumerate_types, parse_concept, parse_kb
from mcl import TOP, StrictInclusion
from mcl.canonical import type_concept
from mcl.concepts import Not, conjunction
from mcl.ranking import materialize
from mcl.generate import random_modular_kb


def test_three_types():
    kb = parse_kb("strict:\n  A <= B.\nmodule m subject Top:\n  T(B) <= B.\n")
    dom = enumerate_types(kb)
    rows = {tuple(sorted(dom.positive_atoms(i))) for i in range(len(dom))}
    assert rows == {(), ("B",), ("A", "B")}


def test_unsatisfiable_name_has_no_types():
    kb = parse_kb("strict:\n  A <= Bot.\nmodule m subject Top:\n  T(B) <= C.\n")
    dom = enumerate_types(kb)
    assert not dom.extension(parse_concept("A")).any()


def test_rank_infinity_defaults_hold_everywhere():
    kb = parse_kb("module m subject Top:\n  T(A) <= Bot.\n  T(B) <= C.\n")
    dom = enumerate_types(kb)
    assert not dom.extension(parse_concept("A")).any()
    assert dom.extension(parse_concept("B and not C")).any()


def test_atom_cap():
    text = "module m subject Top:\n" + "".join(f"  T(A{i}) <= B{i}.\n" for i in range(12))
    with pytest.raises(AtomCapError):
        enumerate_types(parse_kb(text), max_atoms=20)


def test_unknown_concept_rejected():
    dom = enumerate_types(parse_kb("module m subject Top:\n  T(A) <= B.\n"))
    with pytest.raises(SignatureError):
        dom.extension(parse_concept("Z"))


def test_boolean_structure_and_complements():
    kb = parse_kb("strict:\n  A <= exists r. B.\nmodule m subject Top:\n  T(A) <= C.\n")
    dom = enumerate_types(kb)
    ex = dom.extension(parse_concept("exists r. B"))
    fa = dom.extension(parse_concept("forall r. not B"))
    assert (ex == ~fa).all()
    a = dom.extension(parse_concept("A"))
    assert (a & ~ex).sum() == 0
    both = dom.extension(parse_concept("A or C"))
    assert (both == (a | dom.extension(parse_concept("C")))).all()


def test_types_match_tableau_consistency():
    """Kept types are consistent with the hard part; dropped assignments are not."""
    rng = random.Random(5)
    for _ in range(25):
        kb = random_modular_kb(rng, roles=("r",))
        t = TBoxView(kb.strict)
        rt = compute_ranks(kb, t)
        dom = enumerate_types(kb, rt=rt, t=t)
        hard = kb.strict
        if rt.infinite:
            hard = hard + (StrictInclusion(TOP, materialize(rt.infinite)),)
        hard = TBoxView(hard)
        present = {tuple(row) for row in dom.bits}
        for i in range(len(dom)):
            assert hard.satisfiable(type_concept(dom, i)).satisfiable
        for _ in range(10):
            row = tuple(rng.random() < 0.5 for _ in dom.atoms)
            if row not in present:
                c = conjunction([a if b else Not(a) for a, b in zip(dom.atoms, row)])
                assert not hard.satisfiable(c).satisfiable
