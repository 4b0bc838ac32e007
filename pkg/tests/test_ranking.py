import math
import random

from mcl import INF, TBoxView, compute_ranks, parse_concept, parse_kb
from mcl.generate import random_modular_kb
from mcl.ranking import exceptional


def test_birds(kb_of):
    rt = compute_ranks(kb_of("birds"))
    assert rt.rank(parse_concept("Bird")) == 0
    assert rt.rank(parse_concept("Penguin")) == 1
    assert rt.order == 2
    assert [len(level) for level in rt.sequence] == [2, 1, 0]


def test_students_example(kb_of):
    rt = compute_ranks(kb_of("students"))
    for name in ["Adult", "Employee", "ForeignEmployee", "Driver", "Student", "HighSchoolStudent",
                 "PrimarySchoolStudent"]:
        assert rt.rank(parse_concept(name)) == 0, name
    assert rt.rank(parse_concept("PhDStudent")) == 1
    assert rt.rank(parse_concept("Employee and Student")) == 1


def test_infinite_ranks():
    kb = parse_kb("module m subject Top:\n  T(A) <= Bot.\n  T(B) <= C.\n")
    rt = compute_ranks(kb)
    assert rt.rank(parse_concept("A")) == INF
    assert rt.rank(parse_concept("Bot")) == INF
    assert rt.rank(parse_concept("B")) == 0
    assert rt.rank(parse_concept("Fresh")) == 0
    assert len(rt.infinite) == 1


def test_chain_is_decreasing_and_ranks_consistent():
    rng = random.Random(3)
    for _ in range(60):
        kb = random_modular_kb(rng)
        t = TBoxView(kb.strict)
        rt = compute_ranks(kb, t)
        for a, b in zip(rt.sequence, rt.sequence[1:]):
            assert set(b) <= set(a)
        for d, r in rt.default_rank.items():
            if r != math.inf:
                # rank r: exceptional for E_0..E_{r-1}, not for E_r
                assert not exceptional(t, rt.sequence[int(r)], d.antecedent)
                assert all(exceptional(t, rt.sequence[i], d.antecedent) for i in range(int(r)))
            else:
                assert d in rt.infinite
