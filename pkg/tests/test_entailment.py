import random

import pytest

from conftest import fixture_path

from mcl import (
    InconsistentKBError,
    Session,
    entails,
    entails_classical,
    entails_mcl,
    entails_mclt,
    entails_module,
    parse_kb,
    parse_query,
)
from mcl.generate import random_modular_kb, random_query


def test_birds(kb_of):
    kb = kb_of("birds")
    assert entails_mcl(kb, "T(Bird) <= Fly.").entailed
    assert entails_mcl(kb, "T(Penguin) <= not Fly.").entailed
    assert entails_mcl(kb, "T(Penguin and Bird) <= not Fly.").entailed
    v = entails_mcl(kb, "T(Bird) <= Penguin.")
    assert not v.entailed and v.witness_bits["Bird"] and not v.witness_bits["Penguin"]


def test_homeowner_conflict_left_open(kb_of):
    kb = kb_of("homeowner")
    s = Session(kb, ["T(PhDStudent and Italian) <= HomeOwner.", "T(PhDStudent and Italian) <= not HomeOwner."])
    for q in s.queries:
        v = s.entails(q, "mcl")
        assert not v.entailed
        assert v.witness is not None
        assert s.domain.extension(q.antecedent)[v.witness]
        assert not s.domain.extension(q.consequent)[v.witness]


def test_flat_vs_modular(kb_of):
    q = "T(PhDStudent and Italian) <= not HomeOwner."
    assert entails_mcl(kb_of("homeowner_flat"), q).entailed
    assert not entails_mcl(kb_of("homeowner_modular"), q).entailed


def test_module_scoped(kb_of):
    kb = kb_of("students_core")
    assert entails_module(kb, "m2", "T(PhDStudent) <= Young.").entailed
    with pytest.raises(KeyError):
        entails_module(kb, "nope", "T(PhDStudent) <= Young.")


def test_students_compliance_needs_subsumptions(kb_of):
    kb = kb_of("students_core")
    v = entails_mclt(kb, "T(PhDStudent) <= Young.")
    assert v.vacuous
    assert set(v.violated) == {"T(ForeignEmployee) <= exists has_Visa. Top.", "T(HighSchoolStudent) <= Teenager."}
    text = open(fixture_path("students_core")).read()
    fixed = parse_kb(text.replace("strict:\n", "strict:\n  ForeignEmployee <= Employee.\n"
                                  "  HighSchoolStudent <= Student.\n", 1))
    v = entails_mclt(fixed, "T(PhDStudent) <= Young.")
    assert v.t_compliance == "compliant" and v.entailed and not v.vacuous


def test_youngperson_variant(kb_of):
    kb = kb_of("youngperson_strict")
    s = Session(kb, ["T(Student) <= Quiet."])
    ok, bad = s.compliance()
    assert not ok and [str(d) for d in bad] == ["T(Student) <= Quiet."]
    v = s.entails("T(Student) <= Quiet.", "mclt")
    assert v.vacuous and v.entailed and v.label == "vacuous"
    v = s.entails("T(Student) <= Quiet.", "mcl")
    assert not v.vacuous and not v.entailed


def test_mcl_implies_mclt_on_compliant_kbs():
    rng = random.Random(9)
    checked = 0
    for _ in range(60):
        kb = random_modular_kb(rng)
        queries = [random_query(rng, ("A", "B", "C", "D")) for _ in range(8)]
        s = Session(kb, queries)
        if not s.compliance()[0]:
            continue
        checked += 1
        for q in queries:
            if s.entails(q, "mcl").entailed:
                assert s.entails(q, "mclt").entailed
    assert checked > 10


def test_signature_invariance():
    rng = random.Random(4)
    for _ in range(30):
        kb = random_modular_kb(rng)
        q = random_query(rng, ("A", "B", "C", "D"))
        small = Session(kb, [q]).entails(q).entailed
        big = Session(kb, [q, parse_query("T(Extra) <= Other.")]).entails(q).entailed
        assert small == big


def test_classical():
    kb = parse_kb("strict:\n  A <= B.\nmodule m subject Top:\n  T(B) <= C.\nabox:\n  A(a).\n")
    assert entails_classical(kb, "A <= B.")
    assert not entails_classical(kb, "B <= C.")
    assert entails_classical(kb, "B(a).")
    assert not entails_classical(kb, "C(a).")
    assert entails(kb, "B(a).", "classical").entailed


def test_inconsistent_kb_rejected():
    kb = parse_kb("strict:\n  A <= Bot.\nmodule m subject Top:\n  T(B) <= C.\nabox:\n  A(a).\n")
    with pytest.raises(InconsistentKBError):
        entails_mcl(kb, "T(B) <= C.")
    assert entails_classical(kb, "B <= C.")


def test_unsatisfiable_antecedent_is_entailed():
    kb = parse_kb("strict:\n  A <= Bot.\nmodule m subject Top:\n  T(B) <= C.\n")
    assert entails_mcl(kb, "T(A) <= C.").entailed
