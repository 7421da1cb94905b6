import itertools

import pytest

from aspjust import (
    LiteralNotInLanguageError,
    UnknownArgumentError,
    corresponding_arguments,
    corresponding_stable_extension,
    derives_mp,
    enumerate_answer_sets,
    is_admissible,
    is_stable,
    lit,
    parse_program,
    stable_extensions,
    translate,
)
from aspjust.aba import ASSUMPTION, FACT, RULE

from helpers import corpus, golden, id_map, program


@pytest.fixture(scope="module")
def p1():
    g = golden("p1.json")
    p = program(g["program"])
    f = translate(p)
    return g, p, f, id_map(f, g["arguments"])


def test_p1_arguments_match_reference_numbering(p1):
    g, _, f, ids = p1
    assert len(f.arguments) == 14
    # ordering assumption args, rule args, fact args reproduces the reference ids
    assert ids == {k: k for k in g["arguments"]}
    assert [a.kind for a in f.arguments] == [ASSUMPTION] * 8 + [RULE] * 5 + [FACT]


def test_p1_attacks(p1):
    _, _, f, _ = p1
    # -a attacks every argument resting on not -a
    assert f.attacks.attacked_by("A11") == ["A2", "A9", "A13"]
    assert f.attacks.attackers("A10") == ["A12", "A13", "A14"]
    assert f.attacks.attackers("A14") == []
    assert f.attacks.attacks("A14", "A7")


def test_p1_stable_extensions(p1):
    g, p, f, ids = p1
    exts = stable_extensions(f)
    assert [e.members for e in exts] == [frozenset(ids[a] for a in e) for e in g["extensions"]]
    for e, s in zip(exts, enumerate_answer_sets(p).answer_sets):
        assert corresponding_stable_extension(f, s) == e
        assert e.assumption_base == s.delta
        assert is_stable(f, e.members) and is_admissible(f, e.members)


def test_p2_restricted_extension():
    g = golden("p2.json")
    p = program(g["program"])
    f = translate(p)
    ids = id_map(f, g["arguments"])
    # the framework also holds the not -x assumption arguments left out of the reference
    assert len(f.arguments) == 9
    (s,) = enumerate_answer_sets(p).answer_sets
    e = corresponding_stable_extension(f, s)
    back = {v: k for k, v in ids.items()}
    assert sorted(back[m] for m in e.members if m in back) == g["extension_restricted"]


@pytest.mark.parametrize("name", ["p3.json", "p4.json"])
def test_single_extension_examples(name):
    g = golden(name)
    p = program(g["program"])
    f = translate(p)
    ids = id_map(f, g["arguments"])
    (e,) = stable_extensions(f)
    assert e.members == frozenset(ids[a] for a in g["extension"])


def test_lookup_errors(p1):
    _, _, f, _ = p1
    with pytest.raises(UnknownArgumentError):
        f.argument("A99")
    with pytest.raises(LiteralNotInLanguageError):
        f.arguments_for(lit("z"))
    with pytest.raises(LiteralNotInLanguageError):
        f.contrary(lit("a"))
    assert f.contrary(lit("not -a")) == lit("-a")
    assert f.arguments_for(lit("c"))[0].id == "A12"
    assert f.arguments_for(lit("-c")) == []


def test_cyclic_derivations_are_deduplicated():
    f = translate(parse_program("p :- p. p. q :- p, not r."))
    assert [a.conclusion for a in f.arguments].count(lit("p")) == 1
    (q,) = f.arguments_for(lit("q"))
    assert q.ap == frozenset([lit("not r")]) and q.fp == frozenset([lit("p")])


def test_fact_argument_shape():
    f = translate(parse_program("a."))
    (a,) = f.arguments_for(lit("a"))
    assert a.kind == FACT and a.ap == frozenset() and a.fp == frozenset([lit("a")])


def _sample():
    return [p for p in corpus()[:200] if enumerate_answer_sets(p).answer_sets]


def test_arguments_are_mp_derivations():
    for p in corpus()[:200]:
        f = translate(p)
        for a in f.arguments:
            assert derives_mp(p, a.ap, a.conclusion)
        # every derivable conclusion is realised by an argument on a subset of the premises
        assumptions = sorted(f.assumptions)
        for r in range(min(3, len(assumptions)) + 1):
            for delta in itertools.combinations(assumptions, r):
                delta = frozenset(delta)
                for k in f.program.literals:
                    if derives_mp(p, delta, k):
                        assert any(a.ap <= delta for a in f.arguments_for(k)), (str(p), k)


def test_corresponding_arguments_cover_s_naf():
    for p in _sample():
        f = translate(p)
        for s in enumerate_answer_sets(p).answer_sets:
            e = corresponding_stable_extension(f, s)
            for k in f.language:
                found = corresponding_arguments(f, e, k)
                assert bool(found) == (k in s.with_naf)
                for a in found:
                    assert a.ap <= s.delta and a.fp <= s.literals


def test_membership_via_assumption_and_fact_arguments():
    for p in _sample():
        f = translate(p)
        for e in stable_extensions(f):
            singles = {a.conclusion: a.id for a in f.arguments if a.kind != RULE}
            for a in f.arguments:
                support = {singles[b] for b in a.ap | a.fp}
                assert (a.id in e.members) == (support <= e.members)
                outside = any(singles[b] not in e.members for b in a.ap)
                assert (a.id not in e.members) == outside
