import pytest

from aspjust import (
    TreeConstructionError,
    UnknownArgumentError,
    build_attack_tree,
    corresponding_stable_extension,
    drop_root,
    enumerate_answer_sets,
    enumerate_attack_trees,
    is_admissible_dispute_tree,
    is_dispute_tree,
    minus_arguments,
    plus_arguments,
    translate,
    translate_dispute_tree,
    unfold,
)
from aspjust.attack_trees import MINUS, PLUS, OPPONENT, PROPONENT

from helpers import golden, id_map, program, tree_shape


@pytest.fixture(scope="module")
def p1():
    g = golden("p1.json")
    p = program(g["program"])
    f = translate(p)
    exts = [corresponding_stable_extension(f, s) for s in enumerate_answer_sets(p).answer_sets]
    return g, f, exts, id_map(f, g["arguments"])


def test_golden_trees(p1):
    g, f, exts, ids = p1
    back = {v: k for k, v in ids.items()}
    for case in g["attack_trees"]:
        trees = enumerate_attack_trees(f, exts[case["answer_set"]], ids[case["root"]])
        assert sorted(tree_shape(t.root, back) for t in trees) == sorted(case["trees"])


def test_explicit_choice(p1):
    _, f, exts, _ = p1
    t = build_attack_tree(f, exts[0], "A10", {"A10": "A14"})
    assert tree_shape(t.root) == ["A10-", ["A14+"]]
    assert t.defender_choice == {"A10": "A14"}
    assert not t.positive


def test_missing_choice_is_an_error(p1):
    _, f, exts, _ = p1
    with pytest.raises(TreeConstructionError, match="A10"):
        build_attack_tree(f, exts[0], "A10")


@pytest.mark.parametrize("choice", [{"A10": "A12"}, {"A10": "A9"}])
def test_bad_choice(p1, choice):
    _, f, exts, _ = p1
    with pytest.raises(TreeConstructionError):
        build_attack_tree(f, exts[0], "A10", choice)


def test_unknown_root(p1):
    _, f, exts, _ = p1
    with pytest.raises(UnknownArgumentError):
        enumerate_attack_trees(f, exts[0], "A42")


def test_positive_tree_of_fact(p1):
    _, f, exts, _ = p1
    (t,) = enumerate_attack_trees(f, exts[1], "A14")
    assert t.positive and tree_shape(t.root) == ["A14+"]


def test_plus_minus_sets(p1):
    _, f, exts, _ = p1
    t = build_attack_tree(f, exts[0], "A10", {"A10": "A13", "A11": "A13"})
    assert plus_arguments(t) == {"A13"}
    assert minus_arguments(t) == {"A10", "A11"}


def test_drop_root():
    p = program("p2.lp")
    f = translate(p)
    (s,) = enumerate_answer_sets(p).answer_sets
    e = corresponding_stable_extension(f, s)
    a = f.arguments_for(next(l for l in f.language if str(l) == "a"))[0]
    (t,) = enumerate_attack_trees(f, e, a.id)
    sub = drop_root(f, t)
    assert sub.positive
    assert sub.root.argument == t.root.children[0].argument
    assert f.argument(sub.root.argument).conclusion == next(iter(s.literals))
    with pytest.raises(TreeConstructionError):
        drop_root(f, sub)


def test_unfold_expands_repeats(p1):
    _, f, exts, _ = p1
    t = build_attack_tree(f, exts[0], "A10", {"A10": "A13", "A11": "A13"})
    assert tree_shape(unfold(t, 0).root) == tree_shape(t.root)
    assert tree_shape(unfold(t, 1).root) == ["A10-", ["A13+", ["A11-", ["A13+", ["A11-", ["A13+ repeat"]]]]]]
    deep = unfold(t, 3)
    assert sum(1 for n in deep.nodes() if n.is_repeat) == 1
    assert plus_arguments(deep) == plus_arguments(t)


def test_dispute_tree_translation(p1):
    _, f, exts, _ = p1
    (t,) = enumerate_attack_trees(f, exts[0], "A9")
    dt = translate_dispute_tree(t)
    assert dt.root.status == PROPONENT
    assert {n.status for n in dt.nodes()} <= {PROPONENT, OPPONENT}
    assert is_dispute_tree(f, dt)
    assert is_admissible_dispute_tree(dt)


def test_negative_tree_is_not_a_dispute_tree(p1):
    _, f, exts, _ = p1
    t = enumerate_attack_trees(f, exts[0], "A10")[0]
    assert not is_dispute_tree(f, translate_dispute_tree(t))


def test_node_signs_follow_membership(p1):
    _, f, exts, _ = p1
    for e in exts:
        for a in f.arguments:
            for t in enumerate_attack_trees(f, e, a.id):
                for n in t.nodes():
                    assert (n.sign == PLUS) == (n.argument in e.members)
                    if n.sign == MINUS and not n.is_repeat:
                        assert len(n.children) <= 1
