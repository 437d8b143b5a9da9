import random

import pytest

from delp import (
    NO, UNDECIDED, UNKNOWN, YES, CriterionConfig, ResourceLimitError, corpus, mark_tree,
)
from delp.dialectics import (
    BLOCKING, BLOCKING_AFTER_BLOCKING, DEFEATED, NOT_CONCORDANT_INTERFERING,
    NOT_CONCORDANT_SUPPORTING, PROPER, SUBARGUMENT_REINTRODUCED, UNDEFEATED, ArgumentationLine,
    DialecticalTree, Node, line_violations,
)

from helpers import arg_with, ask, lit, reasoner


def shape(node):
    """(conclusion, mark, children) with rule sets left out."""
    return (str(node.argument.conclusion), node.mark, [shape(c) for c in node.live_children])


def test_example_tree_shape_and_marks():
    d = reasoner("tree").dialectic
    root = d.builder.arguments_for(lit("a"))[0]
    tree = mark_tree(d.build_tree(root))
    assert shape(tree.root) == ("a", "D", [
        ("~b", "U", []),
        ("~b", "D", [
            ("~f", "D", [("~h", "U", [])]),
            ("~f", "U", []),
        ]),
        ("~b", "U", []),
    ])
    b1, b2, b3 = tree.root.children
    assert b1.argument.rule_keys == ("~b -< c, d",)
    assert b2.argument.rule_keys == ("f -< g", "~b -< c, f")
    assert b3.argument.rule_keys == ("~b -< e",)
    assert b3.defeater.kind == BLOCKING
    # b -< c attacks B3 but is the sub-argument of the root that B3 attacked
    rejected = {str(x.argument): why for x, why in b3.rejected}
    assert SUBARGUMENT_REINTRODUCED in rejected["<{b -< c}, b>"]


def test_more_specific_counter_argument_is_not_a_defeater():
    d = reasoner("tree").dialectic
    b1 = arg_with(d.builder, "~b", "~b -< c, d")
    assert any(r.attacker.rule_keys == ("b -< c",) for r in d.builder.counter_arguments(b1))
    assert d.defeaters_of(b1) == []


def test_pruned_run():
    d = reasoner("tree").dialectic
    root = d.builder.arguments_for(lit("a"))[0]
    tree = d.pruned_tree(root)
    assert tree.mark == DEFEATED
    live = [n for n in tree.nodes() if not n.pruned]
    assert len(live) == 2 and tree.expanded == 2 and tree.pruned == 2
    assert d.warrants_pruned(lit("a")) is None and d.warrants(lit("a")) is None


def test_answers_of_the_example():
    for q, want in [("a", UNDECIDED), ("~b", YES), ("b", NO), ("w", UNKNOWN), ("~a", UNDECIDED)]:
        assert ask("tree", q) == want
        assert ask("tree", q, pruned=False) == want
    found = reasoner("tree").dialectic.warrants(lit("~b"))
    assert found[0].rule_keys == ("~b -< c, d",)


def test_single_node_trees():
    d = reasoner("birds").dialectic
    arg = d.builder.arguments_for(lit("~flies(tweety)"))[0]
    tree = mark_tree(d.build_tree(arg))
    assert tree.nodes() == [tree.root] and tree.mark == UNDEFEATED
    pruned = d.pruned_tree(arg)
    assert pruned.pruned == 0 and pruned.mark == UNDEFEATED


def test_marking_rules():
    leaf = DialecticalTree(Node(None))
    assert mark_tree(leaf).mark == UNDEFEATED
    two = DialecticalTree(Node(None, children=[Node(None)]))
    assert mark_tree(two).mark == DEFEATED


def test_repeated_argument_rejected():
    for name in ("repeated", "repeated_twice"):
        d = reasoner(name).dialectic
        tree = mark_tree(d.build_tree(d.builder.arguments_for(lit("a"))[0]))
        assert len(tree.root.children) == 1 and tree.root.children[0].children == []
        reasons = [why for _, why in tree.root.children[0].rejected]
        assert all(BLOCKING_AFTER_BLOCKING in why for why in reasons)
        assert any(SUBARGUMENT_REINTRODUCED in why for why in reasons)
        assert ask(name, "a") == UNDECIDED


def test_reciprocal_defeaters_terminate():
    assert ask("reciprocal", "b") == NO and ask("reciprocal", "d") == NO
    d = reasoner("reciprocal").dialectic
    for q in ("b", "d"):
        tree = mark_tree(d.build_tree(d.builder.arguments_for(lit(q))[0]))
        assert len(tree.nodes()) == 2 and tree.root.children[0].defeater.kind == PROPER


def test_concordance_rejections():
    d = reasoner("concordance").dialectic
    b = arg_with(d.builder, "p", "p -< d, h")
    c = arg_with(d.builder, "~p", "~a -< e", "~p -< ~a, d, h")
    tree = mark_tree(d.build_tree(b))
    (child,) = tree.root.children
    assert child.argument == c
    assert [why for _, why in child.rejected] == [[NOT_CONCORDANT_SUPPORTING]]
    tree = mark_tree(d.build_tree(c))
    (child,) = tree.root.children
    assert [why for _, why in child.rejected] == [[NOT_CONCORDANT_SUPPORTING]]
    # neither B nor C is warranted
    assert d.warrants(lit("p")) is None
    assert all(t.mark == DEFEATED for t in [mark_tree(d.build_tree(b)), mark_tree(d.build_tree(c))])


def test_interfering_concordance_is_checked():
    d = reasoner("concordance").dialectic
    f = arg_with(d.builder, "~p", "f -< d")
    tree = mark_tree(d.build_tree(f))
    reasons = [why for n in tree.nodes() for _, why in n.rejected]
    assert [NOT_CONCORDANT_INTERFERING] in reasons


def test_blocking_cannot_answer_blocking():
    for q in ("dangerous(hobbes)", "~dangerous(hobbes)"):
        assert ask("hobbes", q) == UNDECIDED
        assert ask("hobbes", q, pruned=False) == UNDECIDED
    d = reasoner("hobbes").dialectic
    for arg in d.builder.arguments_for(lit("~dangerous(hobbes)")):
        assert mark_tree(d.build_tree(arg)).mark == DEFEATED


def test_trace_names_the_condition():
    lines = []
    r = reasoner("hobbes")
    r.dialectic.trace = lines.append
    r.ask("~dangerous(hobbes)")
    assert any("rejected: " + BLOCKING_AFTER_BLOCKING in l for l in lines)
    assert any("extends the line" in l for l in lines)


def test_line_violations_directly():
    d = reasoner("hobbes").dialectic
    a1, a3 = d.builder.arguments_for(lit("~dangerous(hobbes)"))
    (a2,) = d.defeaters_of(a1)
    line = ArgumentationLine.start(a1).extend(a2)
    answer = next(x for x in d.defeaters_of(a2.argument) if x.argument == a3)
    assert line_violations(d.builder, line, answer) == [BLOCKING_AFTER_BLOCKING]
    assert line.supporting == (a1,) and line.interfering == (a2.argument,)


def test_answer_tables():
    table = {
        "birds": {"flies(tina)": YES, "~flies(tina)": NO, "flies(tweety)": NO, "~flies(tweety)": YES},
        "nixon": {"pacifist(nixon)": UNDECIDED, "~pacifist(nixon)": UNDECIDED, "has_a_gun(nixon)": YES},
        "strict_conflict": {"a": UNDECIDED, "c": UNDECIDED},
        "stocks": {"buy_stock(acme)": YES, "buy_stock(alfa)": UNKNOWN},
    }
    for name, rows in table.items():
        for q, want in rows.items():
            assert ask(name, q) == want, (name, q)


def test_warranted_sets():
    assert {str(l) for l in reasoner("reinstatement").warranted()} == {"a", "~c", "b", "i", "j"}
    assert [str(l) for l in reasoner("strict_conflict").warranted()] == ["b", "d"]


def test_resource_limit():
    from delp import Reasoner
    r = Reasoner(corpus.load("tree"), max_nodes=1)
    with pytest.raises(ResourceLimitError):
        r.ask("a")


def _check_tree(d, tree):
    for path in tree.lines():
        line = ArgumentationLine.start(path[0].argument)
        for node in path[1:]:
            assert node.defeater in d.defeaters_of(line.arguments[-1])
            assert line_violations(d.builder, line, node.defeater) == []
            line = line.extend(node.defeater)
    for node in tree.nodes():
        live = [c.mark for c in node.live_children]
        assert node.mark == (UNDEFEATED if all(m == DEFEATED for m in live) else DEFEATED)


def _shuffle(node, rng):
    rng.shuffle(node.children)
    for c in node.children:
        _shuffle(c, rng)


def test_tree_invariants_over_corpus():
    rng = random.Random(1)
    for name in corpus.names():
        r = reasoner(name)
        d = r.dialectic
        for arg in d.builder.all_arguments():
            tree = mark_tree(d.build_tree(arg))
            _check_tree(d, tree)
            for _ in range(3):
                before = tree.mark
                _shuffle(tree.root, rng)
                assert mark_tree(tree).mark == before
            assert d.pruned_tree(arg).mark == tree.mark
            if not arg.rules:
                assert tree.nodes() == [tree.root]


def test_priority_answers():
    cfg = CriterionConfig("priorities")
    assert ask("stocks_priority", "~buy_stock(acme)", cfg) == YES
    assert ask("stocks_priority", "buy_stock(acme)", cfg) == NO
    assert ask("stocks_priority", "buy_stock(acme)") == UNDECIDED


def test_extended_modes():
    assert ask("assumption", "a") == YES
    combined = CriterionConfig("combined")
    assert ask("assumption_priorities", "~p", combined) == YES
    assert ask("railway", "cross_railway_tracks") == YES
    assert ask("railway_train", "cross_railway_tracks") == UNDECIDED
