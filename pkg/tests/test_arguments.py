from delp import ArgumentBuilder, Mode, corpus, ground_program, parse_program
from delp.arguments import ASSUMPTION_ATTACK, Argument, is_subargument

from helpers import arg_with, lit


def builder(name):
    return ArgumentBuilder(ground_program(corpus.load(name)))


def builder_for(text, mode=Mode()):
    return ArgumentBuilder(ground_program(parse_program(text, mode)))


def test_two_arguments_for_flies():
    b = builder("birds")
    found = [a.rule_keys for a in b.arguments_for(lit("flies(tina)"))]
    assert found == [("flies(tina) -< bird(tina)",), ("flies(tina) -< chicken(tina), scared(tina)",)]


def test_strictly_derived_literal_has_empty_argument():
    b = builder("birds")
    assert b.arguments_for(lit("~flies(tweety)")) == [Argument(frozenset(), lit("~flies(tweety)"))]


def test_union_is_not_an_argument():
    b = builder("union_conflict")
    # each of b -< c and b -< d alone makes Pi contradictory through p and ~p
    assert b.arguments_for(lit("h")) == []
    v = builder("union")
    assert sorted(a.rule_keys for a in v.arguments_for(lit("h"))) == [("b -< c",), ("b -< d",)]


def test_subarguments():
    b = builder("birds")
    a4 = b.arguments_for(lit("nests_in_trees(tina)"))[0]
    a2 = arg_with(b, "flies(tina)", "flies(tina) -< bird(tina)")
    assert is_subargument(a2, a4)
    assert is_subargument(a4, a4)
    assert is_subargument(Argument(frozenset(), lit("scared(tina)")), a4)


def test_disagreement():
    b = builder_for("~h <- b. h <- a. c.")
    assert b.disagree(lit("a"), lit("b"))
    assert b.disagree(lit("p"), lit("~p"))
    assert builder("strict_conflict").disagree(lit("a"), lit("c"))
    assert not builder("strict_conflict").disagree(lit("a"), lit("b"))


def test_direct_and_inner_attacks():
    b = builder("birds")
    a1 = arg_with(b, "~flies(tina)", "~flies(tina) -< chicken(tina)")
    a2 = arg_with(b, "flies(tina)", "flies(tina) -< bird(tina)")
    assert a1 in [r.attacker for r in b.counter_arguments(a2)]
    assert a2 in [r.attacker for r in b.counter_arguments(a1)]
    a4 = arg_with(b, "nests_in_trees(tina)", "flies(tina) -< bird(tina)", "nests_in_trees(tina) -< flies(tina)")
    points = {r.point for r in b.counter_arguments(a4) if r.attacker == a1}
    assert points == {lit("flies(tina)")}
    report = next(r for r in b.counter_arguments(a4) if r.attacker == a1)
    assert report.subargument == a2


def test_attack_through_strict_rules():
    b = builder("strict_conflict")
    a = b.arguments_for(lit("a"))[0]
    c = b.arguments_for(lit("c"))[0]
    # h is reached from a through h <- a, so it is an attack point too
    assert [r.point for r in b.counter_arguments(a) if r.attacker == c] == [lit("a"), lit("h")]


def test_nonmonotonic_construction():
    assert [a.rule_keys for a in builder("nonmonotonic").arguments_for(lit("h"))] == [("h -< a",)]
    assert builder("nonmonotonic_blocked").arguments_for(lit("h")) == []


def test_assumption_attacks():
    dn = Mode(default_negation=True)
    b = builder_for("go -< not coming. coming -< horn. horn.", dn)
    target = b.arguments_for(lit("go"))[0]
    attacks = b.assumption_attacks(target)
    assert [(r.attacker.conclusion, r.kind) for r in attacks] == [(lit("coming"), ASSUMPTION_ATTACK)]
    quiet = builder_for("go -< not coming. at(me).", dn)
    assert quiet.assumption_attacks(quiet.arguments_for(lit("go"))[0]) == []
    assert b.assumption_attacks(b.arguments_for(lit("coming"))[0]) == []


def test_assumed_literal_cannot_be_derived():
    # the argument for a would have to use both rules, and it derives b while assuming not b
    b = builder_for("a -< c, not b. b -< c. c.", Mode(default_negation=True))
    assert b.arguments_for(lit("a"))[0].rule_keys == ("a -< c, not b",)
    b = builder_for("a -< b, not b. b -< c. c.", Mode(default_negation=True))
    assert b.arguments_for(lit("a")) == []


def _check_argument(b, a):
    rules = a.rules
    assert a.conclusion in b.closure_with(rules)
    assert b.is_consistent(rules)
    for r in rules:
        assert a.conclusion not in b.closure_with(rules - {r}) or not b.is_consistent(rules - {r})
    assert not (b.closure_with(rules) & a.assumptions)


def test_structural_propositions_over_corpus():
    for name in corpus.names():
        b = ArgumentBuilder(ground_program(corpus.load(name)))
        for a in b.all_arguments():
            _check_argument(b, a)
            reports = b.counter_arguments(a)
            if not a.rules:
                assert reports == []
            for r in reports:
                assert r.attacker.rules, "an empty argument never counter-argues"
                assert r.attacker != r.attacked
                assert r.subargument.rules <= a.rules
            for r in reports:
                if r.point == a.conclusion:
                    back = [x for x in b.counter_arguments(r.attacker) if x.attacker == a]
                    assert back, f"{name}: {a} attacks {r.attacker} only one way"
