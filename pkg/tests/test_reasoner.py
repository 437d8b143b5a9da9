import doctest

import delp.reasoner
from delp import Mode, Reasoner, corpus


def test_doctests():
    assert doctest.testmod(delp.reasoner).failed == 0


def test_from_file_and_text():
    r = Reasoner.from_file(corpus.path("nixon"))
    assert r.ask("has_a_gun(nixon)").value == "YES"
    r = Reasoner.from_text("go -< not coming. here.", Mode(default_negation=True))
    assert [str(l) for l in r.warranted()] == ["go", "here"]


def test_answer_carries_witness():
    r = Reasoner(corpus.load("birds"))
    yes = r.ask("~flies(tweety)")
    assert yes.argument.rules == frozenset() and yes.tree.mark == "U"
    no = r.ask("flies(tweety)")
    assert str(no.argument.conclusion) == "~flies(tweety)"
    undecided = r.ask("pacifist(nixon)")
    assert undecided.value == "UNKNOWN" and undecided.tree is None
