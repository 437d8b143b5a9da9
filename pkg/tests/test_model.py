import itertools

import pytest

from delp import (
    GroundingError, Literal, Program, ValidationError, complement, corpus, ground_program,
    in_language, parse_program, validate,
)
from delp.model import violations

from helpers import lit


@pytest.mark.parametrize("text, expected", [("p", "~p"), ("~p", "p"), ("flies(tina)", "~flies(tina)")])
def test_complement(text, expected):
    assert complement(lit(text)) == lit(expected)
    assert complement(complement(lit(text))) == lit(text)


def test_complement_rejects_variables():
    with pytest.raises(ValueError):
        complement(Literal("p", ("X",)))


def test_grounding_counts():
    g = ground_program(corpus.load("birds"))
    flies = [r for r in g.defeasible if str(r.head) in ("flies(tina)", "flies(tweety)") and len(r.body) == 1]
    assert len(flies) == 2
    g4 = ground_program(corpus.load("stocks"))
    risky = [r for r in g4.defeasible if r.head.predicate == "risky_company" and not r.head.negated and r.body[0].literal.predicate == "in_fusion"]
    assert len(risky) == 4


def test_grounding_is_idempotent():
    for name in corpus.names():
        g = ground_program(corpus.load(name))
        assert ground_program(g) == g


def test_grounding_instances_match_schemata():
    p = parse_program("q(X, Y) -< r(X), s(Y). ~r(X) <- t(X). r(a). s(b). t(c). u(d).")
    g = ground_program(p)
    consts = sorted(p.constants)
    expected = set()
    for rule in p.rules:
        names = sorted(rule.variables())
        for combo in itertools.product(consts, repeat=len(names)):
            expected.add(rule.substitute(dict(zip(names, combo))))
    assert set(g.rules) == expected


def test_grounding_needs_constants():
    with pytest.raises(GroundingError):
        ground_program(parse_program("p(X) -< q(X)."))


def test_in_language():
    g = ground_program(corpus.load("tree"))
    assert not in_language(g, lit("w"))
    assert in_language(g, lit("~a"))
    g4 = ground_program(corpus.load("stocks"))
    assert not in_language(g4, lit("buy_stock(alfa)"))
    assert in_language(ground_program(corpus.load("birds")), lit("flies(tina)"))
    # right predicate, wrong arity
    assert not in_language(g4, lit("buy_stock"))


def test_validate_accepts_every_corpus_program():
    for name in corpus.names():
        validate(corpus.load(name))


def test_validate_rejects_contradictory_pi():
    with pytest.raises(ValidationError) as info:
        validate(parse_program("b. ~b."))
    assert "b" in info.value.violations[0]


def test_validate_reports_cyclic_priorities():
    from delp.model import Rule, BodyAtom
    r1 = Rule(lit("a"), (BodyAtom(lit("b")),), label="r1")
    r2 = Rule(lit("~a"), (BodyAtom(lit("b")),), label="r2")
    p = Program((lit("b"),), (), (r1, r2), (("r1", "r2"), ("r2", "r1")))
    assert any("cycl" in v for v in violations(p))


def test_program_equality_ignores_order():
    assert parse_program("a. b -< a.") == parse_program("b -< a. a.")
