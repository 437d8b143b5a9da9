"""Small helpers shared by the test modules."""

from delp import Reasoner, corpus, parse_query


def reasoner(name, cfg=None):
    return Reasoner(corpus.load(name), cfg)


def ask(name, query, cfg=None, pruned=True):
    return reasoner(name, cfg).ask(query, pruned=pruned).value


def lit(text):
    return parse_query(text)


def arg_with(builder, conclusion, *rule_texts):
    """The argument for `conclusion` whose rules print exactly as `rule_texts`."""
    want = tuple(sorted(rule_texts))
    for a in builder.arguments_for(lit(conclusion)):
        if a.rule_keys == want:
            return a
    raise AssertionError(f"no argument {want} for {conclusion}")
