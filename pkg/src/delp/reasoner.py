"""One-stop entry point: parse, validate, ground and answer queries."""

from __future__ import annotations

from typing import Optional, Union

from .comparison import CriterionConfig
from .dialectics import DEFAULT_MAX_NODES, Answer, Dialectic
from .model import Literal, Mode, Program, validate
from .parser import load_program, parse_program, parse_query


class Reasoner:
    """Answers queries against a single validated program.

    >>> r = Reasoner.from_text("b. a -< b.")
    >>> r.ask("a").value
    'YES'
    """

    def __init__(self, program: Program, cfg: Optional[CriterionConfig] = None,
                 max_nodes: int = DEFAULT_MAX_NODES):
        self.program = program
        self.ground = validate(program)
        self.cfg = cfg or CriterionConfig()
        self.dialectic = Dialectic(self.ground, self.cfg, max_nodes)

    @classmethod
    def from_text(cls, text: str, mode: Mode = Mode(), **kw) -> "Reasoner":
        return cls(parse_program(text, mode), **kw)

    @classmethod
    def from_file(cls, path, mode: Mode = Mode(), **kw) -> "Reasoner":
        return cls(load_program(path, mode), **kw)

    @property
    def builder(self):
        return self.dialectic.builder

    def ask(self, query: Union[str, Literal], pruned: bool = True) -> Answer:
        lit = parse_query(query) if isinstance(query, str) else query
        return self.dialectic.answer(lit, pruned)

    def warranted(self, pruned: bool = True) -> list[Literal]:
        return sorted(self.dialectic.warranted_literals(pruned), key=Literal.sort_key)
