"""Bundled example programs.

Programs that rely on an extension are listed in MODES; everything else
parses in the core language.
"""

from importlib import resources

from ..model import Mode
from ..parser import parse_program

MODES = {
    "assumption": Mode(default_negation=True),
    "presumptions": Mode(presumptions=True),
    "railway": Mode(default_negation=True),
    "railway_train": Mode(default_negation=True),
    "railway_strong": Mode(default_negation=True),
}


def names() -> list[str]:
    files = resources.files(__name__)
    return sorted(p.name[:-5] for p in files.iterdir() if p.name.endswith(".delp"))


def path(name: str):
    return resources.files(__name__) / f"{name}.delp"


def text(name: str) -> str:
    return path(name).read_text(encoding="utf-8")


def mode(name: str) -> Mode:
    return MODES.get(name, Mode())


def load(name: str):
    return parse_program(text(name), mode(name), f"{name}.delp")
