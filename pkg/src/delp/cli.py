"""Command-line interface: `delp query|repl|check|warranted|oracle`."""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from . import export
from .comparison import CRITERIA, SPECIFICITY, CriterionConfig
from .dialectics import DEFAULT_MAX_NODES, NO, UNDECIDED, YES, Answer, ResourceLimitError
from .model import DelpError, Mode, ValidationError
from .parser import ParseError, load_program, parse_query
from .reasoner import Reasoner

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_RESOURCES = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--criterion", choices=CRITERIA, default=SPECIFICITY)
    p.add_argument("--mode", default="core",
                   help="comma-separated extensions: default-negation, presumptions")
    p.add_argument("--presumption-penalty", action="store_true",
                   help="prefer arguments that use no presumptions")
    p.add_argument("--exhaustive-specificity", action="store_true",
                   help="enumerate every activation set instead of the reduced universe")
    p.add_argument("--max-nodes", type=int, default=DEFAULT_MAX_NODES)
    p.add_argument("--trace", action="store_true", help="report line extensions and rejections on stderr")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="delp", description="Defeasible logic programming interpreter.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    q = sub.add_parser("query", help="answer one or more queries")
    q.add_argument("file")
    q.add_argument("queries", nargs="+", metavar="literal")
    q.add_argument("--tree", choices=("dot", "json", "none"), default="none")
    q.add_argument("--out", help="write the tree export here instead of stdout")
    q.add_argument("--figure", help="render the dialectical trees to this image file")
    q.add_argument("--exhaustive", action="store_true", help="build full trees instead of pruning")
    _common(q)

    r = sub.add_parser("repl", help="interactive session")
    r.add_argument("file", nargs="?")
    _common(r)

    c = sub.add_parser("check", help="parse and validate only")
    c.add_argument("file")
    _common(c)

    w = sub.add_parser("warranted", help="list every warranted literal")
    w.add_argument("file")
    _common(w)

    o = sub.add_parser("oracle", help="compare the engine with the brute-force oracle")
    o.add_argument("file", nargs="?")
    o.add_argument("--fuzz", type=int, default=0, metavar="N", help="also run N random programs")
    o.add_argument("--seed", type=int, default=0)
    o.add_argument("--jsonl", help="write every comparison record to this file")
    _common(o)
    return parser


def _config(args) -> tuple[Mode, CriterionConfig]:
    try:
        mode = Mode.parse(args.mode)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return mode, CriterionConfig(args.criterion, args.presumption_penalty, args.exhaustive_specificity)


def _reasoner(path: str, args, out) -> Reasoner:
    mode, cfg = _config(args)
    program = load_program(path, mode)
    if cfg.criterion == "priorities" and not program.priorities:
        raise UsageError("the priorities criterion needs at least one priority declaration")
    trace = (lambda line: print(line, file=sys.stderr)) if args.trace else None
    reasoner = Reasoner(program, cfg, args.max_nodes)
    reasoner.dialectic.trace = trace
    return reasoner


def answer_trees(ans: Answer) -> list:
    """The witness tree for YES/NO; every examined tree for UNDECIDED."""
    if ans.value in (YES, NO):
        return [ans.tree]
    if ans.value == UNDECIDED:
        return list(ans.examined)
    return []


def _write(text: str, path: Optional[str], out) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        out.write(text)


def _export(trees, fmt: str) -> str:
    return export.to_dot(trees) if fmt == "dot" else export.to_jsonl(trees)


def cmd_query(args, out) -> int:
    reasoner = _reasoner(args.file, args, out)
    queries = [parse_query(q) for q in args.queries]
    trees = []
    for lit in queries:
        ans = reasoner.ask(lit, pruned=not args.exhaustive)
        out.write(ans.value + "\n" if len(queries) == 1 else f"{lit}\t{ans.value}\n")
        trees.extend(answer_trees(ans))
    if args.tree != "none":
        _write(_export(trees, args.tree), args.out, out)
    if args.figure:
        from .plotting import plot_trees

        plot_trees(trees, args.figure, title=", ".join(args.queries))
    return EXIT_OK


def cmd_check(args, out) -> int:
    reasoner = _reasoner(args.file, args, out)
    g = reasoner.ground
    out.write(
        f"ok\t{len(g.facts)} facts\t{len(g.strict)} strict\t{len(g.defeasible)} defeasible"
        f"\t{len(g.priorities)} priorities\n"
    )
    return EXIT_OK


def cmd_warranted(args, out) -> int:
    reasoner = _reasoner(args.file, args, out)
    for lit in reasoner.warranted():
        out.write(f"{lit}\n")
    return EXIT_OK


def cmd_oracle(args, out) -> int:
    from .oracle import OracleLimit, differential_run, fuzz_campaign, render_jsonl, render_text

    mode, cfg = _config(args)
    if not args.file and not args.fuzz:
        raise UsageError("give a program file, --fuzz N, or both")
    reports = []
    if args.file:
        program = load_program(args.file, mode)
        try:
            reports += differential_run(program, cfg, args.file)
        except OracleLimit as exc:
            out.write(f"{args.file}: too large for the oracle ({exc})\n")
    if args.fuzz:
        reports += fuzz_campaign(args.seed, args.fuzz, cfg, default_negation=mode.default_negation)
    out.write(render_text(reports))
    if args.jsonl:
        _write(render_jsonl(reports), args.jsonl, out)
    return EXIT_OK


REPL_HELP = """\
<literal>               answer a query
:load <file>            load another program
:criterion <name>       specificity, priorities or combined
:tree <dot|json> <file> export the trees of the last answer
:warranted              list every warranted literal
:quit                   leave
"""


def cmd_repl(args, out, inp=None) -> int:
    inp = inp or sys.stdin
    interactive = inp.isatty()
    mode, cfg = _config(args)
    reasoner: Optional[Reasoner] = None
    last: Optional[Answer] = None

    def load(path):
        nonlocal reasoner, last
        reasoner = Reasoner(load_program(path, mode), cfg, args.max_nodes)
        last = None
        out.write(f"loaded {path}\n")

    if args.file:
        load(args.file)
    while True:
        if interactive:
            out.write("delp> ")
            out.flush()
        line = inp.readline()
        if not line:
            break
        line = line.strip()
        if not line or line.startswith("%"):
            continue
        try:
            cmd, _, rest = line.partition(" ")
            rest = rest.strip()
            if cmd == ":quit":
                break
            elif cmd == ":help":
                out.write(REPL_HELP)
            elif cmd == ":load":
                load(rest)
            elif cmd == ":criterion":
                cfg = CriterionConfig(rest, cfg.presumption_penalty, cfg.exhaustive_specificity)
                if reasoner is not None:
                    reasoner = Reasoner(reasoner.program, cfg, args.max_nodes)
                out.write(f"criterion {rest}\n")
            elif cmd == ":tree":
                fmt, _, path = rest.partition(" ")
                if fmt not in ("dot", "json") or not path:
                    raise UsageError("usage: :tree <dot|json> <file>")
                if last is None:
                    raise UsageError("no answer to export yet")
                _write(_export(answer_trees(last), fmt), path.strip(), out)
                out.write(f"wrote {path.strip()}\n")
            elif cmd == ":warranted":
                if reasoner is None:
                    raise UsageError("no program loaded")
                out.write(" ".join(str(l) for l in reasoner.warranted()) + "\n")
            elif cmd.startswith(":"):
                raise UsageError(f"unknown command {cmd}; try :help")
            else:
                if reasoner is None:
                    raise UsageError("no program loaded")
                last = reasoner.ask(line)
                out.write(last.value + "\n")
        except (DelpError, UsageError, ValueError, OSError) as exc:
            out.write(f"error: {exc}\n")
    return EXIT_OK


COMMANDS = {
    "query": cmd_query,
    "check": cmd_check,
    "warranted": cmd_warranted,
    "oracle": cmd_oracle,
    "repl": cmd_repl,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"delp: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(exc, file=sys.stderr)
        return EXIT_INPUT
    except ValidationError as exc:
        for v in exc.violations:
            print(f"invalid program: {v}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"delp: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceLimitError as exc:
        print(f"delp: {exc}", file=sys.stderr)
        return EXIT_RESOURCES
    except DelpError as exc:
        print(f"delp: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
