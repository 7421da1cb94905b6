"""Command-line driver.

Exit codes: 0 success, 1 other failure, 2 parse error, 3 inconsistent
program, 4 literal outside the language, 5 answer-set index out of range,
6 unknown argument id.
"""
from __future__ import annotations

import argparse
import sys

from . import render
from .aba import corresponding_stable_extension, stable_extensions, translate
from .attack_trees import build_attack_tree, enumerate_attack_trees
from .errors import (
    AspJustError,
    GroundingError,
    InconsistentProgramError,
    LiteralNotInLanguageError,
    ParseError,
    UnknownArgumentError,
)
from .justify import justify, justify_all
from .program import enumerate_answer_sets, ground_program
from .syntax import load_program, parse_literal

EXIT_OK, EXIT_ERROR, EXIT_PARSE, EXIT_INCONSISTENT = 0, 1, 2, 3
EXIT_LITERAL, EXIT_INDEX, EXIT_ARGUMENT = 4, 5, 6


class AnswerSetIndexError(AspJustError, IndexError):
    pass


def _load(path):
    return ground_program(load_program(path))


def _answer_sets(p):
    sols = enumerate_answer_sets(p)
    if not sols.consistent:
        raise InconsistentProgramError("the program has no consistent answer set")
    return sols.answer_sets


def _pick(p, index):
    sets = _answer_sets(p)
    if not 0 <= index < len(sets):
        raise AnswerSetIndexError(
            f"answer set index {index} out of range (program has {len(sets)})"
        )
    return sets[index]


def _cfg(args, default=render.TEXT):
    return render.RenderConfig(getattr(args, "format", None) or default,
                               getattr(args, "out", None), getattr(args, "color", False))


def cmd_answersets(args):
    p = _load(args.file)
    sets = _answer_sets(p)
    cfg = _cfg(args)
    if cfg.format == render.JSON:
        cfg.write(render.dumps(render.answer_sets_to_dict(sets)))
    else:
        cfg.write(render.answer_sets_text(sets))


def cmd_framework(args):
    f = translate(_load(args.file))
    cfg = _cfg(args)
    cfg.write(render.export_json(f) if cfg.format == render.JSON else render.framework_text(f))


def cmd_arguments(args):
    f = translate(_load(args.file))
    cfg = _cfg(args)
    if cfg.format == render.JSON:
        cfg.write(render.export_json(list(f.arguments)))
    else:
        cfg.write(render.arguments_text(f.arguments))


def cmd_extensions(args):
    p = _load(args.file)
    sets = _answer_sets(p)
    exts = stable_extensions(translate(p))
    cfg = _cfg(args)
    if cfg.format == render.JSON:
        cfg.write(render.export_json(exts))
    else:
        cfg.write(render.extensions_text(exts, sets))


def _parse_choices(items):
    choice = {}
    for item in items or ():
        neg, sep, defender = item.partition("=")
        if not sep:
            raise ValueError(f"--choice expects ARG=DEFENDER, got {item!r}")
        choice[neg.strip()] = defender.strip()
    return choice


def cmd_attack_tree(args):
    p = _load(args.file)
    s = _pick(p, args.answer_set)
    f = translate(p)
    e = corresponding_stable_extension(f, s)
    f.argument(args.argument)
    if args.all:
        item = enumerate_attack_trees(f, e, args.argument)
    elif args.choice:
        item = build_attack_tree(f, e, args.argument, _parse_choices(args.choice))
    else:
        item = enumerate_attack_trees(f, e, args.argument)[0]
    cfg = _cfg(args)
    cfg.write(render.render(item, cfg))


def cmd_justify(args):
    p = _load(args.file)
    k = parse_literal(args.literal)
    s = _pick(p, args.answer_set)
    translate(p).arguments_for(k)  # language check before anything else
    if args.all:
        item = justify_all(p, s, k, args.method)
    else:
        item = justify(p, s, k, args.method)
    cfg = _cfg(args)
    cfg.write(render.render(item, cfg))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aspjust",
        description="Explain answer sets of logic programs through argumentation.",
        epilog="Literals: 'a', '-a' (classical negation), 'not:a' / 'not:-a' (NAF). "
               "Write --literal=-a so the leading '-' is not read as an option.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, formats=(render.TEXT, render.JSON)):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("file", help="program file")
        sp.add_argument("--format", choices=formats, default=render.TEXT)
        sp.add_argument("--out", help="write to this path instead of standard output")
        sp.add_argument("--color", action="store_true", help="ANSI colours for signs in text output")
        sp.set_defaults(func=func)
        return sp

    add("answersets", cmd_answersets, "list the answer sets")
    add("framework", cmd_framework, "show the translated ABA framework")
    add("arguments", cmd_arguments, "list the arguments")
    add("extensions", cmd_extensions, "list the stable extensions")

    all_formats = (render.TEXT, render.JSON, render.DOT)
    sp = add("attack-tree", cmd_attack_tree, "Attack Trees of an argument", all_formats)
    sp.add_argument("--argument", required=True, help="argument id, e.g. A10")
    sp.add_argument("--answer-set", type=int, required=True,
                    help="index of the answer set (see 'answersets')")
    sp.add_argument("--all", action="store_true", help="every tree, one per defender choice")
    sp.add_argument("--choice", action="append", metavar="ARG=DEFENDER",
                    help="fix the defender of a '-' argument (repeatable)")

    sp = add("justify", cmd_justify, "justify a literal", all_formats)
    sp.add_argument("--literal", required=True)
    sp.add_argument("--answer-set", type=int, required=True)
    sp.add_argument("--method", choices=("babas", "labas"), default="babas")
    sp.add_argument("--all", action="store_true",
                    help="every positive justification instead of the first one")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except (ParseError, GroundingError) as e:
        return _fail(EXIT_PARSE, f"parse error: {e}")
    except InconsistentProgramError as e:
        return _fail(EXIT_INCONSISTENT, str(e))
    except LiteralNotInLanguageError as e:
        return _fail(EXIT_LITERAL, str(e))
    except AnswerSetIndexError as e:
        return _fail(EXIT_INDEX, str(e))
    except UnknownArgumentError as e:
        return _fail(EXIT_ARGUMENT, str(e))
    except (AspJustError, OSError, ValueError) as e:
        return _fail(EXIT_ERROR, str(e))
    return EXIT_OK


def _fail(code, message) -> int:
    print(f"aspjust: {message}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
