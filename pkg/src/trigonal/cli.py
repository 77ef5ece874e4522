"""Command-line interface: ``trigonal <command> ...``.

Output is JSON unless a command documents otherwise.  Exit status: 0 on
success, 1 when a verification fails (or no alternating word is reached),
2 on usage errors, 3 when a search budget ran out.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from trigonal.contfrac import eval_word
from trigonal.diagram import (
    LinkClass,
    ParseError,
    TrivialClassError,
    complexity,
    format_word,
    is_hard,
    link_class,
    normal_form,
    parse_word,
    same_link,
)
from trigonal.generators import NotApplicable, awkward_diagram, hard_diagram, scramble
from trigonal.moves import enumerate_moves, move_deltas, successors
from trigonal.search import (
    NotReached,
    SearchBudgetExceeded,
    SearchLimits,
    closure,
    is_catalog_simple,
    minimize,
    simplify_to_alternating,
)
from trigonal.verify import (
    EnumBounds,
    check_generators,
    check_lemma_arith,
    check_move_soundness,
    check_prop_simple,
    check_theorem1,
    enumerate_words,
    theorem1_bounds,
    words_in_class,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def _word(text: str):
    try:
        return parse_word(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _class(text: str):
    try:
        return LinkClass.parse(text)
    except (ParseError, ValueError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _emit(args, payload) -> None:
    if getattr(args, "pretty", False):
        text = json.dumps(payload, indent=2)
    else:
        text = json.dumps(payload, separators=(",", ":"))
    print(text, flush=True)


def _limits(args) -> SearchLimits:
    return SearchLimits(max_states=args.max_states)


def cmd_eval(args) -> int:
    pair = eval_word(args.word)
    c = link_class(args.word)
    _emit(args, {"alpha": c.alpha, "beta": pair.beta, "residues": sorted(c.residues)})
    return EXIT_OK


def cmd_normalize(args) -> int:
    try:
        nf = normal_form(link_class(args.word))
    except TrivialClassError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    print(format_word(nf, "C"), flush=True)
    return EXIT_OK


def cmd_same_link(args) -> int:
    _emit(args, {
        "same": same_link(args.first, args.second),
        "classes": [link_class(args.first).to_json(), link_class(args.second).to_json()],
    })
    return EXIT_OK


def cmd_moves(args) -> int:
    rows = []
    for inst in enumerate_moves(args.word):
        dc, dx = move_deltas(args.word, inst)
        row = inst.to_json()
        row.update(crossing_delta=dc, complexity_delta=dx)
        rows.append(row)
    _emit(args, rows)
    return EXIT_OK


def cmd_simplify(args) -> int:
    limits = _limits(args)
    if args.minimize:
        _, result = minimize(args.word, limits)
    else:
        result = simplify_to_alternating(args.word, limits)
    if isinstance(result, NotReached):
        _emit(args, result.to_json())
        return EXIT_FAIL
    if args.trace:
        if result.steps:
            print(result.trace(), flush=True)
    else:
        _emit(args, dict(result.to_json(), final=format_word(result.final), reached=True))
    return EXIT_OK


def cmd_simple(args) -> int:
    _emit(args, {"word": format_word(args.word), "simple": is_catalog_simple(args.word, _limits(args))})
    return EXIT_OK


def cmd_hard(args) -> int:
    _emit(args, {"word": format_word(args.word), "hard": is_hard(args.word)})
    return EXIT_OK


def cmd_gen(args) -> int:
    build = awkward_diagram if args.kind == "awkward" else hard_diagram
    try:
        out = build(args.normal)
    except NotApplicable as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(format_word(out), flush=True)
    return EXIT_OK


def cmd_scramble(args) -> int:
    print(format_word(scramble(args.word, args.steps, args.seed)), flush=True)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    bounds = EnumBounds(args.max_crossings, args.max_length, args.entry_bound or args.max_crossings)
    words = words_in_class(args.cls, bounds) if args.cls else enumerate_words(bounds)
    for w in words:
        print(format_word(w))
    sys.stdout.flush()
    return EXIT_OK


def _bounds_from(args, default: EnumBounds) -> EnumBounds:
    return EnumBounds(
        args.max_crossings or default.max_crossings,
        args.max_length or default.max_length,
        args.entry_bound or default.entry_bound,
    )


def cmd_verify(args) -> int:
    limits = _limits(args)
    if args.harness == "thm1":
        if args.cls is None:
            raise UsageError("verify thm1 needs --class A/B")
        try:
            bounds = _bounds_from(args, theorem1_bounds(args.cls, max_length=7))
            report = check_theorem1(args.cls, bounds, limits)
        except NotApplicable as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
    elif args.harness == "prop":
        report = check_prop_simple(_bounds_from(args, EnumBounds(8, 5, 5)), limits)
    elif args.harness == "lemma":
        report = check_lemma_arith(_bounds_from(args, EnumBounds(30, 6, 5)))
    elif args.harness == "moves":
        report = check_move_soundness(args.trials, args.seed if args.seed is not None else 42)
    else:
        report = check_generators(_bounds_from(args, EnumBounds(100, 5, 4)), limits=limits)
    _emit(args, report.to_json(timing=not args.no_timing))
    if report.ok:
        return EXIT_OK
    return EXIT_BUDGET if report.budget_only else EXIT_FAIL


def _dot_label(word) -> str:
    return '"' + format_word(word) + '"'


def closure_dot(word, limits: SearchLimits) -> str:
    nodes = sorted(closure(word, limits), key=lambda w: (complexity(w), len(w), w))
    lines = ['digraph "closure" {', "\trankdir=LR;"]
    for w in nodes:
        shape = "doublecircle" if tuple(w) == tuple(word) else "ellipse"
        lines.append(f"\t{_dot_label(w)} [shape={shape}];")
    for w in nodes:
        for inst, nxt in successors(w):
            lines.append(f'\t{_dot_label(w)} -> {_dot_label(nxt)} [label="{inst.label}"];')
    lines.append("}")
    return "\n".join(lines)


def cmd_graph(args) -> int:
    print(closure_dot(args.word, _limits(args)), flush=True)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="trigonal", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.set_defaults(func=func)
        sp.add_argument("--pretty", action="store_true", help="indented JSON")
        sp.add_argument("--max-states", type=int, default=200_000)
        return sp

    add("eval", cmd_eval, "Schubert pair and link class").add_argument("word", type=_word)
    add("normalize", cmd_normalize, "Conway normal form").add_argument("word", type=_word)
    sp = add("same-link", cmd_same_link, "compare two words")
    sp.add_argument("first", type=_word)
    sp.add_argument("second", type=_word)
    add("moves", cmd_moves, "applicable slide moves").add_argument("word", type=_word)
    sp = add("simplify", cmd_simplify, "simplify to an alternating word")
    sp.add_argument("word", type=_word)
    sp.add_argument("--trace", action="store_true", help="print trace lines instead of JSON")
    sp.add_argument("--minimize", action="store_true", help="target least complexity instead")
    add("simple", cmd_simple, "catalog-simplicity").add_argument("word", type=_word)
    add("hard", cmd_hard, "hard-diagram predicate").add_argument("word", type=_word)
    sp = add("gen", cmd_gen, "awkward or hard diagram for a normal form")
    sp.add_argument("kind", choices=["awkward", "hard"])
    sp.add_argument("normal", type=_word)
    sp = add("scramble", cmd_scramble, "random class-preserving rewrites")
    sp.add_argument("word", type=_word)
    sp.add_argument("--steps", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp = add("enumerate", cmd_enumerate, "zero-free words within bounds")
    sp.add_argument("--max-crossings", type=int, required=True)
    sp.add_argument("--max-length", type=int, required=True)
    sp.add_argument("--entry-bound", type=int)
    sp.add_argument("--class", dest="cls", type=_class, help="filter by class A/B")
    sp = add("verify", cmd_verify, "run a verification harness")
    sp.add_argument("harness", choices=["thm1", "prop", "lemma", "moves", "gen"])
    sp.add_argument("--class", dest="cls", type=_class)
    sp.add_argument("--max-crossings", type=int)
    sp.add_argument("--max-length", type=int)
    sp.add_argument("--entry-bound", type=int)
    sp.add_argument("--trials", type=int, default=10_000)
    sp.add_argument("--seed", type=int)
    sp.add_argument("--json", action="store_true", help="JSON report (the default)")
    sp.add_argument("--no-timing", action="store_true", help="report elapsed_ms as null")
    sp = add("graph", cmd_graph, "closure graph")
    sp.add_argument("word", type=_word)
    sp.add_argument("--dot", action="store_true", required=True)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"trigonal: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SearchBudgetExceeded as exc:
        print(f"trigonal: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"trigonal: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
