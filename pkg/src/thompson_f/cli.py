"""Command line surface for batch use, golden tests, and report generation.

Exit codes: 0 success, 1 usage or parse error, 2 domain precondition
violated (for example a mixed word where a one-sided word is required),
3 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import kernel, oracle
from .deadend import NotDeadEndError, escape_word, is_dead_end, matches_dead_end_form
from .geodesic import (MixedWordError, evaluate, is_geodesic_word, nested_traversal_word,
                       parse_letters, parse_x_style, render_letters, render_x_style,
                       replacement_word)
from .group_ops import TreePair, distance, invert, multiply
from .metric import (WEIGHT_TABLE, WEIGHT_TABLE_ORDER, caret_census, coarse_bounds,
                     is_one_sided, length_report, one_sided_bounds,
                     one_sided_caret_bounds, refined_bounds, word_length)
from .normal_form import (NormalForm, NotNormalFormError, WordSyntaxError, element_of,
                          from_tree_pair, parse, to_tree_pair)
from .trees import tree_to_dot

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_RESOURCE = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise _UsageError(message)


def _element(text: str) -> TreePair:
    return element_of(text)


def _word_arg(text: str, letters: bool):
    return parse_letters(text) if letters else parse_x_style(text)


def _render_word(word, letters: bool) -> str:
    return render_letters(word) if letters else render_x_style(word)


def cmd_nf(args) -> int:
    print(from_tree_pair(_element(args.word)).render())
    return EXIT_OK


def cmd_len(args) -> int:
    pair = _element(args.word)
    if args.breakdown:
        for i, tn, tp, w in length_report(pair):
            print(f"{i}: ({tn}, {tp}) -> {w}")
        print(f"total {word_length(pair)}")
    else:
        print(word_length(pair))
    return EXIT_OK


def cmd_mul(args) -> int:
    print(from_tree_pair(multiply(_element(args.left), _element(args.right))).render())
    return EXIT_OK


def cmd_inv(args) -> int:
    print(from_tree_pair(invert(_element(args.word))).render())
    return EXIT_OK


def cmd_dist(args) -> int:
    print(distance(_element(args.left), _element(args.right)))
    return EXIT_OK


def cmd_bounds(args) -> int:
    pair = _element(args.word)
    nf = from_tree_pair(pair)
    length = word_length(pair)
    coarse = coarse_bounds(pair)
    refined = refined_bounds(nf)
    report = {
        "word": nf.render(),
        "length": length,
        "carets": pair.caret_count,
        "caret_bounds": list(coarse),
        "census_bounds": [refined.lower, refined.upper],
        "census_bounds_on_inverse": refined.swapped,
    }
    if is_one_sided(pair):
        report["one_sided_caret_bounds"] = list(one_sided_caret_bounds(pair))
        report["one_sided_census_bounds"] = list(one_sided_bounds(nf))
    if args.format == "machine":
        print(json.dumps(report))
    else:
        print(f"length {length}")
        print(f"carets {pair.caret_count}")
        print(f"caret-count bounds: [{coarse[0]}, {coarse[1]}]")
        swap = " (computed on the inverse)" if refined.swapped else ""
        print(f"census bounds: [{refined.lower}, {refined.upper}]{swap}")
        if "one_sided_caret_bounds" in report:
            lo, hi = report["one_sided_caret_bounds"]
            print(f"one-sided caret bounds: [{lo}, {hi}]")
            lo, hi = report["one_sided_census_bounds"]
            print(f"one-sided census bounds: [{lo}, {hi}]")
    return EXIT_OK


def cmd_census(args) -> int:
    pair = _element(args.word)
    nf = from_tree_pair(pair)
    rows = {side: caret_census(nf, side) for side in ("negative", "positive")}
    if args.format == "machine":
        print(json.dumps({
            "word": nf.render(),
            "shared_carets": pair.caret_count,
            **{side: {"total": c.total, "left": c.left, "interior": c.interior,
                      "right": c.right} for side, c in rows.items()},
        }))
    else:
        print(f"shared caret count {pair.caret_count}")
        for side, c in rows.items():
            print(f"{side}: total {c.total} left {c.left} "
                  f"interior {c.interior} right {c.right}")
    return EXIT_OK


def cmd_minpath(args) -> int:
    word = parse(args.word)
    if not isinstance(word, NormalForm):
        from .normal_form import normalize

        word = normalize(word)
    path = nested_traversal_word(word)
    print(_render_word(path, args.letters))
    if args.check:
        pair = to_tree_pair(word)
        ok_eval = evaluate(path) == pair
        ok_min = len(path) == word_length(pair)
        print(f"evaluates-to-element: {'yes' if ok_eval else 'no'}")
        print(f"minimal: {'yes' if ok_min else 'no'}")
        if not (ok_eval and ok_min):
            return EXIT_DOMAIN
    return EXIT_OK


def cmd_replace(args) -> int:
    pair = _element(args.word)
    path = replacement_word(from_tree_pair(pair))
    print(_render_word(path, args.letters))
    if args.check:
        print(f"evaluates-to-element: {'yes' if evaluate(path) == pair else 'no'}")
        print(f"geodesic: {'yes' if is_geodesic_word(path) else 'no'}")
    return EXIT_OK


def cmd_deadend(args) -> int:
    pair = _element(args.word)
    if pair.is_identity():
        raise MixedWordError("the identity is excluded from dead-end analysis")
    dead = is_dead_end(pair)
    structural = matches_dead_end_form(pair)
    if args.format == "machine":
        print(json.dumps({"dead_end": dead, "structural_form": structural}))
    else:
        print(f"dead-end: {'yes' if dead else 'no'}")
        print(f"structural-form: {'yes' if structural else 'no'}")
    return EXIT_OK


def cmd_escape(args) -> int:
    pair = _element(args.word)
    path = escape_word(pair)
    base = word_length(pair)
    walk = pair
    lengths = []
    for g in path:
        from .group_ops import apply_generator

        walk = apply_generator(walk, g)
        lengths.append(word_length(walk))
    print(_render_word(path, args.letters))
    print(f"lengths along path: {base} -> {' -> '.join(map(str, lengths))}")
    return EXIT_OK


def cmd_bfs_verify(args) -> int:
    if args.radius > oracle.DEFAULT_RADIUS_CAP and not args.force:
        raise _UsageError(
            f"radius {args.radius} exceeds the default cap "
            f"{oracle.DEFAULT_RADIUS_CAP}; pass --force to override")
    if args.load:
        ball = oracle.Ball.load(args.load)
    else:
        ball = oracle.bfs_ball(args.radius, max_elements=args.max_elements)
    report = oracle.verify_word_length(ball)
    records = oracle.dead_end_census(ball) if args.deadends else None
    if args.dump:
        ball.dump(args.dump)
    if args.format == "machine":
        out = {
            "radius": ball.radius,
            "sphere_sizes": ball.sphere_sizes,
            "elements": len(ball.elements),
            "length_violations": report.violations,
        }
        if records is not None:
            out["dead_ends"] = [
                {"word": r.key, "length": r.length, "structural": r.structural,
                 "escape_ok": r.escape_ok} for r in records]
        print(json.dumps(out))
    else:
        print(f"ball radius {ball.radius}: {len(ball.elements)} elements")
        print("sphere sizes: " + " ".join(map(str, ball.sphere_sizes)))
        print(f"length check: {report.checked} elements, "
              f"{len(report.violations)} violations")
        for key, dist, length in report.violations[:20]:
            print(f"  VIOLATION {key!r}: bfs {dist} != weight {length}")
        if records is not None:
            print(f"dead ends with certified neighborhoods: {len(records)}")
            for line in oracle.census_lines(records):
                print(line)
    return EXIT_OK if report.ok else EXIT_DOMAIN


def cmd_growth(args) -> int:
    if args.radius > oracle.DEFAULT_RADIUS_CAP and not args.force:
        raise _UsageError(
            f"radius {args.radius} exceeds the default cap "
            f"{oracle.DEFAULT_RADIUS_CAP}; pass --force to override")
    ball = oracle.bfs_ball(args.radius, max_elements=args.max_elements)
    if args.format == "machine":
        print(json.dumps({"radius": ball.radius, "sphere_sizes": ball.sphere_sizes}))
    else:
        total = 0
        print("r\tsphere\tball")
        for r, size in enumerate(ball.sphere_sizes):
            total += size
            print(f"{r}\t{size}\t{total}")
    return EXIT_OK


def cmd_render(args) -> int:
    pair = _element(args.word)
    neg = tree_to_dot(pair.neg, name="negative_tree", prefix="n").rstrip("\n")
    pos = tree_to_dot(pair.pos, name="positive_tree", prefix="p").rstrip("\n")
    print(neg)
    print(pos)
    return EXIT_OK


def cmd_dump_weights(args) -> int:
    names = [str(t) for t in WEIGHT_TABLE_ORDER]
    print("(L0,L0) has weight 0; L0 pairs only with L0")
    print("     " + " ".join(f"{n:>3}" for n in names))
    for a in WEIGHT_TABLE_ORDER:
        row = " ".join(f"{WEIGHT_TABLE[(a, b)]:>3}" for b in WEIGHT_TABLE_ORDER)
        print(f"{str(a):>4} {row}")
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="thompson-f",
                     description="Tree pair diagrams and the word metric on "
                                 "Thompson's group F")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text, **kwargs):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(fn=fn)
        return p

    p = add("nf", cmd_nf, "normal form of a word")
    p.add_argument("word")

    p = add("len", cmd_len, "exact word length")
    p.add_argument("word")
    p.add_argument("--breakdown", action="store_true",
                   help="per-caret weight breakdown")

    p = add("mul", cmd_mul, "product of two words")
    p.add_argument("left")
    p.add_argument("right")

    p = add("inv", cmd_inv, "inverse of a word")
    p.add_argument("word")

    p = add("dist", cmd_dist, "distance between two elements")
    p.add_argument("left")
    p.add_argument("right")

    p = add("bounds", cmd_bounds, "length bounds from caret counts")
    p.add_argument("word")
    p.add_argument("--format", choices=("text", "machine"), default="text")

    p = add("census", cmd_census, "caret census of both trees")
    p.add_argument("word")
    p.add_argument("--format", choices=("text", "machine"), default="text")

    p = add("minpath", cmd_minpath, "minimal generator word (one-sided words)")
    p.add_argument("word")
    p.add_argument("--letters", action="store_true",
                   help="emit compact a/A/b/B letters")
    p.add_argument("--check", action="store_true",
                   help="verify evaluation and minimality")

    p = add("replace", cmd_replace, "conjugate-replacement generator word")
    p.add_argument("word")
    p.add_argument("--letters", action="store_true")
    p.add_argument("--check", action="store_true")

    p = add("deadend", cmd_deadend, "dead-end status of an element")
    p.add_argument("word")
    p.add_argument("--format", choices=("text", "machine"), default="text")

    p = add("escape", cmd_escape, "three-step escape path from a dead end")
    p.add_argument("word")
    p.add_argument("--letters", action="store_true")

    p = add("bfs-verify", cmd_bfs_verify, "enumerate a ball and verify lengths")
    p.add_argument("radius", type=int)
    p.add_argument("--deadends", action="store_true",
                   help="include the dead-end census")
    p.add_argument("--dump", metavar="FILE", help="write the ball to a file")
    p.add_argument("--load", metavar="FILE", help="reuse a dumped ball")
    p.add_argument("--max-elements", type=int, default=None)
    p.add_argument("--force", action="store_true",
                   help="allow radii beyond the default cap")
    p.add_argument("--format", choices=("text", "machine"), default="text")

    p = add("growth", cmd_growth, "sphere sizes out to a radius")
    p.add_argument("radius", type=int)
    p.add_argument("--max-elements", type=int, default=None)
    p.add_argument("--force", action="store_true")
    p.add_argument("--format", choices=("text", "machine"), default="text")

    p = add("render", cmd_render, "DOT output for the tree pair")
    p.add_argument("word")

    add("dump-weights", cmd_dump_weights, "the caret pairing weight table")

    return parser


def run(argv: Sequence[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (MixedWordError, NotDeadEndError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except oracle.BallLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ValueError as exc:  # includes word syntax and normal-form errors
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
