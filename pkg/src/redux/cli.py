"""Command-line interface.

Exit codes: 0 success / theorem passes, 1 theorem counterexample, 2 usage
error, 3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .commutation import classes, graph, graph_to_dot, graph_to_json
from .patterns import (
    analyze_321,
    in_U_n,
    is_freely_braided,
    is_vexillary,
)
from .permcore import (
    code_and_shape,
    diagram,
    format_perm,
    inversions,
    length,
    parse_perm,
)
from .redwords import (
    DEFAULT_MAX_LENGTH,
    DEFAULT_MAX_WORDS,
    BudgetError,
    enumerate_R,
    format_word,
)
from .tilings import (
    enumerate_rhombic,
    enumerate_zonotopal,
    peel_word,
    poset,
    poset_to_dot,
    poset_to_json,
    polygon_svg,
    tiling_svg,
    tiling_to_json,
)
from .verify import THEOREMS, run as run_verify

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _budget_kwargs(args) -> dict:
    override = os.environ.get("REDUX_BUDGET_OVERRIDE") == "1"
    return {"max_length": args.max_length, "override": override}


def _parse(text: str):
    try:
        return parse_perm(text)
    except (ValueError, TypeError) as exc:
        raise SystemExit2(f"malformed permutation {text!r}: {exc}")


class SystemExit2(Exception):
    """Usage error carrying a message; mapped to exit code 2."""


def _emit(args, text: str) -> None:
    if args.output:
        with open(args.output, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def cmd_info(args) -> int:
    w = _parse(args.w)
    code, shape = code_and_shape(w)
    count_321, _, _ = analyze_321(w)
    fields = {
        "permutation": format_perm(w),
        "length": length(w),
        "inversions": sorted(inversions(w)),
        "code": list(code),
        "shape": list(shape),
        "diagram": sorted(diagram(w)),
        "vexillary": is_vexillary(w),
        "freely_braided": is_freely_braided(w),
        "in_U_n": in_U_n(w),
        "count_321": count_321,
    }
    if args.format == "json":
        _emit(args, json.dumps({"schema": 1, **fields}, indent=2, sort_keys=True) + "\n")
    else:
        lines = [f"{key}: {value}" for key, value in fields.items()]
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_enum(args) -> int:
    w = _parse(args.w)
    budget = _budget_kwargs(args)
    if args.what == "words":
        words = enumerate_R(
            w, max_words=args.max_words, **budget
        )
        body = [format_word(word) for word in words]
        payload = {"words": body}
    elif args.what == "classes":
        cls = classes(w, max_words=args.max_words, **budget)
        body = [
            f"{format_word(c.representative)} (size {c.size})" for c in cls
        ]
        payload = {
            "classes": [
                {"representative": format_word(c.representative), "size": c.size}
                for c in cls
            ]
        }
    elif args.what == "tilings":
        tilings = enumerate_rhombic(w, **budget)
        body = [format_word(peel_word(t)) for t in tilings]
        payload = {"tilings": [json.loads(tiling_to_json(t)) for t in tilings]}
    elif args.what == "zonotopal":
        tilings = enumerate_zonotopal(w, **budget)
        body = [
            format_word(peel_word(t)) + " " + str(list(t.shape_profile()))
            for t in tilings
        ]
        payload = {"tilings": [json.loads(tiling_to_json(t)) for t in tilings]}
    else:  # poset
        p = poset(w, **budget)
        if args.format == "json":
            _emit(args, poset_to_json(p))
            return EXIT_OK
        body = [f"elements {len(p.elements)}", f"covers {len(p.hasse)}"]
        _emit(args, "\n".join(body) + "\n")
        return EXIT_OK
    if args.format == "json":
        _emit(
            args,
            json.dumps({"schema": 1, **payload}, indent=2, sort_keys=True) + "\n",
        )
    else:
        _emit(args, "\n".join(body + [f"count {len(body)}"]) + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.theorem not in THEOREMS:
        raise SystemExit2(
            f"unknown theorem {args.theorem!r}; known: {' '.join(sorted(THEOREMS))}"
        )
    result = run_verify(args.theorem, args.n)
    if args.format == "json":
        _emit(
            args,
            json.dumps(
                {
                    "schema": 1,
                    "theorem": result.theorem,
                    "ok": result.ok,
                    "checked": result.checked,
                    "counterexample": result.counterexample,
                },
                indent=2,
                sort_keys=True,
            )
            + "\n",
        )
    else:
        _emit(args, result.summary() + "\n")
    return EXIT_OK if result.ok else EXIT_COUNTEREXAMPLE


def cmd_render(args) -> int:
    w = _parse(args.w)
    budget = _budget_kwargs(args)
    target, _, index_text = args.target.partition(":")
    if target == "polygon":
        _emit(args, polygon_svg(w))
    elif target == "tiling":
        tilings = enumerate_rhombic(w, **budget)
        try:
            index = int(index_text) if index_text else 0
            tiling = tilings[index]
        except (ValueError, IndexError):
            raise SystemExit2(
                f"tiling index {index_text!r} out of range 0..{len(tilings) - 1}"
            )
        if args.format == "json":
            _emit(args, tiling_to_json(tiling))
        else:
            _emit(args, tiling_svg(tiling))
    elif target == "graph":
        g = graph(w, **budget)
        if args.format == "json":
            _emit(args, graph_to_json(g))
        else:
            _emit(args, graph_to_dot(g))
    elif target == "poset":
        p = poset(w, **budget)
        if args.format == "json":
            _emit(args, poset_to_json(p))
        else:
            _emit(args, poset_to_dot(p))
    else:
        raise SystemExit2(f"unknown render target {args.target!r}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="redux",
        description=(
            "Reduced decompositions, commutation classes, and tilings of "
            "Elnitsky's polygon."
        ),
    )
    parser.add_argument(
        "--format",
        choices=["text", "json", "svg", "dot"],
        default="text",
        help="output format (svg/dot apply to render targets)",
    )
    parser.add_argument("--max-length", type=int, default=DEFAULT_MAX_LENGTH)
    parser.add_argument("--max-words", type=int, default=DEFAULT_MAX_WORDS)
    parser.add_argument("-o", "--output", default=None, help="write to file")
    sub = parser.add_subparsers(dest="command", required=True)

    p_info = sub.add_parser("info", help="report on one permutation")
    p_info.add_argument("w")
    p_info.set_defaults(func=cmd_info)

    p_enum = sub.add_parser("enum", help="enumerate structures")
    p_enum.add_argument(
        "what", choices=["words", "classes", "tilings", "zonotopal", "poset"]
    )
    p_enum.add_argument("w")
    p_enum.set_defaults(func=cmd_enum)

    p_verify = sub.add_parser("verify", help="brute-force a theorem sweep")
    p_verify.add_argument("theorem")
    p_verify.add_argument("--n", type=int, default=5)
    p_verify.set_defaults(func=cmd_verify)

    p_render = sub.add_parser("render", help="emit SVG/DOT/JSON artifacts")
    p_render.add_argument("target", help="polygon | tiling[:index] | graph | poset")
    p_render.add_argument("w")
    p_render.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SystemExit2 as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
