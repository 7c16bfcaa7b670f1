"""Command-line interface.

Thin wrapper over the library: parsing, dispatch and printing only.
Exit codes: 0 on success or a passing verification, 1 when verification
fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from .core import (
    CN74,
    CircularNimError,
    GameSpec,
    Move,
    ParseError,
    Position,
    apply_move,
    parse_position,
)
from .classifier import classify, family_is_P
from .oracle import OutcomeClass, outcome, save_table, solve_all, winning_options
from .strategist import NoWinningMove, find_winning_move
from .verifier import enumerate_p, verify_family, verify_theorem

USAGE_ERROR = 2


def _parse_game(text: str) -> GameSpec:
    try:
        n_str, k_str = text.split(",")
        return GameSpec(int(n_str), int(k_str))
    except (ValueError, TypeError) as exc:
        raise ParseError(f"bad game {text!r}; expected n,k") from exc


def _position_arg(text: str) -> Position:
    return parse_position(text)


def _format_move(p: Position, m: Move) -> str:
    n = p.spec.n
    window = [(m.window_start + j) % n for j in range(len(m.new_heights))]
    before = ",".join(str(p.heights[i]) for i in window)
    after = ",".join(str(h) for h in m.new_heights)
    return f"stacks {','.join(map(str, window))}: {before} -> {after}"


def cmd_classify(args) -> int:
    p = _position_arg(args.position)
    if p.spec == CN74:
        label = classify(p)
        print("N" if label is None else f"P ({label.value})")
    else:
        print("P" if family_is_P(p) else "N")
    return 0


def cmd_outcome(args) -> int:
    p = _position_arg(args.position)
    if args.bound is not None:
        if max(p.heights) > args.bound:
            raise ParseError(
                f"position heights exceed --bound {args.bound}"
            )
        table = solve_all(p.spec, args.bound)
        print(outcome(p, table).value)
    else:
        print(outcome(p).value)
    return 0


def cmd_bestmove(args) -> int:
    p = _position_arg(args.position)
    if p.spec == CN74:
        try:
            m = find_winning_move(p)
        except NoWinningMove:
            print("P-position: no winning move")
            return 0
        succ = apply_move(p, m)
        label = classify(succ)
        print(f"{_format_move(p, m)} => {','.join(map(str, succ.heights))}"
              f" ({label.value if label else '?'})")
        return 0
    moves = winning_options(p)
    if not moves:
        print("P-position: no winning move")
        return 0
    m = moves[0]
    succ = apply_move(p, m)
    print(f"{_format_move(p, m)} => {','.join(map(str, succ.heights))} (P)")
    return 0


def cmd_verify(args) -> int:
    spec = _parse_game(args.game)
    if spec == CN74:
        report = verify_theorem(spec, args.height)
    elif spec.n == 2 * spec.k - 1 and (spec.k - 1) in (1, 2, 4):
        report = verify_family(spec.k - 1, args.height)
    else:
        raise ParseError(f"no verification wired for CN({spec.n},{spec.k})")
    print(report.summary())
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(report.to_json() + "\n")
    return 0 if report.passed else 1


def cmd_enumerate(args) -> int:
    spec = _parse_game(args.game)
    count = enumerate_p(spec, args.height, args.out)
    print(f"{count} P-positions written to {args.out}")
    return 0


def cmd_solve(args) -> int:
    spec = _parse_game(args.game)
    table = solve_all(spec, args.height)
    save_table(table, args.save)
    p_count = sum(1 for v in table.entries.values() if v is OutcomeClass.P)
    print(f"{len(table.entries)} positions solved ({p_count} P) -> {args.save}")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circular-nim",
        description="Solve, verify and play Circular Nim CN(n,k).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("classify", help="closed-form P/N label for a position")
    sp.add_argument("position", help='e.g. "CN(7,4):1,7,5,6,2,3,6"')
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("outcome", help="game-tree outcome for a position")
    sp.add_argument("position")
    sp.add_argument("--bound", type=int, default=None,
                    help="solve the full space up to this height bound")
    sp.set_defaults(func=cmd_outcome)

    sp = sub.add_parser("bestmove", help="a winning move, when one exists")
    sp.add_argument("position")
    sp.set_defaults(func=cmd_bestmove)

    sp = sub.add_parser("verify", help="exhaustive verification run")
    sp.add_argument("--game", required=True, help="n,k")
    sp.add_argument("--height", type=int, default=4)
    sp.add_argument("--json", default=None, help="also write a JSON report here")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("enumerate", help="write canonical P-positions as CSV")
    sp.add_argument("--game", required=True, help="n,k")
    sp.add_argument("--height", type=int, required=True)
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("solve", help="solve a bounded space and save the table")
    sp.add_argument("--game", required=True, help="n,k")
    sp.add_argument("--height", type=int, required=True)
    sp.add_argument("--save", required=True)
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("serve", help="run the HTTP service")
    sp.add_argument("--host", default="127.0.0.1")
    sp.add_argument("--port", type=int, default=8000)
    sp.set_defaults(func=cmd_serve)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, CircularNimError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
