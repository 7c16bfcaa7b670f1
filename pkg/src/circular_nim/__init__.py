"""Circular Nim: solver, verifier and play engine for CN(n,k)."""

from .core import (
    CN74,
    CircularNimError,
    DihedralTransform,
    GameSpec,
    IllegalMove,
    InvalidPosition,
    Move,
    ParseError,
    Position,
    WrongGame,
    apply_move,
    canonicalize,
    format_position,
    is_terminal,
    legal_moves,
    make_position,
    parse_position,
    transform,
)
from .classifier import PSetLabel, classify, family_is_P, in_general_S1, is_P
from .oracle import OutcomeClass, OutcomeTable, outcome, solve_all, winning_options
from .strategist import NoWinningMove, find_winning_move

__version__ = "0.1.0"

__all__ = [
    "CN74",
    "CircularNimError",
    "DihedralTransform",
    "GameSpec",
    "IllegalMove",
    "InvalidPosition",
    "Move",
    "NoWinningMove",
    "OutcomeClass",
    "OutcomeTable",
    "ParseError",
    "PSetLabel",
    "Position",
    "WrongGame",
    "apply_move",
    "canonicalize",
    "classify",
    "family_is_P",
    "find_winning_move",
    "format_position",
    "in_general_S1",
    "is_P",
    "is_terminal",
    "legal_moves",
    "make_position",
    "outcome",
    "parse_position",
    "solve_all",
    "transform",
    "winning_options",
]
