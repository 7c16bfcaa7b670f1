"""Engine move policy.

CN(7,4): constructive winning move whenever the position is outside the
P-set; otherwise (theoretically lost) stall by removing one token from a
tallest stack, which is deterministic and keeps the game going.  Other
games fall back to game-tree search when the reachable space is inside
the configured ceiling, and stall beyond it.
"""

from __future__ import annotations

import math
from typing import Optional

from ..core import CN74, Move, Position
from ..classifier import classify
from ..oracle import OutcomeTable, winning_options
from ..strategist import find_winning_move


def solve_space(p: Position) -> int:
    """Number of raw positions componentwise below ``p`` (its game tree)."""
    return math.prod(h + 1 for h in p.heights)


def max_stall_move(p: Position) -> Move:
    """Remove one token from the first tallest stack."""
    i = p.heights.index(max(p.heights))
    return Move(i, (p.heights[i] - 1,) + tuple(
        p.heights[(i + j) % p.spec.n] for j in range(1, p.spec.k)
    ))


def choose_engine_move(
    p: Position,
    oracle_ceiling: int,
    table: Optional[OutcomeTable] = None,
) -> Move:
    """The move the engine plays from ``p`` (must be nonterminal)."""
    if p.spec == CN74:
        if classify(p) is None:
            return find_winning_move(p)
        return max_stall_move(p)
    if solve_space(p) <= oracle_ceiling:
        moves = winning_options(p, table)
        if moves:
            return moves[0]
    return max_stall_move(p)
