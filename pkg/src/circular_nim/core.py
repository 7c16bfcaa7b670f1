"""Positions, moves and circular symmetry for Circular Nim games CN(n,k).

A game CN(n,k) is played on n stacks of tokens arranged in a circle.  A
move selects k consecutive stacks (wrapping around the circle) and removes
at least one token from at least one of them; the player taking the last
token wins.  Positions are immutable values, so everything in this module
is a pure function.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, Sequence


class CircularNimError(Exception):
    """Base class for errors raised by this package."""


class InvalidPosition(CircularNimError):
    """Heights do not form a valid position for the given game."""


class IllegalMove(CircularNimError):
    """Move violates the window or token-removal rules.

    ``reason`` is a machine-readable code: one of ``"window"``, ``"shape"``,
    ``"floor"`` or ``"no_decrease"``.
    """

    def __init__(self, reason: str, message: str):
        super().__init__(message)
        self.reason = reason


class ParseError(CircularNimError):
    """Text does not match the position format ``CN(n,k):h1,...,hn``."""


class WrongGame(CircularNimError):
    """An operation specific to one game was called with another game."""


@dataclass(frozen=True)
class GameSpec:
    """The pair (n, k): n stacks in a circle, moves touch k consecutive ones."""

    n: int
    k: int

    def __post_init__(self) -> None:
        if self.n < 1 or not (1 <= self.k <= self.n):
            raise ValueError(f"need 1 <= k <= n, got n={self.n}, k={self.k}")


CN74 = GameSpec(7, 4)


@dataclass(frozen=True)
class Position:
    """A circular sequence of stack heights for some game.

    Equality is exact-sequence equality; symmetry-aware comparison goes
    through :func:`canonicalize`.
    """

    spec: GameSpec
    heights: tuple[int, ...]

    def __str__(self) -> str:
        return format_position(self)


@dataclass(frozen=True)
class DihedralTransform:
    """A rotation (optionally composed with the reflection fixing index 0).

    Conventions: rotating by ``r`` shifts content forward,
    ``new[i] = old[(i - r) % n]``; reflecting reads the circle backward
    about index 0, ``new[i] = old[(-i) % n]``.  A reflected transform
    applies the reflection first, then the rotation, so
    ``new[i] = old[(r - i) % n]``.
    """

    rotation: int
    reflected: bool = False

    def index_map(self, n: int) -> tuple[int, ...]:
        """Permutation ``perm`` with ``transformed[i] == heights[perm[i]]``."""
        if self.reflected:
            return tuple((self.rotation - i) % n for i in range(n))
        return tuple((i - self.rotation) % n for i in range(n))

    def inverse(self, n: int) -> "DihedralTransform":
        if self.reflected:
            return self  # reflections composed with a rotation are involutions
        return DihedralTransform((-self.rotation) % n, False)


@dataclass(frozen=True)
class Move:
    """Replace the k stacks starting at ``window_start`` with ``new_heights``.

    Replacement heights are componentwise at most the current heights and
    at least one stack strictly decreases.
    """

    window_start: int
    new_heights: tuple[int, ...]


@lru_cache(maxsize=None)
def dihedral_transforms(n: int) -> tuple[DihedralTransform, ...]:
    """All 2n transforms: rotations first, then reflected rotations."""
    plain = [DihedralTransform(r, False) for r in range(n)]
    mirrored = [DihedralTransform(r, True) for r in range(n)]
    return tuple(plain + mirrored)


@lru_cache(maxsize=None)
def dihedral_index_maps(n: int) -> tuple[tuple[int, ...], ...]:
    """Index maps of all 2n transforms, in ``dihedral_transforms`` order."""
    return tuple(t.index_map(n) for t in dihedral_transforms(n))


def make_position(spec: GameSpec, heights: Sequence[int]) -> Position:
    """Build a Position, validating length and non-negativity."""
    hs = tuple(int(h) for h in heights)
    if len(hs) != spec.n:
        raise InvalidPosition(
            f"expected {spec.n} heights for CN({spec.n},{spec.k}), got {len(hs)}"
        )
    if any(h < 0 for h in hs):
        raise InvalidPosition(f"negative stack height in {hs}")
    return Position(spec, hs)


def is_terminal(p: Position) -> bool:
    """True iff every stack is empty (the unique terminal position)."""
    return not any(p.heights)


def token_sum(p: Position) -> int:
    return sum(p.heights)


def legal_moves(p: Position) -> Iterator[Move]:
    """Yield every legal move: each window, each replacement vector.

    Distinct (window, replacement) pairs that lead to the same successor
    are both yielded; de-duplication is the consumer's job.  Terminal
    positions yield nothing.
    """
    n, k = p.spec.n, p.spec.k
    hs = p.heights
    for start in range(n):
        current = tuple(hs[(start + j) % n] for j in range(k))
        if not any(current):
            continue
        for repl in product(*(range(c + 1) for c in current)):
            if repl != current:
                yield Move(start, repl)


def apply_move(p: Position, m: Move) -> Position:
    """Apply a move, validating legality; returns the successor position."""
    n, k = p.spec.n, p.spec.k
    if not (0 <= m.window_start < n):
        raise IllegalMove("window", f"window start {m.window_start} out of range")
    if len(m.new_heights) != k:
        raise IllegalMove("shape", f"expected {k} replacement heights")
    hs = list(p.heights)
    decreased = False
    for j, new in enumerate(m.new_heights):
        i = (m.window_start + j) % n
        cur = hs[i]
        if new < 0 or new > cur:
            raise IllegalMove(
                "floor", f"stack {i}: replacement {new} not in [0, {cur}]"
            )
        if new < cur:
            decreased = True
        hs[i] = new
    if not decreased:
        raise IllegalMove("no_decrease", "move must remove at least one token")
    return Position(p.spec, tuple(hs))


def transform(p: Position, t: DihedralTransform) -> Position:
    """Rotated/reflected copy of the position."""
    perm = t.index_map(p.spec.n)
    return Position(p.spec, tuple(p.heights[j] for j in perm))


def canonical_heights(heights: tuple[int, ...]) -> tuple[int, ...]:
    """Lexicographically least tuple over the dihedral orbit of ``heights``."""
    n = len(heights)
    best = heights
    for perm in dihedral_index_maps(n):
        cand = tuple(heights[j] for j in perm)
        if cand < best:
            best = cand
    return best


def canonicalize(p: Position) -> Position:
    """Lexicographically smallest representative of the dihedral orbit.

    Idempotent; serves as a symmetry-aware equality key and memo key.
    """
    return Position(p.spec, canonical_heights(p.heights))


_POSITION_RE = re.compile(r"^CN\((\d+),(\d+)\):(\d+(?:,\d+)*)$")


def parse_position(text: str) -> Position:
    """Parse ``"CN(n,k):h1,h2,...,hn"`` (ASCII, no spaces)."""
    m = _POSITION_RE.match(text.strip())
    if not m:
        raise ParseError(f"malformed position {text!r}")
    n, k = int(m.group(1)), int(m.group(2))
    try:
        spec = GameSpec(n, k)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    heights = tuple(int(h) for h in m.group(3).split(","))
    if len(heights) != n:
        raise ParseError(f"expected {n} heights, got {len(heights)}")
    return Position(spec, heights)


def format_position(p: Position) -> str:
    """Inverse of :func:`parse_position`; no canonicalization applied."""
    return f"CN({p.spec.n},{p.spec.k}):" + ",".join(str(h) for h in p.heights)


def move_between(p: Position, target: Position) -> Move:
    """The move taking ``p`` to ``target``, if one exists.

    The changed stacks must fit in one window of k consecutive stacks;
    the window is anchored deterministically (right after the largest
    gap between changed stacks).
    """
    n, k = p.spec.n, p.spec.k
    if target.spec != p.spec:
        raise IllegalMove("shape", "target belongs to a different game")
    diffs = [i for i in range(n) if p.heights[i] != target.heights[i]]
    if not diffs:
        raise IllegalMove("no_decrease", "target equals the current position")
    for i in diffs:
        if target.heights[i] > p.heights[i]:
            raise IllegalMove("floor", f"stack {i} would increase")
    # Find the largest run of unchanged stacks between changed ones; the
    # complement is the tightest window containing all changes.
    if len(diffs) == 1:
        start = diffs[0]
        span = 1
    else:
        best_gap, best_after = -1, 0
        for idx, i in enumerate(diffs):
            nxt = diffs[(idx + 1) % len(diffs)]
            gap = (nxt - i - 1) % n
            if gap > best_gap:
                best_gap, best_after = gap, nxt
        start = best_after
        span = n - best_gap
    if span > k:
        raise IllegalMove("window", f"changes span {span} stacks, window is {k}")
    repl = tuple(target.heights[(start + j) % n] for j in range(k))
    return Move(start, repl)
