"""Constructive winning moves for CN(7,4).

From any CN(7,4) N-position this module produces one legal move whose
result is again a P-position, without game-tree search.  The dispatch is
by the number of empty stacks: two or more zeros, exactly one zero, or
none (in which case the maxima drive the construction).  Each case works
in a "frame": a dihedral re-reading of the position that puts the
relevant stacks into fixed slots; the move is computed in-frame and
mapped back.

The three-heap reduction (``cn32_*``) is shared with the wider
CN(2l+1, l+1) family: positions with l-1 consecutive empty stacks behave
like three heaps of CN(3,2), where equal heap sums lose.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .core import (
    CN74,
    CircularNimError,
    DihedralTransform,
    Move,
    Position,
    WrongGame,
    apply_move,
    dihedral_index_maps,
    dihedral_transforms,
    move_between,
)
from .classifier import classify


class NoWinningMove(CircularNimError):
    """The position is a P-position; every move loses."""


class StrategyError(CircularNimError):
    """Internal dispatch failure; indicates a bug, not a losing position."""


@dataclass
class Frame:
    """A dihedral reading of a position with named stack roles.

    ``perm`` maps frame slots to original indices
    (``framed[i] == heights[perm[i]]``); ``labels`` names the slots the
    active construction cares about.
    """

    transform: DihedralTransform
    perm: tuple[int, ...]
    case: str
    labels: dict[str, int]


@dataclass(frozen=True)
class Cn32Partition:
    """Three disjoint stack groups behaving like the heaps of CN(3,2).

    Conditions: any two groups (plus the zero stacks between them) fit in
    one k-window, while touching all three requires more than k
    consecutive stacks.  Equal group sums characterize the losing
    positions of the reduced game.
    """

    a1: tuple[int, ...]
    a2: tuple[int, ...]
    a3: tuple[int, ...]
    zero_runs: tuple[tuple[int, ...], ...]
    set_sums: tuple[int, int, int]

    @property
    def sets(self) -> tuple[tuple[int, ...], ...]:
        return (self.a1, self.a2, self.a3)


def _perm_to_transform(n: int) -> dict[tuple[int, ...], DihedralTransform]:
    return dict(zip(dihedral_index_maps(n), dihedral_transforms(n)))


def _framed_views(p: Position):
    """All 2n (perm, framed tuple) readings, rotations before reflections."""
    hs = p.heights
    for perm in dihedral_index_maps(p.spec.n):
        yield perm, tuple(hs[j] for j in perm)


def _compose(perm: tuple[int, ...], tau: tuple[int, ...]) -> tuple[int, ...]:
    """Reading ``tau`` of an already-framed view, as one perm."""
    return tuple(perm[t] for t in tau)


def _unframe(p: Position, perm: Sequence[int], target: Sequence[int]) -> Position:
    out = list(p.heights)
    for slot, orig in enumerate(perm):
        out[orig] = target[slot]
    return Position(p.spec, tuple(out))


def _frame(p: Position, perm: tuple[int, ...], case: str, roles: Sequence[str]) -> Frame:
    transform = _perm_to_transform(p.spec.n).get(perm)
    if transform is None:
        raise StrategyError("frame permutation is not dihedral")
    return Frame(transform, perm, case, {r: perm[i] for i, r in enumerate(roles)})


def _take_from_last(
    values: Sequence[int], target: int, floors: Optional[Sequence[int]] = None
) -> tuple[int, ...]:
    """Reduce ``values`` to the given total, draining later entries first.

    Entries never drop below their floors; the caller guarantees
    feasibility (``sum(floors) <= target <= sum(values)``).
    """
    vals = list(values)
    lows = list(floors) if floors is not None else [0] * len(vals)
    need = sum(vals) - target
    if need < 0:
        raise StrategyError("cannot raise a stack group sum")
    for i in range(len(vals) - 1, -1, -1):
        take = min(need, vals[i] - lows[i])
        vals[i] -= take
        need -= take
    if need:
        raise StrategyError("floors make the target sum infeasible")
    return tuple(vals)


# ---------------------------------------------------------------------------
# Valleys: five consecutive stacks that admit a one-move drop into S1.
# ---------------------------------------------------------------------------

_VALLEY_ROLES = tuple(f"p{i}" for i in range(1, 8))


def _deep(f: Sequence[int]) -> bool:
    # middle three sum to at most both shoulders
    return f[1] + f[2] + f[3] <= min(f[0], f[4])


def _shallow(f: Sequence[int]) -> bool:
    return f[0] <= f[4] and f[1] + f[2] <= f[0] < f[1] + f[2] + f[3]


def detect_valley(p: Position) -> Optional[tuple[Frame, str]]:
    """Find five consecutive stacks forming a deep or shallow valley.

    Deep is preferred when both occur.  The returned frame reads the
    valley as slots p1..p5 with p6, p7 the two remaining stacks.
    Degenerate frames are skipped: ones whose drop removes nothing (the
    position already has the target shape) and ones whose target is the
    all-zero position (which has no positive flank).
    """
    if p.spec != CN74:
        raise WrongGame("valley constructions are wired for CN(7,4)")
    for kind, test in (("deep", _deep), ("shallow", _shallow)):
        for perm, f in _framed_views(p):
            if not test(f):
                continue
            target = _valley_target(f, kind)
            if target != f and any(target):
                return _frame(p, perm, f"valley-{kind}", _VALLEY_ROLES), kind
    return None


def _valley_target(f: Sequence[int], kind: str) -> tuple[int, ...]:
    if kind == "deep":
        s = f[1] + f[2] + f[3]
        return (s, f[1], f[2], f[3], s, 0, 0)
    if kind == "shallow":
        return (f[0], f[1], f[2], f[0] - (f[1] + f[2]), f[0], 0, 0)
    raise StrategyError(f"unknown valley kind {kind!r}")


def valley_move(p: Position, frame: Frame, kind: str) -> Move:
    """The valley drop; its result always satisfies the S1 pattern."""
    f = tuple(p.heights[j] for j in frame.perm)
    return move_between(p, _unframe(p, frame.perm, _valley_target(f, kind)))


# ---------------------------------------------------------------------------
# CN(3,2)-style three-heap reduction.
# ---------------------------------------------------------------------------


def _run_of_zeros(heights: Sequence[int], start: int, length: int) -> bool:
    n = len(heights)
    return all(heights[(start + j) % n] == 0 for j in range(length))


def _cn32_conditions_hold(p: Position, part: Cn32Partition) -> bool:
    n, k = p.spec.n, p.spec.k
    sets = part.sets
    members = [set(s) for s in sets]
    if members[0] & members[1] or members[0] & members[2] or members[1] & members[2]:
        return False
    covered = members[0] | members[1] | members[2]

    def arc(start: int, length: int) -> list[int]:
        return [(start + j) % n for j in range(length)]

    def pair_fits(i: int, j: int) -> bool:
        both = members[i] | members[j]
        for start in range(n):
            for length in range(1, k + 1):
                window = arc(start, length)
                if both <= set(window) and all(
                    p.heights[x] == 0 for x in window if x not in both
                ):
                    return True
        return False

    if not (pair_fits(0, 1) and pair_fits(0, 2) and pair_fits(1, 2)):
        return False
    for start in range(n):
        window = set(arc(start, k))
        if all(window & m for m in members):
            return False  # a k-window may never touch all three groups
    return True


def cn32_partition(p: Position) -> Optional[Cn32Partition]:
    """Three-heap partition for the zero-run family, if the shape matches.

    For CN(2l+1, l+1) a run of l-1 consecutive empty stacks yields the
    partition {stack before the run} / {stack after} / {remaining l
    stacks}.  Returns None when the game is not of that family or no
    qualifying run exists.
    """
    n, k = p.spec.n, p.spec.k
    if n != 2 * k - 1:
        return None
    ell = k - 1
    for z in range(n):
        if not _run_of_zeros(p.heights, z, ell - 1):
            continue
        a1 = ((z - 1) % n,)
        a2 = ((z + ell - 1) % n,)
        a3 = tuple((z + ell + j) % n for j in range(ell))
        run = tuple((z + j) % n for j in range(ell - 1))
        part = Cn32Partition(
            a1,
            a2,
            a3,
            (run,) if run else (),
            tuple(sum(p.heights[i] for i in group) for group in (a1, a2, a3)),
        )
        if _cn32_conditions_hold(p, part):
            return part
    return None


def cn32_winning_move(p: Position, part: Cn32Partition) -> Optional[Move]:
    """Equalize all three group sums to the smallest one.

    None iff the sums are already equal (the reduced game is lost).  At
    most two groups shrink, and by the partition conditions they fit in
    one window together with the zeros between them.
    """
    sums = part.set_sums
    target = min(sums)
    if all(s == target for s in sums):
        return None
    out = list(p.heights)
    for group, total in zip(part.sets, sums):
        if total > target:
            reduced = _take_from_last([p.heights[i] for i in group], target)
            for i, v in zip(group, reduced):
                out[i] = v
    return move_between(p, Position(p.spec, tuple(out)))


# ---------------------------------------------------------------------------
# Two or more empty stacks.
# ---------------------------------------------------------------------------


def _find_view(p: Position, predicate):
    for perm, f in _framed_views(p):
        if predicate(f):
            return perm, f
    return None


def _multiple_zeros_frame(p: Position) -> Frame:
    heights = p.heights
    n = p.spec.n
    if any(heights[i] == 0 == heights[(i + 1) % n] for i in range(n)):
        got = _find_view(p, lambda f: f[1] == 0 == f[2])
        perm, _ = got
        return _frame(
            p, perm, "adjacent", ("x1", "z1", "z2", "x2", "y3", "y2", "y1")
        )
    got = _find_view(p, lambda f: f[0] == 0 == f[2])
    if got is not None:
        perm, _ = got
        return _frame(p, perm, "one-apart", ("z1", "x", "z2", "y1", "y2", "y3", "y4"))
    got = _find_view(p, lambda f: f[0] == 0 == f[3] and f[4] >= f[6])
    if got is None:
        raise StrategyError("no two-zero structure found")
    perm, _ = got
    return _frame(p, perm, "two-apart", ("z1", "x1", "x2", "z2", "y2", "y", "y1"))


def _two_apart_target(f: tuple[int, ...]) -> tuple[int, ...]:
    """Winning target for the frame (0, x1, x2, 0, y2, y, y1), y2 >= y1."""
    x1, x2, y2, y, y1 = f[1], f[2], f[4], f[5], f[6]
    if y1 >= x1:
        s = min(x1 + x2, y1)
        if s == x1 + x2:
            return (0, x1, x2, 0, s, 0, s)
        return (0, x1, s - x1, 0, s, 0, y1)
    s = min(x1, y1 + y, y2)
    if s == x1:
        return (0, x1, 0, 0, s, s - y1, y1)
    if s == y1 + y:
        return (0, s, 0, 0, s, y, y1)
    if y <= y2:  # s == y2
        return (0, s, 0, 0, y2, y, y2 - y)
    return ()  # residual: maxima decide, handled by the caller


def _two_apart_residual_target(f: tuple[int, ...]) -> tuple[int, ...]:
    """Residual two-apart case: y exceeds y1, y2; split on where max sits."""
    x1, x2, y2, y, y1 = f[1], f[2], f[4], f[5], f[6]
    big = max(x1, x2, y)
    if x1 == big:
        s = min(x1 + y1, x2 + y2, y)
        if s == x2 + y2:
            return (0, s, x2, 0, y2, s, 0)
        if s == y:  # s == x1 + y1 is impossible: it would force x1 < x1
            return (0, s, s - y2, 0, y2, y, 0)
        return ()
    if x2 == big:
        return ()  # mirrored by the caller
    # big == y > max(x1, x2); requires the x1 >= x2 orientation
    if x1 < x2:
        return ()
    s = min(x1, x2 + y2)
    if s == x1:
        return (0, x1, x2, 0, s - x2, s, 0)
    return (0, s, x2, 0, y2, s, 0)


_TWO_APART_SWAP = (3, 2, 1, 0, 6, 5, 4)  # exchange the two arms of the frame


def multiple_zeros_move(p: Position, frame: Optional[Frame] = None) -> Move:
    """A winning move for positions with at least two empty stacks."""
    if frame is None:
        frame = _multiple_zeros_frame(p)
    if frame.case == "adjacent":
        part = cn32_partition(p)
        if part is None:
            raise StrategyError("adjacent zeros without a three-heap partition")
        move = cn32_winning_move(p, part)
        if move is None:
            raise NoWinningMove("three-heap sums already equal")
        return move
    f = tuple(p.heights[j] for j in frame.perm)
    if frame.case == "one-apart":
        x, y1, y2, y3, y4 = f[1], f[3], f[4], f[5], f[6]
        s = min(x, y1 + y2, y3 + y4)
        front = _take_from_last((y1, y2), s)
        back = _take_from_last((y3, y4), s)
        target = (0, s, 0, front[0], front[1], back[0], back[1])
        return move_between(p, _unframe(p, frame.perm, target))
    if frame.case == "two-apart":
        target = _two_apart_target(f)
        if target:
            return move_between(p, _unframe(p, frame.perm, target))
        for tau in ((0, 1, 2, 3, 4, 5, 6), _TWO_APART_SWAP):
            perm = _compose(frame.perm, tau)
            view = tuple(p.heights[j] for j in perm)
            target = _two_apart_residual_target(view)
            if target:
                return move_between(p, _unframe(p, perm, target))
        raise StrategyError("two-apart residual case fell through")
    raise StrategyError(f"unknown zero case {frame.case!r}")


# ---------------------------------------------------------------------------
# Exactly one empty stack.
# ---------------------------------------------------------------------------

_UZ_ROLES = ("z", "x1", "x2", "x3", "y3", "y2", "y1")
_UZ_SWAP = (0, 6, 5, 4, 3, 2, 1)  # exchange the arms around the zero


def _unique_zero_frame(p: Position) -> Frame:
    got = _find_view(p, lambda f: f[0] == 0 and f[2] >= f[5])
    if got is None:
        raise StrategyError("no unique-zero frame found")
    return _frame(p, got[0], "unique-zero", _UZ_ROLES)


def _uz_c1(f: tuple[int, ...]) -> Optional[tuple[int, ...]]:
    """Drop both near stacks to zero and level the far sums."""
    x1, x2, x3, y3, y2, y1 = f[1], f[2], f[3], f[4], f[5], f[6]
    s = y1 + y2
    if x1 >= s and x3 + y3 >= s:
        far = _take_from_last((x3, y3), s)
        return (0, s, 0, far[0], far[1], y2, y1)
    return None


def _uz_c2(f: tuple[int, ...]) -> Optional[tuple[int, ...]]:
    x1, x2, x3, y3, y2, y1 = f[1], f[2], f[3], f[4], f[5], f[6]
    s = x3 + y3
    if x1 >= s and y2 < s <= y1 + y2:
        return (0, s, 0, x3, y3, y2, s - y2)
    return None


def _uz_c3(f: tuple[int, ...]) -> Optional[tuple[int, ...]]:
    x1, x2, x3, y3, y2, y1 = f[1], f[2], f[3], f[4], f[5], f[6]
    s = x1
    if y1 <= s <= y1 + y2 and x3 + y3 >= s:
        far = _take_from_last((x3, y3), s)
        return (0, x1, 0, far[0], far[1], s - y1, y1)
    return None


def unique_zero_move(p: Position, frame: Optional[Frame] = None) -> Move:
    """A winning move for positions with exactly one empty stack.

    Frame slots: (0, x1, x2, x3, y3, y2, y1) with x2 >= y2.  Case split:
    small near-sum, near-side valley, tall x-arm, then the far-pair
    constructions (re-framed so the x-arm carries the larger near stack,
    with a valley backstop for the leftover orderings).
    """
    if frame is None:
        frame = _unique_zero_frame(p)
    f = tuple(p.heights[j] for j in frame.perm)
    x1, x2, x3, y3, y2, y1 = f[1], f[2], f[3], f[4], f[5], f[6]

    if x1 + y1 <= y2:  # (a) both near stacks fit under the smaller second stack
        s = x1 + y1
        target = (0, x1, s, 0, 0, s, y1)
        return move_between(p, _unframe(p, frame.perm, target))

    if y2 >= y1:  # (b) (y2, y1, 0, x1, x2) is a shallow valley
        tau = (5, 6, 0, 1, 2, 3, 4)
        perm = _compose(frame.perm, tau)
        view = tuple(p.heights[j] for j in perm)
        return move_between(p, _unframe(p, perm, _valley_target(view, "shallow")))

    if x2 >= y1:  # (c) level against the taller near stack
        s = min(y1, y2 + y3 + x3)
        if s == y1:
            far = _take_from_last((x3, y3), s - y2)
            target = (0, 0, s, far[0], far[1], y2, y1)
        else:
            target = (0, 0, s, x3, y3, y2, s)
        return move_between(p, _unframe(p, frame.perm, target))

    # (d) y1 > max(x2, y2)
    pair = x3 + y3
    if pair <= min(x1, y1):
        if pair > y2:
            target = (0, pair, 0, x3, y3, y2, pair - y2)
            return move_between(p, _unframe(p, frame.perm, target))
        # (x2, x3, y3, y2, y1) is a valley, deep iff it fits under x2
        tau = (2, 3, 4, 5, 6, 0, 1)
        perm = _compose(frame.perm, tau)
        view = tuple(p.heights[j] for j in perm)
        kind = "deep" if _deep(view) else "shallow"
        return move_between(p, _unframe(p, perm, _valley_target(view, kind)))

    # Far pair exceeds a near stack: orient so the x-arm starts higher.
    primary = frame.perm if x1 >= y1 else _compose(frame.perm, _UZ_SWAP)
    secondary = _compose(primary, _UZ_SWAP)
    pf = tuple(p.heights[j] for j in primary)
    X1, Y2, Y1 = pf[1], pf[5], pf[6]
    T = pf[3] + pf[4]
    if T <= X1:
        target = None
        if T > Y1 + Y2:
            target = _uz_c1(pf)
        elif T > Y2:
            target = _uz_c2(pf)
        if target:
            return move_between(p, _unframe(p, primary, target))
    else:
        target = _uz_c1(pf) if X1 >= Y1 + Y2 else _uz_c3(pf)
        if target:
            return move_between(p, _unframe(p, primary, target))
    for perm in (secondary, primary):
        view = tuple(p.heights[j] for j in perm)
        for construct in (_uz_c1, _uz_c2, _uz_c3):
            target = construct(view)
            if target:
                return move_between(p, _unframe(p, perm, target))
    found = detect_valley(p)
    if found:
        return valley_move(p, *found)
    raise StrategyError("unique-zero dispatch fell through")


# ---------------------------------------------------------------------------
# No empty stacks: maxima drive the construction.
# ---------------------------------------------------------------------------

_AP_ROLES = ("x1", "x2", "M1", "y3", "y2", "y1", "M2")
_AP_X_SWAP = (1, 0, 6, 5, 4, 3, 2)  # exchange x1, x2 in the antipodal frame


def _antipodal_perms(p: Position):
    """Frames putting a maximum pair three stacks apart into slots 2 and 6."""
    hs = p.heights
    big = max(hs)
    for a in range(7):
        if hs[a] == big and hs[(a + 3) % 7] == big:
            yield tuple((a + 1 + j) % 7 for j in range(7))
            yield tuple((a + 2 - j) % 7 for j in range(7))


def _maximum_frame(p: Position) -> Frame:
    big = max(p.heights)
    for perm in _antipodal_perms(p):
        f = tuple(p.heights[j] for j in perm)
        if f[3] == big == f[5]:  # four maxima around a single smaller stack
            if f[0] > f[1]:
                perm = _compose(perm, _AP_X_SWAP)
            return _frame(p, perm, "antipodal-quad", _AP_ROLES)
    for perm in _antipodal_perms(p):
        f = tuple(p.heights[j] for j in perm)
        if f[3] <= f[5]:
            return _frame(p, perm, "antipodal", _AP_ROLES)
    for i in range(7):
        if p.heights[i] != big:
            continue
        for perm in (
            tuple((i + j) % 7 for j in range(7)),
            tuple((i - j) % 7 for j in range(7)),
        ):
            f = tuple(p.heights[j] for j in perm)
            if f[1] <= f[6]:
                return _frame(
                    p, perm, "lone-max", ("M", "x1", "x2", "x3", "y3", "y2", "y1")
                )
    raise StrategyError("no maximum frame found")


def _quad_max_target(f: tuple[int, ...]) -> tuple[int, ...]:
    """Frame (x1, x2, M, M, y, M, M) with x1 <= x2."""
    x1, x2, big, y = f[0], f[1], f[2], f[4]
    if x1 + x2 <= big:
        # (M, x1, x2, M, M) is a shallow valley
        return (x1, x2, big - (x1 + x2), big, 0, 0, big)
    if x1 + x2 <= big + y:
        v = x1 + x2 - big
        return (x1, x2, x1, big, v, v, big)
    if big > y + 1:
        x1p, x2p = _take_from_last((x1, x2), big + y, floors=(y + 1, y + 1))
        return (x1p, x2p, y, big, y, big, y)
    # big == y + 1 forces x1 == x2 == M; drop alternate stacks to y
    return (big, y, y, big, y, big, y)


def _antipodal_target(f: tuple[int, ...]) -> tuple[int, ...]:
    """Frame (x1, x2, M, y3, y2, y1, M) with y3 <= y1 and y3 < M."""
    x1, x2, big, y3, y2, y1 = f[0], f[1], f[2], f[3], f[4], f[5]
    if y2 + y3 <= big:
        if y1 + y2 + y3 <= big:
            s = y1 + y2 + y3
            return (0, 0, s, y3, y2, y1, s)
        return (0, 0, big, y3, y2, big - (y3 + y2), big)
    s = min(y2 + y3, big + x1, big + x2)
    if s == y2 + y3:
        v = s - big
        return (v, v, big, y3, s - y3, y3, big)
    if x1 >= x2:  # s == M + x2
        return (x2, x2, big, y3, s - y3, y3, big)
    # s == M + x1 with x1 < x2
    return (x1, x2, s - x2, s - y2, y2, x1, big)


_LONE_ARM_SWAP = (0, 6, 5, 4, 3, 2, 1)
_LONE_REVERSE = (4, 3, 2, 1, 0, 6, 5)  # view with slots (y3, x3, x2, x1, M, y1, y2)


def _lone_max_far_target(f: tuple[int, ...]) -> tuple[int, ...]:
    """Frame (M, x1, x2, x3, y3, y2, y1); the x-pair sum is the minimum."""
    big, x1, x2, x3, y3, y2, y1 = f
    s = x2 + x3
    if big >= s:
        mprime, mtop = 0, s
    else:
        mprime, mtop = s - big, big
    return (mtop, mprime, x2, x3, y3, s - y3, mprime)


def maximum_move(p: Position, frame: Optional[Frame] = None) -> Move:
    """A winning move for zero-free N-positions."""
    if frame is None:
        frame = _maximum_frame(p)
    f = tuple(p.heights[j] for j in frame.perm)
    if frame.case == "antipodal-quad":
        return move_between(p, _unframe(p, frame.perm, _quad_max_target(f)))
    if frame.case == "antipodal":
        return move_between(p, _unframe(p, frame.perm, _antipodal_target(f)))
    if frame.case != "lone-max":
        raise StrategyError(f"unknown maximum case {frame.case!r}")
    big, x1, x2, x3, y3, y2, y1 = f
    s = min(big + x1, x2 + x3, y2 + y3)
    if s == big + x1:
        target = (big, x1, x2, s - x2, s - y2, y2, x1)
        return move_between(p, _unframe(p, frame.perm, target))
    if s == y2 + y3:  # mirror the arms, then treat as the x-pair case
        frame_perm = _compose(frame.perm, _LONE_ARM_SWAP)
        f = tuple(p.heights[j] for j in frame_perm)
        big, x1, x2, x3, y3, y2, y1 = f
    else:
        frame_perm = frame.perm
    # s == x2 + x3 in the active view
    if y3 >= x2 + x3:
        perm = _compose(frame_perm, _LONE_REVERSE)
        view = tuple(p.heights[j] for j in perm)
        kind = "deep" if _deep(view) else "shallow"
        return move_between(p, _unframe(p, perm, _valley_target(view, kind)))
    return move_between(p, _unframe(p, frame_perm, _lone_max_far_target(f)))


# ---------------------------------------------------------------------------
# Dispatch.
# ---------------------------------------------------------------------------


def find_winning_move(p: Position, debug: bool = False) -> Move:
    """One legal move into the P-set, constructed without search.

    Raises :class:`NoWinningMove` when the position already satisfies the
    P-set patterns (including the terminal position).  With ``debug`` the
    move is re-checked against the classifier and any divergence is a
    hard error.
    """
    if p.spec != CN74:
        raise WrongGame("constructive play is wired for CN(7,4)")
    if classify(p) is not None:
        raise NoWinningMove(f"{p.heights} is a P-position")
    zeros = sum(1 for h in p.heights if h == 0)
    if zeros >= 2:
        move = multiple_zeros_move(p)
    elif zeros == 1:
        move = unique_zero_move(p)
    else:
        move = maximum_move(p)
    if debug:
        result = apply_move(p, move)  # raises IllegalMove on a bad construction
        if classify(result) is None:
            raise StrategyError(
                f"move {move} from {p.heights} lands outside the P-set"
            )
    return move
