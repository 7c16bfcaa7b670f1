"""Closed-form P-position membership tests.

For CN(7,4) the set of P-positions splits into four families S1..S4,
described below in a frame (a,b,c,d,e,f,g) whose first stack is a minimum;
membership quantifies over all 14 dihedral readings of the position, so
callers never need to pre-rotate.  The module also carries the exact
formulas for CN(3,2) and CN(5,3), and the general zero-run family shared
by every CN(2l+1, l+1).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Optional

from .core import (
    CN74,
    DihedralTransform,
    GameSpec,
    Position,
    WrongGame,
    dihedral_index_maps,
    dihedral_transforms,
)


class PSetLabel(enum.Enum):
    """Which P-position family a CN(7,4) position belongs to."""

    S1 = "S1"
    S2 = "S2"
    S3 = "S3"
    S4 = "S4"


@dataclass(frozen=True)
class CanonicalFrame:
    """A dihedral reading of a position whose first stack is a minimum.

    ``labeled.heights`` are read as (a,b,c,d,e,f,g) with a = min.
    """

    transform: DihedralTransform
    labeled: Position


def _require(p: Position, spec: GameSpec) -> None:
    if p.spec != spec:
        raise WrongGame(
            f"operation defined for CN({spec.n},{spec.k}), "
            f"got CN({p.spec.n},{p.spec.k})"
        )


def _frames(p: Position):
    """Yield (transform, framed heights) over all 2n dihedral readings."""
    hs = p.heights
    transforms = dihedral_transforms(p.spec.n)
    for t, perm in zip(transforms, dihedral_index_maps(p.spec.n)):
        yield t, tuple(hs[j] for j in perm)


def _s1_frame(f: tuple[int, ...]) -> bool:
    # two adjacent empty stacks, equal flanks, and the opposite three
    # stacks sum to the flank height
    return f[0] == 0 == f[1] and f[2] == f[6] > 0 and f[3] + f[4] + f[5] == f[2]


def _s2_frame(f: tuple[int, ...]) -> bool:
    return all(h == f[0] for h in f)


def _s3_frame(f: tuple[int, ...]) -> bool:
    a = f[0]
    return (
        a == min(f)
        and a == f[1]
        and f[2] == f[6]
        and f[3] == f[5]
        and a + f[2] == f[3] + f[4]
        and 0 < a < f[4]
    )


def _s4_frame(f: tuple[int, ...]) -> bool:
    a = f[0]
    return (
        a == min(f)
        and a == f[5]
        and f[1] + f[2] == f[3] + f[4] == f[6] + a
        and a < min(f[1], f[4])
        and a < max(f[2], f[3])
    )


_FRAME_TESTS: dict[PSetLabel, Callable[[tuple[int, ...]], bool]] = {
    PSetLabel.S1: _s1_frame,
    PSetLabel.S2: _s2_frame,
    PSetLabel.S3: _s3_frame,
    PSetLabel.S4: _s4_frame,
}


def matching_frames(p: Position, label: PSetLabel) -> list[CanonicalFrame]:
    """All dihedral readings of ``p`` matching ``label``."""
    _require(p, CN74)
    test = _FRAME_TESTS[label]
    return [
        CanonicalFrame(t, Position(p.spec, f)) for t, f in _frames(p) if test(f)
    ]


def matching_frame(p: Position, label: PSetLabel) -> Optional[CanonicalFrame]:
    """The first dihedral reading of ``p`` matching ``label``, if any."""
    frames = matching_frames(p, label)
    return frames[0] if frames else None


def in_S1(p: Position) -> bool:
    """Adjacent zero pair with equal positive flanks and matching tri-sum."""
    _require(p, CN74)
    return any(_s1_frame(f) for _, f in _frames(p))


def in_S2(p: Position) -> bool:
    """All stacks equal (includes the terminal position)."""
    _require(p, CN74)
    return _s2_frame(p.heights)


def in_S3(p: Position) -> bool:
    """Adjacent positive minima pair with the common-sum structure."""
    _require(p, CN74)
    return any(_s3_frame(f) for _, f in _frames(p))


def in_S4(p: Position) -> bool:
    """Two minima separated by one stack, three equal pair sums."""
    _require(p, CN74)
    return any(_s4_frame(f) for _, f in _frames(p))


def classify(p: Position) -> Optional[PSetLabel]:
    """The unique family containing ``p``, or None for N-positions.

    ``classify(p) is not None`` is exactly "p is a P-position" for CN(7,4).
    Families are checked in order S1..S4; disjointness is asserted in
    debug builds rather than trusted.
    """
    _require(p, CN74)
    found: Optional[PSetLabel] = None
    for label, test in _FRAME_TESTS.items():
        if any(test(f) for _, f in _frames(p)):
            found = label
            break
    if __debug__ and found is not None:
        others = [
            label
            for label, test in _FRAME_TESTS.items()
            if label != found and any(test(f) for _, f in _frames(p))
        ]
        assert not others, f"{p.heights} matched both {found} and {others}"
    return found


def is_P(p: Position) -> bool:
    """Closed-form P-position test for CN(7,4)."""
    return classify(p) is not None


def family_is_P(p: Position) -> bool:
    """Exact P-membership for CN(3,2) and CN(5,3).

    CN(3,2): equal stack heights.  CN(5,3): some dihedral reading
    (x,0,x,a,b) with a+b = x.
    """
    if p.spec == GameSpec(3, 2):
        return all(h == p.heights[0] for h in p.heights)
    if p.spec == GameSpec(5, 3):
        return any(
            f[1] == 0 and f[0] == f[2] and f[3] + f[4] == f[0]
            for _, f in _frames(p)
        )
    raise WrongGame(f"no closed form wired for CN({p.spec.n},{p.spec.k})")


def in_general_S1(p: Position, ell: int) -> bool:
    """Zero-run family membership for CN(2l+1, l+1).

    True iff some dihedral reading is (x, 0^(l-1), x, a1..al) with
    sum(a_i) = x.  For l=1 this is "all equal"; for l=2 it is the CN(5,3)
    formula; for l=3 it covers S1 of CN(7,4) together with the terminal
    position.
    """
    if ell < 1:
        raise WrongGame(f"need ell >= 1, got {ell}")
    expected = GameSpec(2 * ell + 1, ell + 1)
    if p.spec != expected:
        raise WrongGame(
            f"ell={ell} means CN({expected.n},{expected.k}), "
            f"got CN({p.spec.n},{p.spec.k})"
        )
    for _, f in _frames(p):
        x = f[0]
        if f[ell] != x:
            continue
        if any(f[i] != 0 for i in range(1, ell)):
            continue
        if sum(f[ell + 1 :]) == x:
            return True
    return False
