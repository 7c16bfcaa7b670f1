"""Ground-truth outcome classification by exhaustive game-tree search.

A position is a P-position iff every option is an N-position; terminal
positions are P.  Outcomes are memoized on canonical (dihedral-least)
height tuples, so the whole orbit of a position costs one entry.

``solve_all`` works retrograde: positions are grouped by total token
count and solved in ascending order, so every option of a position is
already classified when the position is reached.  Within one layer the
entries are independent (all options have strictly smaller token sums),
so a parallel implementation may compute a layer concurrently with
layers as barriers; this implementation is serial.
"""

from __future__ import annotations

import csv
import enum
import struct
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Optional

from .core import (
    CircularNimError,
    GameSpec,
    Move,
    Position,
    WrongGame,
    apply_move,
    dihedral_index_maps,
    legal_moves,
)


class OutcomeClass(enum.Enum):
    """P: the previous mover wins; N: the next mover wins."""

    P = "P"
    N = "N"


class TableFormatError(CircularNimError):
    """A persisted outcome table is truncated, corrupt or mismatched."""


@dataclass
class OutcomeTable:
    """Memoized outcomes keyed by canonical height tuple.

    Tables produced by :func:`solve_all` are closed under moves for all
    heights <= height_bound (moves never increase any stack).  Many
    readers may share a table; ad-hoc :func:`outcome` calls write into
    it and need exclusive ownership or a private copy.
    """

    spec: GameSpec
    height_bound: int
    entries: dict[tuple[int, ...], OutcomeClass] = field(default_factory=dict)


def _successor_keys(
    heights: tuple[int, ...], n: int, k: int, canon
) -> Iterable[tuple[int, ...]]:
    """Canonical keys of all options, de-duplicated, in enumeration order."""
    seen: set[tuple[int, ...]] = set()
    for start in range(n):
        idx = [(start + j) % n for j in range(k)]
        current = tuple(heights[i] for i in idx)
        if not any(current):
            continue
        base = list(heights)
        for repl in product(*(range(c + 1) for c in current)):
            if repl == current:
                continue
            for i, v in zip(idx, repl):
                base[i] = v
            key = canon(tuple(base))
            for i, v in zip(idx, current):
                base[i] = v
            if key not in seen:
                seen.add(key)
                yield key


def _make_canon(n: int, cache_limit: int = 4_000_000):
    """Canonicalizer with a per-run cache of raw tuple -> canonical tuple."""
    maps = dihedral_index_maps(n)
    cache: dict[tuple[int, ...], tuple[int, ...]] = {}

    def canon(t: tuple[int, ...]) -> tuple[int, ...]:
        got = cache.get(t)
        if got is not None:
            return got
        best = t
        for perm in maps:
            cand = tuple(t[j] for j in perm)
            if cand < best:
                best = cand
        if len(cache) < cache_limit:
            cache[t] = best
        return best

    return canon


def solve_all(spec: GameSpec, height_bound: int) -> OutcomeTable:
    """Outcomes for every canonical position with all heights <= bound."""
    if height_bound < 0:
        raise ValueError("height bound must be >= 0")
    n, k = spec.n, spec.k
    canon = _make_canon(n)
    layers: dict[int, list[tuple[int, ...]]] = {}
    seen: set[tuple[int, ...]] = set()
    for raw in product(range(height_bound + 1), repeat=n):
        key = canon(raw)
        if key not in seen:
            seen.add(key)
            layers.setdefault(sum(key), []).append(key)

    entries: dict[tuple[int, ...], OutcomeClass] = {}
    P, N = OutcomeClass.P, OutcomeClass.N
    for total in sorted(layers):
        for pos in sorted(layers[total]):
            if total == 0:
                entries[pos] = P
                continue
            result = P
            for child in _successor_keys(pos, n, k, canon):
                if entries[child] is P:
                    result = N
                    break
            entries[pos] = result
    return OutcomeTable(spec, height_bound, entries)


def outcome(p: Position, table: Optional[OutcomeTable] = None) -> OutcomeClass:
    """Exact outcome of ``p`` under normal play, memoized on canonical form.

    The reachable space from ``p`` is the componentwise box under its own
    heights, so the recursion is self-bounding.  When ``table`` is given
    its entries are reused and extended in place.
    """
    if table is not None and table.spec != p.spec:
        raise WrongGame("outcome table belongs to a different game")
    entries = table.entries if table is not None else {}
    n, k = p.spec.n, p.spec.k
    canon = _make_canon(n)
    P, N = OutcomeClass.P, OutcomeClass.N

    def solve(key: tuple[int, ...]) -> OutcomeClass:
        got = entries.get(key)
        if got is not None:
            return got
        result = P
        for child in _successor_keys(key, n, k, canon):
            if solve(child) is P:
                result = N
                break
        entries[key] = result
        return result

    return solve(canon(p.heights))


def winning_options(p: Position, table: Optional[OutcomeTable] = None) -> list[Move]:
    """All legal moves whose successor is a P-position.

    Empty iff ``p`` is itself a P-position.  Duplicated successors reached
    through different windows are all listed.
    """
    if table is None:
        table = OutcomeTable(p.spec, max(p.heights, default=0))
    moves = []
    for m in legal_moves(p):
        if outcome(apply_move(p, m), table) is OutcomeClass.P:
            moves.append(m)
    return moves


_MAGIC = b"CNOT"
_VERSION = 1
_HEADER = struct.Struct(">4sHHHHQ")


def save_table(table: OutcomeTable, path) -> None:
    """Persist a table: header then sorted (key bytes, outcome bit) records.

    One byte per stack, so heights above 255 cannot be persisted.
    Deterministic output: equal tables serialize byte-identically.
    """
    keys = sorted(table.entries)
    if keys and max(max(kk) for kk in keys) > 255:
        raise TableFormatError("table contains heights above 255")
    header = _HEADER.pack(
        _MAGIC, _VERSION, table.spec.n, table.spec.k, table.height_bound, len(keys)
    )
    with open(path, "wb") as fh:
        fh.write(header)
        for key in keys:
            fh.write(bytes(key))
            fh.write(b"\x01" if table.entries[key] is OutcomeClass.P else b"\x00")


def load_table(path, expect_spec: Optional[GameSpec] = None) -> OutcomeTable:
    """Load a persisted table; bit-exact inverse of :func:`save_table`."""
    with open(path, "rb") as fh:
        raw = fh.read()
    if len(raw) < _HEADER.size:
        raise TableFormatError("file too short for header")
    magic, version, n, k, bound, count = _HEADER.unpack(raw[: _HEADER.size])
    if magic != _MAGIC:
        raise TableFormatError("bad magic; not an outcome table")
    if version != _VERSION:
        raise TableFormatError(f"unsupported format version {version}")
    try:
        spec = GameSpec(n, k)
    except ValueError as exc:
        raise TableFormatError(f"bad game header: {exc}") from exc
    if expect_spec is not None and spec != expect_spec:
        raise TableFormatError(
            f"table is for CN({n},{k}), expected "
            f"CN({expect_spec.n},{expect_spec.k})"
        )
    body = raw[_HEADER.size :]
    record = n + 1
    if len(body) != count * record:
        raise TableFormatError(
            f"expected {count} records of {record} bytes, got {len(body)} bytes"
        )
    entries: dict[tuple[int, ...], OutcomeClass] = {}
    for i in range(count):
        chunk = body[i * record : (i + 1) * record]
        key = tuple(chunk[:n])
        bit = chunk[n]
        if bit not in (0, 1):
            raise TableFormatError(f"bad outcome bit {bit}")
        entries[key] = OutcomeClass.P if bit else OutcomeClass.N
    return OutcomeTable(spec, bound, entries)


def write_csv(table: OutcomeTable, path) -> int:
    """Export ``heights,outcome`` rows in sorted key order; returns count."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["heights", "outcome"])
        for key in sorted(table.entries):
            writer.writerow([" ".join(map(str, key)), table.entries[key].value])
    return len(table.entries)
