"""Independent reference oracle for cross-checking.

Deliberately shares nothing with the package internals: raw tuples, no
symmetry reduction, its own move enumeration.  Only usable on tiny
state spaces.
"""

from __future__ import annotations

from itertools import product


def naive_successors(heights: tuple[int, ...], k: int):
    n = len(heights)
    for start in range(n):
        idx = [(start + j) % n for j in range(k)]
        current = tuple(heights[i] for i in idx)
        for repl in product(*(range(c + 1) for c in current)):
            if repl == current:
                continue
            out = list(heights)
            for i, v in zip(idx, repl):
                out[i] = v
            yield tuple(out)


def naive_outcome(heights: tuple[int, ...], k: int, memo=None) -> str:
    """"P" or "N" by direct recursion over raw positions."""
    if memo is None:
        memo = {}
    got = memo.get(heights)
    if got is not None:
        return got
    result = "P"
    for succ in naive_successors(heights, k):
        if naive_outcome(succ, k, memo) == "P":
            result = "N"
            break
    memo[heights] = result
    return result
