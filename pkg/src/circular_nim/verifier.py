"""Exhaustive verification harness and P-position enumeration.

``verify_theorem`` replays the partition argument for CN(7,4) over a
bounded state space: the closed-form classifier must agree with the
game-tree oracle everywhere, no move may connect two classified
P-positions, the strategist must produce a classified winning move from
every N-position, and the terminal position must classify S2.
``verify_family`` does the analogous checks for the zero-run family of
CN(2l+1, l+1).
"""

from __future__ import annotations

import csv
import json
import time
from dataclasses import dataclass, field
from typing import Callable, Optional

from .core import CN74, GameSpec, Position, apply_move, legal_moves
from .classifier import PSetLabel, classify, in_general_S1
from .oracle import OutcomeClass, OutcomeTable, solve_all
from .strategist import find_winning_move


@dataclass
class VerificationReport:
    """Outcome of one exhaustive verification run.

    ``passed`` is true iff every violation list is empty and the terminal
    check holds; the report is a pure function of (spec, height bound)
    apart from ``elapsed_seconds``.
    """

    spec: GameSpec
    height_bound: int
    canonical_positions: int = 0
    oracle_p: int = 0
    classifier_p: int = 0
    mismatches: list[dict] = field(default_factory=list)
    condition_1_violations: list[dict] = field(default_factory=list)
    condition_2_failures: list[dict] = field(default_factory=list)
    condition_3_ok: bool = True
    elapsed_seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return (
            not self.mismatches
            and not self.condition_1_violations
            and not self.condition_2_failures
            and self.condition_3_ok
        )

    def to_dict(self) -> dict:
        return {
            "game": {"n": self.spec.n, "k": self.spec.k},
            "height_bound": self.height_bound,
            "counts": {
                "canonical_positions": self.canonical_positions,
                "oracle_p": self.oracle_p,
                "classifier_p": self.classifier_p,
            },
            "mismatches": self.mismatches,
            "condition_1_violations": self.condition_1_violations,
            "condition_2_failures": self.condition_2_failures,
            "condition_3_ok": self.condition_3_ok,
            "passed": self.passed,
            "elapsed_seconds": round(self.elapsed_seconds, 3),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def summary(self) -> str:
        lines = [
            f"game CN({self.spec.n},{self.spec.k}), heights <= {self.height_bound}",
            f"canonical positions: {self.canonical_positions}",
            f"P by oracle: {self.oracle_p}, P by classifier: {self.classifier_p}",
            f"classifier/oracle mismatches: {len(self.mismatches)}",
            f"P-to-P moves found: {len(self.condition_1_violations)}",
            f"winning-move failures: {len(self.condition_2_failures)}",
            f"terminal position check: {'ok' if self.condition_3_ok else 'FAILED'}",
            f"elapsed: {self.elapsed_seconds:.1f}s",
            "PASS" if self.passed else "FAIL",
        ]
        return "\n".join(lines)


def verify_theorem(
    spec: GameSpec = CN74,
    height_bound: int = 4,
    table: Optional[OutcomeTable] = None,
    classify_fn: Optional[Callable[[Position], Optional[PSetLabel]]] = None,
) -> VerificationReport:
    """Exhaustively verify the CN(7,4) P-position characterization.

    ``table`` may supply a pre-solved oracle table (reused, not re-solved);
    ``classify_fn`` swaps in an alternative classifier, which the test
    suite uses for mutation controls.
    """
    if spec != CN74:
        raise ValueError("verify_theorem targets CN(7,4); use verify_family")
    cfn = classify_fn if classify_fn is not None else classify
    started = time.time()
    if table is None or table.spec != spec or table.height_bound < height_bound:
        table = solve_all(spec, height_bound)
    report = VerificationReport(spec, height_bound)
    report.canonical_positions = len(table.entries)

    labels: dict[tuple[int, ...], Optional[PSetLabel]] = {}
    for key, oc in table.entries.items():
        p = Position(spec, key)
        label = cfn(p)
        labels[key] = label
        if oc is OutcomeClass.P:
            report.oracle_p += 1
        if label is not None:
            report.classifier_p += 1
        if (label is not None) != (oc is OutcomeClass.P):
            report.mismatches.append(
                {
                    "heights": list(key),
                    "oracle": oc.value,
                    "label": label.value if label else None,
                }
            )

    for key, label in labels.items():
        if label is None:
            continue
        p = Position(spec, key)
        for m in legal_moves(p):
            succ = apply_move(p, m)
            succ_label = cfn(succ)
            if succ_label is not None:
                report.condition_1_violations.append(
                    {
                        "heights": list(key),
                        "move": {
                            "window_start": m.window_start,
                            "new_heights": list(m.new_heights),
                        },
                        "successor": list(succ.heights),
                        "label": succ_label.value,
                    }
                )

    for key, label in labels.items():
        if label is not None or not any(key):
            continue
        p = Position(spec, key)
        try:
            m = find_winning_move(p)
            succ = apply_move(p, m)
            if cfn(succ) is None:
                raise AssertionError(f"move landed outside the P-set: {succ.heights}")
        except Exception as exc:  # noqa: BLE001 - failures are report content
            report.condition_2_failures.append(
                {"heights": list(key), "error": f"{type(exc).__name__}: {exc}"}
            )

    zero = Position(spec, (0,) * spec.n)
    report.condition_3_ok = (
        cfn(zero) is PSetLabel.S2
        and table.entries[tuple(zero.heights)] is OutcomeClass.P
    )
    report.elapsed_seconds = time.time() - started
    return report


_FAMILY_DEFAULT_BOUNDS = {1: 6, 2: 5, 3: 4, 4: 2}


def verify_family(
    ell: int,
    height_bound: Optional[int] = None,
    table: Optional[OutcomeTable] = None,
) -> VerificationReport:
    """Verify the zero-run family facts for CN(2l+1, l+1).

    Checks that every family member is oracle-P and that no legal move
    connects two family members; for l in {1, 2} the family formula must
    equal the oracle P-set exactly.  Default bounds keep runs desk-scale:
    l=1 -> 6, l=2 -> 5, l=3 -> 4, l=4 -> 2.
    """
    if ell not in (1, 2, 3, 4):
        raise ValueError("ell must be in {1, 2, 3, 4}")
    if height_bound is None:
        height_bound = _FAMILY_DEFAULT_BOUNDS[ell]
    spec = GameSpec(2 * ell + 1, ell + 1)
    started = time.time()
    if table is None or table.spec != spec or table.height_bound < height_bound:
        table = solve_all(spec, height_bound)
    report = VerificationReport(spec, height_bound)
    report.canonical_positions = len(table.entries)

    members: list[tuple[int, ...]] = []
    for key, oc in table.entries.items():
        p = Position(spec, key)
        in_family = in_general_S1(p, ell)
        if oc is OutcomeClass.P:
            report.oracle_p += 1
        if in_family:
            report.classifier_p += 1
            members.append(key)
            if oc is not OutcomeClass.P:
                report.mismatches.append(
                    {"heights": list(key), "oracle": oc.value, "label": "S1"}
                )
        elif ell in (1, 2) and oc is OutcomeClass.P:
            report.mismatches.append(
                {"heights": list(key), "oracle": oc.value, "label": None}
            )

    for key in members:
        p = Position(spec, key)
        for m in legal_moves(p):
            succ = apply_move(p, m)
            if in_general_S1(succ, ell):
                report.condition_1_violations.append(
                    {
                        "heights": list(key),
                        "move": {
                            "window_start": m.window_start,
                            "new_heights": list(m.new_heights),
                        },
                        "successor": list(succ.heights),
                        "label": "S1",
                    }
                )

    zero = Position(spec, (0,) * spec.n)
    report.condition_3_ok = table.entries[tuple(zero.heights)] is OutcomeClass.P
    report.elapsed_seconds = time.time() - started
    return report


def enumerate_p(
    spec: GameSpec, height_bound: int, out_path, table: Optional[OutcomeTable] = None
) -> int:
    """Write canonical P-positions as CSV ``heights,label,outcome``.

    Rows are sorted by canonical key; heights are space-separated.  The
    label column is filled for CN(7,4) (S1..S4) and for other
    CN(2l+1, l+1) games when the zero-run formula matches.  Returns the
    number of rows written.
    """
    if table is None or table.spec != spec or table.height_bound < height_bound:
        table = solve_all(spec, height_bound)
    ell = spec.k - 1 if spec.n == 2 * spec.k - 1 else None
    count = 0
    with open(out_path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["heights", "label", "outcome"])
        for key in sorted(table.entries):
            if table.entries[key] is not OutcomeClass.P:
                continue
            p = Position(spec, key)
            if spec == CN74:
                label = classify(p)
                label_text = label.value if label else ""
            elif ell is not None and in_general_S1(p, ell):
                label_text = "S1"
            else:
                label_text = ""
            writer.writerow([" ".join(map(str, key)), label_text, "P"])
            count += 1
    return count
