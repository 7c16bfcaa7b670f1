from itertools import product

import pytest

from circular_nim.classifier import PSetLabel, classify, in_S1, in_general_S1
from circular_nim.core import (
    CN74,
    GameSpec,
    Position,
    apply_move,
    make_position,
)
from circular_nim.oracle import OutcomeClass, OutcomeTable, outcome
from circular_nim.strategist import (
    Cn32Partition,
    NoWinningMove,
    cn32_partition,
    cn32_winning_move,
    detect_valley,
    find_winning_move,
    maximum_move,
    multiple_zeros_move,
    unique_zero_move,
    valley_move,
)


def cn74(*heights):
    return make_position(CN74, heights)


class TestDetectValley:
    def test_deep(self):
        found = detect_valley(cn74(9, 1, 2, 3, 8, 7, 7))
        assert found is not None
        frame, kind = found
        assert kind == "deep"

    def test_shallow(self):
        found = detect_valley(cn74(5, 2, 3, 7, 8, 6, 6))
        assert found is not None
        assert found[1] == "shallow"

    def test_absent_on_flat(self):
        assert detect_valley(cn74(3, 3, 3, 3, 3, 3, 3)) is None

    def test_deep_preferred(self):
        # deep through the zero gap and shallow both exist here
        p = cn74(9, 1, 2, 3, 8, 7, 7)
        assert detect_valley(p)[1] == "deep"


class TestValleyMove:
    def test_deep_example(self):
        p = cn74(9, 1, 2, 3, 8, 7, 7)
        frame, kind = detect_valley(p)
        q = apply_move(p, valley_move(p, frame, kind))
        assert q.heights == (6, 1, 2, 3, 6, 0, 0)
        assert in_S1(q)

    def test_shallow_example(self):
        p = cn74(5, 2, 3, 7, 8, 6, 6)
        frame, kind = detect_valley(p)
        q = apply_move(p, valley_move(p, frame, kind))
        assert q.heights == (5, 2, 3, 0, 5, 0, 0)
        assert in_S1(q)

    def test_all_valley_results_in_s1_h3(self):
        for heights in product(range(4), repeat=7):
            p = Position(CN74, heights)
            found = detect_valley(p)
            if found is None:
                continue
            q = apply_move(p, valley_move(p, *found))
            assert in_S1(q), heights


class TestCn32Partition:
    def test_cn74_adjacent_zeros(self):
        part = cn32_partition(cn74(4, 0, 0, 3, 2, 2, 5))
        assert part is not None
        assert part.a1 == (0,)
        assert part.a2 == (3,)
        assert part.a3 == (4, 5, 6)
        assert part.set_sums == (4, 3, 9)

    def test_cn53_single_zero(self):
        p = make_position(GameSpec(5, 3), [5, 0, 5, 2, 3])
        part = cn32_partition(p)
        assert part is not None
        assert part.set_sums == (5, 5, 5)

    def test_no_zero_run(self):
        assert cn32_partition(cn74(1, 1, 1, 1, 1, 1, 1)) is None

    def test_partition_conditions_preserved_by_winning_move(self):
        p = cn74(4, 0, 0, 3, 2, 2, 5)
        part = cn32_partition(p)
        q = apply_move(p, cn32_winning_move(p, part))
        part_after = cn32_partition(q)
        assert part_after is not None
        assert len(set(part_after.set_sums)) == 1


class TestCn32WinningMove:
    def test_equalizes_to_minimum(self):
        p = cn74(4, 0, 0, 3, 2, 2, 5)
        m = cn32_winning_move(p, cn32_partition(p))
        q = apply_move(p, m)
        assert q.heights == (3, 0, 0, 3, 2, 1, 0)
        assert in_S1(q)

    def test_absent_when_sums_equal(self):
        p = cn74(5, 0, 0, 5, 1, 2, 2)
        assert cn32_winning_move(p, cn32_partition(p)) is None

    def test_cn95_example(self):
        p = make_position(GameSpec(9, 5), [4, 0, 0, 0, 6, 1, 1, 1, 1])
        m = cn32_winning_move(p, cn32_partition(p))
        q = apply_move(p, m)
        part = cn32_partition(q)
        assert part.set_sums == (4, 4, 4)
        assert in_general_S1(q, 4)
        assert outcome(q) is OutcomeClass.P


class TestMultipleZerosMove:
    def test_adjacent_zero_case(self):
        p = cn74(4, 0, 0, 3, 2, 2, 5)
        q = apply_move(p, multiple_zeros_move(p))
        assert classify(q) is PSetLabel.S1

    def test_one_apart_case(self):
        p = cn74(0, 3, 0, 2, 2, 1, 4)
        q = apply_move(p, multiple_zeros_move(p))
        assert classify(q) in (PSetLabel.S1, PSetLabel.S4)

    def test_two_apart_case(self):
        p = cn74(0, 2, 3, 0, 4, 9, 2)
        q = apply_move(p, multiple_zeros_move(p))
        assert classify(q) in (PSetLabel.S1, PSetLabel.S4)

    def test_take_everything_when_one_group_is_empty(self):
        p = cn74(0, 0, 0, 4, 1, 2, 3)
        q = apply_move(p, multiple_zeros_move(p))
        assert classify(q) is not None


class TestUniqueZeroMove:
    def test_small_near_sum_case(self):
        p = cn74(0, 1, 5, 7, 9, 4, 2)
        q = apply_move(p, unique_zero_move(p))
        assert q.heights == (0, 1, 3, 0, 0, 3, 2)
        assert classify(q) is PSetLabel.S1

    def test_near_valley_case(self):
        # (y2, y1, 0, x1, x2) shallow: y1 <= y2 < x1 + y1, y2 <= x2
        p = cn74(0, 4, 6, 5, 5, 3, 2)
        q = apply_move(p, unique_zero_move(p))
        assert classify(q) is not None

    def test_far_pair_s4_branch(self):
        # x3 + y3 fits under both near stacks but exceeds the second stack
        p = cn74(0, 6, 3, 2, 2, 1, 6)
        q = apply_move(p, unique_zero_move(p))
        assert classify(q) in (PSetLabel.S1, PSetLabel.S4)

    def test_reoriented_far_pair_case(self):
        # the printed branch fails in the primary orientation; the code
        # must fall back to the mirrored constructions or a valley
        p = cn74(0, 1, 3, 1, 1, 1, 4)
        q = apply_move(p, unique_zero_move(p))
        assert classify(q) is not None

    def test_exhaustive_h3(self):
        for heights in product(range(4), repeat=7):
            if heights.count(0) != 1:
                continue
            p = Position(CN74, heights)
            if classify(p) is not None:
                continue
            q = apply_move(p, unique_zero_move(p))
            assert classify(q) is not None, heights


class TestMaximumMove:
    def test_quad_maxima_s3_target(self):
        p = cn74(2, 3, 4, 4, 3, 4, 4)
        q = apply_move(p, maximum_move(p))
        assert q.heights == (2, 3, 2, 4, 1, 1, 4)
        assert classify(q) is PSetLabel.S3

    def test_quad_maxima_s4_target(self):
        # far pair exceeds max + middle: lands in the peak pattern
        p = cn74(4, 4, 4, 4, 1, 4, 4)
        q = apply_move(p, maximum_move(p))
        assert classify(q) in (PSetLabel.S3, PSetLabel.S4)

    def test_lone_maximum(self):
        p = cn74(1, 7, 5, 6, 2, 3, 6)
        q = apply_move(p, maximum_move(p))
        assert classify(q) is not None

    def test_exhaustive_h3(self):
        for heights in product(range(1, 4), repeat=7):
            p = Position(CN74, heights)
            if classify(p) is not None:
                continue
            q = apply_move(p, maximum_move(p))
            assert classify(q) is not None, heights


class TestFindWinningMove:
    def test_p_position_raises(self):
        with pytest.raises(NoWinningMove):
            find_winning_move(cn74(3, 3, 3, 3, 3, 3, 3))

    def test_near_uniform_position(self):
        p = cn74(3, 3, 3, 3, 3, 3, 2)
        q = apply_move(p, find_winning_move(p, debug=True))
        assert classify(q) is not None

    def test_tri_sum_repair(self):
        p = cn74(0, 0, 5, 1, 2, 3, 5)
        q = apply_move(p, find_winning_move(p, debug=True))
        assert q.heights == (0, 0, 5, 1, 2, 2, 5)
        assert classify(q) is PSetLabel.S1

    def test_fig1_position(self):
        p = cn74(1, 7, 5, 6, 2, 3, 6)
        m = find_winning_move(p, debug=True)
        q = apply_move(p, m)
        assert classify(q) is not None
        # agrees with the game tree: the chosen successor really is P
        assert outcome(q, OutcomeTable(CN74, 7)) is OutcomeClass.P

    def test_soundness_exhaustive_h3(self, cn74_table_h2):
        for heights in product(range(4), repeat=7):
            p = Position(CN74, heights)
            if classify(p) is not None:
                continue
            q = apply_move(p, find_winning_move(p)) if any(heights) else None
            assert q is not None and classify(q) is not None, heights

    def test_agreement_with_oracle_h2(self, cn74_table_h2):
        for key, oc in cn74_table_h2.entries.items():
            if oc is not OutcomeClass.N:
                continue
            p = Position(CN74, key)
            q = apply_move(p, find_winning_move(p))
            assert outcome(q, cn74_table_h2) is OutcomeClass.P, key

    def test_no_retreat_h3(self):
        # no move connects two classified P-positions
        from circular_nim.core import legal_moves

        for heights in product(range(4), repeat=7):
            p = Position(CN74, heights)
            if classify(p) is None:
                continue
            for m in legal_moves(p):
                assert classify(apply_move(p, m)) is None, (heights, m)
