import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from circular_nim.core import (
    CN74,
    DihedralTransform,
    GameSpec,
    IllegalMove,
    InvalidPosition,
    Move,
    ParseError,
    Position,
    apply_move,
    canonicalize,
    dihedral_transforms,
    format_position,
    is_terminal,
    legal_moves,
    make_position,
    move_between,
    parse_position,
    token_sum,
    transform,
)

FIG1 = make_position(CN74, (1, 7, 5, 6, 2, 3, 6))


def positions(max_n=7, max_h=5):
    return st.integers(2, max_n).flatmap(
        lambda n: st.tuples(
            st.just(n),
            st.integers(1, n),
            st.lists(st.integers(0, max_h), min_size=n, max_size=n),
        )
    ).map(lambda t: make_position(GameSpec(t[0], t[1]), t[2]))


class TestMakePosition:
    def test_example_position(self):
        assert FIG1.heights == (1, 7, 5, 6, 2, 3, 6)

    def test_terminal_all_zero(self):
        p = make_position(CN74, [0] * 7)
        assert is_terminal(p)

    def test_length_mismatch(self):
        with pytest.raises(InvalidPosition):
            make_position(CN74, [1, 2, 3])

    def test_negative_height(self):
        with pytest.raises(InvalidPosition):
            make_position(CN74, [1, 2, 3, -1, 0, 0, 0])

    def test_bad_spec(self):
        with pytest.raises(ValueError):
            GameSpec(3, 4)


class TestTerminal:
    def test_zero_is_terminal(self):
        assert is_terminal(make_position(CN74, [0] * 7))

    def test_single_token_not_terminal(self):
        assert not is_terminal(make_position(CN74, [0, 0, 0, 1, 0, 0, 0]))

    def test_fig1_not_terminal(self):
        assert not is_terminal(FIG1)


class TestLegalMoves:
    def test_terminal_has_no_moves(self):
        assert list(legal_moves(make_position(CN74, [0] * 7))) == []

    def test_single_token_all_moves_reach_zero(self):
        p = make_position(CN74, [1, 0, 0, 0, 0, 0, 0])
        succs = {apply_move(p, m).heights for m in legal_moves(p)}
        assert succs == {(0,) * 7}

    def test_cn32_successor_multiset(self):
        # windows of size 2 on (1,1,0): enumerate the replacements by hand
        p = make_position(GameSpec(3, 2), [1, 1, 0])
        succs = sorted(apply_move(p, m).heights for m in legal_moves(p))
        assert succs == sorted(
            [(0, 0, 0), (0, 1, 0), (1, 0, 0), (1, 0, 0), (0, 1, 0)]
        )
        assert {(0, 1, 0), (1, 0, 0), (0, 0, 0)} <= set(succs)

    def test_nonzero_position_has_a_move(self):
        p = make_position(GameSpec(5, 3), [0, 0, 1, 0, 0])
        assert len(list(legal_moves(p))) >= 1


class TestApplyMove:
    def test_fig1_move(self):
        target = make_position(CN74, (0, 1, 5, 4, 2, 3, 6))
        m = move_between(FIG1, target)
        assert apply_move(FIG1, m) == target
        assert m.window_start == 0

    def test_no_decrease_rejected(self):
        m = Move(0, FIG1.heights[:4])
        with pytest.raises(IllegalMove) as err:
            apply_move(FIG1, m)
        assert err.value.reason == "no_decrease"

    def test_increase_rejected(self):
        with pytest.raises(IllegalMove) as err:
            apply_move(FIG1, Move(0, (2, 7, 5, 6)))
        assert err.value.reason == "floor"

    def test_componentwise_floor(self):
        p = make_position(CN74, [2] * 7)
        q = apply_move(p, Move(0, (0, 0, 0, 0)))
        assert q.heights == (0, 0, 0, 0, 2, 2, 2)

    def test_wrapping_window(self):
        p = make_position(CN74, [2] * 7)
        q = apply_move(p, Move(5, (1, 1, 1, 1)))
        assert q.heights == (1, 1, 2, 2, 2, 1, 1)


class TestTransforms:
    def test_identity(self):
        t = DihedralTransform(0, False)
        assert transform(FIG1, t) == FIG1

    def test_rotation_convention(self):
        p = make_position(CN74, [1, 2, 3, 4, 5, 6, 7])
        assert transform(p, DihedralTransform(1, False)).heights == (7, 1, 2, 3, 4, 5, 6)

    def test_reflection_convention(self):
        p = make_position(CN74, [1, 2, 3, 4, 5, 6, 7])
        assert transform(p, DihedralTransform(0, True)).heights == (1, 7, 6, 5, 4, 3, 2)

    @given(positions())
    @settings(max_examples=60, deadline=None)
    def test_inverse_restores(self, p):
        for t in dihedral_transforms(p.spec.n):
            assert transform(transform(p, t), t.inverse(p.spec.n)) == p


class TestCanonicalize:
    def test_rotations_share_canonical_form(self):
        a = make_position(CN74, [6, 2, 3, 6, 1, 7, 5])
        assert canonicalize(a) == canonicalize(FIG1)

    def test_zero_fixed(self):
        p = make_position(CN74, [0] * 7)
        assert canonicalize(p) == p

    def test_lexicographic_minimum(self):
        p = make_position(CN74, [5, 0, 0, 3, 2, 1, 3])
        expected = min(
            transform(p, t).heights for t in dihedral_transforms(7)
        )
        assert canonicalize(p).heights == expected
        assert canonicalize(p).heights == (0, 0, 3, 2, 1, 3, 5)

    @given(positions())
    @settings(max_examples=80, deadline=None)
    def test_idempotent_and_orbit_invariant(self, p):
        c = canonicalize(p)
        assert canonicalize(c) == c
        for t in dihedral_transforms(p.spec.n):
            assert canonicalize(transform(p, t)) == c


class TestParseFormat:
    def test_fig1_round_trip(self):
        text = "CN(7,4):1,7,5,6,2,3,6"
        assert parse_position(text) == FIG1
        assert format_position(FIG1) == text

    def test_length_mismatch(self):
        with pytest.raises(ParseError):
            parse_position("CN(7,4):1,7,5")

    @pytest.mark.parametrize(
        "bad", ["", "CN(7,4)", "CN(7,4):", "CN(7,4):1,2,x,4,5,6,7", "7,4:1,2,3,4,5,6,7"]
    )
    def test_malformed(self, bad):
        with pytest.raises(ParseError):
            parse_position(bad)

    @given(positions())
    @settings(max_examples=60, deadline=None)
    def test_round_trip(self, p):
        assert parse_position(format_position(p)) == p


class TestMoveInvariants:
    @given(positions(), st.randoms(use_true_random=False))
    @settings(max_examples=80, deadline=None)
    def test_moves_shrink_and_stay_in_window(self, p, rnd):
        moves = list(legal_moves(p))
        if not moves:
            assert is_terminal(p)
            return
        m = rnd.choice(moves)
        q = apply_move(p, m)
        assert token_sum(q) < token_sum(p)
        window = {(m.window_start + j) % p.spec.n for j in range(p.spec.k)}
        for i in range(p.spec.n):
            if i not in window:
                assert q.heights[i] == p.heights[i]

    @given(positions(max_n=5, max_h=2))
    @settings(max_examples=40, deadline=None)
    def test_successor_set_is_symmetry_invariant(self, p):
        def canon_successors(pos):
            return {
                canonicalize(apply_move(pos, m)).heights for m in legal_moves(pos)
            }

        base = canon_successors(p)
        for t in dihedral_transforms(p.spec.n):
            assert canon_successors(transform(p, t)) == base


class TestMoveBetween:
    def test_span_too_wide_rejected(self):
        p = make_position(CN74, [2] * 7)
        q = make_position(CN74, [1, 1, 1, 1, 1, 2, 1])
        with pytest.raises(IllegalMove) as err:
            move_between(p, q)
        assert err.value.reason == "window"

    def test_equal_positions_rejected(self):
        with pytest.raises(IllegalMove):
            move_between(FIG1, FIG1)
