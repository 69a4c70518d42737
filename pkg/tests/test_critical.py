import random
from fractions import Fraction

import pytest

from pgindex import (
    MCVSet,
    ValidationError,
    is_critical_for,
    make_tu_game,
    minimal_critical_below,
    minimal_critical_coalitions,
    minimal_critical_vectors,
    minimal_critical_vectors_oracle,
    minimal_winning_coalitions,
    real_gaining_coalitions,
    zero_game,
)
from pgindex.critical import CoalitionSet
from pgindex.errors import (
    NotMinimalCritical,
    OracleCapExceeded,
    UnknownPlayer,
    ZeroLevelPlayer,
)
from pgindex.games import all_coalitions, evaluate

from gamegen import random_monotone_jk, random_monotone_tu, random_tu


class TestMCVSet:
    def test_sorted_in_table_order(self, example33):
        mcv = minimal_critical_vectors(example33)
        assert list(mcv.vectors) == sorted(mcv.vectors)

    def test_duplicate_rejected(self):
        with pytest.raises(ValidationError):
            MCVSet.from_pairs([((1, 0), 1), ((1, 0), 1)])

    def test_comparable_pairs_need_increasing_worth(self):
        with pytest.raises(ValidationError):
            MCVSet.from_pairs([((1, 0), 1), ((1, 1), 1)])
        # strictly increasing along the order is fine
        MCVSet.from_pairs([((1, 0), 1), ((1, 1), 2)])

    def test_worth_lookup(self, example33):
        mcv = minimal_critical_vectors(example33)
        assert mcv.worth_of((2, 2, 2)) == 2
        assert (2, 1, 0) in mcv
        assert len(mcv) == 5


class TestMCVEnumeration:
    def test_example(self, example33):
        mcv = minimal_critical_vectors(example33)
        assert mcv.as_dict() == {
            (1, 1, 2): 1,
            (1, 2, 0): 1,
            (2, 0, 1): 1,
            (2, 1, 0): 1,
            (2, 2, 2): 2,
        }

    def test_zero_game_has_none(self):
        assert len(minimal_critical_vectors(zero_game(2, 3, 3))) == 0

    def test_agrees_with_oracle_randomly(self):
        rng = random.Random(11)
        for n, j, k in ((2, 2, 3), (2, 3, 3), (3, 2, 2), (3, 3, 2)):
            for _ in range(30):
                game = random_monotone_jk(n, j, k, rng)
                assert minimal_critical_vectors(game) == minimal_critical_vectors_oracle(game)

    def test_oracle_cap(self):
        big = zero_game(13, 3, 2)
        with pytest.raises(OracleCapExceeded):
            minimal_critical_vectors_oracle(big)

    def test_every_mcv_dominates_nothing_below(self, example33):
        mcv = minimal_critical_vectors(example33)
        for x, worth in mcv.pairs():
            assert evaluate(example33, x) == worth
            for y in example33.profiles():
                if y != x and all(a <= b for a, b in zip(y, x)):
                    assert evaluate(example33, y) < worth


class TestMWC:
    def test_quota_example(self, quota_simple):
        assert minimal_winning_coalitions(quota_simple) == {
            frozenset({1}),
            frozenset({2, 3}),
        }

    def test_trivial_game(self):
        from pgindex import simple_game_from_generators

        assert minimal_winning_coalitions(simple_game_from_generators(3, [])) == frozenset()


class TestCoalitionFamilies:
    def test_non_monotone_example_splits_families(self):
        worths = {
            frozenset(): Fraction(0),
            frozenset({1}): Fraction(3),
            frozenset({2}): Fraction(0),
            frozenset({3}): Fraction(0),
            frozenset({1, 2}): Fraction(3, 2),
            frozenset({1, 3}): Fraction(3, 2),
            frozenset({2, 3}): Fraction(3, 2),
            frozenset({1, 2, 3}): Fraction(13, 5),
        }
        game = make_tu_game(3, worths)
        assert minimal_critical_coalitions(game) == {
            frozenset({1}),
            frozenset({2, 3}),
            frozenset({1, 2, 3}),
        }
        assert real_gaining_coalitions(game) == {
            frozenset({1}),
            frozenset({2, 3}),
        }

    def test_families_coincide_when_monotone(self):
        rng = random.Random(23)
        for n in (1, 2, 3, 4):
            for _ in range(20):
                game = random_monotone_tu(n, rng)
                assert minimal_critical_coalitions(game) == real_gaining_coalitions(game)

    def test_rgc_definition_literal(self):
        rng = random.Random(5)
        for _ in range(20):
            game = random_tu(3, rng)
            rgc = real_gaining_coalitions(game)
            for S in all_coalitions(3):
                if not S:
                    continue
                gaining = all(
                    game.worth(S) > game.worth(T)
                    for T in all_coalitions(3)
                    if T < S
                )
                assert (S in rgc) == gaining


class TestCriticality:
    def test_is_critical_for(self, example33):
        assert is_critical_for(example33, (2, 2, 2), 1, 2)
        assert is_critical_for(example33, (2, 2, 2), 1, 1) is False
        assert is_critical_for(example33, (2, 1, 0), 2, 1)

    def test_rejects_non_mcv(self, example33):
        with pytest.raises(NotMinimalCritical):
            is_critical_for(example33, (2, 2, 1), 1, 1)

    def test_rejects_zero_coordinate(self, example33):
        with pytest.raises(ZeroLevelPlayer):
            is_critical_for(example33, (1, 2, 0), 3, 1)

    def test_rejects_unknown_player(self, example33):
        with pytest.raises(UnknownPlayer):
            is_critical_for(example33, (2, 2, 2), 4, 1)

    def test_minimal_critical_below(self, example33):
        x = minimal_critical_below(example33, (2, 2, 1))
        assert x in minimal_critical_vectors(example33)
        assert evaluate(example33, x) == evaluate(example33, (2, 2, 1))
        with pytest.raises(ValueError):
            minimal_critical_below(example33, (0, 0, 1))

    def test_minimal_critical_below_randomly(self):
        rng = random.Random(31)
        for _ in range(30):
            game = random_monotone_jk(3, 3, 3, rng)
            mcv = minimal_critical_vectors(game)
            for x in game.profiles():
                w = evaluate(game, x)
                if w == 0:
                    continue
                y = minimal_critical_below(game, x)
                assert y in mcv
                assert all(a <= b for a, b in zip(y, x))
                assert evaluate(game, y) == w


def test_coalition_set_ordering():
    pairs = [(frozenset({2}), Fraction(1)), (frozenset({1}), Fraction(2))]
    cs = CoalitionSet.from_pairs(2, pairs)
    assert list(cs.coalitions) == [frozenset({2}), frozenset({1})]
