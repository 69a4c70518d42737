from fractions import Fraction

import pytest

from pgindex import (
    ParseError,
    SimpleGame,
    TUGame,
    dump_game,
    dumps_game,
    load_game,
    loads_game,
    rational_str,
)

from gamegen import random_monotone_jk, random_monotone_tu
import random


class TestRationalStrings:
    def test_canonical(self):
        assert rational_str(Fraction(51, 18)) == "17/6"
        assert rational_str(Fraction(6)) == "6"
        assert rational_str(Fraction(-1, 2)) == "-1/2"


class TestJKFiles:
    def test_weighted_roundtrip(self, example33, tmp_path):
        path = tmp_path / "g.json"
        dump_game(example33, path)
        loaded = load_game(path)
        assert loaded == example33
        assert loaded.provenance == example33.provenance

    def test_table_roundtrip(self):
        rng = random.Random(37)
        for _ in range(10):
            game = random_monotone_jk(2, 3, 3, rng)
            assert loads_game(dumps_game(game)) == game

    def test_table_and_weighted_mutually_exclusive(self):
        text = '{"kind": "jk", "n": 1, "j": 2, "k": 2, "table": [0, 1], "weighted": {"weights": ["1"], "thresholds": ["1"]}}'
        with pytest.raises(ParseError):
            loads_game(text)

    def test_bool_entry_rejected(self):
        with pytest.raises(ParseError):
            loads_game('{"kind": "jk", "n": 1, "j": 2, "k": 2, "table": [0, true]}')

    def test_weighted_n_mismatch(self):
        text = '{"kind": "jk", "n": 3, "j": 2, "k": 2, "weighted": {"weights": ["1"], "thresholds": ["1"]}}'
        with pytest.raises(ParseError):
            loads_game(text)


class TestSimpleFiles:
    def test_roundtrip(self, quota_simple):
        loaded = loads_game(dumps_game(quota_simple))
        assert isinstance(loaded, SimpleGame)
        assert loaded == quota_simple

    def test_generators_closed_upward(self):
        loaded = loads_game('{"kind": "simple", "n": 3, "winning": [[1], [2, 3]]}')
        assert frozenset({1, 2}) in loaded.winning

    def test_winning_must_be_lists(self):
        with pytest.raises(ParseError):
            loads_game('{"kind": "simple", "n": 2, "winning": [1]}')


class TestTUFiles:
    def test_roundtrip(self):
        rng = random.Random(41)
        for n in (1, 2, 3):
            game = random_monotone_tu(n, rng)
            loaded = loads_game(dumps_game(game))
            assert isinstance(loaded, TUGame)
            assert loaded == game

    def test_empty_key_optional(self):
        loaded = loads_game('{"kind": "tu", "n": 1, "worth": {"1": "1/2"}}')
        assert loaded.worth(frozenset()) == 0
        assert loaded.worth(frozenset({1})) == Fraction(1, 2)

    def test_bad_key(self):
        with pytest.raises(ParseError):
            loads_game('{"kind": "tu", "n": 2, "worth": {"1,x": "1"}}')

    def test_float_worth_rejected(self):
        with pytest.raises(ParseError):
            loads_game('{"kind": "tu", "n": 1, "worth": {"1": 0.5}}')


class TestErrors:
    def test_unknown_kind(self):
        with pytest.raises(ParseError) as info:
            loads_game('{"kind": "mystery", "n": 1}')
        assert "jk" in str(info.value)

    def test_json_syntax_carries_position(self):
        with pytest.raises(ParseError) as info:
            loads_game("{\n  broken\n}")
        assert ":2:" in str(info.value)

    def test_top_level_must_be_object(self):
        with pytest.raises(ParseError):
            loads_game("[1, 2]")

    def test_missing_file(self, tmp_path):
        with pytest.raises(ParseError):
            load_game(tmp_path / "missing.json")


def test_deterministic_serialization(example33):
    assert dumps_game(example33) == dumps_game(example33)
    text = dumps_game(example33)
    assert text.endswith("\n")
    assert loads_game(text) == example33
