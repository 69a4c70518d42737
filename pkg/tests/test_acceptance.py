"""Acceptance suite: one test per shipped criterion.

Each test carries a criterion marker; the terminal summary prints one
PASS/FAIL line per criterion after the run.
"""

import json
import random
import subprocess
import sys
import time
from fractions import Fraction
from itertools import permutations

import pytest

from pgindex import (
    average_game,
    axiom_report,
    decompose,
    embed_2k_as_tu,
    embed_simple,
    is_mergeable,
    is_null_player,
    jk_potential,
    jk_potential_recursive,
    lambda_total,
    mcv_union_check,
    minimal_critical_coalitions,
    minimal_critical_vectors,
    minimal_critical_vectors_oracle,
    minimal_winning_coalitions,
    normalized_variant,
    oplus,
    permute,
    pgi_raw,
    pgv_tu,
    public_good_value_jk,
    real_gaining_coalitions,
    remove_player,
    single_mcv_game,
    variant_value,
)

from conftest import AVERAGE33_WORTHS, DATA, GOLDEN
from gamegen import enumerate_monotone_jk, random_monotone_jk, random_monotone_tu

EXAMPLE = DATA / "example33.json"
GOLDEN_ANALYZE = GOLDEN / "analyze_example33_machine.json"


@pytest.mark.criterion(1)
def test_criterion_01_example_mcv(example33):
    start = time.perf_counter()
    mcv = minimal_critical_vectors(example33)
    elapsed = time.perf_counter() - start
    assert mcv.as_dict() == {
        (1, 1, 2): 1,
        (1, 2, 0): 1,
        (2, 0, 1): 1,
        (2, 1, 0): 1,
        (2, 2, 2): 2,
    }
    assert elapsed < 0.010, f"enumeration took {elapsed * 1000:.2f} ms"


@pytest.mark.criterion(2)
def test_criterion_02_example_values(example33):
    assert public_good_value_jk(example33).player_values == (6, 5, 4)
    assert variant_value(example33).player_values == (5, 4, 3)


@pytest.mark.criterion(3)
def test_criterion_03_example_potential(example33):
    report = public_good_value_jk(example33)
    assert jk_potential(example33) == 6
    assert lambda_total(example33) == 15
    assert sum(report.player_values) == lambda_total(example33)


@pytest.mark.criterion(4)
def test_criterion_04_average_game(example33):
    tu = average_game(example33).tu
    for S, expected in AVERAGE33_WORTHS.items():
        assert tu.worth(S) == expected
    assert pgv_tu(tu).player_values == (
        Fraction(51, 18),
        Fraction(44, 18),
        Fraction(42, 18),
    )


@pytest.mark.criterion(5)
def test_criterion_05_simple_game(quota_simple):
    assert minimal_winning_coalitions(quota_simple) == {
        frozenset({1}),
        frozenset({2, 3}),
    }
    raw = pgi_raw(quota_simple)
    assert raw.player_values == (1, 1, 1)
    tu = embed_2k_as_tu(embed_simple(quota_simple))
    assert pgv_tu(tu).player_values == raw.player_values


SHAPES = [(n, j, k) for n in (2, 3) for j in (2, 3) for k in (2, 3)]
GAMES_PER_SHAPE = 200


def _random_suite():
    rng = random.Random(2024)
    for n, j, k in SHAPES:
        for _ in range(GAMES_PER_SHAPE):
            yield random_monotone_jk(n, j, k, rng)


@pytest.mark.criterion(6)
def test_criterion_06_potential_identity_suite():
    start = time.perf_counter()
    count = 0
    for game in _random_suite():
        count += 1
        psi = public_good_value_jk(game).player_values
        P = jk_potential(game)
        for pos, i in enumerate(game.players()):
            assert psi[pos] == P - jk_potential(remove_player(game, i))
        assert jk_potential_recursive(game) == P
    elapsed = time.perf_counter() - start
    assert count == len(SHAPES) * GAMES_PER_SHAPE
    assert elapsed < 30, f"suite took {elapsed:.1f} s"


@pytest.mark.criterion(7)
def test_criterion_07_oracle_suite():
    for game in _random_suite():
        assert minimal_critical_vectors(game) == minimal_critical_vectors_oracle(game)
    rng = random.Random(4048)
    for n in (1, 2, 3, 4):
        for _ in range(50):
            tu = random_monotone_tu(n, rng)
            assert minimal_critical_coalitions(tu) == real_gaining_coalitions(tu)


def _mergeable_pairs(count):
    """Chains supported on disjoint coordinate blocks: every vector of one
    side is incomparable with every vector of the other, so each pair is
    mergeable by construction."""
    rng = random.Random(515)
    n, j, k = 4, 3, 4
    made = 0
    while made < count:
        length_v = rng.randrange(1, k - 1 + 1)
        length_w = rng.randrange(1, k - 1 + 1)
        chain_v = _block_chain(rng, n, j, block=(0, 1), length=length_v)
        chain_w = _block_chain(rng, n, j, block=(2, 3), length=length_w)
        v = _chain_game(chain_v, n, j, k)
        w = _chain_game(chain_w, n, j, k)
        made += 1
        yield v, w


def _block_chain(rng, n, j, block, length):
    x = [0] * n
    chain = []
    while len(chain) < length:
        movable = [pos for pos in block if x[pos] < j - 1]
        if not movable:
            break
        for pos in rng.sample(movable, rng.randrange(1, len(movable) + 1)):
            x[pos] += 1
        chain.append(tuple(x))
    return chain


def _chain_game(chain, n, j, k):
    game = single_mcv_game(chain[0], 1, j, k)
    for worth, x in enumerate(chain[1:], start=2):
        game = oplus(game, single_mcv_game(x, worth, j, k))
    return game


@pytest.mark.criterion(8)
def test_criterion_08_merge_suite():
    pairs = 0
    for v, w in _mergeable_pairs(100):
        report = is_mergeable(v, w)
        assert report.mergeable, report.violations
        assert mcv_union_check(v, w)
        merged = oplus(v, w)
        mcv_v = minimal_critical_vectors(v).as_dict()
        mcv_w = minimal_critical_vectors(w).as_dict()
        assert minimal_critical_vectors(merged).as_dict() == {**mcv_v, **mcv_w}
        cv = variant_value(v).player_values
        cw = variant_value(w).player_values
        cm = variant_value(merged).player_values
        assert cm == tuple(a + b for a, b in zip(cv, cw))
        axioms = axiom_report(v, w)
        a4 = next(r for r in axioms.results if r.axiom == "A4")
        assert a4.status == "pass", a4.detail
        pairs += 1
    assert pairs >= 100

    rng = random.Random(661)
    for n, j, k in ((2, 2, 3), (3, 2, 2), (3, 3, 3)):
        for _ in range(30):
            game = random_monotone_jk(n, j, k, rng)
            parts = decompose(game)
            if not parts:
                assert game.trivial
                continue
            rebuilt = parts[0]
            for part in parts[1:]:
                rebuilt = oplus(rebuilt, part)
            assert rebuilt.levels == game.levels


@pytest.mark.criterion(9)
def test_criterion_09_axiom_suite(example33):
    rng = random.Random(77)

    # A1: players outside the generator support never score
    for _ in range(40):
        n, j, k = 4, 3, 3
        x = [0] * n
        for pos in rng.sample(range(n), 2):
            x[pos] = rng.randrange(1, j)
        game = single_mcv_game(tuple(x), rng.randrange(1, k), j, k)
        values = normalized_variant(game).player_values
        for pos, i in enumerate(game.players()):
            if is_null_player(game, i):
                assert values[pos] == 0

    # A2: normalized values sum to one on non-trivial games
    for _ in range(40):
        game = random_monotone_jk(3, 3, 3, rng)
        if game.trivial:
            continue
        assert sum(normalized_variant(game).player_values) == 1

    # A3: single-MCV games split equally across the support
    for _ in range(40):
        n, j, k = 3, 3, 4
        x = tuple(rng.randrange(j) for _ in range(n))
        if not any(x):
            continue
        game = single_mcv_game(x, rng.randrange(1, k), j, k)
        values = normalized_variant(game).player_values
        support = [pos for pos in range(n) if x[pos] > 0]
        share = Fraction(1, len(support))
        for pos in range(n):
            assert values[pos] == (share if pos in support else 0)

    # anonymity under every permutation of the example game
    base = normalized_variant(example33).player_values
    for pi in permutations((1, 2, 3)):
        moved = normalized_variant(permute(example33, pi)).player_values
        for pos in range(3):
            assert moved[pi[pos] - 1] == base[pos]


@pytest.mark.criterion(10)
def test_criterion_10_k2_collapse():
    counts = {}
    for n in (1, 2, 3):
        seen = 0
        for game in enumerate_monotone_jk(n, 3, 2):
            seen += 1
            assert variant_value(game).player_values == public_good_value_jk(game).player_values
        counts[n] = seen
    # monotone (3,2) table counts, a sanity pin on the exhaustive walk
    assert counts == {1: 3, 2: 19, 3: 979}


@pytest.mark.criterion(11)
def test_criterion_11_cli_determinism():
    argv = [
        sys.executable,
        "-m",
        "pgindex",
        "analyze",
        str(EXAMPLE),
        "--format",
        "machine",
    ]
    first = subprocess.run(argv, capture_output=True)
    second = subprocess.run(argv, capture_output=True)
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout
    assert first.stdout == GOLDEN_ANALYZE.read_bytes()
    json.loads(first.stdout)
