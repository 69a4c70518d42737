"""Enumeration of the minimal structures behind the indices.

Minimal winning coalitions for simple games, minimal critical and real
gaining coalitions for TU games, and minimal critical vectors for (j,k)
simple games: a profile x is minimal critical when its output strictly
exceeds the output of everything strictly below it. On a monotone table
it is enough to beat the immediate predecessors x with one coordinate
lowered; the full down-set scan survives as a brute-force oracle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import (
    LevelOutOfRange,
    NotMinimalCritical,
    OracleCapExceeded,
    UnknownPlayer,
    ValidationError,
    ZeroLevelPlayer,
)
from .games import (
    Coalition,
    JKGame,
    Profile,
    SimpleGame,
    TUGame,
    all_profiles,
    coalition_from_index,
    coalition_index,
    decrement,
)

#: Fixed ceiling on j ** n for the full down-set oracle.
ORACLE_CAP = 3 ** 9


@dataclass(frozen=True)
class MCVSet:
    """Minimal critical vectors with their output levels, in table order."""

    vectors: tuple[Profile, ...]
    worths: tuple[int, ...]

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[Profile, int]]) -> "MCVSet":
        ordered = sorted(pairs)
        vectors = tuple(x for x, _ in ordered)
        if len(set(vectors)) != len(vectors):
            raise ValidationError("duplicate minimal critical vector")
        for a, (x, wx) in enumerate(ordered):
            if wx <= 0:
                raise ValidationError(
                    f"vector {x} has worth {wx}; minimal critical vectors have positive worth"
                )
            # lexicographic order makes x the only possible lower element
            for y, wy in ordered[a + 1 :]:
                if all(p <= q for p, q in zip(x, y)) and wx >= wy:
                    raise ValidationError(
                        f"{x} <= {y} but worths are {wx} >= {wy}; not an antichain per worth"
                    )
        return cls(vectors, tuple(w for _, w in ordered))

    def pairs(self) -> Iterator[tuple[Profile, int]]:
        return zip(self.vectors, self.worths)

    def worth_of(self, x: Profile) -> int:
        try:
            return self.worths[self.vectors.index(tuple(x))]
        except ValueError:
            raise KeyError(x) from None

    def as_dict(self) -> dict[Profile, int]:
        return dict(self.pairs())

    def __len__(self) -> int:
        return len(self.vectors)

    def __contains__(self, x) -> bool:
        return tuple(x) in self.vectors


@dataclass(frozen=True)
class CoalitionSet:
    """Coalitions with their worths, ordered by coalition rank."""

    n: int
    coalitions: tuple[Coalition, ...]
    worths: tuple[Fraction, ...]

    @classmethod
    def from_pairs(
        cls, n: int, pairs: Iterable[tuple[Coalition, Fraction]]
    ) -> "CoalitionSet":
        ordered = sorted(pairs, key=lambda item: coalition_index(item[0], n))
        return cls(
            n,
            tuple(S for S, _ in ordered),
            tuple(w for _, w in ordered),
        )

    def pairs(self) -> Iterator[tuple[Coalition, Fraction]]:
        return zip(self.coalitions, self.worths)

    def __len__(self) -> int:
        return len(self.coalitions)

    def __contains__(self, S) -> bool:
        return frozenset(S) in self.coalitions


def minimal_winning_coalitions(game: SimpleGame) -> frozenset[Coalition]:
    """Winning coalitions all of whose proper subsets lose."""
    return frozenset(
        S
        for S in game.winning
        if all(S - {i} not in game.winning for i in S)
    )


def minimal_critical_coalitions(game: TUGame) -> frozenset[Coalition]:
    """Nonempty coalitions where every member's departure strictly hurts."""
    out = []
    for S in game.coalitions():
        if S and all(game.worth(S) > game.worth(S - {i}) for i in S):
            out.append(S)
    return frozenset(out)


def real_gaining_coalitions(game: TUGame) -> frozenset[Coalition]:
    """Nonempty coalitions worth strictly more than every proper subset.

    Always runs the literal all-proper-subsets scan, so on monotone games
    it is an independent route to the minimal critical coalitions.
    """
    out = []
    for mask in range(1, 1 << game.n):
        w = game.worths[mask]
        gaining = True
        sub = (mask - 1) & mask
        while True:
            if game.worths[sub] >= w:
                gaining = False
                break
            if sub == 0:
                break
            sub = (sub - 1) & mask
        if gaining:
            out.append(coalition_from_index(mask, game.n))
    return frozenset(out)


def minimal_critical_vectors(game: JKGame) -> MCVSet:
    """Fast enumeration: beat every immediate predecessor strictly.

    Monotonicity makes this equivalent to beating the whole down-set;
    :func:`minimal_critical_vectors_oracle` checks that claim literally.
    """
    strides = [game.j ** (game.n - 1 - p) for p in range(game.n)]
    pairs = []
    for idx, x in enumerate(all_profiles(game.n, game.j)):
        level = game.levels[idx]
        if level == 0:
            continue
        if all(game.levels[idx - strides[p]] < level for p in range(game.n) if x[p]):
            pairs.append((x, level))
    return MCVSet.from_pairs(pairs)


def minimal_critical_vectors_oracle(game: JKGame) -> MCVSet:
    """Reference enumeration scanning the entire down-set of every profile."""
    if game.j ** game.n > ORACLE_CAP:
        raise OracleCapExceeded(
            f"oracle is capped at {ORACLE_CAP} profiles, table has {game.j ** game.n}"
        )
    pairs = []
    for x in game.profiles():
        if not any(x):
            continue
        level = game.value(x)
        dominated = all(
            game.value(y) < level
            for y in itertools.product(*(range(a + 1) for a in x))
            if y != x
        )
        if dominated:
            pairs.append((x, level))
    return MCVSet.from_pairs(pairs)


def minimal_critical_below(game: JKGame, x: Profile) -> Profile:
    """A minimal critical vector y <= x with the same output as x.

    Descends one level at a time, always at the lowest-index coordinate
    whose decrement keeps the output unchanged; the fixpoint is minimal
    critical. Requires v(x) > 0.
    """
    x = tuple(x)
    level = game.value(x)
    if level == 0:
        raise ValueError(f"profile {x} has output 0; no critical vector below it")
    moved = True
    while moved:
        moved = False
        for p in range(game.n):
            if x[p] and game.value(decrement(x, p + 1)) == level:
                x = decrement(x, p + 1)
                moved = True
                break
    return x


def is_critical_for(game: JKGame, x: Profile, i: int, tau: int) -> bool:
    """Whether player i at minimal critical vector x is critical for
    reaching output level tau: v(x) >= tau but v(x with i lowered) < tau."""
    x = tuple(x)
    if not 1 <= i <= game.n:
        raise UnknownPlayer(f"player {i} is not one of 1..{game.n}")
    if not 1 <= tau <= game.k - 1:
        raise LevelOutOfRange(f"tau={tau} outside 1..{game.k - 1}")
    if x not in minimal_critical_vectors(game):
        raise NotMinimalCritical(f"{x} is not a minimal critical vector")
    if x[i - 1] == 0:
        raise ZeroLevelPlayer(f"player {i} is at level 0 in {x}")
    return game.value(x) >= tau and game.value(decrement(x, i)) < tau
