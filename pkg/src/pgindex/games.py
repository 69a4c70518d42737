"""Representations of simple games, TU games, and (j,k) simple games.

A (j,k) simple game maps each profile of input levels in {0,...,j-1}^n to
an output level in {0,...,k-1}, sends the all-zero profile to 0, and is
monotone under the componentwise order. Simple games are the j = k = 2
case under the usual correspondence between coalitions and 0/1 profiles,
and TU games drop the level structure in favour of arbitrary rational
worths.

Profiles are plain int tuples with player 1 first; tables are flat tuples
ordered by the profile rank with the first coordinate most significant, so
``itertools.product(range(j), repeat=n)`` walks them in storage order.
Coalitions are frozensets of 1-based player ids. All worths are exact
``fractions.Fraction`` values.

Games are immutable once built. The ``make_*`` constructors validate their
input and are the intended entry points; operations that provably preserve
validity construct results directly.
"""

from __future__ import annotations

import itertools
from bisect import bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .errors import (
    CapExceeded,
    IncompleteTable,
    IncompleteWorthTable,
    LevelOutOfRange,
    MonotonicityViolation,
    NegativeWeightNonMonotone,
    NonIncreasingThresholds,
    NonZeroAtOrigin,
    NonZeroEmptyCoalition,
    NotBinaryGame,
    NotTwoLevelInput,
    OutOfRangeOutput,
    ProfileDimensionMismatch,
    UnknownPlayer,
    ValidationError,
)

Profile = tuple[int, ...]
Coalition = frozenset[int]
RationalLike = Union[int, Fraction, str]

#: Hard default on table sizes (j ** n) accepted at construction.
DEFAULT_CAP = 2 ** 24


# ---------------------------------------------------------------------------
# profile and coalition plumbing


def profile_index(x: Sequence[int], j: int) -> int:
    """Rank of a profile in table order (first coordinate most significant)."""
    idx = 0
    for level in x:
        idx = idx * j + level
    return idx


def index_profile(idx: int, n: int, j: int) -> Profile:
    """Inverse of :func:`profile_index`."""
    levels = [0] * n
    for pos in reversed(range(n)):
        idx, levels[pos] = divmod(idx, j)
    return tuple(levels)


def all_profiles(n: int, j: int) -> Iterator[Profile]:
    """Every profile in table order."""
    return itertools.product(range(j), repeat=n)


def decrement(x: Profile, i: int) -> Profile:
    """The profile x with player i (1-based) lowered one level."""
    if x[i - 1] == 0:
        raise LevelOutOfRange(f"player {i} is already at level 0 in {x}")
    return x[: i - 1] + (x[i - 1] - 1,) + x[i:]


def increment(x: Profile, i: int, j: int) -> Profile:
    """The profile x with player i (1-based) raised one level."""
    if x[i - 1] >= j - 1:
        raise LevelOutOfRange(f"player {i} is already at the top level in {x}")
    return x[: i - 1] + (x[i - 1] + 1,) + x[i:]


def all_coalitions(n: int) -> Iterator[Coalition]:
    """Every coalition, ordered like the 0/1 profiles they correspond to."""
    for bits in itertools.product((0, 1), repeat=n):
        yield frozenset(i + 1 for i, b in enumerate(bits) if b)


def coalition_index(coalition: Iterable[int], n: int) -> int:
    """Rank of a coalition: the profile rank of its 0/1 indicator."""
    return sum(1 << (n - i) for i in coalition)


def coalition_from_index(idx: int, n: int) -> Coalition:
    return frozenset(i for i in range(1, n + 1) if idx >> (n - i) & 1)


def profile_of_coalition(coalition: Iterable[int], n: int) -> Profile:
    """Indicator profile x^S: level 1 exactly for the members of S."""
    members = frozenset(coalition)
    return tuple(1 if i in members else 0 for i in range(1, n + 1))


def coalition_of_profile(x: Profile) -> Coalition:
    """Support of a profile: the players at a positive level."""
    return frozenset(i for i, level in enumerate(x, start=1) if level)


def _check_shape(n: int, j: int, k: int) -> None:
    if n < 0:
        raise ValidationError(f"player count must be >= 0, got {n}")
    if j < 2:
        raise ValidationError(f"need at least 2 input levels, got j={j}")
    if k < 2:
        raise ValidationError(f"need at least 2 output levels, got k={k}")


def _check_players(players: Iterable[int], n: int) -> frozenset[int]:
    out = frozenset(players)
    for i in out:
        if not isinstance(i, int) or isinstance(i, bool) or not 1 <= i <= n:
            raise UnknownPlayer(f"player {i!r} is not one of 1..{n}")
    return out


def _as_fraction(value: RationalLike, what: str) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise ValidationError(
            f"{what} must be an exact rational (int, Fraction, or 'p/q'), got {value!r}"
        )
    try:
        return Fraction(value)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise ValidationError(f"{what} is not a rational: {value!r} ({exc})") from None


# ---------------------------------------------------------------------------
# game types


@dataclass(frozen=True)
class WeightedRule:
    """Weighted description: the output of x counts the thresholds reached
    by the weighted sum of its input levels."""

    weights: tuple[Fraction, ...]
    thresholds: tuple[Fraction, ...]


@dataclass(frozen=True)
class JKGame:
    """A monotone map from {0..j-1}^n to {0..k-1} with the origin at 0.

    ``levels`` is the flat table in profile-rank order. ``provenance``
    carries the weighted rule the game was built from, if any, and
    ``labels`` the external player names (survivors keep their original
    label after ``remove_player``); neither takes part in equality.
    """

    n: int
    j: int
    k: int
    levels: tuple[int, ...]
    provenance: WeightedRule | None = field(default=None, compare=False, repr=False)
    labels: tuple[int, ...] | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        _check_shape(self.n, self.j, self.k)
        if len(self.levels) != self.j ** self.n:
            raise ValidationError(
                f"table has {len(self.levels)} entries, expected {self.j ** self.n}"
            )
        if self.labels is None:
            object.__setattr__(self, "labels", tuple(range(1, self.n + 1)))
        elif len(self.labels) != self.n:
            raise ValidationError("one label per player required")

    def value(self, x: Sequence[int]) -> int:
        """Table lookup without validation; see :func:`evaluate`."""
        return self.levels[profile_index(x, self.j)]

    def profiles(self) -> Iterator[Profile]:
        return all_profiles(self.n, self.j)

    def players(self) -> range:
        return range(1, self.n + 1)

    @property
    def trivial(self) -> bool:
        """True for the constant-0 game."""
        return not any(self.levels)


@dataclass(frozen=True)
class SimpleGame:
    """A monotone yes/no voting game given by its winning coalitions."""

    n: int
    winning: frozenset[Coalition]

    def wins(self, coalition: Iterable[int]) -> bool:
        return frozenset(coalition) in self.winning

    def players(self) -> range:
        return range(1, self.n + 1)

    @property
    def trivial(self) -> bool:
        return not self.winning


@dataclass(frozen=True)
class TUGame:
    """A coalition worth function; not necessarily monotone.

    ``worths`` is flat in coalition-rank order; ``monotone`` is derived at
    construction and never trusted from outside.
    """

    n: int
    worths: tuple[Fraction, ...]
    monotone: bool = field(compare=False)
    labels: tuple[int, ...] | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if len(self.worths) != 1 << self.n:
            raise ValidationError(
                f"worth table has {len(self.worths)} entries, expected {1 << self.n}"
            )
        if self.labels is None:
            object.__setattr__(self, "labels", tuple(range(1, self.n + 1)))
        elif len(self.labels) != self.n:
            raise ValidationError("one label per player required")

    def worth(self, coalition: Iterable[int]) -> Fraction:
        return self.worths[coalition_index(coalition, self.n)]

    def coalitions(self) -> Iterator[Coalition]:
        return all_coalitions(self.n)

    def players(self) -> range:
        return range(1, self.n + 1)


def zero_game(n: int, j: int, k: int) -> JKGame:
    """The constant-0 game on n players."""
    _check_shape(n, j, k)
    return JKGame(n, j, k, (0,) * j ** n)


# ---------------------------------------------------------------------------
# validated constructors


def _check_levels(n: int, j: int, k: int, levels: tuple) -> None:
    """Range, origin, and monotonicity checks; collects all witnesses."""
    bad = []
    for idx, level in enumerate(levels):
        if not isinstance(level, int) or isinstance(level, bool) or not 0 <= level < k:
            bad.append((index_profile(idx, n, j), level))
    if bad:
        raise OutOfRangeOutput(
            f"{len(bad)} table entries outside 0..{k - 1}", witnesses=bad
        )
    if levels[0] != 0:
        raise NonZeroAtOrigin(
            f"the all-zero profile maps to {levels[0]}, must map to 0",
            witnesses=[(index_profile(0, n, j), levels[0])],
        )
    strides = [j ** (n - 1 - p) for p in range(n)]
    violations = []
    for idx, x in enumerate(all_profiles(n, j)):
        for p in range(n):
            if x[p] < j - 1 and levels[idx] > levels[idx + strides[p]]:
                violations.append((x, increment(x, p + 1, j)))
    if violations:
        raise MonotonicityViolation(
            f"{len(violations)} profile pairs where raising a level lowers the output",
            witnesses=violations,
        )


def make_table_game(
    n: int,
    j: int,
    k: int,
    table: Mapping[Profile, int] | Sequence[int],
    *,
    cap: int = DEFAULT_CAP,
) -> JKGame:
    """Build a (j,k) simple game from an explicit level table.

    ``table`` is either a mapping defined on every profile or a flat
    sequence in profile-rank order.
    """
    _check_shape(n, j, k)
    size = j ** n
    if size > cap:
        raise CapExceeded(f"table would need {size} entries, cap is {cap}")
    if isinstance(table, Mapping):
        missing = 0
        levels = []
        for x in all_profiles(n, j):
            if x in table:
                levels.append(table[x])
            else:
                missing += 1
        if missing:
            raise IncompleteTable(f"{missing} of {size} profiles have no entry")
        levels = tuple(levels)
    else:
        levels = tuple(table)
        if len(levels) != size:
            raise IncompleteTable(f"got {len(levels)} entries, expected {size}")
    _check_levels(n, j, k, levels)
    return JKGame(n, j, k, levels)


def make_weighted_game(
    weights: Sequence[RationalLike],
    thresholds: Sequence[RationalLike],
    j: int,
    k: int,
    *,
    cap: int = DEFAULT_CAP,
) -> JKGame:
    """Build the game whose output at x counts how many of the k-1
    thresholds the weighted sum of input levels reaches."""
    w = tuple(_as_fraction(v, "weight") for v in weights)
    t = tuple(_as_fraction(v, "threshold") for v in thresholds)
    if len(t) != k - 1:
        raise ValidationError(f"need k-1 = {k - 1} thresholds, got {len(t)}")
    if any(a >= b for a, b in zip(t, t[1:])):
        raise NonIncreasingThresholds(f"thresholds {t} are not strictly increasing")
    n = len(w)
    _check_shape(n, j, k)
    if j ** n > cap:
        raise CapExceeded(f"table would need {j ** n} entries, cap is {cap}")
    levels = tuple(
        bisect_right(t, sum(wi * xi for wi, xi in zip(w, x)))
        for x in all_profiles(n, j)
    )
    try:
        _check_levels(n, j, k, levels)
    except MonotonicityViolation as exc:
        if any(wi < 0 for wi in w):
            raise NegativeWeightNonMonotone(
                f"negative weights make the table non-monotone: {exc}",
                witnesses=exc.witnesses,
            ) from None
        raise  # unreachable: nonnegative weights give a monotone table
    return JKGame(n, j, k, levels, provenance=WeightedRule(w, t))


def evaluate(game: JKGame, x: Sequence[int]) -> int:
    """Validated table lookup."""
    if len(x) != game.n:
        raise ProfileDimensionMismatch(
            f"profile has {len(x)} entries for a {game.n}-player game"
        )
    xt = tuple(x)
    for pos, level in enumerate(xt):
        if not isinstance(level, int) or isinstance(level, bool) or not 0 <= level < game.j:
            raise LevelOutOfRange(
                f"entry {level!r} for player {pos + 1} outside 0..{game.j - 1}"
            )
    return game.value(xt)


def make_simple_game(n: int, winning: Iterable[Iterable[int]]) -> SimpleGame:
    """Build a simple game from its full set of winning coalitions."""
    _check_shape(n, 2, 2)
    sets = frozenset(frozenset(S) for S in winning)
    for S in sets:
        _check_players(S, n)
        if not S:
            raise NonZeroAtOrigin("the empty coalition cannot win")
    bad = [
        (S, S | {i})
        for S in sets
        for i in range(1, n + 1)
        if i not in S and S | {i} not in sets
    ]
    if bad:
        raise MonotonicityViolation(
            f"winning set is not closed under supersets ({len(bad)} holes)",
            witnesses=bad,
        )
    return SimpleGame(n, sets)


def simple_game_from_generators(
    n: int, generators: Iterable[Iterable[int]], *, cap: int = DEFAULT_CAP
) -> SimpleGame:
    """Build a simple game as the upward closure of the given coalitions."""
    _check_shape(n, 2, 2)
    if (1 << n) > cap:
        raise CapExceeded(f"closure would enumerate {1 << n} coalitions, cap is {cap}")
    gens = [frozenset(S) for S in generators]
    for S in gens:
        _check_players(S, n)
        if not S:
            raise NonZeroAtOrigin("the empty coalition cannot win")
    winning = frozenset(
        S for S in all_coalitions(n) if any(g <= S for g in gens)
    )
    return SimpleGame(n, winning)


def make_tu_game(
    n: int,
    worth: Mapping,
    *,
    labels: tuple[int, ...] | None = None,
    cap: int = DEFAULT_CAP,
) -> TUGame:
    """Build a TU game from a coalition -> worth mapping (exact rationals)."""
    if n < 0:
        raise ValidationError(f"player count must be >= 0, got {n}")
    if (1 << n) > cap:
        raise CapExceeded(f"worth table would need {1 << n} entries, cap is {cap}")
    table = {}
    for key, value in worth.items():
        S = _check_players(key, n)
        table[S] = _as_fraction(value, f"worth of {sorted(S)}")
    worths = []
    missing = 0
    for S in all_coalitions(n):
        if S in table:
            worths.append(table[S])
        else:
            missing += 1
    if missing:
        raise IncompleteWorthTable(f"{missing} of {1 << n} coalitions have no worth")
    if worths[0] != 0:
        raise NonZeroEmptyCoalition(f"empty coalition has worth {worths[0]}, must be 0")
    return TUGame(n, tuple(worths), _monotone_flag(n, worths), labels=labels)


def _monotone_flag(n: int, worths: Sequence[Fraction]) -> bool:
    """Whether adding any one player ever lowers a worth."""
    for idx in range(1 << n):
        for p in range(n):
            if not idx >> (n - 1 - p) & 1 and worths[idx] > worths[idx + (1 << (n - 1 - p))]:
                return False
    return True


# ---------------------------------------------------------------------------
# embeddings


def embed_simple(game: SimpleGame) -> JKGame:
    """The (2,2) game of a simple game: v(x^S) = 1 iff S wins."""
    levels = tuple(1 if S in game.winning else 0 for S in all_coalitions(game.n))
    return JKGame(game.n, 2, 2, levels)


def extract_simple(game: JKGame) -> SimpleGame:
    """Inverse of :func:`embed_simple`; requires j = k = 2."""
    if game.j != 2 or game.k != 2:
        raise NotBinaryGame(f"expected a (2,2) game, got ({game.j},{game.k})")
    winning = frozenset(
        S for S, level in zip(all_coalitions(game.n), game.levels) if level
    )
    return SimpleGame(game.n, winning)


def embed_2k_as_tu(game: JKGame) -> TUGame:
    """View a two-input-level game as a TU game: worth(S) = v(x^S)."""
    if game.j != 2:
        raise NotTwoLevelInput(f"expected two input levels, got j={game.j}")
    return TUGame(
        game.n,
        tuple(Fraction(level) for level in game.levels),
        True,
        labels=game.labels,
    )


# ---------------------------------------------------------------------------
# subgames


def subgame(game: JKGame | TUGame, coalition: Iterable[int]):
    """Restrict to the players in ``coalition``.

    For a (j,k) game the players outside are frozen at level 0; for a TU
    game their coalitions are dropped. Profiles re-index densely and the
    survivors keep their external labels.
    """
    keep = sorted(_check_players(coalition, game.n))
    if isinstance(game, JKGame):
        return _subgame_jk(game, keep)
    if isinstance(game, TUGame):
        return _subgame_tu(game, keep)
    raise TypeError(f"no subgames for {type(game).__name__}")


def _subgame_jk(game: JKGame, keep: list[int]) -> JKGame:
    m = len(keep)
    base = [0] * game.n
    levels = []
    for y in all_profiles(m, game.j):
        for pos, level in zip(keep, y):
            base[pos - 1] = level
        levels.append(game.levels[profile_index(base, game.j)])
    provenance = None
    if game.provenance is not None:
        provenance = WeightedRule(
            tuple(game.provenance.weights[pos - 1] for pos in keep),
            game.provenance.thresholds,
        )
    labels = tuple(game.labels[pos - 1] for pos in keep)
    return JKGame(m, game.j, game.k, tuple(levels), provenance=provenance, labels=labels)


def _subgame_tu(game: TUGame, keep: list[int]) -> TUGame:
    m = len(keep)
    worths = []
    for bits in itertools.product((0, 1), repeat=m):
        S = frozenset(keep[p] for p in range(m) if bits[p])
        worths.append(game.worth(S))
    labels = tuple(game.labels[pos - 1] for pos in keep)
    monotone = game.monotone or _monotone_flag(m, worths)
    return TUGame(m, tuple(worths), monotone, labels=labels)


def remove_player(game: JKGame | TUGame, i: int):
    """Drop one player; shorthand for ``subgame`` on everyone else."""
    _check_players((i,), game.n)
    return subgame(game, (p for p in game.players() if p != i))
