"""Composition and structure: pointwise maximum, mergeability, player
permutations, null players, single-vector components, and an executable
check suite for the axioms characterizing the normalized surplus value.

Two games on the same (n, j, k) shape are mergeable when no minimal
critical vector is shared, every dominated cross-pair has strictly
smaller worth, and every dominating cross-pair strictly larger. For a
mergeable pair the minimal critical vectors of the pointwise maximum are
exactly the disjoint union of both sets, and criticality counts add up.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .errors import (
    DimensionMismatch,
    LevelOutOfRange,
    NotAPermutation,
    NotMergeable,
    TrivialGame,
    UnknownPlayer,
    ValidationError,
)
from .critical import minimal_critical_vectors
from .games import (
    JKGame,
    Profile,
    WeightedRule,
    all_profiles,
    profile_index,
)
from .indices import normalized_variant, total_criticality

CLAUSE_SHARED = "C1_shared_mcv"
CLAUSE_LE = "C2_le_not_less"
CLAUSE_GE = "C3_ge_not_greater"


class MergeViolation(NamedTuple):
    x: Profile
    y: Profile
    clause: str


@dataclass(frozen=True)
class MergeReport:
    """Outcome of the mergeability test with every clause violation."""

    mergeable: bool
    violations: tuple[MergeViolation, ...]


@dataclass(frozen=True)
class AxiomResult:
    axiom: str
    status: str  # "pass" | "fail" | "vacuous" | "skipped"
    detail: str
    witnesses: tuple = ()


@dataclass(frozen=True)
class AxiomReport:
    results: tuple[AxiomResult, ...]

    @property
    def all_pass(self) -> bool:
        return all(r.status != "fail" for r in self.results)


def _same_shape(v: JKGame, w: JKGame) -> None:
    if (v.n, v.j, v.k) != (w.n, w.j, w.k):
        raise DimensionMismatch(
            f"games have shapes ({v.n},{v.j},{v.k}) and ({w.n},{w.j},{w.k})"
        )


def oplus(v: JKGame, w: JKGame) -> JKGame:
    """Pointwise maximum of two games on the same shape."""
    _same_shape(v, w)
    return JKGame(
        v.n, v.j, v.k, tuple(map(max, v.levels, w.levels)), labels=v.labels
    )


def is_mergeable(v: JKGame, w: JKGame) -> MergeReport:
    """Check all three mergeability clauses over every cross-pair of
    minimal critical vectors, recording every violation. A shared vector
    is reported under its own clause tag on top of the order clauses it
    necessarily breaks."""
    _same_shape(v, w)
    mcv_v = minimal_critical_vectors(v)
    mcv_w = minimal_critical_vectors(w)
    violations = []
    for x, wx in mcv_v.pairs():
        for y, wy in mcv_w.pairs():
            if x == y:
                violations.append(MergeViolation(x, y, CLAUSE_SHARED))
            if all(a <= b for a, b in zip(x, y)) and not wx < wy:
                violations.append(MergeViolation(x, y, CLAUSE_LE))
            if all(a >= b for a, b in zip(x, y)) and not wx > wy:
                violations.append(MergeViolation(x, y, CLAUSE_GE))
    violations.sort()
    return MergeReport(not violations, tuple(violations))


def mcv_union_check(v: JKGame, w: JKGame) -> bool:
    """Verify the merge lemma on a mergeable pair: the minimal critical
    vectors of v+w are the disjoint union of both sets, worths included."""
    report = is_mergeable(v, w)
    if not report.mergeable:
        raise NotMergeable(
            f"{len(report.violations)} mergeability violations; union lemma needs a mergeable pair"
        )
    mcv_v = minimal_critical_vectors(v).as_dict()
    mcv_w = minimal_critical_vectors(w).as_dict()
    merged = minimal_critical_vectors(oplus(v, w)).as_dict()
    if set(mcv_v) & set(mcv_w):
        return False
    union = {**mcv_v, **mcv_w}
    return merged == union


def permute(v: JKGame, pi: Sequence[int]) -> JKGame:
    """Relabel players: the new game reads coordinate pi(i) of its input
    where the old game read coordinate i. ``pi[i-1]`` is pi(i), 1-based."""
    pi = tuple(pi)
    if sorted(pi) != list(range(1, v.n + 1)):
        raise NotAPermutation(f"{pi} is not a permutation of 1..{v.n}")
    levels = []
    for x in all_profiles(v.n, v.j):
        inner = tuple(x[pi[p] - 1] for p in range(v.n))
        levels.append(v.levels[profile_index(inner, v.j)])
    provenance = None
    if v.provenance is not None:
        weights = [None] * v.n
        for p in range(v.n):
            weights[pi[p] - 1] = v.provenance.weights[p]
        provenance = WeightedRule(tuple(weights), v.provenance.thresholds)
    return JKGame(v.n, v.j, v.k, tuple(levels), provenance=provenance, labels=v.labels)


def is_null_player(v: JKGame, i: int) -> bool:
    """Whether the output never depends on player i's level."""
    if not 1 <= i <= v.n:
        raise UnknownPlayer(f"player {i} is not one of 1..{v.n}")
    stride = v.j ** (v.n - i)
    for idx, x in enumerate(all_profiles(v.n, v.j)):
        if x[i - 1] < v.j - 1 and v.levels[idx] != v.levels[idx + stride]:
            return False
    return True


def single_mcv_game(x: Sequence[int], worth: int, j: int, k: int) -> JKGame:
    """The smallest monotone game whose only minimal critical vector is x,
    at the given worth: everything at or above x maps there, the rest to 0."""
    x = tuple(x)
    if not any(x):
        raise ValidationError("the zero profile cannot be a minimal critical vector")
    if any(not 0 <= a < j for a in x):
        raise LevelOutOfRange(f"profile {x} has entries outside 0..{j - 1}")
    if not 1 <= worth <= k - 1:
        raise LevelOutOfRange(f"worth {worth} outside 1..{k - 1}")
    levels = tuple(
        worth if all(a >= b for a, b in zip(y, x)) else 0
        for y in all_profiles(len(x), j)
    )
    return JKGame(len(x), j, k, levels)


def decompose(v: JKGame) -> tuple[JKGame, ...]:
    """Single-vector components of v; their pointwise maximum rebuilds v."""
    mcv = minimal_critical_vectors(v)
    return tuple(single_mcv_game(x, w, v.j, v.k) for x, w in mcv.pairs())


def axiom_report(v: JKGame, w: JKGame | None = None) -> AxiomReport:
    """Evaluate the axioms on the normalized surplus value of v.

    A1: null players get 0 (vacuous without null players). A2: the values
    sum to 1. A3: with a single minimal critical vector, every supporter
    gets the same share (vacuous otherwise). A4: given a second game
    mergeable with v, the merged value is the criticality-weighted average
    of both values; requesting it on a non-mergeable pair raises.
    """
    if v.trivial:
        raise TrivialGame("axioms are stated for games with at least one critical vector")
    if w is not None and w.trivial:
        raise TrivialGame("the second game is constant-0; merging adds nothing")
    norm_v = normalized_variant(v)
    results = [_axiom_null(v, norm_v), _axiom_efficiency(norm_v), _axiom_shares(v, norm_v)]
    if w is None:
        results.append(AxiomResult("A4", "skipped", "no second game given"))
    else:
        results.append(_axiom_merge(v, w, norm_v))
    return AxiomReport(tuple(results))


def _axiom_null(v: JKGame, norm_v) -> AxiomResult:
    nulls = [i for i in v.players() if is_null_player(v, i)]
    if not nulls:
        return AxiomResult("A1", "vacuous", "no null players")
    bad = tuple(
        (i, norm_v.player_values[i - 1])
        for i in nulls
        if norm_v.player_values[i - 1] != 0
    )
    if bad:
        return AxiomResult("A1", "fail", "null players with nonzero value", bad)
    return AxiomResult("A1", "pass", f"null players {nulls} all get 0")


def _axiom_efficiency(norm_v) -> AxiomResult:
    total = sum(norm_v.player_values)
    if total != 1:
        return AxiomResult("A2", "fail", f"values sum to {total}, not 1", (total,))
    return AxiomResult("A2", "pass", "values sum to 1")


def _axiom_shares(v: JKGame, norm_v) -> AxiomResult:
    mcv = minimal_critical_vectors(v)
    if len(mcv) != 1:
        return AxiomResult("A3", "vacuous", f"{len(mcv)} minimal critical vectors")
    x = mcv.vectors[0]
    support = [i for i in v.players() if x[i - 1]]
    shares = {norm_v.player_values[i - 1] for i in support}
    if len(shares) != 1:
        return AxiomResult(
            "A3",
            "fail",
            "supporters of the single vector get unequal shares",
            tuple((i, norm_v.player_values[i - 1]) for i in support),
        )
    return AxiomResult("A3", "pass", f"all {len(support)} supporters share equally")


def _axiom_merge(v: JKGame, w: JKGame, norm_v) -> AxiomResult:
    report = is_mergeable(v, w)
    if not report.mergeable:
        raise NotMergeable(
            f"A4 requested on a non-mergeable pair ({len(report.violations)} violations)"
        )
    norm_w = normalized_variant(w)
    norm_sum = normalized_variant(oplus(v, w))
    cv = total_criticality(v)
    cw = total_criticality(w)
    bad = []
    for i in v.players():
        expected = (cv * norm_v.player_values[i - 1] + cw * norm_w.player_values[i - 1]) / (
            cv + cw
        )
        got = norm_sum.player_values[i - 1]
        if got != expected:
            bad.append((i, got, expected))
    if bad:
        return AxiomResult(
            "A4", "fail", "merged value is not the criticality-weighted average", tuple(bad)
        )
    return AxiomResult(
        "A4", "pass", f"weighted average holds with weights {cv} and {cw}"
    )
