"""Command-line interface: load game files, run analyses, render reports.

Commands: analyze, mcv, potential, merge, average, axioms, embed. Output
is a human table by default or a deterministic JSON document with
--format machine. Exit status 0 on success, 1 on domain/validation
errors, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import TextIO

from .algebra import AxiomReport, MergeReport, axiom_report, is_mergeable, mcv_union_check
from .average import (
    AverageGameResult,
    ValueComparison,
    average_worth_oracle,
    compare_pgv_vs_jk,
)
from .critical import (
    CoalitionSet,
    MCVSet,
    minimal_critical_coalitions,
    minimal_critical_vectors,
    minimal_critical_vectors_oracle,
    minimal_winning_coalitions,
    real_gaining_coalitions,
)
from .errors import GameError, TrivialGame, UsageError, ValidationError
from .gamefile import dumps_game, game_to_dict, load_game, rational_str
from .games import (
    DEFAULT_CAP,
    JKGame,
    SimpleGame,
    TUGame,
    all_coalitions,
    coalition_of_profile,
    embed_2k_as_tu,
    embed_simple,
)
from .indices import (
    IndexReport,
    jk_potential,
    jk_potential_recursive,
    normalized_variant,
    pgi_normalized,
    pgi_raw,
    pgv_tu,
    public_good_value_jk,
    tu_potential,
    variant_value,
)

MAX_WITNESSES = 10


@dataclass(frozen=True)
class AnalysisRequest:
    """One parsed invocation."""

    command: str
    input_paths: tuple[str, ...]
    format: str = "table"
    family: str = "mcc"
    output: str | None = None
    oracle: bool = False
    cap: int = DEFAULT_CAP


# ---------------------------------------------------------------------------
# rendering primitives


def _frac_plain(q: Fraction) -> str:
    return rational_str(q)


def _frac_table(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q)
    return f"{q} (~{float(q):.6f})"


def _profile_str(x) -> str:
    return "(" + ",".join(str(a) for a in x) + ")"


def _coalition_str(S) -> str:
    return "{" + ",".join(str(i) for i in sorted(S)) + "}"


def _aligned(rows) -> list[str]:
    widths = [max(len(row[c]) for row in rows) for c in range(len(rows[0]))]
    return [
        "  " + "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
        for row in rows
    ]


def _listing_rows(listing, title: str) -> list[str]:
    if isinstance(listing, MCVSet):
        if not listing.vectors:
            return [f"no {title}"]
        rows = [("vector", "worth")]
        rows += [(_profile_str(x), str(w)) for x, w in listing.pairs()]
    else:
        if not listing.coalitions:
            return [f"no {title}"]
        rows = [("coalition", "worth")]
        rows += [(_coalition_str(S), _frac_table(w)) for S, w in listing.pairs()]
    return [f"{title} ({len(listing)})"] + _aligned(rows)


def _listing_json(listing) -> list:
    if isinstance(listing, MCVSet):
        return [{"vector": list(x), "worth": w} for x, w in listing.pairs()]
    return [
        {"coalition": sorted(S), "worth": _frac_plain(w)} for S, w in listing.pairs()
    ]


def _report_json(report: IndexReport) -> dict:
    return {
        "variant": report.variant,
        "players": list(report.players),
        "player_values": [_frac_plain(q) for q in report.player_values],
        "potential": _frac_plain(report.potential),
        "lambda_total": _frac_plain(report.lambda_total),
        "listing": _listing_json(report.listing),
    }


def _game_json(game) -> dict:
    if isinstance(game, JKGame):
        return {
            "kind": "jk",
            "n": game.n,
            "j": game.j,
            "k": game.k,
            "players": list(game.labels),
        }
    if isinstance(game, SimpleGame):
        return {"kind": "simple", "n": game.n, "players": list(game.players())}
    return {
        "kind": "tu",
        "n": game.n,
        "monotone": game.monotone,
        "players": list(game.labels),
    }


def _game_heading(game) -> str:
    if isinstance(game, JKGame):
        head = f"({game.j},{game.k}) game on {game.n} players"
        if game.provenance is not None:
            weights = ", ".join(_frac_plain(w) for w in game.provenance.weights)
            thresholds = ", ".join(_frac_plain(t) for t in game.provenance.thresholds)
            head += f"\nrule: weights {weights}; thresholds {thresholds}"
        return head
    if isinstance(game, SimpleGame):
        return f"simple game on {game.n} players"
    tone = "monotone" if game.monotone else "not monotone"
    return f"TU game on {game.n} players ({tone})"


def _values_table(reports: list[IndexReport]) -> list[str]:
    header = ("player",) + tuple(r.variant for r in reports)
    rows = [header]
    players = reports[0].players
    for pos, label in enumerate(players):
        rows.append(
            (str(label),) + tuple(_frac_table(r.player_values[pos]) for r in reports)
        )
    return _aligned(rows)


def _dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def render(report, format: str = "table") -> str:
    """Render one report object on its own, in either format."""
    if format == "machine":
        return _dumps(_machine_fragment(report))
    return "\n".join(_table_fragment(report)) + "\n"


def _machine_fragment(report):
    if isinstance(report, IndexReport):
        return _report_json(report)
    if isinstance(report, (MCVSet, CoalitionSet)):
        return _listing_json(report)
    if isinstance(report, MergeReport):
        return {
            "mergeable": report.mergeable,
            "violations": [
                {"x": list(v.x), "y": list(v.y), "clause": v.clause}
                for v in report.violations
            ],
        }
    if isinstance(report, AxiomReport):
        return {
            "axioms": [
                {
                    "axiom": r.axiom,
                    "status": r.status,
                    "detail": r.detail,
                    "witnesses": [str(w) for w in r.witnesses],
                }
                for r in report.results
            ]
        }
    if isinstance(report, AverageGameResult):
        return {
            "scale": _frac_plain(report.scale),
            "average_game": game_to_dict(report.tu),
        }
    if isinstance(report, ValueComparison):
        return _comparison_json(report)
    raise TypeError(f"cannot render {type(report).__name__}")


def _table_fragment(report) -> list[str]:
    if isinstance(report, IndexReport):
        lines = _listing_rows(report.listing, _listing_title(report.listing))
        lines.append(f"potential = {_frac_table(report.potential)}")
        lines.append(f"distributed total = {_frac_table(report.lambda_total)}")
        lines += _values_table([report])
        return lines
    if isinstance(report, (MCVSet, CoalitionSet)):
        return _listing_rows(report, _listing_title(report))
    if isinstance(report, MergeReport):
        return _merge_lines(report, union=None)
    if isinstance(report, AxiomReport):
        return _axiom_lines(report)
    if isinstance(report, AverageGameResult):
        return _average_lines(report)
    if isinstance(report, ValueComparison):
        return _comparison_lines(report)
    raise TypeError(f"cannot render {type(report).__name__}")


def _listing_title(listing) -> str:
    if isinstance(listing, MCVSet):
        return "minimal critical vectors"
    return "coalitions"


def _comparison_json(comp: ValueComparison) -> dict:
    return {
        "pgv_of_average": _report_json(comp.pgv_of_average),
        "jk_value": _report_json(comp.jk_value),
        "variant": _report_json(comp.variant),
        "equal_after_normalization": comp.equal_after_normalization,
        "degenerate": comp.degenerate,
    }


def _comparison_lines(comp: ValueComparison) -> list[str]:
    lines = _values_table([comp.pgv_of_average, comp.jk_value, comp.variant])
    lines.append(
        "equal after normalization: "
        + ("yes" if comp.equal_after_normalization else "no")
    )
    if comp.degenerate:
        lines.append("comparison degenerate: constant-0 game")
    return lines


def _merge_lines(report: MergeReport, union: bool | None) -> list[str]:
    lines = [f"mergeable: {'yes' if report.mergeable else 'no'}"]
    if report.violations:
        lines.append(f"violations ({len(report.violations)})")
        rows = [("x", "y", "clause")]
        rows += [
            (_profile_str(v.x), _profile_str(v.y), v.clause)
            for v in report.violations[:MAX_WITNESSES]
        ]
        lines += _aligned(rows)
        hidden = len(report.violations) - MAX_WITNESSES
        if hidden > 0:
            lines.append(f"  ... and {hidden} more")
    if union is not None:
        lines.append(f"union lemma verified: {'yes' if union else 'NO'}")
    return lines


def _axiom_lines(report: AxiomReport) -> list[str]:
    rows = [("axiom", "status", "detail")]
    rows += [(r.axiom, r.status, r.detail) for r in report.results]
    return _aligned(rows)


def _average_lines(result: AverageGameResult) -> list[str]:
    lines = [f"scale = {_frac_plain(result.scale)}"]
    rows = [("coalition", "worth")]
    rows += [
        (_coalition_str(S), _frac_table(result.tu.worth(S)))
        for S in all_coalitions(result.tu.n)
    ]
    lines += _aligned(rows)
    return lines


# ---------------------------------------------------------------------------
# command handlers: (games, request) -> (text, status, errmsg | None)


def _cmd_analyze(games, request: AnalysisRequest):
    game = games[0]
    if isinstance(game, JKGame):
        return _analyze_jk(game, request)
    if isinstance(game, SimpleGame):
        return _analyze_simple(game, request)
    return _analyze_tu(game, request)


def _analyze_jk(game: JKGame, request: AnalysisRequest):
    value = public_good_value_jk(game)
    variant = variant_value(game)
    reports = [value, variant]
    error = None
    try:
        reports.append(normalized_variant(game))
    except TrivialGame as exc:
        error = str(exc)
    oracle_agrees = None
    if request.oracle:
        oracle_agrees = minimal_critical_vectors_oracle(game) == value.listing
    if request.format == "machine":
        doc = {
            "command": "analyze",
            "game": _game_json(game),
            "reports": [_report_json(r) for r in reports],
            "error": error,
        }
        if request.oracle:
            doc["oracle_agrees"] = oracle_agrees
        return _dumps(doc), 0 if error is None else 1, error
    lines = [_game_heading(game), ""]
    lines += _listing_rows(value.listing, "minimal critical vectors")
    lines.append("")
    lines.append(f"potential = {_frac_table(value.potential)}")
    lines.append(f"distributed total = {_frac_table(value.lambda_total)}")
    lines.append("")
    lines += _values_table(reports)
    if request.oracle:
        lines.append("")
        lines.append(f"oracle cross-check: {'agrees' if oracle_agrees else 'DISAGREES'}")
    return "\n".join(lines) + "\n", 0 if error is None else 1, error


def _analyze_simple(game: SimpleGame, request: AnalysisRequest):
    raw = pgi_raw(game)
    reports = [raw]
    error = None
    try:
        reports.append(pgi_normalized(game))
    except TrivialGame as exc:
        error = str(exc)
    oracle_agrees = None
    if request.oracle:
        oracle_mcv = minimal_critical_vectors_oracle(embed_simple(game))
        image = frozenset(coalition_of_profile(x) for x in oracle_mcv.vectors)
        oracle_agrees = image == frozenset(raw.listing.coalitions)
    if request.format == "machine":
        doc = {
            "command": "analyze",
            "game": _game_json(game),
            "reports": [_report_json(r) for r in reports],
            "error": error,
        }
        if request.oracle:
            doc["oracle_agrees"] = oracle_agrees
        return _dumps(doc), 0 if error is None else 1, error
    lines = [_game_heading(game), ""]
    lines += _listing_rows(raw.listing, "minimal winning coalitions")
    lines.append("")
    lines += _values_table(reports)
    if request.oracle:
        lines.append("")
        lines.append(f"oracle cross-check: {'agrees' if oracle_agrees else 'DISAGREES'}")
    return "\n".join(lines) + "\n", 0 if error is None else 1, error


def _analyze_tu(game: TUGame, request: AnalysisRequest):
    report = pgv_tu(game, request.family)
    oracle_agrees, oracle_note = _tu_oracle(game, request)
    if request.format == "machine":
        doc = {
            "command": "analyze",
            "game": _game_json(game),
            "family": request.family,
            "reports": [_report_json(report)],
            "error": None,
        }
        if request.oracle:
            doc["oracle_agrees"] = oracle_agrees
            doc["oracle_note"] = oracle_note
        return _dumps(doc), 0, None
    title = (
        "minimal critical coalitions"
        if request.family == "mcc"
        else "real gaining coalitions"
    )
    lines = [_game_heading(game), ""]
    lines += _listing_rows(report.listing, title)
    lines.append("")
    lines.append(f"potential = {_frac_table(report.potential)}")
    lines.append(f"distributed total = {_frac_table(report.lambda_total)}")
    lines.append("")
    lines += _values_table([report])
    if request.oracle:
        lines.append("")
        if oracle_agrees is None:
            lines.append(f"oracle cross-check: skipped ({oracle_note})")
        else:
            lines.append(
                f"oracle cross-check: {'agrees' if oracle_agrees else 'DISAGREES'}"
            )
    return "\n".join(lines) + "\n", 0, None


def _tu_oracle(game: TUGame, request: AnalysisRequest):
    """Cross-route check for TU games: on monotone games the minimal
    critical and real gaining families must coincide."""
    if not request.oracle:
        return None, None
    if not game.monotone:
        return None, "no independent route for non-monotone games"
    agree = minimal_critical_coalitions(game) == real_gaining_coalitions(game)
    return agree, "minimal critical vs real gaining"


def _cmd_mcv(games, request: AnalysisRequest):
    game = games[0]
    family = None
    if isinstance(game, JKGame):
        listing = minimal_critical_vectors(game)
        title = "minimal critical vectors"
        oracle_agrees = (
            minimal_critical_vectors_oracle(game) == listing if request.oracle else None
        )
        oracle_note = "full down-set scan" if request.oracle else None
    elif isinstance(game, SimpleGame):
        mwc = minimal_winning_coalitions(game)
        listing = CoalitionSet.from_pairs(game.n, ((S, Fraction(1)) for S in mwc))
        title = "minimal winning coalitions"
        if request.oracle:
            oracle_mcv = minimal_critical_vectors_oracle(embed_simple(game))
            image = frozenset(coalition_of_profile(x) for x in oracle_mcv.vectors)
            oracle_agrees = image == mwc
            oracle_note = "via the (2,2) embedding"
        else:
            oracle_agrees = oracle_note = None
    else:
        family = request.family
        chosen = (
            minimal_critical_coalitions(game)
            if family == "mcc"
            else real_gaining_coalitions(game)
        )
        listing = CoalitionSet.from_pairs(game.n, ((S, game.worth(S)) for S in chosen))
        title = (
            "minimal critical coalitions" if family == "mcc" else "real gaining coalitions"
        )
        oracle_agrees, oracle_note = _tu_oracle(game, request)
    if request.format == "machine":
        doc = {"command": "mcv", "game": _game_json(game)}
        if family is not None:
            doc["family"] = family
        doc["listing"] = _listing_json(listing)
        if request.oracle:
            doc["oracle_agrees"] = oracle_agrees
            doc["oracle_note"] = oracle_note
        return _dumps(doc), 0, None
    lines = [_game_heading(game), ""]
    lines += _listing_rows(listing, title)
    if request.oracle:
        lines.append("")
        if oracle_agrees is None:
            lines.append(f"oracle cross-check: skipped ({oracle_note})")
        else:
            lines.append(
                f"oracle cross-check: {'agrees' if oracle_agrees else 'DISAGREES'}"
            )
    return "\n".join(lines) + "\n", 0, None


def _cmd_potential(games, request: AnalysisRequest):
    game = games[0]
    note = None
    if isinstance(game, SimpleGame):
        game = embed_simple(game)
        note = "via the (2,2) embedding"
    if isinstance(game, JKGame):
        direct = jk_potential(game)
        recursive = jk_potential_recursive(game)
        match = direct == recursive
    else:
        direct = tu_potential(game)
        recursive = None
        match = None
    if request.format == "machine":
        doc = {
            "command": "potential",
            "game": _game_json(games[0]),
            "potential": _frac_plain(direct),
            "recursive": None if recursive is None else _frac_plain(recursive),
            "match": match,
            "note": note,
        }
        return _dumps(doc), 0, None
    lines = [_game_heading(games[0]), ""]
    if note:
        lines.append(f"({note})")
    lines.append(f"potential (direct)    = {_frac_table(direct)}")
    if recursive is not None:
        lines.append(f"potential (recursive) = {_frac_table(recursive)}")
        lines.append(f"routes agree: {'yes' if match else 'NO'}")
    return "\n".join(lines) + "\n", 0, None


def _require_jk(games, command: str) -> list[JKGame]:
    for game in games:
        if not isinstance(game, JKGame):
            raise ValidationError(f'{command} works on "jk" game files only')
    return games


def _cmd_merge(games, request: AnalysisRequest):
    v, w = _require_jk(games, "merge")
    report = is_mergeable(v, w)
    union = mcv_union_check(v, w) if report.mergeable else None
    if request.format == "machine":
        doc = {
            "command": "merge",
            "games": [_game_json(v), _game_json(w)],
            "mergeable": report.mergeable,
            "violations": [
                {"x": list(item.x), "y": list(item.y), "clause": item.clause}
                for item in report.violations
            ],
            "union_check": union,
        }
        return _dumps(doc), 0, None
    lines = [_game_heading(v), _game_heading(w), ""]
    lines += _merge_lines(report, union)
    return "\n".join(lines) + "\n", 0, None


def _cmd_axioms(games, request: AnalysisRequest):
    games = _require_jk(games, "axioms")
    v = games[0]
    w = games[1] if len(games) > 1 else None
    report = axiom_report(v, w)
    if request.format == "machine":
        doc = {
            "command": "axioms",
            "game": _game_json(v),
            "second_game": None if w is None else _game_json(w),
        }
        doc.update(_machine_fragment(report))
        return _dumps(doc), 0, None
    lines = [_game_heading(v)]
    if w is not None:
        lines.append(_game_heading(w))
    lines.append("")
    lines += _axiom_lines(report)
    return "\n".join(lines) + "\n", 0, None


def _cmd_average(games, request: AnalysisRequest):
    (game,) = _require_jk(games, "average")
    comparison = compare_pgv_vs_jk(game, family=request.family, cap=request.cap)
    result = comparison.average
    oracle_agrees = None
    if request.oracle:
        oracle_agrees = all(
            result.tu.worth(S) == average_worth_oracle(game, S)
            for S in all_coalitions(game.n)
        )
    if request.format == "machine":
        doc = {
            "command": "average",
            "game": _game_json(game),
            "scale": _frac_plain(result.scale),
            "average_game": game_to_dict(result.tu),
            "comparison": _comparison_json(comparison),
        }
        if request.oracle:
            doc["oracle_agrees"] = oracle_agrees
        return _dumps(doc), 0, None
    lines = [_game_heading(game), ""]
    lines += _average_lines(result)
    lines.append("")
    lines += _comparison_lines(comparison)
    if request.oracle:
        lines.append("")
        lines.append(
            f"oracle cross-check: {'agrees' if oracle_agrees else 'DISAGREES'}"
        )
    return "\n".join(lines) + "\n", 0, None


def _cmd_embed(games, request: AnalysisRequest):
    game = games[0]
    if isinstance(game, SimpleGame):
        embedded = embed_simple(game)
    elif isinstance(game, JKGame):
        embedded = embed_2k_as_tu(game)
    else:
        raise ValidationError("TU games have no further embedding here")
    return dumps_game(embedded), 0, None


_HANDLERS = {
    "analyze": _cmd_analyze,
    "mcv": _cmd_mcv,
    "potential": _cmd_potential,
    "merge": _cmd_merge,
    "axioms": _cmd_axioms,
    "average": _cmd_average,
    "embed": _cmd_embed,
}


# ---------------------------------------------------------------------------
# driver


def run(request: AnalysisRequest, out: TextIO = sys.stdout, err: TextIO = sys.stderr) -> int:
    """Execute one request, writing the report to ``out``."""
    try:
        handler = _HANDLERS[request.command]
        games = [load_game(p, cap=request.cap) for p in request.input_paths]
        text, status, errmsg = handler(games, request)
    except GameError as exc:
        err.write(f"error: {exc}\n")
        witnesses = getattr(exc, "witnesses", ())
        for witness in witnesses[:MAX_WITNESSES]:
            err.write(f"  witness: {witness}\n")
        if len(witnesses) > MAX_WITNESSES:
            err.write(f"  ... and {len(witnesses) - MAX_WITNESSES} more\n")
        return 1
    out.write(text)
    if errmsg is not None:
        err.write(f"error: {errmsg}\n")
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pgindex",
        description="Public Good indices and values for simple, TU, and (j,k) simple games.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("table", "machine"), default="table",
        help="human table or deterministic JSON (default: table)",
    )
    common.add_argument(
        "--family", choices=("mcc", "rgc"), default="mcc",
        help="TU coalition family (default: mcc)",
    )
    common.add_argument("--output", help="write the report here instead of stdout")
    common.add_argument(
        "--oracle", action="store_true",
        help="run brute-force cross-checks and report agreement",
    )
    common.add_argument(
        "--cap", type=int, default=DEFAULT_CAP,
        help="override the enumeration cap (default: 2**24)",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    specs = (
        ("analyze", 1, "all applicable index reports for the game"),
        ("mcv", 1, "the minimal critical structure with worths"),
        ("potential", 1, "direct and recursive potential"),
        ("merge", 2, "mergeability report and union-lemma check"),
        ("average", 1, "average-game reduction and value comparison"),
        ("axioms", "+", "axiom checks (give a second game for the merge axiom)"),
        ("embed", 1, "write the (2,2) or TU embedding as a game file"),
    )
    for name, nargs, help_text in specs:
        sub = subparsers.add_parser(name, parents=[common], help=help_text)
        sub.add_argument("paths", nargs=nargs, metavar="GAME")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "axioms" and len(args.paths) > 2:
            raise UsageError("axioms takes one game plus an optional second game")
        if args.cap <= 0:
            raise UsageError("--cap must be positive")
    except UsageError as exc:
        parser.error(str(exc))  # exits 2
    request = AnalysisRequest(
        command=args.command,
        input_paths=tuple(args.paths),
        format=args.format,
        family=args.family,
        output=args.output,
        oracle=args.oracle,
        cap=args.cap,
    )
    if request.output is not None:
        try:
            with open(request.output, "w", encoding="utf-8") as handle:
                return run(request, out=handle)
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
    return run(request)
