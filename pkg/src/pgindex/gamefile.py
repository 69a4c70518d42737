"""Reading and writing the JSON game-file format used by the CLI.

Three kinds: {"kind": "jk", "n", "j", "k", "table": [...]} (or "weighted":
{"weights": [...], "thresholds": [...]} instead of the table),
{"kind": "simple", "n", "winning": [[...], ...]} where the winning sets
may be minimal generators (upward closure is applied), and {"kind": "tu",
"n", "worth": {"1,3": "p/q", ...}} with comma-separated member keys and
the empty key implied as 0. Rationals are "p/q" strings or integers;
floats are rejected to keep everything exact.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .critical import minimal_winning_coalitions
from .errors import ParseError
from .games import (
    DEFAULT_CAP,
    JKGame,
    SimpleGame,
    TUGame,
    all_coalitions,
    make_table_game,
    make_tu_game,
    make_weighted_game,
    simple_game_from_generators,
)

Game = JKGame | SimpleGame | TUGame


def rational_str(q: Fraction) -> str:
    """Canonical "p/q" (or "p" for integers) rendering."""
    return str(q)


def parse_rational(obj, path, what: str) -> Fraction:
    if isinstance(obj, bool) or isinstance(obj, float):
        raise ParseError(path, f'{what} must be an integer or a "p/q" string, got {obj!r}')
    if isinstance(obj, int):
        return Fraction(obj)
    if isinstance(obj, str):
        try:
            return Fraction(obj)
        except (ValueError, ZeroDivisionError):
            raise ParseError(path, f"{what} is not a rational: {obj!r}") from None
    raise ParseError(path, f'{what} must be an integer or a "p/q" string, got {obj!r}')


def _get_int(doc: dict, key: str, path) -> int:
    value = doc.get(key)
    if not isinstance(value, int) or isinstance(value, bool):
        raise ParseError(path, f'"{key}" must be an integer, got {value!r}')
    return value


def load_game(path, *, cap: int = DEFAULT_CAP) -> Game:
    """Load a game file; raises ParseError on malformed input and the
    usual validation errors on well-formed but invalid games."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(path, str(exc)) from None
    return loads_game(text, path=path, cap=cap)


def loads_game(text: str, *, path="<input>", cap: int = DEFAULT_CAP) -> Game:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(path, exc.msg, line=exc.lineno, col=exc.colno) from None
    if not isinstance(doc, dict):
        raise ParseError(path, "top-level value must be an object")
    kind = doc.get("kind")
    if kind == "jk":
        return _load_jk(doc, path, cap)
    if kind == "simple":
        return _load_simple(doc, path, cap)
    if kind == "tu":
        return _load_tu(doc, path, cap)
    raise ParseError(path, f'unknown kind {kind!r}; expected "jk", "simple", or "tu"')


def _load_jk(doc: dict, path, cap: int) -> JKGame:
    n = _get_int(doc, "n", path)
    j = _get_int(doc, "j", path)
    k = _get_int(doc, "k", path)
    table = doc.get("table")
    weighted = doc.get("weighted")
    if (table is None) == (weighted is None):
        raise ParseError(path, 'exactly one of "table" and "weighted" is required')
    if table is not None:
        if not isinstance(table, list):
            raise ParseError(path, '"table" must be a list of output levels')
        for entry in table:
            if not isinstance(entry, int) or isinstance(entry, bool):
                raise ParseError(path, f"table entries must be integers, got {entry!r}")
        return make_table_game(n, j, k, table, cap=cap)
    if not isinstance(weighted, dict):
        raise ParseError(path, '"weighted" must be an object with weights and thresholds')
    weights = weighted.get("weights")
    thresholds = weighted.get("thresholds")
    if not isinstance(weights, list) or not isinstance(thresholds, list):
        raise ParseError(path, '"weighted" needs "weights" and "thresholds" lists')
    game = make_weighted_game(
        [parse_rational(w, path, "weight") for w in weights],
        [parse_rational(t, path, "threshold") for t in thresholds],
        j,
        k,
        cap=cap,
    )
    if game.n != n:
        raise ParseError(path, f'"n" is {n} but there are {game.n} weights')
    return game


def _load_simple(doc: dict, path, cap: int) -> SimpleGame:
    n = _get_int(doc, "n", path)
    winning = doc.get("winning")
    if not isinstance(winning, list):
        raise ParseError(path, '"winning" must be a list of coalitions')
    generators = []
    for entry in winning:
        if not isinstance(entry, list):
            raise ParseError(path, f"coalitions must be lists of players, got {entry!r}")
        generators.append(entry)
    return simple_game_from_generators(n, generators, cap=cap)


def _load_tu(doc: dict, path, cap: int) -> TUGame:
    n = _get_int(doc, "n", path)
    worth = doc.get("worth")
    if not isinstance(worth, dict):
        raise ParseError(path, '"worth" must be an object keyed by member lists')
    table = {}
    for key, value in worth.items():
        members = []
        if key:
            for token in key.split(","):
                token = token.strip()
                try:
                    members.append(int(token))
                except ValueError:
                    raise ParseError(
                        path, f"worth key {key!r} is not a comma-separated member list"
                    ) from None
        table[frozenset(members)] = parse_rational(value, path, f"worth of {key!r}")
    table.setdefault(frozenset(), Fraction(0))  # "": 0 implied
    return make_tu_game(n, table, cap=cap)


# ---------------------------------------------------------------------------
# writing


def coalition_key(coalition) -> str:
    return ",".join(str(i) for i in sorted(coalition))


def game_to_dict(game: Game) -> dict:
    """Game-file document for any of the three kinds."""
    if isinstance(game, JKGame):
        doc = {"kind": "jk", "n": game.n, "j": game.j, "k": game.k}
        if game.provenance is not None:
            doc["weighted"] = {
                "weights": [rational_str(w) for w in game.provenance.weights],
                "thresholds": [rational_str(t) for t in game.provenance.thresholds],
            }
        else:
            doc["table"] = list(game.levels)
        return doc
    if isinstance(game, SimpleGame):
        generators = sorted(
            (sorted(S) for S in minimal_winning_coalitions(game)),
            key=lambda members: (len(members), members),
        )
        return {"kind": "simple", "n": game.n, "winning": generators}
    if isinstance(game, TUGame):
        worth = {
            coalition_key(S): rational_str(game.worth(S))
            for S in all_coalitions(game.n)
        }
        return {"kind": "tu", "n": game.n, "worth": worth}
    raise TypeError(f"cannot serialize {type(game).__name__}")


def dumps_game(game: Game) -> str:
    return json.dumps(game_to_dict(game), indent=2) + "\n"


def dump_game(game: Game, path) -> None:
    Path(path).write_text(dumps_game(game), encoding="utf-8")
