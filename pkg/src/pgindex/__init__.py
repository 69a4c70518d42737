"""Public Good indices and values for simple, TU, and (j,k) simple games.

The package covers the whole pipeline: building games (tables, weighted
rules, coalition worths), enumerating their minimal critical structure,
computing the potential-based value family with its surplus variant and
normalizations, the average-game reduction back to TU, and the merge /
permutation / axiom toolkit used to characterize the normalized value.
"""

from .algebra import (
    AxiomReport,
    AxiomResult,
    MergeReport,
    MergeViolation,
    axiom_report,
    decompose,
    is_mergeable,
    is_null_player,
    mcv_union_check,
    oplus,
    permute,
    single_mcv_game,
)
from .average import (
    AverageGameResult,
    ValueComparison,
    average_game,
    average_worth_oracle,
    compare_pgv_vs_jk,
)
from .critical import (
    CoalitionSet,
    MCVSet,
    is_critical_for,
    minimal_critical_below,
    minimal_critical_coalitions,
    minimal_critical_vectors,
    minimal_critical_vectors_oracle,
    minimal_winning_coalitions,
    real_gaining_coalitions,
)
from .errors import (
    CapExceeded,
    GameError,
    ParseError,
    TrivialGame,
    UsageError,
    ValidationError,
)
from .gamefile import (
    dump_game,
    dumps_game,
    game_to_dict,
    load_game,
    loads_game,
    rational_str,
)
from .games import (
    DEFAULT_CAP,
    JKGame,
    SimpleGame,
    TUGame,
    WeightedRule,
    embed_2k_as_tu,
    embed_simple,
    evaluate,
    extract_simple,
    make_simple_game,
    make_table_game,
    make_tu_game,
    make_weighted_game,
    remove_player,
    simple_game_from_generators,
    subgame,
    zero_game,
)
from .indices import (
    IndexReport,
    criticality_count,
    jk_potential,
    jk_potential_recursive,
    lambda_total,
    normalized_variant,
    pgi_normalized,
    pgi_raw,
    pgv_tu,
    public_good_value_jk,
    total_criticality,
    tu_potential,
    variant_value,
)

__version__ = "0.1.0"

__all__ = [
    "AxiomReport",
    "AxiomResult",
    "AverageGameResult",
    "CapExceeded",
    "CoalitionSet",
    "DEFAULT_CAP",
    "GameError",
    "IndexReport",
    "JKGame",
    "MCVSet",
    "MergeReport",
    "MergeViolation",
    "ParseError",
    "SimpleGame",
    "TUGame",
    "TrivialGame",
    "UsageError",
    "ValidationError",
    "ValueComparison",
    "WeightedRule",
    "average_game",
    "average_worth_oracle",
    "axiom_report",
    "compare_pgv_vs_jk",
    "criticality_count",
    "decompose",
    "dump_game",
    "dumps_game",
    "embed_2k_as_tu",
    "embed_simple",
    "evaluate",
    "extract_simple",
    "game_to_dict",
    "is_critical_for",
    "is_mergeable",
    "is_null_player",
    "jk_potential",
    "jk_potential_recursive",
    "lambda_total",
    "load_game",
    "loads_game",
    "make_simple_game",
    "make_table_game",
    "make_tu_game",
    "make_weighted_game",
    "mcv_union_check",
    "minimal_critical_below",
    "minimal_critical_coalitions",
    "minimal_critical_vectors",
    "minimal_critical_vectors_oracle",
    "minimal_winning_coalitions",
    "normalized_variant",
    "oplus",
    "permute",
    "pgi_normalized",
    "pgi_raw",
    "pgv_tu",
    "public_good_value_jk",
    "rational_str",
    "real_gaining_coalitions",
    "remove_player",
    "simple_game_from_generators",
    "single_mcv_game",
    "subgame",
    "total_criticality",
    "tu_potential",
    "variant_value",
    "zero_game",
]
