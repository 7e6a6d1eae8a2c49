"""Return words, factor complexity and property R_m for infinite words."""
from .beta import (BetaSpec, beta_integers, beta_source, build_beta_substitution, dominant_root,
                   gap_word_matches_fixed_point, is_parry_simple, satisfies_rm_conditions)
from .errors import ReturnWordsError
from .factors import (FactorTable, bilateral_order, build_factor_table, complexity,
                      delta_complexity, special_factors)
from .returns import ReturnSet, ReturnTrie, build_return_trie, return_set
from .rm import RmVerdict, check_rm, check_product_structure, check_theorem1
from .words import Alphabet, Substitution, WordSource, builtin, parse_substitution

__version__ = "0.1.0"

__all__ = [
    "Alphabet", "BetaSpec", "FactorTable", "ReturnSet", "ReturnTrie", "ReturnWordsError",
    "RmVerdict", "Substitution", "WordSource", "beta_integers", "beta_source",
    "bilateral_order", "build_beta_substitution", "build_factor_table", "build_return_trie",
    "builtin", "check_product_structure", "check_rm", "check_theorem1", "complexity",
    "delta_complexity", "dominant_root", "gap_word_matches_fixed_point", "is_parry_simple",
    "parse_substitution", "return_set", "satisfies_rm_conditions", "special_factors",
]
