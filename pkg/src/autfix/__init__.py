"""Fixed subgroups of automorphisms of ``F_g x Z^k`` and ``pi_1(S_g) x Z^k``.

Submodules:

words          reduced words, abelianization, substitution maps
intlat         integer matrices: Smith normal form, kernels, cokernels
stallings      folded subgroup graphs and coset graphs
surface        Dehn's algorithm for surface groups
endo           ambient groups and standard-form endomorphisms
fixpipe        fixed subgroups and the brute-force oracle
classify       isomorphism types and the aut-fixed classification
constructions  catalog of explicit endomorphisms
cli            command line interface
"""
from .classify import (
    Ambient, IsoType, count_aut_fixed, enumerate_aut_fixed, format_iso, is_aut_fixed, normalize_iso,
    parse_ambient, parse_iso, rank_of,
)
from .endo import AlphaSpec, GroupElement, StdEndo, eval_endo, verify_automorphism
from .fixpipe import brute_fixed_elements, fix_subgroup, oracle_check
from .intlat import IntMatrix, smith_normal_form
from .words import Word, parse_word

__all__ = [
    "Ambient", "IsoType", "count_aut_fixed", "enumerate_aut_fixed", "format_iso", "is_aut_fixed", "normalize_iso",
    "parse_ambient", "parse_iso", "rank_of", "AlphaSpec", "GroupElement", "StdEndo", "eval_endo",
    "verify_automorphism", "brute_fixed_elements", "fix_subgroup", "oracle_check", "IntMatrix", "smith_normal_form",
    "Word", "parse_word",
]

__version__ = "0.1.0"
