"""
Which groups occur as fixed subgroups?
======================================

Decision procedures for "is this isomorphism type the fixed subgroup of some
automorphism", with counts and concrete witnesses.
"""

from autfix.classify import Ambient, count_aut_fixed, enumerate_aut_fixed, is_aut_fixed, parse_iso, rank_of
from autfix.constructions import witness_for
from autfix.fixpipe import fix_subgroup

##############################################################################
# With one extra Z factor the list is finite.

for g in (2, 3, 4):
    A = Ambient("free", g, 1)
    types = enumerate_aut_fixed(A)
    print(A, count_aut_fixed(A), [str(a) for a in types])

for g in (2, 3):
    A = Ambient("surface", g, 1)
    print(A, count_aut_fixed(A))

##############################################################################
# With two or more it is infinite, so enumeration needs a rank bound.

A = Ambient("free", 2, 2)
print(A, count_aut_fixed(A))
print([str(a) for a in enumerate_aut_fixed(A, 3)])

##############################################################################
# Single queries report the deciding family and a catalog recipe when one
# exists; the recipe really produces the type.

for text in ("F_100 x Z", "F_3 x Z^2", "Finf", "Finf x Z"):
    a = parse_iso(text)
    verdict = is_aut_fixed(A, a)
    line = f"{text:10s} -> {verdict.answer!s:5s} [{verdict.theorem_tag}] witness={verdict.witness}"
    if verdict.answer and rank_of(a) < 20:
        built = witness_for(A, a)
        line += f", computed {fix_subgroup(built.endo).iso}"
    print(line)
