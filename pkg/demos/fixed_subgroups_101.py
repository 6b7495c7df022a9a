"""
Fixed subgroups of F_g x Z^k, step by step
==========================================

A standard-form endomorphism of ``F_g x Z^k`` acts by
``(u, v) -> (alpha(u), Gamma ab(u) + L v)``.  This walk-through builds one,
computes its fixed subgroup and checks the answer by brute force.
"""

from autfix.constructions import phi_t
from autfix.endo import element, eval_endo
from autfix.fixpipe import fix_subgroup, oracle_check
from autfix.words import format_word

##############################################################################
# A catalog automorphism of F_3 x Z^2 whose fixed subgroup is free of rank 4.
# alpha fixes a1, a2 and inverts a3; Gamma sends a1 to e_1; L = [[4, 3], [1, 1]].

built = phi_t(3, 4)
E = built.endo
print(E.name)
print("L =", E.L.entries)

##############################################################################
# Evaluate on a couple of elements.

x = element(E.ambient, "a1 a3", (0, 0))
print("phi(a1 a3, 0) =", format_word(eval_endo(E, x).u), eval_endo(E, x).v)

##############################################################################
# The fixed subgroup.  ``s`` is the rank of ker(L - I); the projected part is
# the kernel of a map from <a1, a2> onto a finite cyclic group, here of order 3.

desc = fix_subgroup(E)
print("iso:", desc.iso)
print("s:", desc.s, " projected:", desc.projected.tag, "index", desc.projected.index)
for w in desc.witnesses:
    print("  fixed generator:", format_word(w.u), w.v)

##############################################################################
# Every fixed element with a short word part must lie in the description.

report = oracle_check(E, desc, max_len=5)
print(report.summary())
