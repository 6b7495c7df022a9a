"""
An infinitely generated fixed subgroup
======================================

``a1 -> a1 c``, ``a2 -> a2``, ``c -> c`` on ``F_2 x Z``.  A word is fixed
exactly when its a1 exponent sum vanishes, which is an infinite-index normal
subgroup of F_2, hence free of infinite rank.
"""

from autfix.constructions import aleph
from autfix.endo import eval_endo
from autfix.fixpipe import brute_fixed_elements, fix_subgroup
from autfix.words import format_word

E = aleph(2).endo
desc = fix_subgroup(E, stream_witnesses=7)
print("iso:", desc.iso, " projected:", desc.projected.tag)

##############################################################################
# No finite basis exists, so generators are produced lazily as conjugates
# a1^n a2 a1^-n for n = 0, 1, -1, 2, -2, ...

for x in desc.stream(7):
    print(f"{format_word(x.u):25s} v={x.v}  fixed: {eval_endo(E, x) == x}")

##############################################################################
# Brute force agrees: every short fixed word has zero a1 exponent sum.

found = brute_fixed_elements(E, 4)
print(len(found), "fixed elements with word length <= 4")
print(all(sum(1 if y == 1 else -1 for y in x.u.letters if abs(y) == 1) == 0 for x in found))
