"""
Surface groups: word problem and fixed subgroups
================================================

The genus g surface group has one relator ``[a1, b1] ... [ag, bg]``.
Equality is decided by Dehn's algorithm; fixed subgroups of products with
Z^k come from the same pipeline as in the free case.
"""

from autfix.constructions import PHI1, phi1_images, surface_endo
from autfix.fixpipe import fix_subgroup
from autfix.surface import is_trivial, relator, surface_equal
from autfix.words import apply_map, conjugate, format_word, parse_word

##############################################################################
# The relator and its conjugates are trivial; a commutator of two
# generators from different handles is not.

r = relator(2)
print("relator:", format_word(r, surface=True))
u = parse_word("a1 b2 A2", 4, surface=True)
print("conjugate trivial:", is_trivial(conjugate(r, u)))
print("[a1, a2] trivial:", is_trivial(parse_word("a1 a2 A1 A2", 4, surface=True)))

##############################################################################
# An automorphism fixing exactly the first handle <a1, b1>.  It preserves the
# relator as a word, so it is well defined on the surface group.

imgs = phi1_images(3)
print([format_word(w, surface=True) for w in imgs])
print("relator preserved:", apply_map(imgs, relator(3)) == relator(3))

##############################################################################
# With an identity alpha the fixed subgroup is a finite-index surface
# subgroup; with the first-handle alpha it is free.

for alpha in ("identity", PHI1):
    for m in (1, 2, 3):
        E = surface_endo(2, 3, m, 1, alpha).endo
        print(f"alpha={alpha:8s} m={m}: Fix = {fix_subgroup(E).iso}")

##############################################################################
# Equality is up to the relator.

print(surface_equal(parse_word("b1 A1 B1 a2 b2 A2 B2", 4, surface=True), parse_word("A1", 4, surface=True)))
