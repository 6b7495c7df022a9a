import math

import pytest

from autfix.classify import (
    Ambient, abelian, decide_aut_fixed, enumerate_aut_fixed, free, free_inf, is_aut_fixed, rank_of, surface,
)
from autfix.constructions import (
    IDENTITY, PHI1, RECIPES, a_ell_matrix, aleph, endo_m, free_x_z, get_recipe, inversion, phi1_images,
    phi1_inverse_images, phi_t, psi_t, rank_witness, surface_endo, surface_psi, surface_x_z, witness_for,
)
from autfix.endo import eval_endo, element, validate_certificate, verify_automorphism, words_equal
from autfix.fixpipe import FULL, fix_subgroup, fixed_lattice
from autfix.intlat import IntMatrix, determinant
from autfix.surface import relator, surface_equal
from autfix.words import apply_map, compose_maps, identity_images, parse_word

ALL_CASES = [(rid, p) for rid, r in RECIPES.items() for p in r.grid]


def case_id(case):
    rid, p = case
    return rid + "(" + ",".join(f"{k}={v}" for k, v in p.items()) + ")"


@pytest.mark.parametrize("case", ALL_CASES, ids=[case_id(c) for c in ALL_CASES])
def test_catalog_grid(case):
    rid, params = case
    recipe = RECIPES[rid]
    b = recipe.build(**params)
    E = b.endo
    assert validate_certificate(E.alpha, E.ambient).verified_fixed
    d = fix_subgroup(E)
    assert d.iso == b.expected
    if recipe.automorphism:
        assert E.claims_automorphism and verify_automorphism(E, b.inverse)
        ok, tag = decide_aut_fixed(E.ambient, d.iso)
        assert ok, (E.name, d.iso, tag)
    else:
        assert not E.claims_automorphism and b.inverse is None


def test_inversion_examples():
    assert inversion(2, 2).expected == free(2)
    assert inversion(2, 2).endo.alpha.images == identity_images(2)
    assert inversion(3, 1).expected == abelian(1)
    assert fix_subgroup(inversion(4, 0).endo).iso == abelian(0)
    with pytest.raises(ValueError):
        inversion(2, 3)


def test_phi_t_examples():
    assert fix_subgroup(phi_t(2, 5).endo).iso == free(5)
    d = fix_subgroup(phi_t(3, 2).endo)
    assert d.iso == free(2) and d.projected.tag == FULL
    d = fix_subgroup(phi_t(4, 7).endo)
    assert d.iso == free(7) and d.projected.index == 6
    with pytest.raises(ValueError):
        phi_t(2, 1)


def test_psi_t_examples():
    assert psi_t(2, 3).expected == free(3, 1)
    assert fix_subgroup(psi_t(2, 2).endo).iso == free(2, 1)
    for t in range(2, 11):
        assert fixed_lattice(psi_t(2, t).endo.L)[0] == 1


def test_endo_m_examples():
    assert endo_m(2, 1).expected == free(2)
    assert endo_m(2, 4).expected == free(5)
    assert fix_subgroup(endo_m(3, 2).endo).iso == free(5)
    assert not endo_m(2, 1).endo.claims_automorphism


def test_aleph_witnesses():
    E = aleph(2).endo
    d = fix_subgroup(E, stream_witnesses=11)
    assert d.iso == free_inf(1)
    for x in d.stream(11):
        assert eval_endo(E, x) == x
    assert d.stream(1)[0].u == parse_word("a2", 2)


def test_free_x_z():
    b = free_x_z(3, free(5))
    assert b.endo.L == IntMatrix.from_rows([[-1]])
    d = fix_subgroup(b.endo)
    assert d.iso == free(5) and d.projected.index == 2
    assert fix_subgroup(free_x_z(2, free(2, 1)).endo).iso == free(2, 1)
    with pytest.raises(ValueError):
        free_x_z(2, free(4))


def test_free_x_z_covers_every_listed_type():
    for g in range(2, 6):
        for a in enumerate_aut_fixed(Ambient("free", g, 1)):
            b = free_x_z(g, a)
            assert fix_subgroup(b.endo).iso == a
            assert verify_automorphism(b.endo, b.inverse)


def test_a_ell_matrix():
    assert a_ell_matrix(2, 3) == IntMatrix.from_rows([[4, 3], [1, 1]])
    assert a_ell_matrix(4, 2) == IntMatrix.from_rows([[3, 2, 2, 2], [1, 1, 0, 0], [1, 1, 1, 0], [1, 1, 1, 1]])
    for ell in range(2, 7):
        for m in range(1, 5):
            A = a_ell_matrix(ell, m)
            assert determinant(A) == 1
            assert fixed_lattice(A)[0] == 0
    with pytest.raises(ValueError):
        a_ell_matrix(1, 1)


def test_surface_endo_examples():
    assert fix_subgroup(surface_endo(2, 3, 2, 1).endo).iso == surface(3, 1)
    assert fix_subgroup(surface_endo(2, 3, 2, 1, PHI1).endo).iso == free(3, 1)
    E = surface_endo(2, 2, 3, 1).endo
    assert E.L == IntMatrix.from_rows([[1, 3], [0, 1]])
    assert fix_subgroup(E).iso == surface(4, 1)
    with pytest.raises(ValueError):
        surface_endo(2, 2, 1, 2)


@pytest.mark.parametrize("g", [2, 3, 4])
def test_phi1_is_an_automorphism_fixing_first_handle(g):
    n = 2 * g
    imgs, inv = phi1_images(g), phi1_inverse_images(g)
    assert apply_map(imgs, relator(g)) == relator(g)
    assert apply_map(inv, relator(g)) == relator(g)
    for x, y in zip(compose_maps(imgs, inv), identity_images(n)):
        assert surface_equal(x, y)
    for x, y in zip(compose_maps(inv, imgs), identity_images(n)):
        assert surface_equal(x, y)
    assert imgs[0] == identity_images(n)[0] and imgs[1] == identity_images(n)[1]
    assert not any(surface_equal(imgs[i], identity_images(n)[i]) for i in range(2, n))


@pytest.mark.parametrize("g", [2, 3])
def test_surface_psi(g):
    b = surface_psi(g)
    E = b.endo
    n = 2 * g
    gens = identity_images(n)
    assert len(E.alpha.fix) == 2 * g - 1
    for x in E.alpha.fix:
        assert surface_equal(apply_map(E.alpha.images, x), x)
    bg = gens[n - 1]
    assert not surface_equal(apply_map(E.alpha.images, bg), bg)
    assert E.alpha.images[n - 1] == bg * gens[n - 2]
    assert b.expected == free(2 * g - 1)
    assert verify_automorphism(E, b.inverse)


def test_surface_x_z():
    assert fix_subgroup(surface_x_z(2, surface(3)).endo).iso == surface(3)
    with pytest.raises(ValueError):
        surface_x_z(2, free(4, 1))
    with pytest.raises(LookupError):
        surface_x_z(2, abelian(2))


@pytest.mark.parametrize("kind", ["free", "surface"])
def test_rank_witness(kind):
    A = Ambient(kind, 2, 2)
    for n in range(13):
        b = rank_witness(A, n)
        d = fix_subgroup(b.endo)
        assert rank_of(d.iso) == n
        assert verify_automorphism(b.endo, b.inverse)
    b = rank_witness(A, math.inf)
    assert rank_of(fix_subgroup(b.endo).iso) == math.inf


def test_rank_witness_examples():
    assert rank_witness(Ambient("free", 2, 2), 0).endo.L == IntMatrix.diagonal([-1, -1])
    assert fix_subgroup(rank_witness(Ambient("free", 2, 2), 5).endo).iso == free(5)
    with pytest.raises(ValueError):
        rank_witness(Ambient("free", 2, 1), 3)


@pytest.mark.parametrize("A", [Ambient("free", 2, 0), Ambient("free", 3, 1), Ambient("free", 2, 2),
                               Ambient("surface", 2, 0), Ambient("surface", 2, 1), Ambient("surface", 2, 2),
                               Ambient("surface", 3, 3)])
def test_classification_witnesses_realize_types(A):
    types = enumerate_aut_fixed(A, 7) if A.k >= 2 else enumerate_aut_fixed(A)
    covered = 0
    for a in types:
        v = is_aut_fixed(A, a)
        b = witness_for(A, a)
        assert (b is None) == (v.witness is None)
        if b is None:
            continue
        covered += 1
        assert b.endo.ambient == A
        assert fix_subgroup(b.endo).iso == a
        assert verify_automorphism(b.endo, b.inverse)
    assert covered >= len(types) - 4


def test_free_ambients_are_fully_covered():
    for g in (2, 3):
        for k in (0, 1, 2, 3):
            A = Ambient("free", g, k)
            types = enumerate_aut_fixed(A, 8) if k >= 2 else enumerate_aut_fixed(A)
            assert all(is_aut_fixed(A, a).witness for a in types)


def test_registry():
    assert set(RECIPES) >= {"inversion", "phi_t", "psi_t", "endo_m", "aleph", "free_x_z", "surface_endo",
                            "surface_psi", "rank_witness", PHI1, IDENTITY}
    assert get_recipe("phi_t").params == ("g", "t")
    with pytest.raises(KeyError):
        get_recipe("nope")
    assert all(r.grid for r in RECIPES.values())


def test_gamma_well_defined_on_surface_catalog():
    for rid, params in ALL_CASES:
        E = RECIPES[rid].build(**params).endo
        if E.ambient.is_surface:
            assert E.gamma(relator(E.ambient.g)) == (0,) * E.ambient.k
            x = element(E.ambient, relator(E.ambient.g))
            assert words_equal(E.ambient, eval_endo(E, x).u, x.u)


@pytest.mark.parametrize("block", [[1], [-1], [1, -1]])
def test_direct_sum_multiplies_fixed_types(block):
    from autfix.endo import direct_sum, direct_sum_inverse
    extra = IntMatrix.diagonal(block)
    plus = block.count(1)
    for rid, params in ALL_CASES[::7]:
        b = RECIPES[rid].build(**params)
        E = direct_sum(b.endo, extra)
        assert fix_subgroup(E).iso == fix_subgroup(b.endo).iso.times_z(plus)
        if b.inverse is not None:
            assert verify_automorphism(E, direct_sum_inverse(b.inverse, extra))
