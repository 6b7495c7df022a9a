import pytest

from autfix.classify import abelian, free_inf, surface
from autfix.surface import (
    a, b, exponent_vector, finite_index_subgroup_type, infinite_index_normal_type, is_trivial, relator, splice,
    surface_equal,
)
from autfix.words import commutator, conjugate, identity, invert, multiply, parse_word, reduce

from conftest import random_word


def sw(text, g=2):
    return parse_word(text, 2 * g, surface=True)


def test_relator():
    assert relator(2) == sw("a1 b1 A1 B1 a2 b2 A2 B2")
    for g in range(2, 7):
        r = relator(g)
        assert len(r) == 4 * g
        assert exponent_vector(r) == (0,) * (2 * g)
        assert is_trivial(r) and is_trivial(invert(r))
    with pytest.raises(ValueError):
        relator(1)


def test_is_trivial_small_cases():
    assert is_trivial(identity(4))
    assert not is_trivial(sw("a1"))
    assert not is_trivial(commutator(sw("a1"), sw("b1")))
    assert not is_trivial(commutator(sw("a1"), sw("a2")))
    with pytest.raises(ValueError):
        is_trivial(parse_word("a1", 3))


@pytest.mark.parametrize("g", [2, 3])
def test_conjugates_of_relator_are_trivial(rng, g):
    r = relator(g)
    for _ in range(100):
        u = random_word(rng, 2 * g, rng.randint(0, 12))
        assert is_trivial(conjugate(r, u))
        assert is_trivial(conjugate(invert(r), u))


@pytest.mark.parametrize("g", [2, 3])
def test_products_of_relator_conjugates_are_trivial(rng, g):
    r = relator(g)
    for _ in range(100):
        w = identity(2 * g)
        for _ in range(rng.randint(1, 3)):
            piece = r if rng.random() < 0.5 else invert(r)
            w = multiply(w, conjugate(piece, random_word(rng, 2 * g, rng.randint(0, 6))))
        assert is_trivial(w)


def test_nonzero_exponent_words_are_nontrivial(rng):
    hits = 0
    while hits < 100:
        u = random_word(rng, 4, rng.randint(1, 20))
        if any(exponent_vector(u)):
            hits += 1
            assert not is_trivial(u)


def test_positive_answers_have_zero_exponents(rng):
    for _ in range(300):
        u = random_word(rng, 4, rng.randint(0, 16))
        if is_trivial(u):
            assert exponent_vector(u) == (0, 0, 0, 0)


def test_short_nontrivial_commutators(rng):
    # a freely reduced word shorter than half the relator cannot be trivial unless empty
    for _ in range(200):
        u = random_word(rng, 4, rng.randint(1, 4))
        assert is_trivial(u) == u.is_identity()


def test_surface_equal_examples():
    w = sw("a1 b2 A2")
    assert surface_equal(w, w)
    assert surface_equal(multiply(relator(2), sw("a1")), sw("a1"))
    assert not surface_equal(sw("a1"), sw("b1"))
    # rotating the relator changes the word but not the element
    assert surface_equal(sw("b1 A1 B1 a2 b2 A2 B2"), sw("A1"))
    with pytest.raises(ValueError):
        surface_equal(sw("a1"), sw("a1", 3))


def test_surface_equal_is_an_equivalence(rng):
    r = relator(2)
    for _ in range(100):
        u = random_word(rng, 4, rng.randint(0, 8))
        v = splice(u, r if rng.random() < 0.5 else invert(r), rng.randint(0, len(u)))
        w = splice(v, conjugate(r, random_word(rng, 4, 3)), rng.randint(0, len(v)))
        assert surface_equal(u, u)
        assert surface_equal(u, v) and surface_equal(v, u)
        assert surface_equal(v, w) and surface_equal(u, w)
        x = random_word(rng, 4, rng.randint(1, 8))
        assert surface_equal(u, x) == surface_equal(x, u)


def test_splice_preserves_exponent_vector(rng):
    for g in (2, 3):
        r = relator(g)
        for _ in range(200):
            w = random_word(rng, 2 * g, rng.randint(0, 15))
            pos = rng.randint(0, len(w))
            out = splice(w, r, pos)
            assert exponent_vector(out) == exponent_vector(w)
            assert surface_equal(out, w)


def test_generators():
    assert a(1, 2) == sw("a1") and b(2, 2) == sw("b2")
    assert relator(3) == reduce(commutator(a(1, 3), b(1, 3)).letters + commutator(a(2, 3), b(2, 3)).letters
                                + commutator(a(3, 3), b(3, 3)).letters, 6)


def test_finite_index_formula():
    assert finite_index_subgroup_type(2, 1) == surface(2)
    assert finite_index_subgroup_type(2, 3) == surface(4)
    assert finite_index_subgroup_type(3, 2) == surface(5)
    for g in range(2, 6):
        for m in range(1, 6):
            r = finite_index_subgroup_type(g, m).n
            assert 2 - 2 * r == m * (2 - 2 * g)
    with pytest.raises(ValueError):
        finite_index_subgroup_type(2, 0)
    with pytest.raises(ValueError):
        finite_index_subgroup_type(1, 2)


def test_infinite_index_normal_type():
    assert infinite_index_normal_type(True, True) == free_inf()
    assert infinite_index_normal_type(True, False) == abelian(0)
    assert infinite_index_normal_type(False, False) == abelian(0)
    with pytest.raises(ValueError):
        infinite_index_normal_type(False, True)
