import itertools

import pytest

from autfix.stallings import (
    FiniteAbelianGroup, GraphSizeError, basis_of, graph_from_basis, graph_rank, index_of, member,
    schreier_kernel_graph,
)
from autfix.words import Word, identity, invert, multiply, parse_word

from conftest import random_word


def w(text, rank=2):
    return parse_word(text, rank)


def all_words(rank, max_len):
    """Every reduced word of length <= max_len."""
    layer = [()]
    out = [()]
    for _ in range(max_len):
        nxt = []
        for u in layer:
            for x in range(-rank, rank + 1):
                if x and not (u and u[-1] == -x):
                    nxt.append(u + (x,))
        out += nxt
        layer = nxt
    return [Word(u, rank) for u in out]


def closure(gens, rank, cap):
    """Subgroup elements reachable by products whose partial results have at most ``cap`` letters."""
    steps = [g for g in gens if not g.is_identity()]
    steps += [invert(g) for g in steps]
    seen = {identity(rank)}
    frontier = [identity(rank)]
    while frontier:
        nxt = []
        for u in frontier:
            for s in steps:
                v = multiply(u, s)
                if len(v) <= cap and v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return seen


def test_single_loop_and_whole_group():
    g = graph_from_basis([w("a1")], 2)
    assert g.num_vertices == 1 and g.edges() == [(0, 1, 0)]
    whole = graph_from_basis([w("a1"), w("a2")], 2)
    assert whole.num_vertices == 1 and graph_rank(whole) == 2
    assert index_of(whole) == 1
    assert basis_of(whole) == [w("a1"), w("a2")]
    assert index_of(g) is None


def test_two_vertex_example_against_closure():
    gens = [w("a1 a1"), w("a1 a2 A1")]
    g = graph_from_basis(gens, 2)
    assert g.num_vertices == 2
    assert not member(g, w("a2"))
    assert member(g, w("a1 a2 A1"))
    inside = closure(gens, 2, 8)
    for u in all_words(2, 4):
        assert member(g, u) == (u in inside), u


def test_member_trivial_cases():
    g = graph_from_basis([w("a1 a1")], 2)
    assert member(g, identity(2))
    assert not member(g, w("a1"))
    with pytest.raises(ValueError):
        member(g, parse_word("a1", 3))
    with pytest.raises(ValueError):
        graph_from_basis([parse_word("a1", 3)], 2)


def test_trivial_subgroup_graph():
    g = graph_from_basis([], 2)
    assert g.num_vertices == 1 and g.num_edges == 0
    assert graph_rank(g) == 0 and basis_of(g) == []
    assert graph_from_basis([identity(2)], 2) == g


@pytest.mark.parametrize("rank", [2, 3])
def test_member_agrees_with_closure_oracle(rng, rank):
    max_len, cap = {2: (6, 9), 3: (5, 8)}[rank]
    candidates = all_words(rank, max_len)
    for _ in range(15):
        gens = [random_word(rng, rank, rng.randint(1, 4)) for _ in range(rng.randint(1, 3))]
        g = graph_from_basis(gens, rank)
        inside = closure(gens, rank, cap)
        for u in candidates:
            assert member(g, u) == (u in inside), (gens, u)


def test_folding_is_order_independent(rng):
    for _ in range(50):
        gens = [random_word(rng, 3, rng.randint(1, 6)) for _ in range(rng.randint(1, 4))]
        base = graph_from_basis(gens, 3)
        for perm in itertools.permutations(gens):
            assert graph_from_basis(list(perm), 3) == base
        # replacing a generator by its inverse or by a product with another one changes nothing
        alt = [invert(gens[0])] + gens[1:]
        assert graph_from_basis(alt, 3) == base
        if len(gens) > 1:
            alt = [multiply(gens[0], gens[1])] + gens[1:]
            assert graph_from_basis(alt, 3) == base


def test_graph_is_folded_core(rng):
    for _ in range(100):
        gens = [random_word(rng, 2, rng.randint(1, 7)) for _ in range(rng.randint(1, 3))]
        g = graph_from_basis(gens, 2)
        for v, adj in enumerate(g.out):
            for x, t in adj.items():
                assert g.out[t][-x] == v
            if v:
                assert len(adj) >= 2


def test_basis_round_trip(rng):
    short = all_words(2, 6)
    for _ in range(40):
        gens = [random_word(rng, 2, rng.randint(1, 6)) for _ in range(rng.randint(1, 3))]
        g = graph_from_basis(gens, 2)
        basis = basis_of(g)
        assert len(basis) == graph_rank(g)
        assert all(member(g, b) for b in basis)
        again = graph_from_basis(basis, 2)
        assert again == g
        assert graph_rank(again) == graph_rank(g)
        assert [member(again, u) for u in short] == [member(g, u) for u in short]


def test_schreier_examples():
    Z2, Z4 = FiniteAbelianGroup((2,)), FiniteAbelianGroup((4,))
    whole = schreier_kernel_graph(2, [(0,), (0,)], Z2)
    assert whole.num_vertices == 1 and graph_rank(whole) == 2
    g = schreier_kernel_graph(2, [(1,), (0,)], Z2)
    assert g.num_vertices == 2 and graph_rank(g) == 3 and index_of(g) == 2
    basis = basis_of(g)
    assert len(basis) == 3 and all(member(g, b) for b in basis)
    assert set(basis) == {w("a1 a1"), w("a2"), w("a1 a2 A1")}
    g4 = schreier_kernel_graph(2, [(1,), (0,)], Z4)
    assert g4.num_vertices == 4 and graph_rank(g4) == 5 and index_of(g4) == 4


def span(group, gens):
    seen = {group.zero}
    frontier = [group.zero]
    while frontier:
        frontier = [z for x in frontier for y in gens if (z := group.add(x, y)) not in seen and not seen.add(z)]
    return seen


def test_schreier_formula_random(rng):
    for _ in range(200):
        factors = tuple(rng.randint(2, 6) for _ in range(rng.randint(1, 3)))
        group = FiniteAbelianGroup(factors)
        rank = rng.randint(1, 4)
        images = [tuple(rng.randrange(d) for d in factors) for _ in range(rank)]
        g = schreier_kernel_graph(rank, images, group)
        m = index_of(g)
        assert m == g.num_vertices == group.subgroup_order(images) == len(span(group, images))
        assert graph_rank(g) == m * (rank - 1) + 1


def test_schreier_kernel_membership(rng):
    group = FiniteAbelianGroup((3, 2))
    images = [(1, 0), (2, 1), (0, 1)]
    g = schreier_kernel_graph(3, images, group)
    for _ in range(300):
        u = random_word(rng, 3, rng.randint(0, 10))
        img = group.zero
        for x in u.letters:
            y = images[abs(x) - 1]
            img = group.add(img, y if x > 0 else group.neg(y))
        assert member(g, u) == (img == group.zero)


def test_schreier_guard():
    big = FiniteAbelianGroup((10**4, 10**4))
    with pytest.raises(GraphSizeError):
        schreier_kernel_graph(2, [(1, 0), (0, 1)], big, max_vertices=10**5)
    # the image subgroup is small even though the group is big
    g = schreier_kernel_graph(2, [(5000, 0), (0, 0)], big, max_vertices=10)
    assert g.num_vertices == 2
    with pytest.raises(ValueError):
        FiniteAbelianGroup((1, 3))
