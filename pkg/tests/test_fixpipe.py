import pytest
import sympy

from autfix.classify import Ambient, abelian, free, free_inf, format_iso, rank_of, surface
from autfix.constructions import (
    PHI1, aleph, endo_m, inversion, phi_t, psi_t, surface_aleph, surface_endo, surface_rotation,
)
from autfix.endo import AlphaSpec, GroupElement, StdEndo, elements_equal, eval_endo, identity_endo
from autfix.fixpipe import (
    FINITE_INDEX, FULL, INFINITE, TRIVIAL, brute_fixed_elements, fix_subgroup, fixed_lattice, index_bound_check,
    oracle_check, projected_fix,
)
from autfix.intlat import IntMatrix
from autfix.stallings import GraphSizeError, graph_rank
from autfix.words import identity_images, parse_word


def w(text, rank=2):
    return parse_word(text, rank)


def test_fixed_lattice_examples():
    assert fixed_lattice(IntMatrix.identity(3))[0] == 3
    for t in range(2, 9):
        assert fixed_lattice(IntMatrix.from_rows([[t, t - 1], [1, 1]])) == (0, [])
        s, basis = fixed_lattice(IntMatrix.from_rows([[1, t - 1], [0, 1]]))
        assert s == 1 and basis[0] in ((1, 0), (-1, 0))
    assert fixed_lattice(IntMatrix.zeros(0, 0)) == (0, [])


def test_fixed_lattice_rank_against_sympy(rng):
    for _ in range(100):
        k = rng.randint(1, 4)
        L = IntMatrix.from_rows([[rng.randint(-2, 2) for _ in range(k)] for _ in range(k)])
        if rng.random() < 0.5:
            L = IntMatrix.identity(k)
        s, basis = fixed_lattice(L)
        M = sympy.Matrix(L.entries) - sympy.eye(k)
        assert s == len(M.nullspace())
        for v in basis:
            assert L.apply(v) == v


def test_projected_phi_t():
    E = phi_t(2, 3).endo
    part = projected_fix(E.alpha, E.Gamma, E.L, E.ambient)
    assert part.tag == FINITE_INDEX and part.index == 2
    assert part.iso == free(3) and graph_rank(part.graph) == 3
    assert part.contains(w("a1 a1")) and not part.contains(w("a1"))


def test_projected_aleph_is_infinitely_generated():
    E = aleph(2).endo
    part = projected_fix(E.alpha, E.Gamma, E.L, E.ambient)
    assert part.tag == INFINITE and part.index is None and part.iso == free_inf()
    stream = part.conjugate_stream()
    first = [next(stream) for _ in range(5)]
    assert first == [w("a2"), w("a1 a2 A1"), w("A1 a2 a1"), w("a1 a1 a2 A1 A1"), w("A1 A1 a2 a1 a1")]


def test_projected_gamma_zero_is_full():
    amb = Ambient("free", 3, 2)
    E = identity_endo(amb)
    part = projected_fix(E.alpha, E.Gamma, E.L, amb)
    assert part.tag == FULL and part.index == 1


def test_rank_one_container_with_infinite_obstruction_is_trivial():
    base = inversion(2, 1).endo
    amb = Ambient("free", 2, 1)
    E = StdEndo(amb, base.alpha, IntMatrix.from_rows([[1, 0]]), IntMatrix.identity(1))
    d = fix_subgroup(E)
    assert d.projected.tag == TRIVIAL and d.projected.note
    assert d.iso == abelian(1)
    # brute force agrees: a1^n is never fixed with any v when n != 0
    assert all(x.u.is_identity() for x in brute_fixed_elements(E, 5))


@pytest.mark.parametrize("g", [2, 3, 4])
@pytest.mark.parametrize("t", [2, 3, 5, 8])
def test_fix_phi_psi(g, t):
    d = fix_subgroup(phi_t(g, t).endo)
    assert d.iso == free(t) and d.s == 0
    assert d.projected.index == t - 1
    assert d.projected.tag == (FULL if t == 2 else FINITE_INDEX)
    d = fix_subgroup(psi_t(g, t).endo)
    assert d.iso == free(t, 1) and d.s == 1


def test_fix_endo_m():
    assert fix_subgroup(endo_m(2, 3).endo).iso == free(4)


def test_fix_surface_endo():
    d = fix_subgroup(surface_endo(2, 3, 2, 1).endo)
    assert d.iso == surface(3, 1) and d.projected.index == 2
    d = fix_subgroup(surface_endo(2, 3, 2, 1, PHI1).endo)
    assert d.iso == free(3, 1)


def test_witnesses_are_fixed_and_lifted_canonically():
    d = fix_subgroup(phi_t(2, 2).endo)
    amb = d.endo.ambient
    for x in d.witnesses:
        assert elements_equal(amb, eval_endo(d.endo, x), x)
    assert d.lift(w("a1")) == (0, -1)


def test_split_consistency_over_catalog():
    cases = [phi_t(3, 4), psi_t(2, 3), endo_m(3, 2), aleph(2), surface_endo(2, 2, 2, 0), surface_aleph(2),
             surface_rotation(2)]
    for b in cases:
        d = fix_subgroup(b.endo)
        assert d.iso == d.projected.iso.times_z(d.s)
        assert d.iso == b.expected
        if d.projected.tag == FINITE_INDEX and d.projected.graph is not None:
            m, r = d.projected.index, d.projected.container_rank
            assert graph_rank(d.projected.graph) == m * (r - 1) + 1


def test_identity_L_keeps_whole_lattice():
    amb = Ambient("free", 2, 3)
    d = fix_subgroup(identity_endo(amb))
    assert d.s == 3 and d.iso == free(2, 3)


def test_mixed_rank_case():
    # I - L = diag(0, 2): cokernel Z + Z/2, a1 hits only the torsion
    amb = Ambient("free", 2, 2)
    E = StdEndo(amb, AlphaSpec(identity_images(2)), IntMatrix.from_rows([[0, 0], [1, 0]]),
                IntMatrix.diagonal([1, -1]))
    d = fix_subgroup(E)
    assert d.s == 1 and d.projected.index == 2 and d.iso == free(3, 1)
    rep = oracle_check(E, d, 5)
    assert rep.agree, rep.discrepancies


def test_brute_examples():
    amb = Ambient("free", 2, 1)
    found = brute_fixed_elements(identity_endo(amb), 2)
    assert len(found) == 1 + 4 + 12
    E2 = phi_t(2, 2).endo
    by_word = {x.u: x.v for x in brute_fixed_elements(E2, 2)}
    assert by_word[w("a1")] == (0, -1)
    E3 = phi_t(2, 3).endo
    by_word = {x.u: x.v for x in brute_fixed_elements(E3, 2)}
    assert w("a1") not in by_word and w("a1 a1") in by_word


def test_brute_elements_are_fixed(rng):
    for b in (phi_t(2, 4), psi_t(2, 3), aleph(2), endo_m(2, 2)):
        for x in brute_fixed_elements(b.endo, 4):
            assert elements_equal(b.endo.ambient, eval_endo(b.endo, x), x)


def test_contains_respects_lattice_cosets(rng):
    E = psi_t(2, 3).endo
    d = fix_subgroup(E)
    for x in brute_fixed_elements(E, 3):
        n = rng.randint(-5, 5)
        shifted = GroupElement(x.u, (x.v[0] + n, x.v[1]))
        assert d.contains(shifted)
        assert not d.contains(GroupElement(x.u, (x.v[0], x.v[1] + 1)))


@pytest.mark.parametrize("builder", [lambda: phi_t(2, 3), lambda: psi_t(2, 4), lambda: endo_m(2, 2),
                                     lambda: aleph(2), lambda: inversion(3, 1)])
def test_oracle_agreement_free(builder):
    b = builder()
    d = fix_subgroup(b.endo)
    rep = oracle_check(b.endo, d, 5)
    assert rep.agree, rep.discrepancies
    assert rep.summary().startswith("oracle: agree")


def test_oracle_agreement_surface():
    for b in (surface_endo(2, 2, 2, 0), surface_endo(2, 2, 1, 1, PHI1), surface_aleph(2)):
        rep = oracle_check(b.endo, fix_subgroup(b.endo), 4)
        assert rep.agree, rep.discrepancies


def test_index_bound():
    for t in range(2, 8):
        E = phi_t(2, t).endo
        d = fix_subgroup(E)
        assert d.projected.index == t - 1 <= (t - 1) ** 2
        assert index_bound_check(E, d)
    E = identity_endo(Ambient("free", 2, 1))
    assert index_bound_check(E, fix_subgroup(E))


def test_coset_guard_reports_index():
    E = phi_t(2, 50).endo
    with pytest.raises(GraphSizeError) as err:
        fix_subgroup(E, max_vertices=10)
    assert err.value.order == 49


def test_json_output():
    d = fix_subgroup(phi_t(2, 5).endo)
    out = d.to_json()
    assert out["s"] == 0 and out["iso"] == "F_5"
    assert out["projected"] == {"tag": FINITE_INDEX, "index": 4, "rank": 5}
    assert all(isinstance(x[0], str) and isinstance(x[1], list) for x in out["witnesses"])
    inf = fix_subgroup(aleph(2).endo).to_json()
    assert inf["iso"] == format_iso(free_inf(1)) and inf["projected"]["rank"] is None
    assert rank_of(free_inf(1)) == float("inf")
