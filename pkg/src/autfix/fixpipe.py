"""Fixed subgroups of standard-form endomorphisms.

For ``phi(u, v) = (alpha(u), Gamma ab(u) + L v)`` the fixed subgroup splits as
``P x Z^s`` where ``Z^s = ker(L - I)`` and ``P`` is the set of ``u`` in
Fix(alpha) for which ``(I - L) v = Gamma ab(u)`` has an integer solution.
Solvability is the vanishing of ``Gamma ab(u)`` in the cokernel of
``I - L``, so ``P`` is the kernel of a homomorphism ``h`` from Fix(alpha) to a
finitely generated abelian group, and its type follows from the image of ``h``.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterator, Optional

from . import stallings, surface
from .classify import Ambient, IsoType, abelian, format_iso, free, free_inf, normalize_iso, rank_of
from .endo import (
    BudgetExceeded, ContainerMembership, GroupElement, StdEndo, container_generators,
    count_reduced_words, eval_endo, elements_equal, reduced_words, validate_certificate, words_equal,
)
from .intlat import IntMatrix, cokernel, determinant, kernel_basis, solve_integer, smith_normal_form
from .words import Word, abelianize, apply_map, commutator, conjugate, format_word, identity, power

log = logging.getLogger(__name__)

FULL = "full"
FINITE_INDEX = "finite_index"
INFINITE = "infinitely_generated"
TRIVIAL = "trivial"

DEFAULT_MAX_LEN = 8
DEFAULT_BUDGET = 2_000_000


def fixed_lattice(L: IntMatrix) -> tuple[int, list[tuple[int, ...]]]:
    """``(s, basis)`` for ``ker(L - I)``."""
    if not L.is_square():
        raise ValueError("L must be square")
    basis = kernel_basis(L - IntMatrix.identity(L.rows))
    return len(basis), basis


class _Obstruction:
    """``u -> Gamma ab(u)`` followed by projection to ``coker(I - L)``.

    Zero exactly when ``(I - L) v = Gamma ab(u)`` is solvable over Z.
    """

    def __init__(self, Gamma: IntMatrix, L: IntMatrix):
        self.Gamma = Gamma
        self.M = IntMatrix.identity(L.rows) - L
        self.coker = cokernel(self.M)
        self.ntors = len(self.coker.torsion)

    def __call__(self, u: Word) -> tuple[int, ...]:
        return self.coker.project(self.Gamma.apply(abelianize(u)))

    def is_zero(self, u: Word) -> bool:
        return not any(self(u))

    def has_infinite_order(self, u: Word) -> bool:
        return any(self(u)[self.ntors:])


@dataclass
class ProjectedPart:
    """The image of Fix(phi) in the non-abelian factor.

    ``index`` is the index in the certified container (``None`` if
    infinite).  ``basis`` lists ambient words generating the part: a free
    basis for free containers, a generating set for surface ones; empty when
    infinitely generated.
    """

    tag: str
    ambient: Ambient
    container: tuple[Word, ...]
    container_is_whole: bool
    iso: IsoType
    index: Optional[int]
    basis: tuple[Word, ...] = ()
    coset_graph: Optional[stallings.SubgroupGraph] = None
    graph: Optional[stallings.SubgroupGraph] = None
    note: str = ""
    _h: Optional[_Obstruction] = field(default=None, repr=False)
    _in_container: Optional[ContainerMembership] = field(default=None, repr=False)

    @property
    def container_rank(self) -> int:
        return len(self.container)

    def contains(self, u: Word) -> bool:
        """Membership of an ambient word."""
        if self.tag == TRIVIAL:
            return surface.is_trivial(u) if self.ambient.is_surface else u.is_identity()
        if self.graph is not None:
            return stallings.member(self.graph, u)
        return self._in_container(u) and self._h.is_zero(u)

    def conjugate_stream(self) -> Iterator[Word]:
        """Kernel elements ``x^n w x^-n`` for ``n = 0, 1, -1, 2, -2, ...``.

        ``x`` is the first container generator with infinite-order obstruction,
        ``w`` the first one with zero obstruction (else a commutator).
        """
        if self.tag != INFINITE:
            raise ValueError("only infinitely generated parts carry a stream")
        gens = self.container
        x = next(c for c in gens if self._h.has_infinite_order(c))
        w = next((c for c in gens if self._h.is_zero(c)), None)
        if w is None:
            other = next(c for c in gens if c != x)
            w = commutator(x, other)
        n = 0
        while True:
            yield conjugate(w, power(x, n))
            n = -n if n > 0 else -n + 1

    def to_json(self) -> dict:
        rank = rank_of(self.iso)
        return {"tag": self.tag, "index": self.index, "rank": None if rank == float("inf") else rank}


def projected_fix(cert, Gamma: IntMatrix, L: IntMatrix, ambient: Ambient,
                  max_vertices: int = stallings.DEFAULT_MAX_VERTICES) -> ProjectedPart:
    """Structure of the projected part; ``cert`` is an :class:`~autfix.endo.AlphaSpec`."""
    gens = container_generators(cert, ambient)
    whole = cert.is_whole
    n = ambient.word_rank
    h = _Obstruction(Gamma, L)
    contains = ContainerMembership(cert, ambient)
    surface_whole = ambient.is_surface and whole
    r = len(gens)
    common = dict(ambient=ambient, container=tuple(gens), container_is_whole=whole, _h=h,
                  _in_container=contains)

    def container_iso():
        if surface_whole:
            return normalize_iso("surface", ambient.g)
        return free(r)

    if r == 0:
        return ProjectedPart(TRIVIAL, iso=abelian(0), index=1, **common)
    images = [h(c) for c in gens]
    if not any(any(x) for x in images):
        graph = None if ambient.is_surface else contains.graph
        return ProjectedPart(FULL, iso=container_iso(), index=1, basis=tuple(gens), graph=graph, **common)
    if any(any(x[h.ntors:]) for x in images):
        if r == 1:
            return ProjectedPart(TRIVIAL, iso=abelian(0), index=None, note=(
                "rank one container with infinite-order obstruction: h is injective, part is trivial"), **common)
        return ProjectedPart(INFINITE, iso=free_inf(), index=None, **common)

    group = stallings.FiniteAbelianGroup(h.coker.torsion)
    coset = stallings.schreier_kernel_graph(r, [x[:h.ntors] for x in images], group, max_vertices)
    m = coset.num_vertices
    local_basis = stallings.basis_of(coset)
    basis = tuple(apply_map(gens, w) for w in local_basis)
    if surface_whole:
        iso = surface.finite_index_subgroup_type(ambient.g, m)
        return ProjectedPart(FINITE_INDEX, iso=iso, index=m, basis=basis, coset_graph=coset, **common)
    iso = free(m * (r - 1) + 1)
    graph = None
    if not ambient.is_surface:
        graph = stallings.graph_from_basis(list(basis), n)
        if stallings.graph_rank(graph) != m * (r - 1) + 1:
            raise AssertionError("kernel basis does not have the Schreier rank")
    return ProjectedPart(FINITE_INDEX, iso=iso, index=m, basis=basis, coset_graph=coset, graph=graph, **common)


@dataclass
class FixDescription:
    endo: StdEndo
    s: int
    lattice: list[tuple[int, ...]]
    projected: ProjectedPart
    iso: IsoType
    witnesses: list[GroupElement]

    def lift(self, u: Word) -> Optional[tuple[int, ...]]:
        """Canonical ``v`` with ``(u, v)`` fixed, or ``None``."""
        E = self.endo
        M = IntMatrix.identity(E.ambient.k) - E.L
        return solve_integer(M, E.gamma(u))

    def stream(self, count: int) -> list[GroupElement]:
        """First ``count`` stream witnesses of an infinitely generated part."""
        out = []
        for u in self.projected.conjugate_stream():
            if len(out) == count:
                break
            out.append(GroupElement(u, self.lift(u)))
        return out

    def contains(self, x: GroupElement) -> bool:
        """Membership via the projected part and the fixed lattice."""
        if not self.projected.contains(x.u):
            return False
        v0 = self.lift(x.u)
        if v0 is None:
            return False
        diff = tuple(a - b for a, b in zip(x.v, v0))
        if not self.lattice:
            return not any(diff)
        B = IntMatrix.from_columns(self.lattice, self.endo.ambient.k)
        return solve_integer(B, diff) is not None

    def to_json(self, witnesses: Optional[int] = None) -> dict:
        surf = self.endo.ambient.is_surface
        ws = self.witnesses if witnesses is None else self.witnesses[:witnesses]
        return {
            "s": self.s,
            "projected": self.projected.to_json(),
            "iso": format_iso(self.iso),
            "witnesses": [[format_word(w.u, surf), list(w.v)] for w in ws],
        }


def fix_subgroup(E: StdEndo, stream_witnesses: int = 5,
                 max_vertices: int = stallings.DEFAULT_MAX_VERTICES) -> FixDescription:
    validate_certificate(E.alpha, E.ambient)
    s, lattice = fixed_lattice(E.L)
    part = projected_fix(E.alpha, E.Gamma, E.L, E.ambient, max_vertices)
    iso = normalize_iso(part.iso.kind, part.iso.n, part.iso.s + s)
    desc = FixDescription(E, s, lattice, part, iso, [])
    n = E.ambient.word_rank
    for u in part.basis:
        v = desc.lift(u)
        if v is None:
            raise AssertionError(f"projected generator {format_word(u)} has no lift")
        desc.witnesses.append(GroupElement(u, v))
    if part.tag == INFINITE:
        desc.witnesses.extend(desc.stream(stream_witnesses))
    for b in lattice:
        desc.witnesses.append(GroupElement(identity(n), tuple(b)))
    for x in desc.witnesses:
        if not elements_equal(E.ambient, eval_endo(E, x), x):
            raise AssertionError(f"witness {format_word(x.u)} {x.v} is not fixed")
    return desc


def index_bound_check(E: StdEndo, desc: FixDescription) -> bool:
    """Finite-index part obeys ``index <= |d|^r`` (``r`` the container rank).

    ``d = det(L - I)`` when nonzero.  Otherwise ``d`` is the exponent of the
    torsion of ``coker(I - L)``: a finite image of ``h`` lies in the torsion,
    so ``h(u^d) = 0`` for every container element and the same counting
    applies.
    """
    part = desc.projected
    if part.index is None:
        return False
    if part.index == 1:
        return True
    d = determinant(E.L - IntMatrix.identity(E.L.rows))
    if d == 0:
        torsion = part._h.coker.torsion
        if not torsion:
            return False
        d = torsion[-1]
    return part.index <= abs(d) ** part.container_rank


# -- brute force oracle ------------------------------------------------------------

def _alpha_fixes(E: StdEndo, u: Word) -> bool:
    w = apply_map(E.alpha.images, u)
    if not E.ambient.is_surface:
        return w == u
    if abelianize(w) != abelianize(u):
        return False
    return words_equal(E.ambient, w, u)


def brute_fixed_words(E: StdEndo, max_len: int, budget: int = DEFAULT_BUDGET) -> Iterator[Word]:
    """Reduced words of length <= ``max_len`` fixed by alpha, shortlex order."""
    n = E.ambient.word_rank
    need = count_reduced_words(n, max_len)
    if need > budget:
        raise BudgetExceeded(need, budget)
    for u in reduced_words(n, max_len):
        if _alpha_fixes(E, u):
            yield u


def brute_fixed_elements(E: StdEndo, max_len: int = DEFAULT_MAX_LEN,
                         budget: int = DEFAULT_BUDGET) -> list[GroupElement]:
    """Every ``(u, v)`` with ``|u| <= max_len`` fixed by ``E``, one ``v`` per ``u``.

    The full solution set for a given ``u`` is ``v + ker(L - I)``.
    """
    M = IntMatrix.identity(E.ambient.k) - E.L
    snf = smith_normal_form(M)
    out = []
    for u in brute_fixed_words(E, max_len, budget):
        v = solve_integer(M, E.gamma(u), snf)
        if v is not None:
            out.append(GroupElement(u, v))
    return out


@dataclass
class OracleReport:
    max_len: int
    words_fixed_by_alpha: int = 0
    fixed_elements: int = 0
    witnesses_checked: int = 0
    discrepancies: list = field(default_factory=list)

    @property
    def agree(self) -> bool:
        return not self.discrepancies

    def summary(self) -> str:
        verdict = "agree" if self.agree else f"DISAGREE ({len(self.discrepancies)} discrepancies)"
        return f"oracle: {verdict} ({self.words_fixed_by_alpha} words checked, length <= {self.max_len})"


def oracle_check(E: StdEndo, desc: FixDescription, max_len: int,
                 budget: int = DEFAULT_BUDGET) -> OracleReport:
    """Compare the pipeline's description with brute-force enumeration.

    For every alpha-fixed word ``u`` the pipeline's membership verdict must
    match solvability found by enumeration; each solution is checked fixed by
    direct evaluation and against the lattice; each witness is checked fixed.
    """
    rep = OracleReport(max_len)
    M = IntMatrix.identity(E.ambient.k) - E.L
    snf = smith_normal_form(M)
    surf = E.ambient.is_surface
    for u in brute_fixed_words(E, max_len, budget):
        rep.words_fixed_by_alpha += 1
        v = solve_integer(M, E.gamma(u), snf)
        says = desc.projected.contains(u)
        if v is None:
            if says:
                rep.discrepancies.append(("pipeline accepts unsolvable word", format_word(u, surf)))
            continue
        rep.fixed_elements += 1
        x = GroupElement(u, v)
        if not elements_equal(E.ambient, eval_endo(E, x), x):
            rep.discrepancies.append(("oracle element not fixed", format_word(u, surf)))
        if not says or not desc.contains(x):
            rep.discrepancies.append(("fixed element missing from description", format_word(u, surf), v))
    for x in desc.witnesses:
        rep.witnesses_checked += 1
        if not elements_equal(E.ambient, eval_endo(E, x), x):
            rep.discrepancies.append(("witness not fixed", format_word(x.u, surf), x.v))
    return rep
