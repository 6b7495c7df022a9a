"""Groups ``F_g x Z^k`` and ``pi_1(S_g) x Z^k`` and their standard-form endomorphisms.

A standard-form endomorphism acts by ``(u, v) -> (alpha(u), Gamma ab(u) + L v)``
where ``alpha`` is given by generator images, ``ab`` is abelianization and
``Gamma`` (``k x word_rank``) and ``L`` (``k x k``) are integer matrices.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

from . import stallings, surface
from .classify import Ambient, IsoType, format_iso, parse_iso
from .intlat import IntMatrix, integer_inverse
from .words import (
    Word, abelianize, apply_map, compose_maps, format_word, identity, identity_images,
    letter_order, parse_token, parse_word, reduce,
)

WHOLE = "whole"


class CertificateError(ValueError):
    """A claimed fixed-subgroup certificate is wrong."""


@dataclass(frozen=True)
class GroupElement:
    u: Word
    v: tuple[int, ...]

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(self.u * other.u, tuple(a + b for a, b in zip(self.v, other.v)))

    def inverse(self) -> "GroupElement":
        return GroupElement(~self.u, tuple(-a for a in self.v))


@dataclass(frozen=True)
class AlphaSpec:
    """The non-abelian part: generator images plus a certificate for its fixed subgroup.

    ``fix`` is ``"whole"`` (alpha is the identity), a tuple of words that
    freely generate Fix(alpha), or ``None`` when no certificate is known.
    ``certified_complete`` records whether that list is known to generate all
    of Fix(alpha) rather than a subgroup of it.
    """

    images: tuple[Word, ...]
    fix: Union[str, tuple[Word, ...], None] = WHOLE
    certified_complete: bool = True

    @property
    def is_whole(self) -> bool:
        return self.fix == WHOLE


@dataclass(frozen=True)
class StdEndo:
    ambient: Ambient
    alpha: AlphaSpec
    Gamma: IntMatrix
    L: IntMatrix
    claims_automorphism: bool = True
    expected_iso: Optional[IsoType] = None
    name: str = ""

    def __post_init__(self):
        n, k = self.ambient.word_rank, self.ambient.k
        if len(self.alpha.images) != n or any(w.rank != n for w in self.alpha.images):
            raise ValueError(f"alpha needs {n} images of rank {n}")
        if self.Gamma.shape != (k, n):
            raise ValueError(f"Gamma must be {k}x{n}, got {self.Gamma.shape}")
        if self.L.shape != (k, k):
            raise ValueError(f"L must be {k}x{k}, got {self.L.shape}")

    def gamma(self, u: Word) -> tuple[int, ...]:
        return self.Gamma.apply(abelianize(u))

    def __call__(self, x: GroupElement) -> GroupElement:
        return eval_endo(self, x)


def element(ambient: Ambient, u: Union[Word, str] = "", v: Sequence[int] = ()) -> GroupElement:
    if isinstance(u, str):
        u = parse_word(u, ambient.word_rank, ambient.is_surface)
    v = tuple(v) if v else (0,) * ambient.k
    if u.rank != ambient.word_rank or len(v) != ambient.k:
        raise ValueError(f"element does not live in {ambient}")
    return GroupElement(u, v)


def words_equal(ambient: Ambient, u: Word, w: Word) -> bool:
    return surface.surface_equal(u, w) if ambient.is_surface else u == w


def elements_equal(ambient: Ambient, x: GroupElement, y: GroupElement) -> bool:
    return x.v == y.v and words_equal(ambient, x.u, y.u)


def eval_endo(E: StdEndo, x: GroupElement) -> GroupElement:
    n, k = E.ambient.word_rank, E.ambient.k
    if x.u.rank != n or len(x.v) != k:
        raise ValueError(f"element does not live in {E.ambient}")
    u = apply_map(E.alpha.images, x.u)
    Lv = E.L.apply(x.v)
    return GroupElement(u, tuple(a + b for a, b in zip(E.gamma(x.u), Lv)))


def abelianization_matrix(images: Sequence[Word]) -> IntMatrix:
    """Matrix of the map induced on ``Z^n``; column ``j`` is ``ab(images[j])``."""
    n = len(images)
    return IntMatrix.from_columns([abelianize(w) for w in images], n)


def identity_endo(ambient: Ambient) -> StdEndo:
    n, k = ambient.word_rank, ambient.k
    return StdEndo(ambient, AlphaSpec(identity_images(n)), IntMatrix.zeros(k, n), IntMatrix.identity(k),
                   name="identity")


def compose(E1: StdEndo, E2: StdEndo) -> StdEndo:
    """``E1 . E2``: apply ``E2`` first."""
    if E1.ambient != E2.ambient:
        raise ValueError("ambient mismatch")
    images = compose_maps(E1.alpha.images, E2.alpha.images)
    Gamma = E1.Gamma @ abelianization_matrix(E2.alpha.images) + E1.L @ E2.Gamma
    L = E1.L @ E2.L
    # Fix of a composite is not derivable from the factors' certificates
    fix = WHOLE if all(words_equal(E1.ambient, w, x) for w, x in zip(images, identity_images(len(images)))) \
        else None
    return StdEndo(E1.ambient, AlphaSpec(images, fix, certified_complete=fix == WHOLE), Gamma, L,
                   claims_automorphism=E1.claims_automorphism and E2.claims_automorphism,
                   name=f"({E1.name} . {E2.name})")


def _generators(ambient: Ambient) -> list[GroupElement]:
    n, k = ambient.word_rank, ambient.k
    gens = [GroupElement(w, (0,) * k) for w in identity_images(n)]
    for i in range(k):
        gens.append(GroupElement(identity(n), tuple(int(i == j) for j in range(k))))
    return gens


def acts_as_identity(E: StdEndo) -> bool:
    return all(elements_equal(E.ambient, eval_endo(E, x), x) for x in _generators(E.ambient))


def verify_automorphism(E: StdEndo, E_inv: StdEndo) -> bool:
    """True iff ``E_inv`` is a two-sided inverse of ``E`` (checked on generators)."""
    if E.ambient != E_inv.ambient:
        return False
    return acts_as_identity(compose(E, E_inv)) and acts_as_identity(compose(E_inv, E))


def standard_inverse(E: StdEndo, alpha_inverse: Sequence[Word]) -> Optional[StdEndo]:
    """``(u, v) -> (alpha^-1 u, L^-1 (v - gamma(alpha^-1 u)))``, or ``None`` if ``L`` is not unimodular."""
    Linv = integer_inverse(E.L)
    if Linv is None:
        return None
    alpha_inverse = tuple(alpha_inverse)
    Gamma = -(Linv @ E.Gamma @ abelianization_matrix(alpha_inverse))
    fix = E.alpha.fix  # Fix(alpha^-1) = Fix(alpha)
    return StdEndo(E.ambient, AlphaSpec(alpha_inverse, fix, E.alpha.certified_complete), Gamma, Linv,
                   name=f"{E.name}^-1" if E.name else "")


def direct_sum(E: StdEndo, extra: IntMatrix, name: str = "") -> StdEndo:
    """Product of ``E`` with the automorphism ``extra`` of an extra ``Z^k'`` factor."""
    if not extra.is_square():
        raise ValueError("extra block must be square")
    amb = Ambient(E.ambient.kind, E.ambient.g, E.ambient.k + extra.rows)
    Gamma = E.Gamma.stack(IntMatrix.zeros(extra.rows, E.ambient.word_rank))
    expected = None
    if E.expected_iso is not None:
        from .fixpipe import fixed_lattice
        expected = E.expected_iso.times_z(fixed_lattice(extra)[0])
    from .intlat import determinant
    aut = E.claims_automorphism and abs(determinant(extra)) == 1
    return StdEndo(amb, E.alpha, Gamma, E.L.block_diag(extra), aut, expected,
                   name=name or f"{E.name}+{extra.rows}")


def direct_sum_inverse(E_inv: StdEndo, extra: IntMatrix) -> Optional[StdEndo]:
    inv = integer_inverse(extra)
    return None if inv is None else direct_sum(E_inv, inv)


# -- certificates -----------------------------------------------------------------

def container_generators(alpha: AlphaSpec, ambient: Ambient) -> tuple[Word, ...]:
    """Generators of Fix(alpha) as recorded by the certificate."""
    if alpha.fix is None:
        raise CertificateError("alpha carries no fixed subgroup certificate")
    return identity_images(ambient.word_rank) if alpha.is_whole else alpha.fix


def reduced_words(rank: int, max_len: int):
    """All reduced words of length <= ``max_len``, shortlex in ``a1 < A1 < a2 < ...``."""
    order = letter_order(rank)
    yield identity(rank)
    layer = [()]
    for _ in range(max_len):
        nxt = []
        for w in layer:
            for x in order:
                if w and w[-1] == -x:
                    continue
                nxt.append(w + (x,))
        for w in nxt:
            yield Word(w, rank)
        layer = nxt


def count_reduced_words(rank: int, max_len: int) -> int:
    if rank == 0:
        return 1
    return 1 + sum(2 * rank * (2 * rank - 1) ** (n - 1) for n in range(1, max_len + 1))


class ContainerMembership:
    """Membership in the subgroup named by a certificate.

    Free ambients use the Stallings graph.  Inside a surface group a free
    certificate has no folded-graph normal form.  When the certificate is
    marked complete and ``trust`` is set, membership is "alpha fixes u",
    decided exactly by Dehn's algorithm.  Otherwise it is a bounded search:
    ``u`` is accepted when it equals a word in the certificate generators of
    length at most ``len(u) + slack``, so a rejection means "not found within
    the bound".
    """

    def __init__(self, alpha: AlphaSpec, ambient: Ambient, slack: int = 4, trust: bool = True):
        self.alpha = alpha
        self.ambient = ambient
        self.slack = slack
        self.trust = trust and alpha.certified_complete
        self.exact = not ambient.is_surface or alpha.is_whole or self.trust
        self._graph = None
        self._cache: dict[int, dict] = {}
        if not alpha.is_whole:
            self._graph = stallings.graph_from_basis(list(alpha.fix), ambient.word_rank)

    @property
    def graph(self):
        return self._graph

    def _products(self, max_len: int) -> dict:
        if max_len not in self._cache:
            basis = self.alpha.fix
            table: dict = {}
            for w in reduced_words(len(basis), max_len):
                word = apply_map(basis, w) if basis else identity(self.ambient.word_rank)
                table.setdefault(abelianize(word), []).append(word)
            self._cache[max_len] = table
        return self._cache[max_len]

    def __call__(self, u: Word) -> bool:
        if self.alpha.is_whole:
            return True
        if stallings.member(self._graph, u):
            return True
        if not self.ambient.is_surface:
            return False
        if self.trust:
            return surface.surface_equal(apply_map(self.alpha.images, u), u)
        cands = self._products(len(u) + self.slack).get(abelianize(u), [])
        return any(surface.surface_equal(u, w) for w in cands)


@dataclass
class CertificateReport:
    verified_fixed: bool
    free_basis: Optional[bool] = None  # Stallings rank equals the number of words (free ambients)
    brute_checked: Optional[int] = None  # word length bound of the completeness check
    words_checked: int = 0
    missing: list = field(default_factory=list)  # surface ambients: not found within the search bound
    exact: bool = True  # False when ``missing`` comes from a bounded search

    @property
    def status(self) -> str:
        if self.brute_checked is None:
            return "verified-fixed"
        return f"completeness-brute-checked({self.brute_checked})"

    @property
    def ok(self) -> bool:
        return self.verified_fixed and not self.missing and self.free_basis is not False


def validate_certificate(spec: AlphaSpec, ambient: Ambient, brute_length: Optional[int] = None,
                         budget: int = 2_000_000, slack: int = 4) -> CertificateReport:
    """Check the certificate words are fixed; optionally brute-force completeness.

    Raises :class:`CertificateError` when a certificate word is moved.  The
    completeness check lists fixed words of length <= ``brute_length`` that
    are not in the certified subgroup in ``report.missing``.  Inside a surface
    group membership is a bounded search (see :class:`ContainerMembership`),
    so there ``missing`` means "not found" and ``report.exact`` is False.
    """
    n = ambient.word_rank
    gens = identity_images(n)
    if spec.fix is None:
        raise CertificateError("alpha carries no fixed subgroup certificate")
    if spec.is_whole:
        for x, w in zip(gens, spec.images):
            if not words_equal(ambient, x, w):
                raise CertificateError(f"certificate says alpha is the identity but {format_word(x, ambient.is_surface)}"
                                       f" -> {format_word(w, ambient.is_surface)}")
    else:
        for w in spec.fix:
            if w.rank != n:
                raise CertificateError("certificate word of the wrong rank")
            if not words_equal(ambient, apply_map(spec.images, w), w):
                raise CertificateError(f"certificate word {format_word(w, ambient.is_surface)} is not fixed")
    report = CertificateReport(verified_fixed=True)
    if not spec.is_whole and not ambient.is_surface:
        g = stallings.graph_from_basis(list(spec.fix), n)
        report.free_basis = stallings.graph_rank(g) == len(spec.fix)
    if brute_length is not None:
        if count_reduced_words(n, brute_length) > budget:
            raise BudgetExceeded(count_reduced_words(n, brute_length), budget)
        contains = ContainerMembership(spec, ambient, slack=slack, trust=False)
        report.exact = contains.exact
        for u in reduced_words(n, brute_length):
            report.words_checked += 1
            if words_equal(ambient, apply_map(spec.images, u), u) and not contains(u):
                report.missing.append(u)
        report.brute_checked = brute_length
    return report


class BudgetExceeded(RuntimeError):
    def __init__(self, needed: int, budget: int):
        super().__init__(f"enumeration needs {needed} words, budget is {budget}")
        self.needed = needed
        self.budget = budget


# -- JSON ------------------------------------------------------------------------------

def _endo_body(E: StdEndo) -> dict:
    surf = E.ambient.is_surface
    return {
        "alpha": {
            "images": [format_word(w, surf) for w in E.alpha.images],
            "fix": WHOLE if E.alpha.is_whole else [format_word(w, surf) for w in E.alpha.fix],
            **({} if E.alpha.certified_complete else {"certified_complete": False}),
        },
        "gamma": E.Gamma.to_json(),
        "L": E.L.to_json(),
    }


def endo_to_json(E: StdEndo, inverse: Optional[StdEndo] = None) -> dict:
    out = {"ambient": E.ambient.to_json(), **_endo_body(E)}
    if not E.claims_automorphism:
        out["automorphism"] = False
    if E.expected_iso is not None:
        out["expected"] = format_iso(E.expected_iso)
    if E.name:
        out["name"] = E.name
    if inverse is not None:
        out["inverse"] = _endo_body(inverse)
    return out


def _parse_images(texts: Sequence[str], ambient: Ambient) -> tuple[tuple[Word, ...], list[list[int]]]:
    """Images may carry ``cJ``/``CJ`` tokens for the ``Z^k`` part; those fold into Gamma columns."""
    n, k = ambient.word_rank, ambient.k
    words, extra = [], []
    for text in texts:
        letters, col = [], [0] * k
        for tok in text.split():
            if tok[0] in "cC":
                j = int(tok[1:])
                if not 1 <= j <= k:
                    raise ValueError(f"token {tok!r} outside Z^{k}")
                col[j - 1] += 1 if tok[0] == "c" else -1
            else:
                letters.append(parse_token(tok, n, ambient.is_surface))
        words.append(reduce(letters, n))
        extra.append(col)
    return tuple(words), extra


def _endo_from_body(body: dict, ambient: Ambient, **kw) -> StdEndo:
    n, k = ambient.word_rank, ambient.k
    al = body["alpha"]
    images, extra = _parse_images(al["images"], ambient)
    fix = al.get("fix", WHOLE)
    if fix != WHOLE:
        fix = tuple(parse_word(t, n, ambient.is_surface) for t in fix)
    Gamma = IntMatrix.from_json(body["gamma"]) if "gamma" in body else IntMatrix.zeros(k, n)
    if any(any(c) for c in extra):
        Gamma = Gamma + IntMatrix.from_columns(extra, k)
    L = IntMatrix.from_json(body["L"]) if "L" in body else IntMatrix.identity(k)
    return StdEndo(ambient, AlphaSpec(images, fix, al.get("certified_complete", True)), Gamma, L, **kw)


def endo_from_json(data: dict) -> tuple[StdEndo, Optional[StdEndo]]:
    """Parse an endomorphism file; returns ``(E, inverse or None)``."""
    ambient = Ambient.from_json(data["ambient"])
    expected = parse_iso(data["expected"]) if "expected" in data else None
    E = _endo_from_body(data, ambient, claims_automorphism=data.get("automorphism", True),
                        expected_iso=expected, name=data.get("name", ""))
    inv = _endo_from_body(data["inverse"], ambient) if data.get("inverse") else None
    return E, inv


def dumps(E: StdEndo, inverse: Optional[StdEndo] = None) -> str:
    return json.dumps(endo_to_json(E, inverse), indent=2)


def loads(text: str) -> tuple[StdEndo, Optional[StdEndo]]:
    return endo_from_json(json.loads(text))
