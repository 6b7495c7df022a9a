"""Catalog of explicit endomorphisms with known fixed subgroups.

Every builder returns a :class:`Built` holding a :class:`~autfix.endo.StdEndo`
whose ``expected_iso`` is the type its fixed subgroup should have, together
with an inverse when the map is an automorphism.  Larger examples are
assembled with :func:`~autfix.endo.direct_sum`, since the fixed subgroup of a
product is the product of the fixed subgroups.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Union

from .classify import (
    ALEPH0, FREE, FREE_INF, SURFACE, TRIVIAL, Ambient, IsoType, _free_times_z_list, _surface_times_z_list, abelian, free,
    decide_aut_fixed, free_inf, surface,
)
from .endo import WHOLE, AlphaSpec, StdEndo, direct_sum, standard_inverse
from .intlat import IntMatrix
from .words import Word, commutator, generator, identity, identity_images, invert, multiply

__all__ = [
    "Built", "Recipe", "RECIPES", "get_recipe", "inversion", "phi_t", "psi_t", "endo_m", "aleph",
    "free_x_z", "a_ell_matrix", "surface_endo", "surface_psi", "surface_rotation", "surface_aleph",
    "surface_x_z", "identity_aut", "rank_witness", "witness_for", "witness_recipe_id",
    "phi1_images", "phi1_inverse_images", "PHI1", "IDENTITY",
]

IDENTITY = "identity"
PHI1 = "phi1"


@dataclass
class Built:
    endo: StdEndo
    inverse: Optional[StdEndo] = None

    @property
    def expected(self) -> Optional[IsoType]:
        return self.endo.expected_iso


def _range_error(msg: str) -> ValueError:
    return ValueError(f"parameter out of range: {msg}")


def _gamma_a1(k: int, n: int, value: int = 1) -> IntMatrix:
    """``Gamma`` sending ``a1`` to ``value * e_1`` and every other generator to 0."""
    rows = [[0] * n for _ in range(k)]
    if k:
        rows[0][0] = value
    return IntMatrix.from_rows(rows, n)


def _signs(plus: int, minus: int) -> IntMatrix:
    return IntMatrix.diagonal([1] * plus + [-1] * minus)


def _with_blocks(b: Built, extra: IntMatrix, name: str) -> Built:
    if extra.rows == 0:
        b.endo = StdEndo(b.endo.ambient, b.endo.alpha, b.endo.Gamma, b.endo.L, b.endo.claims_automorphism,
                         b.endo.expected_iso, name)
        return b
    E = direct_sum(b.endo, extra, name)
    inv = None
    if b.inverse is not None:
        inv = direct_sum(b.inverse, extra)  # extra blocks are +-1 diagonal, self-inverse
    return Built(E, inv)


def _inverting_images(n: int, t: int) -> tuple[Word, ...]:
    gens = identity_images(n)
    return tuple(w if i < t else invert(w) for i, w in enumerate(gens))


# -- free ambients --------------------------------------------------------------

def inversion(n: int, t: int) -> Built:
    """Automorphism of ``F_n`` fixing ``a_1..a_t`` and inverting the rest; Fix = F_t."""
    if n < 2 or not 0 <= t <= n:
        raise _range_error(f"need n >= 2 and 0 <= t <= n, got n={n}, t={t}")
    amb = Ambient("free", n, 0)
    images = _inverting_images(n, t)
    fix = WHOLE if t == n else identity_images(n)[:t]
    E = StdEndo(amb, AlphaSpec(images, fix), IntMatrix.zeros(0, n), IntMatrix.zeros(0, 0),
                expected_iso=free(t), name=f"inversion(n={n},t={t})")
    return Built(E, E)


def _free_alpha(g: int) -> AlphaSpec:
    """Fix ``a1, a2``, invert ``a_j`` for ``j >= 3``; certificate ``<a1, a2>``."""
    return AlphaSpec(_inverting_images(g, 2), identity_images(g)[:2])


def _check_gt(g: int, t: int) -> None:
    if g < 2 or t < 2:
        raise _range_error(f"need g >= 2 and t >= 2, got g={g}, t={t}")


def phi_t(g: int, t: int) -> Built:
    """Automorphism of ``F_g x Z^2`` with Fix = F_t (index ``t-1`` kernel in ``<a1, a2>``)."""
    _check_gt(g, t)
    E = StdEndo(Ambient("free", g, 2), _free_alpha(g), _gamma_a1(2, g), IntMatrix.from_rows([[t, t - 1], [1, 1]]),
                expected_iso=free(t), name=f"phi_t(g={g},t={t})")
    return Built(E, standard_inverse(E, E.alpha.images))


def psi_t(g: int, t: int) -> Built:
    """Automorphism of ``F_g x Z^2`` with Fix = F_t x Z."""
    _check_gt(g, t)
    E = StdEndo(Ambient("free", g, 2), _free_alpha(g), _gamma_a1(2, g), IntMatrix.from_rows([[1, t - 1], [0, 1]]),
                expected_iso=free(t, 1), name=f"psi_t(g={g},t={t})")
    return Built(E, standard_inverse(E, E.alpha.images))


def endo_m(g: int, m: int) -> Built:
    """``(u, v) -> (u, nu(u, a1) + (m+1) v)`` on ``F_g x Z``; not onto for ``m >= 1``."""
    if g < 2 or m < 1:
        raise _range_error(f"need g >= 2 and m >= 1, got g={g}, m={m}")
    E = StdEndo(Ambient("free", g, 1), AlphaSpec(identity_images(g)), _gamma_a1(1, g),
                IntMatrix.from_rows([[m + 1]]), claims_automorphism=False,
                expected_iso=free(m * (g - 1) + 1), name=f"endo_m(g={g},m={m})")
    return Built(E, None)


def aleph(g: int) -> Built:
    """``a1 -> a1 c``, ``a2 -> a2``, ``a_j -> a_j^-1`` (j >= 3), ``c -> c``; Fix = F_inf x Z."""
    if g < 2:
        raise _range_error(f"need g >= 2, got {g}")
    E = StdEndo(Ambient("free", g, 1), _free_alpha(g), _gamma_a1(1, g), IntMatrix.identity(1),
                expected_iso=free_inf(1), name=f"aleph(g={g})")
    return Built(E, standard_inverse(E, E.alpha.images))


def _free_x_z_odd(g: int, t: int) -> Built:
    """Fix = F_{2t-1}: the kernel of ``nu(., a1) mod 2`` inside ``<a1..at>``."""
    base = inversion(g, t).endo
    E = StdEndo(Ambient("free", g, 1), base.alpha, _gamma_a1(1, g), IntMatrix.from_rows([[-1]]),
                expected_iso=free(2 * t - 1), name=f"free_x_z(g={g},F_{2 * t - 1})")
    return Built(E, standard_inverse(E, E.alpha.images))


def free_x_z(g: int, target: IsoType) -> Built:
    """An automorphism of ``F_g x Z`` whose fixed subgroup has type ``target``."""
    amb = Ambient("free", g, 1)
    if not decide_aut_fixed(amb, target)[0]:
        raise _range_error(f"{target} is not aut-fixed in {amb}")
    name = f"free_x_z(g={g},{target})"
    if target.kind == FREE_INF:
        b = aleph(g)
        return _with_blocks(b, IntMatrix.zeros(0, 0), name)
    if target.kind == TRIVIAL:
        # Z^s with s <= 2: <a1>^{s >= 1} times a fixed or negated Z
        t = min(target.s, 1)
        plus = target.s - t
        return _with_blocks(inversion(g, t), _signs(plus, 1 - plus), name)
    t, s = target.n, target.s
    if s == 0 and t > g:
        return _free_x_z_odd(g, (t + 1) // 2)
    return _with_blocks(inversion(g, t), _signs(s, 1 - s), name)


# -- surface ambients ------------------------------------------------------------

def _sgen(letter: str, i: int, g: int) -> Word:
    return generator(2 * i - 1 if letter == "a" else 2 * i, 2 * g)


def _handle_product(g: int, lo: int, hi: int) -> Word:
    """``[a_lo, b_lo] ... [a_hi, b_hi]`` (identity when ``lo > hi``)."""
    out = identity(2 * g)
    for i in range(lo, hi + 1):
        out = multiply(out, commutator(_sgen("a", i, g), _sgen("b", i, g)))
    return out


def phi1_images(g: int) -> tuple[Word, ...]:
    """A surface automorphism fixing ``a1, b1`` that moves the rest of the surface.

    Genus 2: the Anosov map ``a2 -> a2 b2``, ``b2 -> b2 a2 b2`` on the second
    handle.  Genus >= 3: shift handles ``2 -> 3 -> ... -> g`` and return the
    last one to handle 2 conjugated by ``Q = [a3,b3]...[ag,bg]``.  Both
    preserve the relator as a word.
    """
    n = 2 * g
    imgs = list(identity_images(n))
    a2, b2 = _sgen("a", 2, g), _sgen("b", 2, g)
    if g == 2:
        imgs[2], imgs[3] = a2 * b2, b2 * a2 * b2
        return tuple(imgs)
    Q = _handle_product(g, 3, g)
    for j in range(2, g):
        imgs[2 * j - 2], imgs[2 * j - 1] = _sgen("a", j + 1, g), _sgen("b", j + 1, g)
    imgs[n - 2], imgs[n - 1] = ~Q * a2 * Q, ~Q * b2 * Q
    return tuple(imgs)


def phi1_inverse_images(g: int) -> tuple[Word, ...]:
    n = 2 * g
    imgs = list(identity_images(n))
    a2, b2 = _sgen("a", 2, g), _sgen("b", 2, g)
    if g == 2:
        imgs[2], imgs[3] = a2 * a2 * ~b2, b2 * ~a2
        return tuple(imgs)
    P = _handle_product(g, 2, g - 1)
    ag, bg = _sgen("a", g, g), _sgen("b", g, g)
    imgs[2], imgs[3] = P * ag * ~P, P * bg * ~P
    for j in range(3, g + 1):
        imgs[2 * j - 2], imgs[2 * j - 1] = _sgen("a", j - 1, g), _sgen("b", j - 1, g)
    return tuple(imgs)


def _phi1_alpha(g: int) -> AlphaSpec:
    return AlphaSpec(phi1_images(g), (_sgen("a", 1, g), _sgen("b", 1, g)))


def _surface_alpha(g: int, choice: str) -> tuple[AlphaSpec, tuple[Word, ...]]:
    if choice == IDENTITY:
        imgs = identity_images(2 * g)
        return AlphaSpec(imgs), imgs
    if choice == PHI1:
        return _phi1_alpha(g), phi1_inverse_images(g)
    raise _range_error(f"unknown alpha choice {choice!r}")


def a_ell_matrix(ell: int, m: int) -> IntMatrix:
    """First row ``(m+1, m, ..., m)``; zero above the diagonal below row 1; every other entry 1."""
    if ell < 2 or m < 1:
        raise _range_error(f"need ell >= 2 and m >= 1, got ell={ell}, m={m}")
    rows = []
    for i in range(ell):
        if i == 0:
            rows.append([m + 1] + [m] * (ell - 1))
        else:
            rows.append([1 if j <= i else 0 for j in range(ell)])
    return IntMatrix.from_rows(rows)


def surface_endo(g: int, k: int, m: int, s: int, alpha: str = IDENTITY) -> Built:
    """Automorphism of ``S_g x Z^k`` whose projected part has index ``m`` in Fix(alpha).

    ``gamma(a1) = e_1``, all other generators to 0.  For ``s <= k-2`` the matrix
    is ``A_l + I_s`` with ``l = k - s``; for ``s = k-1`` it is the unipotent
    ``[[1, m], [0, 1]] + I_{k-2}``.  Fix is ``S_{m(g-1)+1} x Z^s`` for the
    identity alpha and ``F_{m+1} x Z^s`` for :func:`phi1_images`.
    """
    if g < 2 or k < 2 or m < 1 or not 0 <= s <= k - 1:
        raise _range_error(f"need g, k >= 2, m >= 1, 0 <= s < k; got g={g}, k={k}, m={m}, s={s}")
    spec, inv_images = _surface_alpha(g, alpha)
    if s <= k - 2:
        L = a_ell_matrix(k - s, m).block_diag(IntMatrix.identity(s))
    else:
        L = IntMatrix.from_rows([[1, m], [0, 1]]).block_diag(IntMatrix.identity(k - 2))
    expected = surface(m * (g - 1) + 1, s) if alpha == IDENTITY else free(m + 1, s)
    E = StdEndo(Ambient("surface", g, k), spec, _gamma_a1(k, 2 * g), L, expected_iso=expected,
                name=f"surface_endo(g={g},k={k},m={m},s={s},{alpha})")
    return Built(E, standard_inverse(E, inv_images))


def surface_psi(g: int) -> Built:
    """``b_g -> b_g a_g``, all else fixed; Fix = <a1, b1, ..., a_{g-1}, b_{g-1}, a_g> = F_{2g-1}.

    Only the listed generators are checked fixed; that they generate all of
    Fix is taken from the classification, not certified.
    """
    if g < 2:
        raise _range_error(f"need g >= 2, got {g}")
    n = 2 * g
    gens = identity_images(n)
    ag, bg = gens[n - 2], gens[n - 1]
    imgs, inv = list(gens), list(gens)
    imgs[n - 1], inv[n - 1] = bg * ag, bg * ~ag
    E = StdEndo(Ambient("surface", g, 0), AlphaSpec(tuple(imgs), gens[:n - 1]), IntMatrix.zeros(0, n),
                IntMatrix.zeros(0, 0), expected_iso=free(2 * g - 1), name=f"surface_psi(g={g})")
    return Built(E, standard_inverse(E, inv))


def surface_rotation(g: int) -> Built:
    """``a_i -> a_{i+1}``, ``b_i -> b_{i+1}`` cyclically; Fix is trivial.

    The map is induced by a rotation of the 4g-gon about its centre; it fixes
    the vertex class as an isolated fixed point, which forces a trivial fixed
    subgroup.
    """
    if g < 2:
        raise _range_error(f"need g >= 2, got {g}")
    n = 2 * g
    gens = identity_images(n)
    imgs = tuple(gens[(i + 2) % n] for i in range(n))
    inv = tuple(gens[(i - 2) % n] for i in range(n))
    E = StdEndo(Ambient("surface", g, 0), AlphaSpec(imgs, ()), IntMatrix.zeros(0, n), IntMatrix.zeros(0, 0),
                expected_iso=abelian(0), name=f"surface_rotation(g={g})")
    return Built(E, StdEndo(E.ambient, AlphaSpec(inv, ()), E.Gamma, E.L, name=f"surface_rotation(g={g})^-1"))


def surface_aleph(g: int) -> Built:
    """``a1 -> a1 c`` on ``S_g x Z``, identity otherwise; Fix = F_inf x Z."""
    if g < 2:
        raise _range_error(f"need g >= 2, got {g}")
    imgs = identity_images(2 * g)
    E = StdEndo(Ambient("surface", g, 1), AlphaSpec(imgs), _gamma_a1(1, 2 * g), IntMatrix.identity(1),
                expected_iso=free_inf(1), name=f"surface_aleph(g={g})")
    return Built(E, standard_inverse(E, imgs))


def identity_aut(ambient: Ambient) -> Built:
    n, k = ambient.word_rank, ambient.k
    base = surface(ambient.g, k) if ambient.is_surface else free(ambient.g, k)
    E = StdEndo(ambient, AlphaSpec(identity_images(n)), IntMatrix.zeros(k, n), IntMatrix.identity(k),
                expected_iso=base, name=f"identity({ambient})")
    return Built(E, E)


def _lift_to_z(b: Built, L: int, gamma: int, expected: IsoType, name: str) -> Built:
    """Put a ``k = 0`` map on ``X x Z`` with ``gamma(a1) = gamma`` and ``c -> L c``."""
    E0 = b.endo
    amb = Ambient(E0.ambient.kind, E0.ambient.g, 1)
    n = amb.word_rank
    E = StdEndo(amb, E0.alpha, _gamma_a1(1, n, gamma), IntMatrix.from_rows([[L]]), expected_iso=expected, name=name)
    return Built(E, standard_inverse(E, b.inverse.alpha.images))


def phi1_aut(g: int) -> Built:
    amb = Ambient("surface", g, 0)
    n = 2 * g
    E = StdEndo(amb, _phi1_alpha(g), IntMatrix.zeros(0, n), IntMatrix.zeros(0, 0), expected_iso=free(2),
                name=f"phi1(g={g})")
    return Built(E, standard_inverse(E, phi1_inverse_images(g)))


def _surface_x_z_plan(g: int, target: IsoType) -> Optional[Callable[[], Built]]:
    amb = Ambient("surface", g, 1)
    if not decide_aut_fixed(amb, target)[0]:
        return None
    name = f"surface_x_z(g={g},{target})"
    kind, n, s = target.kind, target.n, target.s
    sign = 1 if s else -1
    whole = lambda: identity_aut(Ambient("surface", g, 0))  # noqa: E731
    if kind == FREE_INF:
        return lambda: surface_aleph(g)
    if kind == SURFACE and n == g:
        return lambda: _lift_to_z(whole(), sign, 0, target, name)
    if kind == SURFACE:
        # index 2 kernel of nu(., a1) mod 2 in the whole group
        return lambda: _lift_to_z(whole(), -1, 1, target, name)
    if kind == TRIVIAL and s <= 1:
        return lambda: _lift_to_z(surface_rotation(g), sign, 0, target, name)
    if kind == FREE and n == 2 * g - 1:
        return lambda: _lift_to_z(surface_psi(g), sign, 0, target, name)
    if kind == FREE and s == 0 and n == 4 * g - 3:
        return lambda: _lift_to_z(surface_psi(g), -1, 1, target, name)
    if kind == FREE and n == 2:
        return lambda: _lift_to_z(phi1_aut(g), sign, 0, target, name)
    if kind == FREE and s == 0 and n == 3:
        # index 2 kernel inside <a1, b1>
        return lambda: _lift_to_z(phi1_aut(g), -1, 1, target, name)
    return None


def surface_x_z(g: int, target: IsoType) -> Built:
    """An automorphism of ``S_g x Z`` with the given fixed type, where the catalog has one.

    Raises ``ValueError`` if the type is not aut-fixed and ``LookupError`` if
    it is but only arises from constructions outside the catalog.
    """
    amb = Ambient("surface", g, 1)
    if not decide_aut_fixed(amb, target)[0]:
        raise _range_error(f"{target} is not aut-fixed in {amb}")
    plan = _surface_x_z_plan(g, target)
    if plan is None:
        raise LookupError(f"no catalog construction of {target} in {amb}")
    return plan()


# -- witnesses for the classification -----------------------------------------

def _plan(ambient: Ambient, a: IsoType) -> Optional[tuple[str, Callable[[], Built]]]:
    """Recipe id and builder for an automorphism of ``ambient`` with Fix of type ``a``."""
    g, k = ambient.g, ambient.k
    kind, n, s = a.kind, a.n, a.s
    label = f"{a} in {ambient}"

    def blocks(make: Callable[[], Built], plus: int, minus: int, rid: str):
        return rid, lambda: _with_blocks(make(), _signs(plus, minus), label)

    if not ambient.is_surface:
        if k == 0:
            t = n if kind == FREE else s
            return "inversion", lambda: inversion(g, t)
        if k == 1:
            return "free_x_z", lambda: free_x_z(g, a)
        if kind == FREE_INF:
            return blocks(lambda: aleph(g), s - 1, k - s, "aleph")
        if kind == TRIVIAL:
            t = min(s, 1)
            return blocks(lambda: inversion(g, t), s - t, k - (s - t), "inversion")
        if s == k:
            return blocks(lambda: inversion(g, n), k, 0, "inversion")
        if s == 0:
            return blocks(lambda: phi_t(g, n), 0, k - 2, "phi_t")
        return blocks(lambda: psi_t(g, n), s - 1, k - 1 - s, "psi_t")

    if k == 0:
        if kind == SURFACE:
            return IDENTITY, lambda: identity_aut(ambient)
        if kind == TRIVIAL and s == 0:
            return "surface_rotation", lambda: surface_rotation(g)
        if kind == FREE and n == 2 * g - 1:
            return "surface_psi", lambda: surface_psi(g)
        if kind == FREE and n == 2:
            return PHI1, lambda: phi1_aut(g)
        return None
    if k == 1:
        return None if _surface_x_z_plan(g, a) is None else ("surface_x_z", lambda: surface_x_z(g, a))
    if kind == FREE_INF:
        return blocks(lambda: surface_aleph(g), s - 1, k - s, "aleph")
    if kind == TRIVIAL and s <= k:
        return blocks(lambda: surface_rotation(g), s, k - s, "surface_rotation")
    if kind == SURFACE:
        m = (n - 1) // (g - 1)
        if m == 1:
            return blocks(lambda: identity_aut(Ambient("surface", g, 0)), s, k - s, IDENTITY)
        return "surface_endo", lambda: surface_endo(g, k, m, s, IDENTITY)
    if kind == FREE and s < k:
        return "surface_endo", lambda: surface_endo(g, k, n - 1, s, PHI1)
    if kind == FREE and n == 2 * g - 1:
        return blocks(lambda: surface_psi(g), k, 0, "surface_psi")
    if kind == FREE and n == 2:
        return blocks(lambda: phi1_aut(g), k, 0, PHI1)
    return None


def witness_for(ambient: Ambient, a: IsoType) -> Optional[Built]:
    """Build a catalog automorphism realizing ``a``, or ``None`` if the catalog has none."""
    if not decide_aut_fixed(ambient, a)[0]:
        return None
    plan = _plan(ambient, a)
    return None if plan is None else plan[1]()


def witness_recipe_id(ambient: Ambient, a: IsoType) -> Optional[str]:
    plan = _plan(ambient, a)
    return None if plan is None else plan[0]


def rank_witness(ambient: Ambient, n: Union[int, float]) -> Built:
    """An automorphism whose fixed subgroup has rank exactly ``n`` (``math.inf`` for infinite).

    Selection, free ambients: ``n <= 1`` inversion plus ``-I``; ``n >= 2``
    phi_t plus ``-I``.  Surface ambients: ``n <= 1`` rotation plus
    ``diag(I_n, -I)``; ``n >= 2`` surface_endo with alpha = phi1, index
    ``n - 1`` and ``s = 0``.  Infinite rank: aleph plus ``-I``.
    """
    g, k = ambient.g, ambient.k
    if k < 2:
        raise _range_error(f"rank witnesses need k >= 2, got k={k}")
    label = f"rank_witness({ambient},n={n})"
    if isinstance(n, float):
        if not math.isinf(n):
            raise _range_error(f"rank must be a natural number or infinity, got {n}")
        b = surface_aleph(g) if ambient.is_surface else aleph(g)
        return _with_blocks(b, _signs(0, k - 1), label)
    if n < 0:
        raise _range_error(f"negative rank {n}")
    if ambient.is_surface:
        if n <= 1:
            return _with_blocks(surface_rotation(g), _signs(n, k - n), label)
        b = surface_endo(g, k, n - 1, 0, PHI1)
        return _with_blocks(b, IntMatrix.zeros(0, 0), label)
    if n <= 1:
        return _with_blocks(inversion(g, n), _signs(0, k), label)
    return _with_blocks(phi_t(g, n), _signs(0, k - 2), label)


# -- registry ---------------------------------------------------------------------

@dataclass(frozen=True)
class Recipe:
    """A named builder with its parameter names and a default test grid."""

    id: str
    summary: str
    params: tuple[str, ...]
    build: Callable[..., Built]
    grid: tuple[dict, ...] = field(default=())
    automorphism: bool = True


def _grid(**axes) -> tuple[dict, ...]:
    keys = list(axes)
    out = [dict()]
    for key in keys:
        out = [dict(d, **{key: v}) for d in out for v in axes[key]]
    return tuple(out)


def _surface_endo_grid() -> tuple[dict, ...]:
    out = []
    for g in (2, 3):
        for k in (2, 3):
            for m in (1, 2, 3):
                for s in range(k):
                    for alpha in (IDENTITY, PHI1):
                        out.append(dict(g=g, k=k, m=m, s=s, alpha=alpha))
    return tuple(out)


RECIPES: dict[str, Recipe] = {r.id: r for r in [
    Recipe("inversion", "F_n: fix a_1..a_t, invert the rest", ("n", "t"), inversion,
           _grid(n=(2, 3, 4), t=(0, 1, 2))),
    Recipe("phi_t", "F_g x Z^2 with Fix = F_t", ("g", "t"), phi_t, _grid(g=(2, 3, 4), t=range(2, 11))),
    Recipe("psi_t", "F_g x Z^2 with Fix = F_t x Z", ("g", "t"), psi_t, _grid(g=(2, 3, 4), t=range(2, 11))),
    Recipe("endo_m", "non-surjective endomorphism of F_g x Z with Fix = F_{m(g-1)+1}", ("g", "m"), endo_m,
           _grid(g=(2, 3), m=range(1, 7)), automorphism=False),
    Recipe("aleph", "F_g x Z with Fix = F_inf x Z", ("g",), aleph, _grid(g=(2, 3))),
    Recipe("free_x_z", "F_g x Z realizing a listed aut-fixed type", ("g", "target"), free_x_z,
           tuple(dict(g=g, target=a) for g in (2, 3) for a in sorted(_free_times_z_list(g)))),
    Recipe("surface_endo", "S_g x Z^k with projected index m", ("g", "k", "m", "s", "alpha"), surface_endo,
           _surface_endo_grid()),
    Recipe("surface_psi", "S_g with Fix = F_{2g-1}", ("g",), surface_psi, _grid(g=(2, 3))),
    Recipe(PHI1, "S_g fixing exactly <a1, b1>", ("g",), phi1_aut, _grid(g=(2, 3, 4))),
    Recipe("surface_rotation", "S_g with trivial Fix", ("g",), surface_rotation, _grid(g=(2, 3))),
    Recipe("surface_aleph", "S_g x Z with Fix = F_inf x Z", ("g",), surface_aleph, _grid(g=(2, 3))),
    Recipe("surface_x_z", "S_g x Z realizing a listed aut-fixed type", ("g", "target"), surface_x_z,
           tuple(dict(g=g, target=a) for g in (2, 3) for a in sorted(_surface_times_z_list(g))
                 if _surface_x_z_plan(g, a) is not None)),
    Recipe(IDENTITY, "the identity automorphism", ("ambient",), identity_aut,
           tuple(dict(ambient=Ambient(kind, 2, k)) for kind in ("free", "surface") for k in (0, 1, 2))),
    Recipe("rank_witness", "k >= 2 ambient with Fix of a given rank", ("ambient", "n"), rank_witness,
           tuple(dict(ambient=Ambient(kind, 2, 2), n=n) for kind in ("free", "surface")
                 for n in list(range(13)) + [ALEPH0])),
]}


def get_recipe(rid: str) -> Recipe:
    try:
        return RECIPES[rid]
    except KeyError:
        raise KeyError(f"unknown recipe {rid!r}; known: {', '.join(RECIPES)}") from None
