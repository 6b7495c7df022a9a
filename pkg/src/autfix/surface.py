"""Word problem for closed orientable surface groups of genus >= 2.

The group is presented on ``a1, b1, ..., ag, bg`` (letters ``2i-1`` and
``2i`` of a rank ``2g`` free group) with the single relator
``[a1, b1] ... [ag, bg]``.  Triviality is decided by Dehn's algorithm.
"""
from __future__ import annotations

from functools import lru_cache

from .classify import IsoType, abelian, free_inf, surface
from .words import Word, abelianize, commutator, generator, identity, invert, multiply, reduce


def _check_genus(g: int) -> None:
    if g < 2:
        raise ValueError(f"surface genus must be >= 2, got {g}")


def genus_of(w: Word) -> int:
    if w.rank % 2:
        raise ValueError(f"odd rank {w.rank} is not a surface alphabet")
    return w.rank // 2


def a(i: int, g: int) -> Word:
    return generator(2 * i - 1, 2 * g)


def b(i: int, g: int) -> Word:
    return generator(2 * i, 2 * g)


def relator(g: int) -> Word:
    """``[a1, b1] ... [ag, bg]``, length ``4g``."""
    _check_genus(g)
    out = identity(2 * g)
    for i in range(1, g + 1):
        out = multiply(out, commutator(a(i, g), b(i, g)))
    return out


@lru_cache(maxsize=None)
def _relator_rotations(g: int) -> tuple[tuple[int, ...], ...]:
    """All cyclic rotations of the relator and of its inverse."""
    out = []
    for r in (relator(g).letters, invert(relator(g)).letters):
        for i in range(len(r)):
            out.append(r[i:] + r[:i])
    return tuple(out)


def _cyclic_reduce(letters: list[int]) -> list[int]:
    stack: list[int] = []
    for x in letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    i, j = 0, len(stack) - 1
    while i < j and stack[i] == -stack[j]:
        i += 1
        j -= 1
    return stack[i:j + 1]


def _dehn_step(w: list[int], g: int) -> list[int] | None:
    """Replace one long relator piece in the cyclic word ``w``; ``None`` if none exists."""
    n = len(w)
    L = 4 * g
    half = 2 * g
    if n <= half:
        return None
    rots = _relator_rotations(g)
    for start in range(n):
        for r in rots:
            if r[0] != w[start]:
                continue
            length = 0
            limit = min(L, n)
            while length < limit and w[(start + length) % n] == r[length]:
                length += 1
            if length > half:
                # cyclic word: rotate so the piece sits at the front
                rest = [w[(start + length + i) % n] for i in range(n - length)]
                complement = [-x for x in reversed(r[length:])]
                return complement + rest
    return None


def is_trivial(w: Word) -> bool:
    """Decide ``w = 1`` in the surface group (Dehn's algorithm on the cyclic word)."""
    g = genus_of(w)
    _check_genus(g)
    cur = _cyclic_reduce(list(w.letters))
    while cur:
        nxt = _dehn_step(cur, g)
        if nxt is None:
            return False
        nxt = _cyclic_reduce(nxt)
        assert len(nxt) < len(cur), "Dehn step must shorten the word"
        cur = nxt
    return True


def surface_equal(u: Word, v: Word) -> bool:
    if u.rank != v.rank:
        raise ValueError(f"genus mismatch: ranks {u.rank} and {v.rank}")
    if u == v:
        return True
    if abelianize(u) != abelianize(v):
        return False
    return is_trivial(multiply(u, invert(v)))


def exponent_vector(w: Word) -> tuple[int, ...]:
    """Image in ``Z^{2g}``; well defined on the surface group."""
    return abelianize(w)


def finite_index_subgroup_type(g: int, m: int) -> IsoType:
    """Index ``m`` subgroups of the genus ``g`` group are genus ``m(g-1)+1`` surface groups."""
    _check_genus(g)
    if m < 1:
        raise ValueError(f"index must be >= 1, got {m}")
    return surface(m * (g - 1) + 1)


def infinite_index_normal_type(container_rank_at_least_2: bool, kernel_nontrivial: bool) -> IsoType:
    """Type of a normal subgroup of infinite index in a rank >= 2 free or surface group."""
    if kernel_nontrivial:
        if not container_rank_at_least_2:
            raise ValueError("a nontrivial infinite index normal subgroup needs a container of rank >= 2")
        return free_inf()
    return abelian(0)


def splice(w: Word, piece: Word, pos: int) -> Word:
    """Insert ``piece`` after the first ``pos`` letters of ``w`` and reduce."""
    return reduce(w.letters[:pos] + piece.letters + w.letters[pos:], w.rank)
