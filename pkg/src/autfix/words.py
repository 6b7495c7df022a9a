"""Freely reduced words over a finite free generating set.

A letter is a nonzero integer: ``+i`` is generator ``i`` (1-based) and ``-i``
its inverse.  Words are reduced on construction, so two words represent the
same free group element exactly when their letter tuples agree.

Text syntax: ``a3`` is generator 3 and ``A3`` its inverse, tokens separated by
whitespace, the empty string is the identity.  Surface alphabets interleave
the two letter families, ``a_i`` being generator ``2i - 1`` and ``b_i``
generator ``2i``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "Word",
    "RankError",
    "reduce",
    "identity",
    "multiply",
    "invert",
    "exponent_sum",
    "abelianize",
    "apply_map",
    "compose_maps",
    "identity_images",
    "generator",
    "power",
    "commutator",
    "conjugate",
    "parse_word",
    "parse_token",
    "format_word",
    "letter_order",
]


class RankError(ValueError):
    pass


def _check_letters(letters: Iterable[int], rank: int) -> None:
    for x in letters:
        if x == 0 or abs(x) > rank:
            raise RankError(f"letter {x} outside rank {rank}")


def _free_reduce(letters: Iterable[int]) -> tuple[int, ...]:
    stack: list[int] = []
    for x in letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


@dataclass(frozen=True)
class Word:
    """A freely reduced word of a free group of rank ``rank``.

    Build words with :func:`reduce` (or :func:`parse_word`); the raw
    constructor trusts its input.
    """

    letters: tuple[int, ...]
    rank: int

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return multiply(self, other)

    def __invert__(self) -> "Word":
        return invert(self)

    def __pow__(self, n: int) -> "Word":
        return power(self, n)

    def is_identity(self) -> bool:
        return not self.letters

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r}, rank={self.rank})"


def reduce(letters: Sequence[int], rank: int) -> Word:
    """Freely reduce ``letters`` into a :class:`Word` of the given rank."""
    _check_letters(letters, rank)
    return Word(_free_reduce(letters), rank)


def identity(rank: int) -> Word:
    return Word((), rank)


def generator(i: int, rank: int) -> Word:
    return reduce((i,), rank)


def _same_rank(u: Word, v: Word) -> None:
    if u.rank != v.rank:
        raise RankError(f"rank mismatch: {u.rank} vs {v.rank}")


def multiply(u: Word, v: Word) -> Word:
    _same_rank(u, v)
    a, b = u.letters, v.letters
    # cancellation only happens at the junction
    i = 0
    n = min(len(a), len(b))
    while i < n and a[len(a) - 1 - i] == -b[i]:
        i += 1
    return Word(a[: len(a) - i] + b[i:], u.rank)


def invert(u: Word) -> Word:
    return Word(tuple(-x for x in reversed(u.letters)), u.rank)


def power(u: Word, n: int) -> Word:
    base = u if n >= 0 else invert(u)
    out = identity(u.rank)
    for _ in range(abs(n)):
        out = multiply(out, base)
    return out


def commutator(u: Word, v: Word) -> Word:
    """``u v u^-1 v^-1``."""
    return multiply(multiply(u, v), multiply(invert(u), invert(v)))


def conjugate(w: Word, u: Word) -> Word:
    """``u w u^-1``."""
    return multiply(multiply(u, w), invert(u))


def exponent_sum(u: Word, i: int) -> int:
    """Signed number of occurrences of generator ``i`` in ``u``."""
    if not 1 <= i <= u.rank:
        raise RankError(f"generator index {i} outside rank {u.rank}")
    return sum(1 if x == i else -1 for x in u.letters if abs(x) == i)


def abelianize(u: Word) -> tuple[int, ...]:
    vec = [0] * u.rank
    for x in u.letters:
        vec[abs(x) - 1] += 1 if x > 0 else -1
    return tuple(vec)


def apply_map(images: Sequence[Word], u: Word) -> Word:
    """Image of ``u`` under the homomorphism sending generator ``i`` to ``images[i-1]``."""
    if len(images) != u.rank:
        raise RankError(f"{len(images)} images for a rank {u.rank} word")
    if not images:
        return u
    target = images[0].rank
    inv = [None] * len(images)
    out: list[int] = []
    for x in u.letters:
        if x > 0:
            piece = images[x - 1].letters
        else:
            if inv[-x - 1] is None:
                inv[-x - 1] = invert(images[-x - 1]).letters
            piece = inv[-x - 1]
        for y in piece:
            if out and out[-1] == -y:
                out.pop()
            else:
                out.append(y)
    return Word(tuple(out), target)


def compose_maps(outer: Sequence[Word], inner: Sequence[Word]) -> tuple[Word, ...]:
    """Images of ``outer . inner`` (apply ``inner`` first)."""
    return tuple(apply_map(outer, w) for w in inner)


def identity_images(rank: int) -> tuple[Word, ...]:
    return tuple(generator(i, rank) for i in range(1, rank + 1))


def letter_order(rank: int) -> list[int]:
    """Letters in enumeration order ``a1, A1, a2, A2, ...``."""
    out = []
    for i in range(1, rank + 1):
        out.extend((i, -i))
    return out


# -- text syntax ----------------------------------------------------------

def _token(x: int, surface: bool) -> str:
    i = abs(x)
    if surface:
        name = "a" if i % 2 == 1 else "b"
        idx = (i + 1) // 2
    else:
        name, idx = "a", i
    if x < 0:
        name = name.upper()
    return f"{name}{idx}"


def format_word(u: Word, surface: bool = False) -> str:
    return " ".join(_token(x, surface) for x in u.letters)


def parse_token(tok: str, rank: int, surface: bool = False) -> int:
    if len(tok) < 2 or not tok[1:].isdigit() or tok[1] == "0":
        raise ValueError(f"bad token {tok!r}")
    head, idx = tok[0], int(tok[1:])
    sign = 1 if head.islower() else -1
    head = head.lower()
    if surface:
        if head == "a":
            x = 2 * idx - 1
        elif head == "b":
            x = 2 * idx
        else:
            raise ValueError(f"bad token {tok!r}")
    else:
        if head != "a":
            raise ValueError(f"bad token {tok!r}")
        x = idx
    if x > rank:
        raise RankError(f"token {tok!r} outside rank {rank}")
    return sign * x


def parse_word(text: str, rank: int, surface: bool = False) -> Word:
    """Parse the whitespace separated token syntax (see module docstring)."""
    return reduce([parse_token(t, rank, surface) for t in text.split()], rank)
