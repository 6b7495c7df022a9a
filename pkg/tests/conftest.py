import random

import pytest

from autfix.words import Word, reduce

SEED = 20261017


@pytest.fixture
def rng():
    return random.Random(SEED)


def random_word(rng: random.Random, rank: int, length: int) -> Word:
    """Reduced word from ``length`` random letters (shorter after cancellation)."""
    return reduce([rng.choice((1, -1)) * rng.randint(1, rank) for _ in range(length)], rank)


def random_reduced_word(rng: random.Random, rank: int, length: int) -> Word:
    """Reduced word of exactly ``length`` letters."""
    out: list[int] = []
    while len(out) < length:
        x = rng.choice((1, -1)) * rng.randint(1, rank)
        if out and out[-1] == -x:
            continue
        out.append(x)
    return Word(tuple(out), rank)
