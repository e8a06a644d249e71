"""Formula enumeration and random generation for test corpora."""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Iterator, Sequence

from .formula import BOTTOM, And, Formula, Implies, Know, Or, Var

DEFAULT_ATOMS: tuple[Formula, ...] = (Var("p"), Var("q"), BOTTOM)
_BINARY = (And, Or, Implies)


def count_formulas(connectives: int, atoms: int = 3) -> int:
    """Number of distinct formulas with exactly ``connectives`` connectives."""
    return _count(connectives, atoms)


@lru_cache(maxsize=None)
def _count(k: int, atoms: int) -> int:
    if k == 0:
        return atoms
    total = _count(k - 1, atoms)
    for i in range(k):
        total += len(_BINARY) * _count(i, atoms) * _count(k - 1 - i, atoms)
    return total


def formulas_of_size(connectives: int, atoms: Sequence[Formula] = DEFAULT_ATOMS) -> Iterator[Formula]:
    """Every formula with exactly ``connectives`` occurrences of ``K``, ``&``, ``|``, ``->``.

    Distinct shapes give distinct formulas, so the stream has no duplicates.
    """
    if connectives == 0:
        yield from atoms
        return
    for body in formulas_of_size(connectives - 1, atoms):
        yield Know(body)
    for i in range(connectives):
        lefts = list(formulas_of_size(i, atoms))
        rights = list(formulas_of_size(connectives - 1 - i, atoms))
        for ctor in _BINARY:
            for a in lefts:
                for b in rights:
                    yield ctor(a, b)


def formulas_up_to(connectives: int, atoms: Sequence[Formula] = DEFAULT_ATOMS) -> Iterator[Formula]:
    for k in range(connectives + 1):
        yield from formulas_of_size(k, atoms)


def random_formula(rng: random.Random, connectives: int,
                   atoms: Sequence[Formula] = DEFAULT_ATOMS) -> Formula:
    """A formula with exactly ``connectives`` connectives; shapes are not uniform."""
    if connectives == 0:
        return rng.choice(atoms)
    if rng.random() < 0.25:
        return Know(random_formula(rng, connectives - 1, atoms))
    i = rng.randrange(connectives)
    ctor = rng.choice(_BINARY)
    return ctor(random_formula(rng, i, atoms), random_formula(rng, connectives - 1 - i, atoms))
