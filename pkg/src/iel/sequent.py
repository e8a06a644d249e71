"""Multiset sequents and set-sequents.

A :class:`Sequent` stores its antecedent as a tuple sorted under the canonical
formula order, with repeated entries for multiplicity.  Equal multisets thus
have exactly one representation, so sequents hash and compare cheaply.

A set-sequent is a sequent whose antecedent has no repeats; it is not a
separate class (:data:`SetSequent` is an alias kept for signatures).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .formula import Formula, Know


@dataclass(frozen=True)
class Sequent:
    antecedent: tuple[Formula, ...]
    goal: Formula

    def __post_init__(self):
        object.__setattr__(self, "antecedent", tuple(sorted(self.antecedent)))

    @cached_property
    def counts(self) -> Counter:
        return Counter(self.antecedent)

    @cached_property
    def support(self) -> frozenset[Formula]:
        return frozenset(self.antecedent)

    @property
    def is_set(self) -> bool:
        return len(self.support) == len(self.antecedent)

    def multiplicity(self, f: Formula) -> int:
        return self.counts[f]

    def __contains__(self, f: Formula) -> bool:
        return f in self.support

    def plus(self, *formulas: Formula) -> Sequent:
        return Sequent(self.antecedent + formulas, self.goal)

    def minus(self, *formulas: Formula) -> Sequent:
        """Remove one occurrence per listed formula; ``ValueError`` if absent."""
        return Sequent(tuple(msub(self.antecedent, formulas)), self.goal)

    def with_goal(self, goal: Formula) -> Sequent:
        return Sequent(self.antecedent, goal)

    def __str__(self) -> str:
        from .syntax import render_sequent

        return render_sequent(self)


SetSequent = Sequent


def set_sequent(antecedent: Iterable[Formula], goal: Formula) -> Sequent:
    return Sequent(tuple(set(antecedent)), goal)


def to_set(s: Sequent) -> Sequent:
    """Collapse duplicate antecedent members; the goal is unchanged."""
    if s.is_set:
        return s
    return Sequent(tuple(s.support), s.goal)


def size(s: Sequent) -> int:
    """Sum of the lengths of all antecedent occurrences and the goal."""
    return sum(f.length for f in s.antecedent) + s.goal.length


def k_prefix_set(x: Iterable[Formula]) -> frozenset[Formula]:
    """Bodies of the K-formulas in ``x`` (one level of unwrapping)."""
    return frozenset(f.body for f in x if isinstance(f, Know))


def k_bodies(x: Iterable[Formula]) -> tuple[Formula, ...]:
    """Multiset version of :func:`k_prefix_set`: one body per K-occurrence."""
    return tuple(f.body for f in x if isinstance(f, Know))


def msub(a: Iterable[Formula], b: Iterable[Formula]) -> list[Formula]:
    """Multiset difference ``a - b``; every member of ``b`` must occur in ``a``."""
    rest = list(a)
    for f in b:
        try:
            rest.remove(f)
        except ValueError:
            raise ValueError(f"{f} does not occur in the antecedent") from None
    return rest


def msub_le(a: Iterable[Formula], b: Iterable[Formula]) -> bool:
    """Multiset inclusion ``a <= b``."""
    cb = Counter(b)
    for f, n in Counter(a).items():
        if cb[f] < n:
            return False
    return True
