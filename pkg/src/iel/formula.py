"""Formula AST for intuitionistic epistemic logic.

Formulas are built from variables and bottom with ``&``, ``|``, ``->`` and the
knowledge modality ``K``.  Negation is sugar: ``~F`` is ``Implies(F, Bottom)``.

All nodes are immutable and hashable.  Hash, length and the canonical sort key
are computed once per node, which matters because the prover keeps formulas in
sets and dictionaries.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

# canonical constructor order: Var < Bottom < K < & < | < ->
_TAG_VAR, _TAG_BOT, _TAG_K, _TAG_AND, _TAG_OR, _TAG_IMP = range(6)


class Formula:
    """Base class for formula nodes; use the concrete subclasses."""

    def __lt__(self, other: Formula) -> bool:
        return self.sort_key < other.sort_key

    def __le__(self, other: Formula) -> bool:
        return self.sort_key <= other.sort_key

    def __gt__(self, other: Formula) -> bool:
        return self.sort_key > other.sort_key

    def __ge__(self, other: Formula) -> bool:
        return self.sort_key >= other.sort_key

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        from .syntax import render

        return render(self)

    def children(self) -> tuple[Formula, ...]:
        return ()

    @property
    def is_atomic(self) -> bool:
        """Variables and bottom: the only formulas an axiom may close on."""
        return isinstance(self, (Var, Bottom))


@dataclass(frozen=True, eq=True)
class Var(Formula):
    name: str

    __hash__ = Formula.__hash__

    @cached_property
    def _hash(self) -> int:
        return hash((_TAG_VAR, self.name))

    @cached_property
    def length(self) -> int:
        return 1

    @cached_property
    def sort_key(self) -> tuple:
        return (1, _TAG_VAR, self.name)

    def __repr__(self) -> str:
        return f"Var({self.name!r})"


@dataclass(frozen=True, eq=True)
class Bottom(Formula):
    __hash__ = Formula.__hash__

    @cached_property
    def _hash(self) -> int:
        return hash((_TAG_BOT,))

    @cached_property
    def length(self) -> int:
        return 1

    @cached_property
    def sort_key(self) -> tuple:
        return (1, _TAG_BOT)

    def __repr__(self) -> str:
        return "Bottom()"


@dataclass(frozen=True, eq=True)
class Know(Formula):
    body: Formula

    __hash__ = Formula.__hash__

    @cached_property
    def _hash(self) -> int:
        return hash((_TAG_K, self.body))

    @cached_property
    def length(self) -> int:
        return 1 + self.body.length

    @cached_property
    def sort_key(self) -> tuple:
        return (self.length, _TAG_K, self.body.sort_key)

    def children(self) -> tuple[Formula, ...]:
        return (self.body,)

    def __repr__(self) -> str:
        return f"Know({self.body!r})"


class _Binary(Formula):
    _tag = -1
    left: Formula
    right: Formula

    @cached_property
    def _hash(self) -> int:
        return hash((self._tag, self.left, self.right))

    @cached_property
    def length(self) -> int:
        return 1 + self.left.length + self.right.length

    @cached_property
    def sort_key(self) -> tuple:
        return (self.length, self._tag, self.left.sort_key, self.right.sort_key)

    def children(self) -> tuple[Formula, ...]:
        return (self.left, self.right)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.left!r}, {self.right!r})"


@dataclass(frozen=True, eq=True, repr=False)
class And(_Binary):
    left: Formula
    right: Formula
    _tag = _TAG_AND

    __hash__ = Formula.__hash__


@dataclass(frozen=True, eq=True, repr=False)
class Or(_Binary):
    left: Formula
    right: Formula
    _tag = _TAG_OR

    __hash__ = Formula.__hash__


@dataclass(frozen=True, eq=True, repr=False)
class Implies(_Binary):
    left: Formula
    right: Formula
    _tag = _TAG_IMP

    __hash__ = Formula.__hash__


BOTTOM = Bottom()
K_BOTTOM = Know(BOTTOM)


def Not(f: Formula) -> Implies:
    return Implies(f, BOTTOM)


def length(f: Formula) -> int:
    """Symbol count: every variable, bottom, connective and K counts one."""
    return f.length


def subformulas(f: Formula) -> Iterator[Formula]:
    """All subformula occurrences of ``f``, including ``f`` itself (pre-order)."""
    stack = [f]
    while stack:
        g = stack.pop()
        yield g
        stack.extend(reversed(g.children()))


def canonical(formulas: Iterable[Formula]) -> tuple[Formula, ...]:
    """Deduplicate and sort under the canonical order."""
    return tuple(sorted(set(formulas)))


def subformula_closure(antecedent: Iterable[Formula], goal: Formula) -> frozenset[Formula]:
    """Subformulas of the antecedent, the goal and K-bottom.

    The result always contains bottom and K-bottom.  Use :func:`canonical` for a
    deterministic iteration order.
    """
    out: set[Formula] = set()
    for f in (*antecedent, goal, K_BOTTOM):
        for g in subformulas(f):
            out.add(g)
    return frozenset(out)


def is_know(f: Formula) -> bool:
    return isinstance(f, Know)


def variables(f: Formula) -> set[str]:
    return {g.name for g in subformulas(f) if isinstance(g, Var)}
