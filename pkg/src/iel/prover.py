"""Decision procedure: bounded backward search over set-sequents.

The search applies the monotone set-form ``IELG_PLUS_PLUS`` instances listed
by :func:`~iel.calculus.backward_instances`.  Antecedents only grow along a
branch and no sequent may repeat on a branch, so every branch is finite; the
depth bound ``(|S|+1)^2`` is a safety net that a path-distinct branch can never
reach (a chain of growing subsets of ``S`` has at most ``|S|+1`` members and
each can carry at most ``|S|`` goals).

Two memo tables keep the search polynomial in practice:

* proved sequents map to their proof, reused anywhere;
* failed sequents map to the remaining depth budget they failed under, and
  are recorded only when the failure did not depend on an ancestor being on
  the current branch.

Left rules that enlarge the antecedent and are invertible (``L&`` family,
``L|c``, and ``R->`` with a new hypothesis) are applied eagerly: their
premises cannot meet any sequent of the current branch, so if they fail the
sequent is unprovable.

A reused proof may repeat a sequent along a branch of the final tree; a last
pass cuts every such repetition short, which only lowers depth.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from typing import Union

from .calculus import AND_LEFT, Calculus, Proof, Rule, backward_instances
from .formula import Formula, subformula_closure
from .sequent import Sequent, to_set

DEFAULT_MAX_NODES = 2_000_000

_EAGER = AND_LEFT | {Rule.L_ORC, Rule.R_IMP}
_NEVER = sys.maxsize


def depth_bound(s: Sequent) -> int:
    """``(|S|+1)^2`` for ``S`` the subformula closure of ``s`` (with ``K⊥``)."""
    return (len(subformula_closure(s.antecedent, s.goal)) + 1) ** 2


@dataclass
class SearchStats:
    nodes_expanded: int = 0
    max_depth_reached: int = 0
    cache_hits: int = 0
    depth_bound: int = 0

    def as_dict(self) -> dict:
        return {"nodes_expanded": self.nodes_expanded,
                "max_depth_reached": self.max_depth_reached,
                "cache_hits": self.cache_hits,
                "depth_bound": self.depth_bound}


@dataclass(frozen=True)
class Proved:
    proof: Proof
    stats: SearchStats = field(compare=False)
    proved = True
    status = "PROVED"


@dataclass(frozen=True)
class Unprovable:
    stats: SearchStats = field(compare=False)
    proved = False
    status = "UNPROVABLE"


@dataclass(frozen=True)
class Inconclusive:
    """The node limit tripped before the search finished."""

    stats: SearchStats = field(compare=False)
    proved = False
    status = "INCONCLUSIVE"


SearchResult = Union[Proved, Unprovable, Inconclusive]


class _OutOfNodes(Exception):
    pass


class _Search:
    def __init__(self, bound: int, max_nodes: int):
        self.bound = bound
        self.max_nodes = max_nodes
        self.stats = SearchStats(depth_bound=bound)
        self.on_path: dict[Sequent, int] = {}
        self.proved: dict[Sequent, Proof] = {}
        self.failed: dict[Sequent, int] = {}

    def run(self, s: Sequent) -> Proof | None:
        return self.search(s, 0)[0]

    def search(self, s: Sequent, level: int) -> tuple[Proof | None, int]:
        """Return a proof or ``None``, with the lowest branch index that blocked the search."""
        hit = self.proved.get(s)
        if hit is not None:
            self.stats.cache_hits += 1
            return hit, _NEVER
        seen = self.on_path.get(s)
        if seen is not None:
            return None, seen
        budget = self.bound - level
        if budget <= 0:
            return None, -1
        failed = self.failed.get(s)
        if failed is not None and budget <= failed:
            self.stats.cache_hits += 1
            return None, _NEVER

        self.stats.nodes_expanded += 1
        if self.stats.nodes_expanded > self.max_nodes:
            raise _OutOfNodes
        self.stats.max_depth_reached = max(self.stats.max_depth_reached, level + 1)

        self.on_path[s] = level
        try:
            proof, low = self.expand(s, level)
        finally:
            del self.on_path[s]
        if proof is not None:
            self.proved[s] = proof
        elif low >= level:
            self.failed[s] = max(budget, self.failed.get(s, 0))
        return proof, low

    def expand(self, s: Sequent, level: int) -> tuple[Proof | None, int]:
        instances = backward_instances(Calculus.IELG_PLUS_PLUS, s)
        if instances[0].rule is Rule.AX:
            return Proof(s, Rule.AX, (), instances[0].annotation), _NEVER
        eager = [i for i in instances if i.rule in _EAGER]
        if eager:
            instances = eager[:1]
        low = _NEVER
        for inst in instances:
            subproofs = []
            for premise in inst.premises:
                p, blocked = self.search(premise, level + 1)
                low = min(low, blocked)
                if p is None:
                    break
                subproofs.append(p)
            else:
                return Proof(s, inst.rule, tuple(subproofs), inst.annotation), low
        return None, low


def _dedup(t: Proof) -> Proof:
    """Replace each node by the lowest node below it with the same sequent."""
    memo: dict[int, Proof] = {}

    def lowest(n: Proof, target: Sequent) -> Proof | None:
        stack = list(n.premises)
        found = None
        while stack:
            m = stack.pop()
            if m.conclusion == target:
                found = m
            stack.extend(m.premises)
        return found

    def go(n: Proof) -> Proof:
        key = id(n)
        if key in memo:
            return memo[key]
        start = n
        while True:
            again = lowest(n, n.conclusion)
            if again is None:
                break
            n = again
        out = n if not n.premises else Proof(n.conclusion, n.rule,
                                             tuple(go(p) for p in n.premises), n.annotation)
        memo[id(start)] = out
        return out

    return go(t)


def _ensure_recursion(bound: int):
    need = 4 * bound + 1000
    if sys.getrecursionlimit() < need:
        sys.setrecursionlimit(need)


def prove(s: Sequent, max_nodes: int = DEFAULT_MAX_NODES) -> SearchResult:
    """Decide ``s``; a proof, when found, is of the set form of ``s``."""
    root = to_set(s)
    bound = depth_bound(root)
    _ensure_recursion(bound)
    search = _Search(bound, max_nodes)
    try:
        proof = search.run(root)
    except _OutOfNodes:
        return Inconclusive(search.stats)
    if proof is None:
        return Unprovable(search.stats)
    return Proved(_dedup(proof), search.stats)


def prove_formula(f: Formula, max_nodes: int = DEFAULT_MAX_NODES) -> SearchResult:
    return prove(Sequent((), f), max_nodes)


__all__ = ["DEFAULT_MAX_NODES", "Inconclusive", "Proved", "SearchResult",
           "SearchStats", "Unprovable", "depth_bound", "prove", "prove_formula"]
