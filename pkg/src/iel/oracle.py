"""Forward saturation: an independent check of the prover's verdicts.

Every set-sequent ``X ⇒ G`` with ``X ⊆ S`` and ``G ∈ S`` is considered, where
``S`` is the subformula closure of the query.  Antecedents are bitmasks over
``S``; every backward rule either keeps the antecedent or strictly enlarges
it, so processing masks from the largest value down means any premise with a
larger antecedent is already settled.  Premises with the same antecedent are
handled by a local least fixpoint over the goals.

No proofs are built and no search is done, which is the point: the only thing
shared with the prover is the rule set read forwards.
"""

from __future__ import annotations

from .formula import K_BOTTOM, And, Formula, Implies, Know, Or, subformula_closure
from .sequent import Sequent, to_set

DEFAULT_LIMIT = 14


class ClosureTooLarge(ValueError):
    """The subformula closure exceeds the oracle's configured limit."""


def saturate_oracle(s: Sequent, limit: int = DEFAULT_LIMIT) -> bool:
    """Whether ``to_set(s)`` is derivable, by saturating all sequents over its closure."""
    s = to_set(s)
    closure = sorted(subformula_closure(s.antecedent, s.goal))
    if len(closure) > limit:
        raise ClosureTooLarge(f"closure has {len(closure)} formulas, limit is {limit}")
    table = _saturate(closure)
    index = {f: i for i, f in enumerate(closure)}
    mask = 0
    for f in s.antecedent:
        mask |= 1 << index[f]
    return bool(table[mask] >> index[s.goal] & 1)


def derivable_table(closure: list[Formula]) -> list[int]:
    """``table[X]`` is the bitmask of goals ``G`` with ``X ⇒ G`` derivable."""
    return _saturate(list(closure))


def _saturate(closure: list[Formula]) -> list[int]:
    n = len(closure)
    index = {f: i for i, f in enumerate(closure)}
    bit = [1 << i for i in range(n)]
    full = (1 << n) - 1
    kbot = bit[index[K_BOTTOM]]

    def bit_of(f: Formula) -> int:
        return bit[index[f]]

    atomic = [i for i, f in enumerate(closure) if f.is_atomic]
    ands = [(bit[i], bit_of(f.left), bit_of(f.right)) for i, f in enumerate(closure)
            if isinstance(f, And)]
    ors = [(bit[i], bit_of(f.left), bit_of(f.right)) for i, f in enumerate(closure)
           if isinstance(f, Or)]
    imps = [(bit[i], bit_of(f.left), bit_of(f.right)) for i, f in enumerate(closure)
            if isinstance(f, Implies)]
    knows = [(bit[i], bit_of(f.body)) for i, f in enumerate(closure) if isinstance(f, Know)]

    table = [0] * (1 << n)
    for x in range(full, -1, -1):
        k_mask = 0
        for kb, body in knows:
            if x & kb:
                k_mask |= body
        kx = x | k_mask

        # left rules whose premise antecedents are strictly larger: fixed contributions
        fixed = 0
        for ab, lb, rb in ands:
            if x & ab and (x | lb | rb) != x:
                fixed |= table[x | lb | rb]
        for ob, lb, rb in ors:
            if x & ob and not x & lb and not x & rb:
                fixed |= table[x | lb] & table[x | rb]

        derived = fixed
        for i in atomic:
            if x & bit[i]:
                derived |= bit[i]
        while True:
            before = derived
            if derived & kbot:
                derived = full
                break
            for ib, fb, gb in imps:
                if x & ib and not x & gb and derived & fb:
                    derived |= table[x | gb]
            for ab, lb, rb in ands:
                if derived & lb and derived & rb:
                    derived |= ab
            for ob, lb, rb in ors:
                if derived & (lb | rb):
                    derived |= ob
            for ib, fb, gb in imps:
                hyp = x | fb
                if derived & ib:
                    continue
                if (derived if hyp == x else table[hyp]) & gb:
                    derived |= ib
            for kb, body in knows:
                if not derived & kb and (derived if kx == x else table[kx]) & body:
                    derived |= kb
            if derived == before:
                break
        table[x] = derived
    return table


__all__ = ["ClosureTooLarge", "DEFAULT_LIMIT", "derivable_table", "saturate_oracle"]
