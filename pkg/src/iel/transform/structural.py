"""Depth-preserving structural transformations of cut-free proofs.

Each function is a structural recursion over an ``IELG_MINUS`` proof that
follows the induction of the corresponding admissibility argument: the rule at
the root is re-applied to transformed premises, and the K-introduction rule is
rebuilt by :func:`ki1_close`, which absorbs any new K-formulas into ``Δ``.

None of these functions searches; they only rewrite.  Depth never grows except
in :func:`ki_ext` (by at most one).
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Sequence

from ..calculus import LEAF_RULES, Proof, Rule, node, with_premises
from ..formula import And, Formula, Implies, Know, Or
from ..sequent import Sequent, k_bodies, msub


class TransformError(ValueError):
    """Input proof does not meet a transformer's precondition."""


def weaken(t: Proof, *formulas: Formula) -> Proof:
    """Add ``formulas`` to the antecedent of every sequent that needs it.

    At a K-introduction node an added ``KB`` joins ``K(Δ)`` and ``B`` is added
    above it as well, which keeps the side condition on ``Γ`` intact.
    """
    if not formulas:
        return t
    return _weaken(t, tuple(formulas))


def _weaken(t: Proof, extra: tuple[Formula, ...]) -> Proof:
    c = t.conclusion.plus(*extra)
    rule = t.rule
    if rule in LEAF_RULES:
        return Proof(c, rule, (), t.annotation)
    if rule is Rule.KI1:
        ks = k_bodies(extra)
        return with_premises(t, [_weaken(t.premises[0], extra + ks)], c,
                             delta=t.annotation.delta + ks)
    if rule is Rule.KI1W:
        ks = k_bodies(extra)
        return with_premises(t, [_weaken(t.premises[0], extra + ks)], c,
                             delta2=t.annotation.delta2 + ks)
    if rule is Rule.KI0:
        raise TransformError("cannot weaken the conclusion of KI0")
    if rule is Rule.CUT:
        left, right = t.premises
        return with_premises(t, [_weaken(left, extra), right], c)
    return with_premises(t, [_weaken(p, extra) for p in t.premises], c)


def ki1_close(premise: Proof, antecedent: Sequence[Formula], goal: Formula) -> Proof:
    """Conclude ``antecedent ⇒ goal`` by one ``KI1`` with maximal ``Δ``.

    ``Δ`` is the multiset of bodies of all K-formulas in ``antecedent``; the
    premise is weakened up to ``antecedent, Δ``.  Its antecedent must already
    be contained in that multiset.
    """
    if not isinstance(goal, Know) or premise.goal != goal.body:
        raise TransformError(f"premise goal {premise.goal} does not match {goal}")
    antecedent = tuple(antecedent)
    delta = k_bodies(antecedent)
    try:
        extra = msub(antecedent + delta, premise.antecedent)
    except ValueError:
        raise TransformError(
            f"premise {premise.conclusion} does not fit under KI1 with conclusion antecedent "
            + ", ".join(map(str, antecedent))) from None
    return node(Sequent(antecedent, goal), Rule.KI1, [weaken(premise, *extra)], delta=delta)


def ki_ext(t: Proof, gamma1: Iterable[Formula], delta: Iterable[Formula],
           gamma2: Iterable[Formula]) -> Proof:
    """From ``Γ₁,K(Δ),Δ,Γ₂ ⇒ F`` derive ``Γ₁,K(Δ,Γ₂) ⇒ KF`` (depth + 1)."""
    gamma1, delta, gamma2 = tuple(gamma1), tuple(delta), tuple(gamma2)
    expected = gamma1 + tuple(map(Know, delta)) + delta + gamma2
    if Counter(expected) != t.conclusion.counts:
        raise TransformError("partition does not match the antecedent")
    conclusion = gamma1 + tuple(map(Know, delta + gamma2))
    return ki1_close(t, conclusion, Know(t.goal))


_LEFT_RULE = {And: Rule.L_AND, Or: Rule.L_OR, Implies: Rule.L_IMP}


def _invert(t: Proof, target: Formula, replacement: tuple[Formula, ...], pick: int) -> Proof:
    rule = t.rule
    if rule is _LEFT_RULE[type(target)] and t.annotation.principal == target:
        return t.premises[pick]
    c = t.conclusion.minus(target).plus(*replacement)
    if rule in LEAF_RULES:
        return Proof(c, rule, (), t.annotation)
    if rule is Rule.KI1:
        return ki1_close(_invert(t.premises[0], target, replacement, pick), c.antecedent, t.goal)
    return with_premises(t, [_invert(p, target, replacement, pick) for p in t.premises], c)


def invert_left(t: Proof, principal: Formula) -> Proof | list[Proof]:
    """Invert the left rule for ``principal`` without increasing depth.

    ``A&B`` gives a proof of ``Γ,A,B ⇒ C``; ``A|B`` gives the two proofs of
    ``Γ,A ⇒ C`` and ``Γ,B ⇒ C``; ``A->B`` gives a proof of ``Γ,B ⇒ C``.
    """
    if principal not in t.conclusion:
        raise TransformError(f"{principal} is not in the antecedent")
    if isinstance(principal, And):
        return _invert(t, principal, (principal.left, principal.right), 0)
    if isinstance(principal, Or):
        return [_invert(t, principal, (principal.left,), 0),
                _invert(t, principal, (principal.right,), 1)]
    if isinstance(principal, Implies):
        return _invert(t, principal, (principal.right,), 1)
    raise TransformError(f"no invertible left rule for {principal}")


def contract(t: Proof, f: Formula) -> Proof:
    """From ``Γ,F,F ⇒ G`` derive ``Γ,F ⇒ G`` without increasing depth."""
    if t.conclusion.multiplicity(f) < 2:
        raise TransformError(f"{f} occurs fewer than two times")
    c = t.conclusion.minus(f)
    rule = t.rule
    if rule in LEAF_RULES:
        return Proof(c, rule, (), t.annotation)
    if rule is Rule.KI1:
        p = t.premises[0]
        if isinstance(f, Know):
            # both copies sit in K(Δ): drop one KA and one A above
            p = contract(contract(p, f), f.body)
        else:
            p = contract(p, f)
        return ki1_close(p, c.antecedent, t.goal)
    if t.annotation.principal == f and rule is _LEFT_RULE.get(type(f)):
        if rule is Rule.L_AND:
            p = _invert(t.premises[0], f, (f.left, f.right), 0)
            p = contract(contract(p, f.left), f.right)
            return with_premises(t, [p], c)
        if rule is Rule.L_OR:
            ps = [contract(_invert(t.premises[i], f, (side,), i), side)
                  for i, side in enumerate((f.left, f.right))]
            return with_premises(t, ps, c)
        left = contract(t.premises[0], f)
        right = contract(_invert(t.premises[1], f, (f.right,), 1), f.right)
        return with_premises(t, [left, right], c)
    return with_premises(t, [contract(p, f) for p in t.premises], c)


def k_eliminate(t: Proof, kf: Formula) -> Proof:
    """From ``Γ,KF ⇒ G`` derive ``Γ,F ⇒ G`` without increasing depth."""
    if not isinstance(kf, Know):
        raise TransformError(f"{kf} is not a K-formula")
    if kf not in t.conclusion:
        raise TransformError(f"{kf} is not in the antecedent")
    f = kf.body
    c = t.conclusion.minus(kf).plus(f)
    rule = t.rule
    if rule in LEAF_RULES:
        return Proof(c, rule, (), t.annotation)
    if rule is Rule.KI1:
        p = contract(k_eliminate(t.premises[0], kf), f)
        return ki1_close(p, c.antecedent, t.goal)
    return with_premises(t, [k_eliminate(p, kf) for p in t.premises], c)


def k_contract(t: Proof, f: Formula) -> Proof:
    """From ``Γ,KF,F ⇒ G`` derive ``Γ,F ⇒ G``: K-elimination, then contraction."""
    if f not in t.conclusion:
        raise TransformError(f"{f} is not in the antecedent")
    return contract(k_eliminate(t, Know(f)), f)


def fit(t: Proof, antecedent: Iterable[Formula]) -> Proof:
    """Adjust multiplicities to ``antecedent`` by contraction and weakening.

    Every formula of the proof's antecedent must occur in the target.
    """
    want = Counter(antecedent)
    have = t.conclusion.counts
    for f in have:
        if not want[f]:
            raise TransformError(f"{f} cannot be removed by contraction")
    for f, n in have.items():
        for _ in range(n - want[f]):
            t = contract(t, f)
    return weaken(t, *(want - have).elements())
