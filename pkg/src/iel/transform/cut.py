"""Cut elimination for ``IELG_MINUS`` and compilation of ``IELG_CUT`` proofs.

:func:`eliminate_cut` removes a single cut whose premises are cut-free, by
induction on (rank, level): rank is the length of the cut formula and level
the sum of the depths of the two premises.  Every recursive call either
lowers the rank or keeps it and lowers the level.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..calculus import (Calculus, Proof, Rule, check_proof, depth, node, with_premises)
from ..formula import BOTTOM, K_BOTTOM, And, Formula, Implies, Know, Or
from ..sequent import Sequent, msub
from .structural import (TransformError, contract, fit, k_contract, k_eliminate, ki1_close,
                         weaken)

_GOAL_MAIN = frozenset({Rule.R_AND, Rule.R_OR1, Rule.R_OR2, Rule.R_IMP, Rule.KI1})
_LEFT = frozenset({Rule.L_AND, Rule.L_OR, Rule.L_IMP})


@dataclass(frozen=True)
class CutInstance:
    left: Proof
    right: Proof
    cut_formula: Formula

    @property
    def rank(self) -> int:
        return self.cut_formula.length

    @property
    def level(self) -> int:
        return depth(self.left) + depth(self.right)


def eliminate_cut(c: CutInstance) -> Proof:
    """Cut-free ``IELG_MINUS`` proof of ``Γ₁,Γ₂ ⇒ G`` from ``Γ₁ ⇒ F`` and ``Γ₂,F ⇒ G``."""
    for side in (c.left, c.right):
        v = check_proof(Calculus.IELG_MINUS, side)
        if not v:
            raise TransformError(f"cut premise is not a cut-free IELG- proof: {v}")
    if c.left.goal != c.cut_formula or c.cut_formula not in c.right.conclusion:
        raise TransformError("premises do not match the cut formula")
    return _cut(c.left, c.right, c.cut_formula)


def _right_main(right: Proof, f: Formula) -> bool:
    if right.rule is Rule.KI1:
        return isinstance(f, Know)
    return (right.rule in _LEFT and right.annotation.principal == f
            and right.conclusion.multiplicity(f) == 1)


def _cut(left: Proof, right: Proof, f: Formula) -> Proof:
    g1 = left.antecedent
    g2 = tuple(msub(right.antecedent, [f]))
    target = Sequent(g1 + g2, right.goal)

    # one premise is an axiom
    if left.rule is Rule.AX:
        return weaken(right, *msub(g1, [f]))
    if right.rule is Rule.AX:
        atom = right.goal
        if atom in g2:
            return node(target, Rule.AX, principal=atom)
        return weaken(left, *g2)

    # left premise ends with U: the cut disappears
    if left.rule is Rule.U:
        w = weaken(left.premises[0], *g2)
        return w if right.goal == K_BOTTOM else node(target, Rule.U, [w])

    # permute upward through the left premise
    if left.rule not in _GOAL_MAIN:
        if left.rule is Rule.L_IMP:
            first = weaken(left.premises[0], *g2)
            return with_premises(left, [first, _cut(left.premises[1], right, f)], target)
        return with_premises(left, [_cut(p, right, f) for p in left.premises], target)

    # permute upward through the right premise
    if not _right_main(right, f):
        if right.rule is Rule.KI1:
            above = _cut(left, right.premises[0], f)
            return ki1_close(above, target.antecedent, right.goal)
        return with_premises(right, [_cut(left, p, f) for p in right.premises], target)

    # principal on both sides: reduce the rank
    if isinstance(f, Know):
        above = k_contract(right.premises[0], f.body)
        reduced = _cut(left.premises[0], above, f.body)
        return ki1_close(reduced, target.antecedent, right.goal)
    if isinstance(f, And):
        first = _cut(left.premises[0], right.premises[0], f.left)
        second = _cut(left.premises[1], first, f.right)
        return fit(second, target.antecedent)
    if isinstance(f, Or):
        i = 0 if left.rule is Rule.R_OR1 else 1
        return _cut(left.premises[0], right.premises[i], (f.left, f.right)[i])
    if isinstance(f, Implies):
        antecedent_proof = _cut(left, right.premises[0], f)
        consequent_proof = _cut(antecedent_proof, left.premises[0], f.left)
        result = _cut(consequent_proof, right.premises[1], f.right)
        return fit(result, target.antecedent)
    raise TransformError(f"no reduction for cut formula {f}")  # pragma: no cover


def eliminate_cuts(t: Proof) -> Proof:
    """Turn a proof using ``IELG_CUT`` and ``IELG_MINUS`` rules into a cut-free ``IELG_MINUS`` one.

    Works bottom-up, so each cut is reduced only after the cuts above it are
    gone.  The ``IELG_CUT``-only rules are compiled away on the way down:
    ``C`` by contraction, ``KC`` by K-contraction, ``KE`` by K-elimination,
    ``KI0`` by one ``KI1``, and the bottom axioms by ``KI1`` followed by ``U``.
    """
    v = check_proof((Calculus.IELG_CUT, Calculus.IELG_MINUS), t)
    if not v:
        raise TransformError(f"input is not a valid IELG proof: {v}")
    return _compile(t)


def _bottom_axiom(c: Sequent, closing: Formula) -> Proof:
    """``Γ,⊥ ⇒ F`` or ``Γ,K⊥ ⇒ F`` via ``Γ,… ⇒ ⊥``, ``KI1`` to ``K⊥``, then ``U``."""
    ax_antecedent = c.antecedent if closing == BOTTOM else c.antecedent + (BOTTOM,)
    ax = node(Sequent(ax_antecedent, BOTTOM), Rule.AX, principal=BOTTOM)
    k = ki1_close(ax, c.antecedent, K_BOTTOM)
    return k if c.goal == K_BOTTOM else node(c, Rule.U, [k])


def _compile(t: Proof) -> Proof:
    ps = [_compile(p) for p in t.premises]
    rule, c, ann = t.rule, t.conclusion, t.annotation
    if rule is Rule.CUT:
        return _cut(ps[0], ps[1], ann.principal)
    if rule is Rule.C:
        p = ps[0]
        for d in ann.delta:
            p = contract(p, d)
        return p
    if rule is Rule.KC:
        return k_contract(ps[0], ann.principal)
    if rule is Rule.KE:
        return k_eliminate(ps[0], Know(ann.principal))
    if rule is Rule.KI0:
        return ki1_close(ps[0], c.antecedent, c.goal)
    if rule is Rule.BOT_AX:
        if c.goal == BOTTOM:
            return node(c, Rule.AX, principal=BOTTOM)
        return _bottom_axiom(c, BOTTOM)
    if rule is Rule.KBOT_AX:
        return _bottom_axiom(c, K_BOTTOM)
    return with_premises(t, ps)
