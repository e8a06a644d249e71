"""Conversions between the cut-free calculi.

:func:`expand_to_minus` replays every ``IELG_PLUS``/``IELG_PLUS_PLUS`` rule by
its ``IELG_MINUS`` ground rule, adjusting multiplicities with admissible
weakening and contraction.  :func:`monotonize` and :func:`set_normalize` turn
an ``IELG_PLUS_PLUS`` derivation into the set-sequent form the prover works in.
"""

from __future__ import annotations

from ..calculus import (AND_LEFT, IMP_LEFT, OR_LEFT, Calculus, Proof, Rule, check_proof,
                        dropped_formulas, is_monotone, node, validate_instance, with_premises)
from ..formula import Know
from ..sequent import Sequent, k_bodies, k_prefix_set, to_set
from .structural import TransformError, fit, ki1_close, weaken


def expand_to_minus(t: Proof, calculus: Calculus = Calculus.IELG_PLUS_PLUS) -> Proof:
    """Rewrite a valid ``IELG_PLUS``/``IELG_PLUS_PLUS`` proof into ``IELG_MINUS``.

    The end-sequent is kept exactly; depth may grow.
    """
    if calculus not in (Calculus.IELG_PLUS, Calculus.IELG_PLUS_PLUS, Calculus.IELG_MINUS):
        raise TransformError(f"cannot expand from {calculus.value}")
    v = check_proof(calculus, t)
    if not v:
        raise TransformError(f"input is not a valid {calculus.value} proof: {v}")
    return _expand(t)


def _expand(t: Proof) -> Proof:
    ps = [_expand(p) for p in t.premises]
    c, rule = t.conclusion, t.rule
    if validate_instance(Calculus.IELG_MINUS, rule, c, [p.conclusion for p in ps], t.annotation):
        return with_premises(t, ps)
    a = c.antecedent
    if rule in AND_LEFT:
        f = t.annotation.principal
        above = fit(ps[0], a + (f.left, f.right))
        return fit(node(c.plus(f), Rule.L_AND, [above], principal=f), a)
    if rule in OR_LEFT:
        f = t.annotation.principal
        sides = [fit(p, a + (d,)) for p, d in zip(ps, (f.left, f.right))]
        return fit(node(c.plus(f), Rule.L_OR, sides, principal=f), a)
    if rule in IMP_LEFT:
        f = t.annotation.principal
        first = fit(ps[0], a + (f,))
        second = fit(ps[1], a + (f.right,))
        return fit(node(c.plus(f), Rule.L_IMP, [first, second], principal=f), a)
    if rule in (Rule.R_IMP, Rule.R_IMPW):
        return node(c, Rule.R_IMP, [fit(ps[0], a + (c.goal.left,))])
    if rule in (Rule.R_AND, Rule.R_OR1, Rule.R_OR2, Rule.U):
        return with_premises(t, [fit(p, a) for p in ps])
    if rule in (Rule.KI1, Rule.KI1W, Rule.KI):
        return ki1_close(fit(ps[0], a + k_bodies(a)), a, c.goal)
    if rule is Rule.C:
        return fit(ps[0], a)
    if rule is Rule.AX:
        return node(c, Rule.AX, principal=c.goal)
    raise TransformError(f"no IELG- simulation for rule {rule.value}")


def monotonize(t: Proof) -> Proof:
    """Make every rule instance monotone without changing the end-sequent.

    Root to leaf, left to right: at a node that drops a conclusion formula
    ``A`` from some premise, the whole subproof is weakened by ``A`` (which
    also adds ``B`` above a K-introduction when ``A = KB``) and a contraction
    on ``A`` is inserted below it.
    """
    v = check_proof(Calculus.IELG_PLUS_PLUS, t)
    if not v:
        raise TransformError(f"input is not a valid IELG++ proof: {v}")
    return _monotonize(t)


def _monotonize(t: Proof) -> Proof:
    conclusion = t.conclusion
    added = []
    while True:
        dropped = dropped_formulas(t)
        if not dropped:
            break
        t = weaken(t, dropped[0])
        added.append(dropped[0])
    t = with_premises(t, [_monotonize(p) for p in t.premises])
    if added:
        t = node(conclusion, Rule.C, [t], delta=tuple(added))
    return t


def set_normalize(t: Proof) -> Proof:
    """Collapse every antecedent to a set and drop the nodes that become trivial.

    The rules are renamed to their set-form variants: a left rule whose added
    formulas were partly present becomes the matching contraction-absorbing
    rule, ``R->`` with the hypothesis already present becomes ``R->w``, and a
    K-introduction whose conclusion already holds some K-free body becomes
    ``KI1w``.  Depth never grows.
    """
    if not is_monotone(t):
        raise TransformError("set normalization needs a monotone proof")
    return _normalize(t)


def _normalize(t: Proof) -> Proof:
    ps = [_normalize(p) for p in t.premises]
    c = to_set(t.conclusion)
    for p in ps:
        if p.conclusion == c:
            return p
    x = c.support
    rule, f = t.rule, t.annotation.principal
    if rule is Rule.AX:
        return node(c, Rule.AX, principal=c.goal)
    if rule in AND_LEFT:
        if f.left in x:
            rule = Rule.L_AND1C
        elif f.right in x:
            rule = Rule.L_AND2C
        else:
            rule = Rule.L_ANDC
        return node(c, rule, ps, principal=f)
    if rule in OR_LEFT:
        return node(c, Rule.L_ORC, ps, principal=f)
    if rule in IMP_LEFT:
        return node(c, Rule.L_IMPC, ps, principal=f)
    if rule in (Rule.R_IMP, Rule.R_IMPW):
        return node(c, Rule.R_IMPW if c.goal.left in x else Rule.R_IMP, ps)
    if rule in (Rule.R_AND, Rule.R_OR1, Rule.R_OR2, Rule.U):
        return node(c, rule, ps)
    if rule in (Rule.KI1, Rule.KI1W, Rule.KI):
        return _k_intro(c, ps)
    raise TransformError(f"no set form for rule {rule.value}")


def _k_intro(c: Sequent, ps) -> Proof:
    bodies = k_prefix_set(c.support)
    d1 = tuple(b for b in bodies if b in c and not isinstance(b, Know))
    if d1:
        return node(c, Rule.KI1W, ps, delta1=d1, delta2=tuple(bodies - set(d1)))
    return node(c, Rule.KI1, ps, delta=tuple(bodies))
