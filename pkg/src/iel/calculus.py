"""Rule tables, proof trees and the proof checker for the four calculi.

Calculi
-------
``IELG_CUT``        the straightforward sequent system with cut: context-sharing
                    propositional rules, explicit contraction ``C``, axioms
                    ``Ax``/``BotAx``/``KBotAx``, and the modal rules ``KI0``,
                    ``KC`` and ``KE``.
``IELG_MINUS``      cut-free and structural-rule-free; modal rules ``KI1`` and ``U``.
``IELG_PLUS``       ``IELG_MINUS`` without ``KI1``, plus ``C``, ``KI`` and the
                    split-context implication rule ``Γ⇒F / Γ,G⇒H``.
``IELG_PLUS_PLUS``  ``IELG_MINUS`` plus ``C`` and the contraction-absorbing
                    variants ``L&c``, ``L&1c``, ``L&2c``, ``L|c``, ``R->w``,
                    ``L->c``, ``KI1w``.

Every node stores the witness data its rule needs (principal formula, the
multiset ``delta`` of a K-rule, the cut formula), so checking one node is a
direct multiset computation.

For ``IELG_PLUS_PLUS`` a node whose sequents are all set-sequents is also
accepted when it is the set-image of a monotone instance of its rule, i.e.
what remains of a monotone instance after every antecedent is collapsed to a
set.  This is the form of the prover's derivations; such figures cannot in
general be matched by exact multiset arithmetic (e.g. ``p&p`` whose premise
``X,p&p,p`` collapses the two copies of ``p``).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Iterable, Iterator, Sequence

from .formula import K_BOTTOM, And, Bottom, Formula, Implies, Know, Or
from .sequent import Sequent, k_bodies, k_prefix_set, msub_le


class Calculus(Enum):
    IELG_CUT = "ielg"
    IELG_MINUS = "ielg-"
    IELG_PLUS = "ielg+"
    IELG_PLUS_PLUS = "ielg++"


class Rule(Enum):
    AX = "Ax"
    BOT_AX = "BotAx"
    KBOT_AX = "KBotAx"
    L_AND = "L&"
    R_AND = "R&"
    L_OR = "L|"
    R_OR1 = "R|1"
    R_OR2 = "R|2"
    L_IMP = "L->"
    R_IMP = "R->"
    KI0 = "KI0"
    KC = "KC"
    KE = "KE"
    CUT = "Cut"
    KI1 = "KI1"
    U = "U"
    C = "C"
    KI = "KI"
    L_AND1C = "L&1c"
    L_AND2C = "L&2c"
    L_ANDC = "L&c"
    L_ORC = "L|c"
    R_IMPW = "R->w"
    L_IMPC = "L->c"
    KI1W = "KI1w"


_PROPOSITIONAL = {Rule.AX, Rule.L_AND, Rule.R_AND, Rule.L_OR, Rule.R_OR1, Rule.R_OR2,
                  Rule.L_IMP, Rule.R_IMP}

RULES: dict[Calculus, frozenset[Rule]] = {
    Calculus.IELG_CUT: frozenset(_PROPOSITIONAL | {Rule.BOT_AX, Rule.KBOT_AX, Rule.KI0, Rule.KC,
                                                   Rule.KE, Rule.CUT, Rule.C}),
    Calculus.IELG_MINUS: frozenset(_PROPOSITIONAL | {Rule.KI1, Rule.U}),
    Calculus.IELG_PLUS: frozenset(_PROPOSITIONAL | {Rule.C, Rule.KI, Rule.U}),
    Calculus.IELG_PLUS_PLUS: frozenset(_PROPOSITIONAL | {
        Rule.KI1, Rule.U, Rule.C, Rule.L_AND1C, Rule.L_AND2C, Rule.L_ANDC, Rule.L_ORC,
        Rule.R_IMPW, Rule.L_IMPC, Rule.KI1W}),
}

LEAF_RULES = frozenset({Rule.AX, Rule.BOT_AX, Rule.KBOT_AX})
AND_LEFT = frozenset({Rule.L_AND, Rule.L_ANDC, Rule.L_AND1C, Rule.L_AND2C})
OR_LEFT = frozenset({Rule.L_OR, Rule.L_ORC})
IMP_LEFT = frozenset({Rule.L_IMP, Rule.L_IMPC})
LEFT_RULES = AND_LEFT | OR_LEFT | IMP_LEFT
K_INTRO = frozenset({Rule.KI1, Rule.KI1W, Rule.KI, Rule.KI0})


@dataclass(frozen=True)
class Annotation:
    """Rule-specific witness data.

    ``principal``  main antecedent formula of a left rule, the closing atom of
                   ``Ax``, the cut formula of ``Cut``, the ``F`` of ``KC``/``KE``.
    ``delta``      ``Δ`` of ``KI1``; ``Γ₂`` of ``KI``; the contracted multiset of ``C``.
    ``delta1``, ``delta2``  the partition of ``KI1w``.
    """

    principal: Formula | None = None
    delta: tuple[Formula, ...] | None = None
    delta1: tuple[Formula, ...] | None = None
    delta2: tuple[Formula, ...] | None = None

    def __post_init__(self):
        for name in ("delta", "delta1", "delta2"):
            v = getattr(self, name)
            if v is not None:
                object.__setattr__(self, name, tuple(sorted(v)))


NO_ANNOTATION = Annotation()


@dataclass(frozen=True)
class Proof:
    conclusion: Sequent
    rule: Rule
    premises: tuple[Proof, ...] = ()
    annotation: Annotation = field(default=NO_ANNOTATION)

    @property
    def goal(self) -> Formula:
        return self.conclusion.goal

    @property
    def antecedent(self) -> tuple[Formula, ...]:
        return self.conclusion.antecedent

    def nodes(self) -> Iterator[Proof]:
        """Pre-order, left to right."""
        stack = [self]
        while stack:
            t = stack.pop()
            yield t
            stack.extend(reversed(t.premises))

    def subtree(self, path: Sequence[int]) -> Proof:
        t = self
        for i in path:
            t = t.premises[i]
        return t


ProofTree = Proof


@dataclass(frozen=True)
class RuleInstance:
    calculus: Calculus
    rule: Rule
    conclusion: Sequent
    premises: tuple[Sequent, ...]
    annotation: Annotation = NO_ANNOTATION


@dataclass(frozen=True)
class Verdict:
    """``Valid`` when ``ok``; otherwise the failing node path and a reason."""

    ok: bool
    path: tuple[int, ...] = ()
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "VALID"
        where = "/".join(map(str, self.path)) or "root"
        return f"INVALID at {where}: {self.reason}"


CheckVerdict = Verdict
VALID = Verdict(True)


class _Reject(Exception):
    pass


def _need(cond: bool, reason: str):
    if not cond:
        raise _Reject(reason)


def _same_ms(actual: Iterable[Formula], expected: Iterable[Formula], what: str):
    a, e = Counter(actual), Counter(expected)
    if a != e:
        missing = e - a
        extra = a - e
        bits = []
        if missing:
            bits.append("missing " + ", ".join(map(str, sorted(missing.elements()))))
        if extra:
            bits.append("unexpected " + ", ".join(map(str, sorted(extra.elements()))))
        raise _Reject(f"antecedent mismatch in {what}: " + "; ".join(bits))


def _premise_count(premises, n: int):
    _need(len(premises) == n, f"expected {n} premise(s), got {len(premises)}")


def _principal(ann: Annotation, conclusion: Sequent, kind: type) -> Formula:
    p = ann.principal
    _need(p is not None, "missing principal formula annotation")
    _need(isinstance(p, kind), f"principal {p} is not a {kind.__name__} formula")
    _need(p in conclusion, f"principal {p} not in the conclusion antecedent")
    return p


def _goal(s: Sequent, kind: type) -> Formula:
    _need(isinstance(s.goal, kind), f"goal {s.goal} is not a {kind.__name__} formula")
    return s.goal


def _goals(premises, goals):
    for i, (p, g) in enumerate(zip(premises, goals)):
        _need(p.goal == g, f"premise {i} goal {p.goal} should be {g}")


def _no_k(formulas: Iterable[Formula], what: str):
    bad = [f for f in formulas if isinstance(f, Know)]
    _need(not bad, f"side condition: {what} contains K-formula {bad[0]}" if bad else "")


def _check_exact(cal: Calculus, rule: Rule, c: Sequent, ps: Sequence[Sequent], ann: Annotation):
    a = c.antecedent
    if rule is Rule.AX:
        _premise_count(ps, 0)
        atom = ann.principal if ann.principal is not None else c.goal
        _need(atom.is_atomic, f"axiom principal {atom} must be a variable or bottom")
        _need(atom == c.goal, f"axiom principal {atom} differs from goal {c.goal}")
        _need(atom in c, f"axiom principal {atom} not in antecedent")
    elif rule is Rule.BOT_AX:
        _premise_count(ps, 0)
        _need(Bottom() in c, "bottom not in antecedent")
    elif rule is Rule.KBOT_AX:
        _premise_count(ps, 0)
        _need(K_BOTTOM in c, "K-bottom not in antecedent")
    elif rule is Rule.L_AND:
        _premise_count(ps, 1)
        p = _principal(ann, c, And)
        _same_ms(ps[0].antecedent, c.minus(p).antecedent + (p.left, p.right), "premise")
        _goals(ps, [c.goal])
    elif rule is Rule.R_AND:
        _premise_count(ps, 2)
        g = _goal(c, And)
        for q in ps:
            _same_ms(q.antecedent, a, "premise")
        _goals(ps, [g.left, g.right])
    elif rule is Rule.L_OR:
        _premise_count(ps, 2)
        p = _principal(ann, c, Or)
        rest = c.minus(p).antecedent
        _same_ms(ps[0].antecedent, rest + (p.left,), "left premise")
        _same_ms(ps[1].antecedent, rest + (p.right,), "right premise")
        _goals(ps, [c.goal, c.goal])
    elif rule in (Rule.R_OR1, Rule.R_OR2):
        _premise_count(ps, 1)
        g = _goal(c, Or)
        _same_ms(ps[0].antecedent, a, "premise")
        _goals(ps, [g.left if rule is Rule.R_OR1 else g.right])
    elif rule is Rule.L_IMP:
        _premise_count(ps, 2)
        p = _principal(ann, c, Implies)
        rest = c.minus(p).antecedent
        if cal is Calculus.IELG_PLUS:
            _same_ms(ps[0].antecedent, rest, "left premise")
        else:
            _same_ms(ps[0].antecedent, a, "left premise")
        _same_ms(ps[1].antecedent, rest + (p.right,), "right premise")
        _goals(ps, [p.left, c.goal])
    elif rule is Rule.R_IMP:
        _premise_count(ps, 1)
        g = _goal(c, Implies)
        _same_ms(ps[0].antecedent, a + (g.left,), "premise")
        _goals(ps, [g.right])
    elif rule is Rule.KI0:
        _premise_count(ps, 1)
        g = _goal(c, Know)
        _need(all(isinstance(f, Know) for f in a), "KI0 conclusion antecedent must be all K-formulas")
        _same_ms(ps[0].antecedent, k_bodies(a), "premise")
        _goals(ps, [g.body])
    elif rule is Rule.KC:
        _premise_count(ps, 1)
        p = ann.principal
        _need(p is not None and p in c, "KC principal missing from conclusion")
        _same_ms(ps[0].antecedent, a + (Know(p),), "premise")
        _goals(ps, [c.goal])
    elif rule is Rule.KE:
        _premise_count(ps, 1)
        p = ann.principal
        _need(p is not None and p in c, "KE principal missing from conclusion")
        _same_ms(ps[0].antecedent, c.minus(p).antecedent + (Know(p),), "premise")
        _goals(ps, [c.goal])
    elif rule is Rule.CUT:
        _premise_count(ps, 2)
        f = ann.principal
        _need(f is not None, "missing cut formula")
        _need(ps[0].goal == f, f"left premise goal {ps[0].goal} is not the cut formula {f}")
        _need(ps[1].goal == c.goal, "right premise goal differs from conclusion goal")
        _need(msub_le(ps[0].antecedent, a), "left premise antecedent not contained in conclusion")
        rest = list((c.counts - Counter(ps[0].antecedent)).elements())
        _same_ms(ps[1].antecedent, rest + [f], "right premise")
    elif rule is Rule.KI1:
        _premise_count(ps, 1)
        g = _goal(c, Know)
        delta = ann.delta
        _need(delta is not None, "missing delta annotation")
        kd = tuple(Know(d) for d in delta)
        _need(msub_le(kd, a), "K(delta) not contained in conclusion antecedent")
        _no_k(c.minus(*kd).antecedent, "gamma")
        _same_ms(ps[0].antecedent, a + delta, "premise")
        _goals(ps, [g.body])
    elif rule is Rule.U:
        _premise_count(ps, 1)
        _same_ms(ps[0].antecedent, a, "premise")
        _goals(ps, [K_BOTTOM])
    elif rule is Rule.C:
        _premise_count(ps, 1)
        delta = ann.delta
        _need(bool(delta), "missing contracted formulas")
        _need(msub_le(delta, a), "contracted formulas not in conclusion")
        _same_ms(ps[0].antecedent, a + delta, "premise")
        _goals(ps, [c.goal])
    elif rule is Rule.KI:
        _premise_count(ps, 1)
        g = _goal(c, Know)
        gamma2 = ann.delta
        _need(gamma2 is not None, "missing gamma2 annotation")
        kg = tuple(Know(d) for d in gamma2)
        _need(msub_le(kg, a), "K(gamma2) not contained in conclusion antecedent")
        _same_ms(ps[0].antecedent, c.minus(*kg).antecedent + gamma2, "premise")
        _goals(ps, [g.body])
    elif rule is Rule.L_ANDC:
        _premise_count(ps, 1)
        p = _principal(ann, c, And)
        _same_ms(ps[0].antecedent, a + (p.left, p.right), "premise")
        _goals(ps, [c.goal])
    elif rule in (Rule.L_AND1C, Rule.L_AND2C):
        _premise_count(ps, 1)
        p = _principal(ann, c, And)
        kept, added = (p.left, p.right) if rule is Rule.L_AND1C else (p.right, p.left)
        _need(msub_le((p, kept), a), f"conclusion must contain {p} and {kept}")
        _same_ms(ps[0].antecedent, a + (added,), "premise")
        _goals(ps, [c.goal])
    elif rule is Rule.L_ORC:
        _premise_count(ps, 2)
        p = _principal(ann, c, Or)
        _same_ms(ps[0].antecedent, a + (p.left,), "left premise")
        _same_ms(ps[1].antecedent, a + (p.right,), "right premise")
        _goals(ps, [c.goal, c.goal])
    elif rule is Rule.R_IMPW:
        _premise_count(ps, 1)
        g = _goal(c, Implies)
        _need(g.left in c, f"R->w needs {g.left} in the conclusion antecedent")
        _same_ms(ps[0].antecedent, a, "premise")
        _goals(ps, [g.right])
    elif rule is Rule.L_IMPC:
        _premise_count(ps, 2)
        p = _principal(ann, c, Implies)
        _same_ms(ps[0].antecedent, a, "left premise")
        _same_ms(ps[1].antecedent, a + (p.right,), "right premise")
        _goals(ps, [p.left, c.goal])
    elif rule is Rule.KI1W:
        _premise_count(ps, 1)
        g = _goal(c, Know)
        d1, d2 = ann.delta1, ann.delta2
        _need(d1 is not None and d2 is not None, "missing delta1/delta2 annotation")
        kd = tuple(Know(d) for d in d1 + d2)
        _need(msub_le(d1 + kd, a), "delta1, K(delta1, delta2) not contained in conclusion")
        gamma = c.minus(*kd).antecedent
        _no_k(gamma, "gamma, delta1")
        _same_ms(ps[0].antecedent, a + d2, "premise")
        _goals(ps, [g.body])
    else:  # pragma: no cover - enum is closed
        raise _Reject(f"unknown rule {rule}")


def _check_set_image(rule: Rule, c: Sequent, ps: Sequence[Sequent], ann: Annotation):
    """Set-form reading of an ``IELG_PLUS_PLUS`` rule; all sequents are sets."""
    x = c.support

    def ant(i: int, expected: Iterable[Formula], what: str):
        got = ps[i].support
        exp = frozenset(expected)
        if got != exp:
            raise _Reject(f"set antecedent mismatch in {what}: expected {{{', '.join(map(str, sorted(exp)))}}}")

    if rule in (Rule.AX, Rule.R_AND, Rule.R_OR1, Rule.R_OR2, Rule.U):
        _check_exact(Calculus.IELG_PLUS_PLUS, rule, c, ps, ann)
    elif rule in AND_LEFT:
        _premise_count(ps, 1)
        p = _principal(ann, c, And)
        if rule is Rule.L_AND1C:
            _need(p.left in x, f"L&1c needs {p.left} in the conclusion")
        if rule is Rule.L_AND2C:
            _need(p.right in x, f"L&2c needs {p.right} in the conclusion")
        ant(0, x | {p.left, p.right}, "premise")
        _goals(ps, [c.goal])
    elif rule in OR_LEFT:
        _premise_count(ps, 2)
        p = _principal(ann, c, Or)
        ant(0, x | {p.left}, "left premise")
        ant(1, x | {p.right}, "right premise")
        _goals(ps, [c.goal, c.goal])
    elif rule in IMP_LEFT:
        _premise_count(ps, 2)
        p = _principal(ann, c, Implies)
        ant(0, x, "left premise")
        ant(1, x | {p.right}, "right premise")
        _goals(ps, [p.left, c.goal])
    elif rule in (Rule.R_IMP, Rule.R_IMPW):
        _premise_count(ps, 1)
        g = _goal(c, Implies)
        if rule is Rule.R_IMPW:
            _need(g.left in x, f"R->w needs {g.left} in the conclusion antecedent")
        ant(0, x | {g.left}, "premise")
        _goals(ps, [g.right])
    elif rule in (Rule.KI1, Rule.KI1W):
        _premise_count(ps, 1)
        g = _goal(c, Know)
        bodies = k_prefix_set(x)
        if rule is Rule.KI1:
            _need(ann.delta is not None and frozenset(ann.delta) == bodies,
                  "KI1 delta must be exactly the K-bodies of the conclusion")
        else:
            d1, d2 = ann.delta1, ann.delta2
            _need(d1 is not None and d2 is not None, "missing delta1/delta2 annotation")
            _need(frozenset(d1) | frozenset(d2) == bodies and not set(d1) & set(d2),
                  "KI1w delta1/delta2 must partition the K-bodies of the conclusion")
            _need(set(d1) <= x, "KI1w delta1 must occur in the conclusion")
            _no_k(d1, "delta1")
        ant(0, x | bodies, "premise")
        _goals(ps, [g.body])
    elif rule is Rule.C:
        _premise_count(ps, 1)
        _need(bool(ann.delta) and set(ann.delta) <= x, "contracted formulas not in conclusion")
        ant(0, x, "premise")
        _goals(ps, [c.goal])
    else:
        raise _Reject(f"{rule.value} has no set-form reading")


def validate_instance(cal: Calculus, rule: Rule, conclusion: Sequent,
                      premises: Sequence[Sequent], annotation: Annotation = NO_ANNOTATION) -> Verdict:
    """Check one rule application against the schema of ``rule`` in ``cal``."""
    if rule not in RULES[cal]:
        return Verdict(False, (), f"rule {rule.value} is not a rule of {cal.value}")
    try:
        _check_exact(cal, rule, conclusion, premises, annotation)
        return VALID
    except _Reject as exact_failure:
        if (cal is Calculus.IELG_PLUS_PLUS and conclusion.is_set
                and all(p.is_set for p in premises)):
            try:
                _check_set_image(rule, conclusion, premises, annotation)
                _need(all(conclusion.support <= p.support for p in premises),
                      "set-form instance is not monotone")
                return VALID
            except _Reject:
                pass
        return Verdict(False, (), str(exact_failure))


def check_node(cal: Calculus, t: Proof) -> Verdict:
    return validate_instance(cal, t.rule, t.conclusion, [p.conclusion for p in t.premises],
                             t.annotation)


def check_proof(cal: Calculus | Iterable[Calculus], t: Proof) -> Verdict:
    """Validate every node; report the first failing node in pre-order.

    ``cal`` may be several calculi, in which case each node may use a rule of
    any of them (used for ``IELG_MINUS`` derivations with cuts).
    """
    cals = (cal,) if isinstance(cal, Calculus) else tuple(cal)
    stack: list[tuple[Proof, tuple[int, ...]]] = [(t, ())]
    while stack:
        node, path = stack.pop()
        verdict = None
        for c in cals:
            verdict = check_node(c, node)
            if verdict:
                break
        if not verdict:
            return Verdict(False, path, verdict.reason)
        for i in reversed(range(len(node.premises))):
            stack.append((node.premises[i], path + (i,)))
    return VALID


def depth(t: Proof) -> int:
    """Leaves have depth 1."""
    if not t.premises:
        return 1
    return 1 + max(depth(p) for p in t.premises)


def cut_count(t: Proof) -> int:
    return sum(1 for n in t.nodes() if n.rule is Rule.CUT)


def size(t: Proof) -> int:
    return sum(1 for _ in t.nodes())


def is_monotone_node(t: Proof) -> bool:
    c = t.conclusion.support
    return all(c <= p.conclusion.support for p in t.premises)


def dropped_formulas(t: Proof) -> list[Formula]:
    """Conclusion formulas missing from some premise, in canonical order."""
    missing = set()
    for p in t.premises:
        missing |= t.conclusion.support - p.conclusion.support
    return sorted(missing)


def is_monotone(t: Proof) -> bool:
    return all(is_monotone_node(n) for n in t.nodes())


def formulas_in(t: Proof) -> set[Formula]:
    out = set()
    for n in t.nodes():
        out.update(n.conclusion.antecedent)
        out.add(n.conclusion.goal)
    return out


def backward_instances(cal: Calculus, s: Sequent) -> list[RuleInstance]:
    """Every applicable non-trivial monotone set-form instance with conclusion ``s``.

    Order: ``Ax``; right non-branching (``R->``/``R->w``, ``R|1``, ``R|2``); the
    ``L&`` family; K-introduction; branching (``R&``, ``L|c``, ``L->c``); ``U``.
    Within a rule the principal formulas follow the canonical order.
    """
    if cal is not Calculus.IELG_PLUS_PLUS:
        raise ValueError("backward instances are defined for IELG_PLUS_PLUS only")
    if not s.is_set:
        raise ValueError("backward instances need a set-sequent")
    x = s.support
    g = s.goal
    ants = s.antecedent
    out: list[RuleInstance] = []

    def add(rule, premises, ann=NO_ANNOTATION):
        out.append(RuleInstance(cal, rule, s, tuple(premises), ann))

    def seq(extra, goal):
        return Sequent(tuple(x | frozenset(extra)), goal)

    if g.is_atomic and g in x:
        add(Rule.AX, (), Annotation(principal=g))

    if isinstance(g, Implies):
        add(Rule.R_IMPW if g.left in x else Rule.R_IMP, [seq([g.left], g.right)])
    if isinstance(g, Or):
        add(Rule.R_OR1, [s.with_goal(g.left)])
        add(Rule.R_OR2, [s.with_goal(g.right)])

    for f in ants:
        if isinstance(f, And) and not (f.left in x and f.right in x):
            if f.left in x:
                rule = Rule.L_AND1C
            elif f.right in x:
                rule = Rule.L_AND2C
            else:
                rule = Rule.L_ANDC
            add(rule, [seq([f.left, f.right], g)], Annotation(principal=f))

    if isinstance(g, Know):
        bodies = k_prefix_set(x)
        d1 = sorted(b for b in bodies if b in x and not isinstance(b, Know))
        if d1:
            ann = Annotation(delta1=tuple(d1), delta2=tuple(bodies - set(d1)))
            rule = Rule.KI1W
        else:
            ann = Annotation(delta=tuple(bodies))
            rule = Rule.KI1
        add(rule, [seq(bodies, g.body)], ann)

    if isinstance(g, And):
        add(Rule.R_AND, [s.with_goal(g.left), s.with_goal(g.right)])
    for f in ants:
        if isinstance(f, Or) and f.left not in x and f.right not in x:
            add(Rule.L_ORC, [seq([f.left], g), seq([f.right], g)], Annotation(principal=f))
    for f in ants:
        if isinstance(f, Implies) and f.right not in x:
            add(Rule.L_IMPC, [s.with_goal(f.left), seq([f.right], g)], Annotation(principal=f))

    if g != K_BOTTOM:
        add(Rule.U, [s.with_goal(K_BOTTOM)])
    return out


def node(conclusion: Sequent, rule: Rule, premises: Sequence[Proof] = (), **ann) -> Proof:
    """Shorthand constructor: ``node(seq, Rule.L_AND, [p], principal=f)``."""
    return Proof(conclusion, rule, tuple(premises), Annotation(**ann) if ann else NO_ANNOTATION)


def with_premises(t: Proof, premises: Sequence[Proof], conclusion: Sequent | None = None,
                  **ann) -> Proof:
    """Rebuild ``t`` with new premises (and optionally conclusion/annotation fields)."""
    annotation = replace(t.annotation, **ann) if ann else t.annotation
    return Proof(conclusion or t.conclusion, t.rule, tuple(premises), annotation)


__all__ = [
    "Annotation", "Calculus", "CheckVerdict", "LEAF_RULES", "NO_ANNOTATION", "Proof", "ProofTree",
    "RULES", "Rule", "RuleInstance", "VALID", "Verdict", "backward_instances", "check_node",
    "check_proof", "cut_count", "depth", "dropped_formulas", "formulas_in", "is_monotone",
    "is_monotone_node", "node", "size", "validate_instance", "with_premises",
]
