import random

import pytest

from conftest import F, S
from iel.calculus import Calculus, Rule, check_proof, cut_count, depth, is_monotone, node
from iel.formula import BOTTOM, Var
from iel.prover import prove
from iel.sequent import Sequent, to_set
from iel.transform import (CutInstance, TransformError, contract, eliminate_cut, eliminate_cuts,
                           expand_to_minus, invert_left, k_contract, k_eliminate, ki_ext,
                           monotonize, set_normalize, weaken)

p, q, r = Var("p"), Var("q"), Var("r")
MINUS, PP = Calculus.IELG_MINUS, Calculus.IELG_PLUS_PLUS


def ax(text, atom=None):
    s = S(text)
    return node(s, Rule.AX, principal=atom or s.goal)


def valid(t, cal=MINUS):
    v = check_proof(cal, t)
    assert v, v
    return t


def ki1_kp():
    return node(S("Kp |- Kp"), Rule.KI1, [ax("Kp, p |- p")], delta=(p,))


# weakening

def test_weaken_axiom():
    t = weaken(ax("p |- p"), q)
    assert t.conclusion == S("p, q |- p") and t.rule is Rule.AX and depth(t) == 1


def test_weaken_absorbs_k_formula_into_delta():
    t = valid(weaken(ki1_kp(), F("Kq")))
    assert t.conclusion == S("Kp, Kq |- Kp")
    assert set(t.annotation.delta) == {p, q}
    assert t.premises[0].conclusion == S("Kp, Kq, p, q |- p")


def test_weaken_implication_proof():
    t = node(S("|- p -> p"), Rule.R_IMP, [ax("p |- p")])
    w = valid(weaken(t, r))
    assert w.conclusion == S("r |- p -> p") and depth(w) == depth(t)


# inversion

def test_invert_conjunction():
    t = valid(node(S("p & q |- p"), Rule.L_AND, [ax("p, q |- p")], principal=F("p & q")))
    out = valid(invert_left(t, F("p & q")))
    assert out.conclusion == S("p, q |- p") and depth(out) <= depth(t)


def test_invert_disjunction_gives_two_proofs():
    t = valid(node(S("p | p |- p"), Rule.L_OR, [ax("p |- p"), ax("p |- p")], principal=F("p | p")))
    left, right = invert_left(t, F("p | p"))
    assert left.conclusion == right.conclusion == S("p |- p")


def test_invert_implication_non_principal():
    t = ax("_|_ -> p, _|_ |- _|_")
    out = valid(invert_left(t, F("_|_ -> p")))
    assert out.conclusion == S("p, _|_ |- _|_") and out.rule is Rule.AX


def test_invert_rejects_atomic_or_absent():
    with pytest.raises(TransformError):
        invert_left(ax("p |- p"), p)
    with pytest.raises(TransformError):
        invert_left(ax("p |- p"), F("p & q"))


# contraction

def test_contract_axiom():
    t = contract(ax("p, p |- p"), p)
    assert t.conclusion == S("p |- p") and t.rule is Rule.AX


def test_contract_k_formula_in_delta():
    t = valid(node(S("Kp, Kp |- Kp"), Rule.KI1, [ax("Kp, Kp, p, p |- p")], delta=(p, p)))
    out = valid(contract(t, F("Kp")))
    assert out.conclusion == S("Kp |- Kp") and out.annotation.delta == (p,)
    assert depth(out) <= depth(t)


def test_contract_principal_conjunction_uses_inversion():
    inner = node(S("p & q, p, q |- q"), Rule.L_AND, [ax("p, q, p, q |- q")], principal=F("p & q"))
    t = valid(node(S("p & q, p & q |- q"), Rule.L_AND, [inner], principal=F("p & q")))
    out = valid(contract(t, F("p & q")))
    assert out.conclusion == S("p & q |- q") and depth(out) <= depth(t)


def test_contract_needs_two_copies():
    with pytest.raises(TransformError):
        contract(ax("p |- p"), p)


# K-elimination and K-contraction

def test_k_eliminate_main_case():
    out = valid(k_eliminate(ki1_kp(), F("Kp")))
    assert out.conclusion == S("p |- Kp")
    assert out.rule is Rule.KI1 and out.annotation.delta == ()
    assert out.premises[0].conclusion == S("p |- p") and depth(out) == 2


def test_k_eliminate_side_formula():
    out = k_eliminate(ax("Kp, q |- q"), F("Kp"))
    assert out.conclusion == S("p, q |- q") and out.rule is Rule.AX


def test_k_eliminate_errors():
    with pytest.raises(TransformError):
        k_eliminate(ax("p |- p"), p)
    with pytest.raises(TransformError):
        k_eliminate(ax("p |- p"), F("Kq"))


def test_k_contract():
    t = valid(weaken(ki1_kp(), p))
    out = valid(k_contract(t, p))
    assert out.conclusion == S("p |- Kp") and depth(out) <= depth(t)


# extended K-introduction

def test_ki_ext_from_bottom_axiom():
    t = ax("q, _|_ |- _|_")
    out = valid(ki_ext(t, [q, BOTTOM], [], []))
    assert out.conclusion == S("q, _|_ |- K_|_") and depth(out) <= depth(t) + 1
    out = valid(ki_ext(t, [q], [], [BOTTOM]))
    assert out.conclusion == S("q, K_|_ |- K_|_")


def test_ki_ext_plain_k_introduction():
    t = node(S("p, q |- p & q"), Rule.R_AND, [ax("p, q |- p"), ax("p, q |- q")])
    out = valid(ki_ext(t, [], [], [p, q]))
    assert out.conclusion == S("Kp, Kq |- K(p & q)")


def test_ki_ext_partition_mismatch():
    with pytest.raises(TransformError):
        ki_ext(ax("p |- p"), [], [], [q])


# single cut

def test_cut_of_two_axioms():
    out = eliminate_cut(CutInstance(ax("p |- p"), ax("p |- p"), p))
    assert out.conclusion == S("p |- p") and out.rule is Rule.AX


def test_cut_left_premise_ends_with_u():
    kbot = node(S("K_|_ |- K_|_"), Rule.KI1, [ax("K_|_, _|_ |- _|_")], delta=(BOTTOM,))
    left = valid(node(S("K_|_ |- q"), Rule.U, [kbot]))
    right = valid(node(S("q |- q | r"), Rule.R_OR1, [ax("q |- q")]))
    c = CutInstance(left, right, q)
    out = valid(eliminate_cut(c))
    assert out.conclusion == S("K_|_ |- q | r") and out.rule is Rule.U


def test_cut_on_k_formula_both_principal():
    left = ki1_kp()
    right = valid(node(S("Kp |- KKp"), Rule.KI1, [ki1_kp_with_extra()], delta=(p,)))
    c = CutInstance(left, right, F("Kp"))
    assert c.rank == 2 and c.level == depth(left) + depth(right)
    out = valid(eliminate_cut(c))
    assert out.conclusion == S("Kp |- KKp") and cut_count(out) == 0


def ki1_kp_with_extra():
    return node(S("Kp, p |- Kp"), Rule.KI1, [ax("Kp, p, p |- p")], delta=(p,))


def test_cut_premise_mismatch():
    with pytest.raises(TransformError):
        eliminate_cut(CutInstance(ax("p |- p"), ax("q |- q"), p))


# full cut elimination

def test_eliminate_cuts_on_cut_free_input():
    t = ki1_kp()
    out = valid(eliminate_cuts(t))
    assert out.conclusion == t.conclusion


def test_eliminate_cuts_right_axiom_on_cut_formula():
    left = valid(node(S("p & q |- p"), Rule.L_AND, [ax("p, q |- p")], principal=F("p & q")))
    t = node(S("p & q |- p"), Rule.CUT, [left, ax("p |- p")], principal=p)
    out = valid(eliminate_cuts(t))
    assert out == left


def test_eliminate_cuts_on_prover_proofs():
    a = expand_to_minus(prove(S("|- Kp -> Kp")).proof)
    b = expand_to_minus(prove(S("Kp -> Kp |- Kp -> Kp")).proof)
    t = node(S("|- Kp -> Kp"), Rule.CUT, [a, b], principal=F("Kp -> Kp"))
    out = valid(eliminate_cuts(t))
    assert cut_count(out) == 0 and out.conclusion == S("|- Kp -> Kp")


def test_eliminate_cuts_compiles_modal_rules():
    cal = (Calculus.IELG_CUT, MINUS)
    ki0 = node(S("Kp |- Kp"), Rule.KI0, [ax("p |- p")])
    kc = node(S("p, Kq |- Kp"), Rule.KC, [weaken(ki1_kp(), p, F("Kq"))], principal=p)
    kbot = node(S("K_|_ |- q"), Rule.KBOT_AX)
    bot = node(S("_|_ |- K q"), Rule.BOT_AX)
    nested = node(S("Kp |- Kp"), Rule.CUT, [ki0, node(S("Kp |- Kp"), Rule.CUT, [ki0, ki0],
                                                     principal=F("Kp"))], principal=F("Kp"))
    contraction = node(S("Kp |- Kp"), Rule.C, [weaken(ki1_kp(), F("Kp"))], delta=(F("Kp"),))
    ke = node(S("p |- Kp"), Rule.KE, [ki0], principal=p)
    for t in (ki0, kc, kbot, bot, nested, contraction, ke):
        v = check_proof(cal, t)
        assert v, (t.rule, v)
        out = valid(eliminate_cuts(t))
        assert out.conclusion == t.conclusion and cut_count(out) == 0


def test_eliminate_cuts_rejects_invalid():
    with pytest.raises(TransformError):
        eliminate_cuts(node(S("p |- q"), Rule.AX, principal=q))


# conversions

def test_expand_contraction_node():
    t = valid(node(S("p |- p"), Rule.C, [ax("p, p |- p")], delta=(p,)), PP)
    out = valid(expand_to_minus(t))
    assert out.rule is Rule.AX and out.conclusion == S("p |- p")


def test_expand_implication_contraction_node():
    t = valid(node(S("p, p -> q |- q"), Rule.L_IMPC,
                   [ax("p, p -> q |- p"), ax("p, p -> q, q |- q")], principal=F("p -> q")), PP)
    out = valid(expand_to_minus(t))
    assert out.conclusion == t.conclusion and out.rule is Rule.L_IMP


def test_expand_ki1w_node():
    t = valid(node(S("p, Kp |- Kp"), Rule.KI1W, [ax("p, Kp |- p")], delta1=(p,), delta2=()), PP)
    out = valid(expand_to_minus(t))
    assert out.conclusion == t.conclusion and out.rule is Rule.KI1


def test_expand_plus_calculus_proof():
    t = node(S("p -> q, Kp |- K q"), Rule.KI,
             [node(S("p -> q, p |- q"), Rule.L_IMP, [ax("p |- p"), ax("p, q |- q")],
                   principal=F("p -> q"))], delta=(p,))
    valid(t, Calculus.IELG_PLUS)
    out = valid(expand_to_minus(t, Calculus.IELG_PLUS))
    assert out.conclusion == t.conclusion


def test_monotonize_keeps_monotone_input():
    t = prove(S("|- K~p -> ~p")).proof
    assert is_monotone(t)
    assert monotonize(t) == t


def test_monotonize_conjunction_left():
    t = node(S("p & q |- p"), Rule.L_AND, [ax("p, q |- p")], principal=F("p & q"))
    out = valid(monotonize(t), PP)
    assert is_monotone(out) and out.conclusion == t.conclusion
    assert out.rule is Rule.C and out.premises[0].conclusion == S("p & q, p & q |- p")


def test_monotonize_propagates_k_body_above_k_introduction():
    # L| drops K(Kp) | r; the inner KI1 nodes must receive the bodies as well
    kkp = node(S("KKp |- KKp"), Rule.KI1,
               [node(S("KKp, Kp |- Kp"), Rule.KI1, [ax("KKp, Kp, Kp, p |- p")],
                     delta=(F("Kp"), p))],
               delta=(F("Kp"),))
    t = valid(node(S("KKp | r, KKp |- KKp"), Rule.L_OR,
                   [weaken(kkp, F("KKp")), weaken(kkp, r)], principal=F("KKp | r")))
    out = valid(monotonize(t), PP)
    assert is_monotone(out) and out.conclusion == t.conclusion


def test_monotonize_rejects_invalid():
    with pytest.raises(TransformError):
        monotonize(node(S("p |- q"), Rule.AX, principal=q))


def test_set_normalize_drops_contraction():
    t = node(S("p, p |- p"), Rule.C, [ax("p, p, p |- p")], delta=(p,))
    out = valid(set_normalize(t), PP)
    assert out.rule is Rule.AX and out.conclusion == S("p |- p")


def test_set_normalize_promotes_right_premise_of_implication():
    # q already present: the right premise equals the conclusion after collapsing
    right = node(S("p, q, q |- q"), Rule.AX, principal=q)
    t = valid(node(S("p, q, p -> q |- q"), Rule.L_IMP,
                   [ax("p, q, p -> q |- p"), right], principal=F("p -> q")))
    m = monotonize(t)
    out = valid(set_normalize(m), PP)
    assert out.rule is Rule.AX and out.conclusion == S("p, q, p -> q |- q")


def test_set_normalize_k_introduction_becomes_weak_form():
    t = valid(node(S("p, Kp, Kq |- K(p & q)"), Rule.KI1,
                   [node(S("p, p, q, Kp, Kq |- p & q"), Rule.R_AND,
                         [ax("p, p, q, Kp, Kq |- p"), ax("p, p, q, Kp, Kq |- q")])],
                   delta=(p, q)))
    out = valid(set_normalize(t), PP)
    assert out.rule is Rule.KI1W
    assert out.annotation.delta1 == (p,) and out.annotation.delta2 == (q,)


def test_set_normalize_k_introduction_with_all_bodies_present():
    t = valid(node(S("p, Kp |- Kp"), Rule.KI1, [ax("p, p, Kp |- p")], delta=(p,)))
    out = valid(set_normalize(t), PP)
    assert out.rule is Rule.KI1W and out.annotation.delta2 == ()


def test_set_normalize_rejects_non_monotone():
    t = node(S("p & q |- p"), Rule.L_AND, [ax("p, q |- p")], principal=F("p & q"))
    with pytest.raises(TransformError):
        set_normalize(t)


def test_round_trip_on_prover_output():
    rng = random.Random(3)
    from iel.corpus import random_formula
    done = 0
    while done < 40:
        s = Sequent((random_formula(rng, 2),), random_formula(rng, 3))
        res = prove(s)
        if not res.proved:
            continue
        done += 1
        out = valid(set_normalize(monotonize(res.proof)), PP)
        assert out.conclusion == to_set(s)


def test_depth_preservation_on_corpus(minus_corpus):
    for t in minus_corpus:
        g = t.antecedent[0] if t.antecedent else q
        assert depth(valid(weaken(t, g))) <= depth(t)
        w = weaken(t, g) if t.antecedent else weaken(t, q, q)
        assert depth(valid(contract(w, g))) <= depth(w)
        assert depth(valid(ki_ext(t, [], [], t.antecedent))) <= depth(t) + 1
        assert depth(valid(set_normalize(monotonize(t)), PP)) <= depth(monotonize(t))
