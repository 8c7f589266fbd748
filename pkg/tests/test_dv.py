from fractions import Fraction

import pytest

from cdex.dv import dv_solve, mac
from cdex.model import EvalContext, Instance, random_instance
from cdex.oracle import is_feasible
from cdex.sumrate import local_recovery

TINY = Instance(2, ({1}, {2}))


def test_mac_ref1_full(ref1):
    alpha, argmax = mac(EvalContext(), ref1, ref1.clients)
    assert alpha == Fraction(13, 3)
    assert set(argmax) == {frozenset([j]) for j in (1, 2, 3, 4)}


def test_mac_ref2(ref2):
    alpha, argmax = mac(EvalContext(), ref2, ref2.clients)
    assert alpha == 6
    assert set(argmax) == {frozenset([1, 2, 3]), frozenset([4])}
    alpha, argmax = mac(EvalContext(), ref2, {1, 2, 3})
    assert alpha == 4
    assert set(argmax) == {frozenset([1, 3]), frozenset([2])}


def test_mac_small_set(ref1):
    with pytest.raises(ValueError):
        mac(EvalContext(), ref1, {3})


def test_dv_ref1_counter_example(ref1):
    res = dv_solve(ref1)
    assert res.rates == (Fraction(7, 3), Fraction(4, 3), Fraction(1, 3), Fraction(1, 3))
    assert res.alpha_frac == Fraction(13, 3)
    assert res.integral is False
    assert sum(res.rates) == res.alpha_frac


def test_dv_ref2_paper_trace(ref2):
    res = dv_solve(ref2, excess_rule="prefer-singletons")
    assert res.rates == (2, 2, 1, 1)
    assert res.integral is True


def test_dv_ref2_default_rule(ref2):
    res = dv_solve(ref2)
    assert res.alpha_frac == 6
    assert sum(res.rates) == 6
    assert res.integral is True
    assert is_feasible(EvalContext(), ref2, tuple(int(r) for r in res.rates)).feasible


def test_dv_two_clients():
    res = dv_solve(TINY)
    assert res.rates == (1, 1) and res.integral is True


def test_dv_root_alpha_matches_sumrate():
    for seed in range(40):
        inst = random_instance(5, 9, 0.5, seed)
        res = dv_solve(inst)
        truth = local_recovery(EvalContext(), inst, inst.clients).alpha_frac
        assert res.alpha_frac == truth
        assert sum(res.rates) == res.alpha_frac


def test_dv_integral_implies_feasible():
    seen_integral = 0
    for seed in range(60):
        inst = random_instance(5, 9, 0.5, seed)
        res = dv_solve(inst)
        if res.integral:
            seen_integral += 1
            rates = tuple(int(r) for r in res.rates)
            assert is_feasible(EvalContext(), inst, rates).feasible
    assert seen_integral > 0


def test_dv_call_tree_budgets(ref1, ref2):
    for inst in (ref1, ref2):
        res = dv_solve(inst)

        def walk(call):
            assert call.delta_r >= 0
            assert call.budget == call.alpha_frac + call.delta_r
            for child in call.children:
                walk(child)

        walk(res.call_tree)
