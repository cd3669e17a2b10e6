"""Caputo derivative rows of the blended interpolant."""

from math import gamma

import numpy as np
import pytest

from multishep import (
    CaputoOperator,
    Covering,
    MultinodeBasis,
    ShepardEvaluator,
    caputo_exact_monomial,
    equispaced_nodes,
)

from conftest import caputo_adaptive, make_evaluator


def single_subset_evaluator(n=9):
    ns = equispaced_nodes(n)
    basis = MultinodeBasis(ns, Covering(subsets=(np.arange(n),)), mu=4)
    return ShepardEvaluator(basis)


def test_zero_row_at_origin():
    op = CaputoOperator(0.5, make_evaluator())
    assert np.array_equal(op.caputo_row(0.0), np.zeros(op.ev.n))


def test_constants_are_annihilated():
    ev = make_evaluator()
    for alpha in (0.5, 1.5):
        op = CaputoOperator(alpha, ev)
        vals = op.caputo_apply(np.ones(ev.n), np.linspace(0.0, 1.0, 21))
        assert np.max(np.abs(vals)) <= 1e-10


def test_monomial_on_single_subset():
    ev = single_subset_evaluator()
    op = CaputoOperator(0.5, ev)
    nodes = ev.basis.nodeset.nodes
    approx = op.caputo_apply(nodes**3, 0.8)
    exact = gamma(4) / gamma(3.5) * 0.8**2.5
    assert np.isclose(approx, exact, rtol=1e-10)


def test_exact_monomial_values():
    assert caputo_exact_monomial(1.0, 1.5, 0.7) == 0.0
    assert np.isclose(
        caputo_exact_monomial(4.5, 0.5, 1.0), gamma(5.5) / gamma(5.0), rtol=1e-14)
    assert np.isclose(
        caputo_exact_monomial(2.0, 0.5, 1.0), 2.0 / gamma(2.5), rtol=1e-14)


def test_quadrature_order_rule():
    ev = make_evaluator()
    for alpha, m in ((0.5, 1), (1.5, 2)):
        op = CaputoOperator(alpha, ev)
        assert op.m == m
        assert op.N == -((ev.n - m) // -2)
        assert np.isclose(op.rule.a, m - alpha - 1.0)
        assert op.rule.b == 0.0


def test_linearity(rng):
    ev = make_evaluator()
    op = CaputoOperator(0.8, ev)
    f = rng.uniform(-1.0, 1.0, size=ev.n)
    g = rng.uniform(-1.0, 1.0, size=ev.n)
    x = np.linspace(0.1, 1.0, 7)
    combined = op.caputo_apply(2.0 * f - 3.0 * g, x)
    split = 2.0 * op.caputo_apply(f, x) - 3.0 * op.caputo_apply(g, x)
    scale = np.maximum(np.abs(combined), 1e-6)
    assert np.max(np.abs(combined - split) / scale) <= 1e-13


@pytest.mark.parametrize("alpha", [0.5, 1.5])
def test_adaptive_quadrature_oracle(alpha, rng):
    ev = make_evaluator(family="mixed-ec", n_e=3, d=12)
    nodes = ev.basis.nodeset.nodes
    samples = np.sin(nodes)
    op = CaputoOperator(alpha, ev)
    for x in rng.uniform(0.15, 1.0, size=5):
        approx = op.caputo_apply(samples, x)
        oracle = caputo_adaptive(ev, samples, alpha, x)
        assert np.isclose(approx, oracle, rtol=1e-8), x


def test_invalid_orders():
    ev = make_evaluator()
    for alpha in (1.0, 2.0, 2.5, 0.0, -0.5):
        with pytest.raises(ValueError):
            CaputoOperator(alpha, ev)


def test_input_validation():
    ev = make_evaluator()
    op = CaputoOperator(0.5, ev)
    with pytest.raises(ValueError):
        op.caputo_rows(np.array([-0.1]))
    with pytest.raises(ValueError):
        op.caputo_apply(np.ones(ev.n + 2), 0.5)
