"""Acceptance suite: every top-level numerical claim, one test each.

Each check prints a PASS/FAIL line (run with ``pytest -s`` to see them
on success) and asserts the stated tolerance.
"""

import time
from math import ceil, gamma

import numpy as np
import pytest

from multishep import CaputoOperator, FdeProblem, caputo_exact_monomial, gauss_jacobi
from multishep.collocation import assemble_ivp, solve
from multishep.experiments import (
    ALPHA_SWEEP,
    NODE_FAMILIES,
    ExperimentConfig,
    build_evaluator,
    default_config,
    run,
    sweep,
)

from conftest import basis_quotient_form, caputo_adaptive, jacobi_moment, make_evaluator


def report(name: str, ok: bool, detail: str = "") -> bool:
    print(f"{'PASS' if ok else 'FAIL'}: {name}" + (f"  ({detail})" if detail else ""))
    return ok


# reference condition numbers per (example, node family); the equispaced
# bvp-2 value is omitted: the printed overlap q=7 violates q < d = 6,
# and with the nearest feasible q the matrix conditioning differs
REFERENCE_COND = {
    ("bvp-1", "equispaced"): 3.72e1,
    ("bvp-1", "mixed-ec"): 1.28e2,
    ("bvp-1", "mixed-emc"): 1.17e2,
    ("bvp-2", "mixed-ec"): 1.98e3,
    ("bvp-2", "mixed-emc"): 1.71e3,
    ("bvp-3", "equispaced"): 2.35e1,
    ("bvp-3", "mixed-ec"): 9.68e2,
    ("bvp-3", "mixed-emc"): 4.18e2,
    ("bvp-4", "equispaced"): 8.87e1,
    ("bvp-4", "mixed-ec"): 1.19e3,
    ("bvp-4", "mixed-emc"): 1.22e3,
}


def test_polynomial_exact_bvps():
    """Polynomial solutions are recovered to <= 1e-11 mean error in every
    reference configuration, each run under one second."""
    ok = True
    for example in ("bvp-1", "bvp-2", "bvp-3", "bvp-4"):
        for family in NODE_FAMILIES:
            r = run(default_config(example, node_family=family))
            good = r.mean_error <= 1e-11 and r.runtime_ms < 1000.0
            ok &= report(f"polynomial BVP {example}/{family}", good,
                         f"mean={r.mean_error:.3e} in {r.runtime_ms:.0f}ms")
    assert ok


def test_condition_numbers():
    """Collocation matrix condition numbers within 10x of the reference
    values for the feasible reference configurations."""
    ok = True
    for (example, family), ref in sorted(REFERENCE_COND.items()):
        r = run(default_config(example, node_family=family))
        good = ref / 10.0 <= r.cond <= ref * 10.0
        ok &= report(f"condition number {example}/{family}", good,
                     f"cond={r.cond:.3e} ref={ref:.3e}")
    r = run(default_config("bvp-2", node_family="equispaced"))
    print(f"INFO: bvp-2/equispaced cond={r.cond:.3e} (printed q=7 is "
          f"infeasible for d=6; run uses q=5, not asserted)")
    assert ok


def test_caputo_derivative_examples():
    """Fractional derivatives of the three sampled targets: mean error
    <= 1e-5 for six orders alpha and all node families, under 10 s."""
    start = time.perf_counter()
    ok = True
    for example in ("deriv-sin", "deriv-x92", "deriv-exp2x"):
        for family in NODE_FAMILIES:
            worst = 0.0
            for alpha in ALPHA_SWEEP:
                r = run(default_config(example, node_family=family, alpha=alpha))
                worst = max(worst, r.mean_error)
            ok &= report(f"derivative {example}/{family}", worst <= 1e-5,
                         f"worst mean={worst:.3e}")
    elapsed = time.perf_counter() - start
    ok &= report("derivative suite runtime", elapsed < 10.0, f"{elapsed:.1f}s")
    assert ok


def test_nonpolynomial_trends():
    """Non-polynomial problems: mean error drops by at least 1e3 from the
    smallest to the largest tested degree."""
    cases = [
        ("bvp-5", "equispaced", {}, (3, 12)),
        ("bvp-6", "equispaced", {}, (3, 11)),
        ("ivp-1", "mixed-ec", {"n_e": 14}, (2, 20)),
        ("ivp-2", "mixed-ec", {"n_e": 8}, (2, 8)),
        ("ivp-3", "mixed-ec", {"n_e": 8}, (2, 8)),
    ]
    ok = True
    for example, family, overrides, (d_min, d_max) in cases:
        base = default_config(example, node_family=family, **overrides)
        reports = sweep(base, "d", [d_min, d_max])
        lo, hi = reports[0].mean_error, reports[1].mean_error
        good = hi <= 1e-3 * lo
        ok &= report(f"trend {example}/{family} d={d_min}..{d_max}", good,
                     f"{lo:.3e} -> {hi:.3e}")
    assert ok


def test_ivp_least_squares_residual():
    """Manufactured polynomial initial value problems leave a least
    squares residual below 1e-8 times the data norm."""
    ok = True
    for alpha, power in ((1.5, 2.0), (1.5, 3.0), (1.2, 4.0)):
        def h(x, a=alpha, p=power):
            x = np.asarray(x, dtype=float)
            second = p * (p - 1) * x ** (p - 2)
            return second + caputo_exact_monomial(p, a, x) + 0.5 * x**p

        problem = FdeProblem(rho=1.0, lam=1.0, sigma=0.5, h=h, alpha=alpha,
                             gamma1=0.0, gamma2=0.0, kind="initial")
        ev = make_evaluator(family="mixed-ec", n_e=4, d=6)
        system = assemble_ivp(problem, CaputoOperator(alpha, ev), ev)
        sol = solve(system, ev)
        rel = sol.residual_norm / np.linalg.norm(system.b)
        ok &= report(f"IVP residual x^{power:g} alpha={alpha}", rel <= 1e-8,
                     f"rel residual={rel:.3e}")
    assert ok


def test_quadrature_oracle_suite():
    """Gauss-Jacobi moments match analytic Beta values to 1e-12, and the
    Caputo rows match adaptive quadrature to 1e-8 at random points."""
    worst = 0.0
    for a in (-0.8, -0.5, -0.2, 0.2, 0.5, 0.8):
        for N in range(1, 21):
            rule = gauss_jacobi(N, a, 0.0)
            for j in range(2 * N):
                exact = jacobi_moment(a, j)
                err = abs(rule.integrate(lambda t: t**j) - exact) / max(abs(exact), 1e-30)
                worst = max(worst, err)
    ok = report("Gauss-Jacobi moment exactness", worst <= 1e-12,
                f"worst rel err={worst:.3e}")

    rng = np.random.default_rng(7)
    # wide windows keep the blended m-th derivative smooth enough for the
    # adaptive reference integrator and the rule to agree this tightly
    ev = make_evaluator(family="mixed-ec", n_e=3, d=12)
    nodes = ev.basis.nodeset.nodes
    samples = np.sin(2.0 * nodes)
    for alpha in ALPHA_SWEEP:
        op = CaputoOperator(alpha, ev)
        worst = 0.0
        for x in rng.uniform(0.1, 1.0, size=20):
            approx = op.caputo_apply(samples, x)
            oracle = caputo_adaptive(ev, samples, alpha, x)
            worst = max(worst, abs(approx - oracle) / max(abs(oracle), 1e-12))
        ok &= report(f"Caputo rows vs adaptive quadrature alpha={alpha:g}",
                     worst <= 1e-8, f"worst rel err={worst:.3e}")
    assert ok


def test_basis_property_suite():
    """Blending-function invariants at their stated tolerances.

    Second-derivative comparisons (recursion vs closed form, continuity
    across the nearest-node switch) are asserted at 1e-10 and 1e-11
    instead of the first-derivative 1e-12: at row scales of a few
    hundred, two independent double-precision evaluations cannot agree
    more closely.
    """
    from multishep import MultinodeBasis, equispaced_covering, equispaced_nodes

    rng = np.random.default_rng(11)
    basis = MultinodeBasis(equispaced_nodes(12), equispaced_covering(12, 5, 0),
                           mu=4)
    nodes = basis.nodeset.nodes

    big = MultinodeBasis(equispaced_nodes(40), equispaced_covering(40, 7, 0),
                         mu=4)
    x = rng.uniform(0.0, 1.0, size=1000)
    pou = np.max(np.abs(big.eval(x, 0).values.sum(axis=1) - 1.0))
    ok = report("partition of unity (1000 random points)", pou <= 1e-13,
                f"max dev={pou:.3e}")

    be = basis.eval(nodes, max_order=2)
    worst_out, worst_sum = 0.0, 0.0
    for i in range(basis.n):
        ki = set(basis.index_sets.K[i])
        for r in (1, 2):
            dv = be.derivative(r)
            for k in range(basis.s):
                if k not in ki:
                    worst_out = max(worst_out, abs(dv[i, k]))
            worst_sum = max(worst_sum, abs(sum(dv[i, k] for k in ki)))
    ok &= report("derivative annihilation at nodes", worst_out <= 1e-12,
                 f"max off-subset={worst_out:.3e}")
    ok &= report("derivative sums vanish at nodes", worst_sum <= 1e-12,
                 f"max sum={worst_sum:.3e}")

    gap = 0.2 * np.min(np.diff(nodes))
    pts = [x for x in rng.uniform(0.0, 1.0, size=600)
           if np.min(np.abs(x - nodes)) > gap][:100]
    worst_fd, worst_q1, worst_q2 = 0.0, 0.0, 0.0
    h = 1e-6
    for x in pts:
        be = basis.eval(x, max_order=2)
        fd = (basis.eval(x + h, 0).values[0] - basis.eval(x - h, 0).values[0]) / (2 * h)
        scale = max(np.max(np.abs(be.d1[0])), 1e-3)
        worst_fd = max(worst_fd, np.max(np.abs(be.d1[0] - fd)) / scale)
        b1, b2 = basis_quotient_form(basis, x)
        worst_q1 = max(
            worst_q1, np.max(np.abs(be.d1[0] - b1)) / max(np.max(np.abs(b1)), 1.0))
        worst_q2 = max(
            worst_q2, np.max(np.abs(be.d2[0] - b2)) / max(np.max(np.abs(b2)), 1.0))
    ok &= report("first derivatives vs finite differences", worst_fd <= 1e-6,
                 f"worst rel={worst_fd:.3e}")
    ok &= report("recursion vs quotient closed form (r=1)", worst_q1 <= 1e-12,
                 f"worst rel={worst_q1:.3e}")
    ok &= report("recursion vs quotient closed form (r=2)", worst_q2 <= 1e-10,
                 f"worst rel={worst_q2:.3e}")

    worst_sw = {0: 0.0, 1: 0.0, 2: 0.0}
    for i in range(1, basis.n - 2):
        mid = 0.5 * (nodes[i] + nodes[i + 1])
        left = basis.eval(mid, max_order=2, jstar=i)
        right = basis.eval(mid, max_order=2, jstar=i + 1)
        for r in (0, 1, 2):
            a, b = left.derivative(r)[0], right.derivative(r)[0]
            scale = max(np.max(np.abs(a)), 1.0)
            worst_sw[r] = max(worst_sw[r], np.max(np.abs(a - b)) / scale)
    good = worst_sw[0] <= 1e-12 and worst_sw[1] <= 1e-12 and worst_sw[2] <= 1e-11
    ok &= report("continuity across nearest-node switch", good,
                 f"worst rel r0={worst_sw[0]:.1e} r1={worst_sw[1]:.1e} "
                 f"r2={worst_sw[2]:.1e}")
    assert ok
