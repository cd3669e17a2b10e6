"""Shared fixtures and independent numerical oracles for the test suite.

The oracles here deliberately avoid the library's evaluation paths:
blending functions are recomputed from plain inverse-power products with
Faa di Bruno derivatives, Jacobi moments come from analytic Beta
integrals, and Caputo values from scipy's adaptive algebraic-weight
quadrature.
"""

from math import ceil, comb, gamma

import numpy as np
import pytest
from scipy import special as sp
from scipy.integrate import quad

from multishep import (
    MultinodeBasis,
    ShepardEvaluator,
    equispaced_covering,
    equispaced_nodes,
    mixed_ec,
)


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def make_evaluator(family="mixed-ec", n_e=5, d=6, n=31, q=2, mu=4):
    """Small evaluator used across tests."""
    if family == "equispaced":
        nodeset = equispaced_nodes(n)
        covering = equispaced_covering(n, d, q)
    else:
        nodeset, covering = mixed_ec(n_e, d)
    basis = MultinodeBasis(nodeset, covering, mu=mu)
    return ShepardEvaluator(basis)


def basis_closed_form(basis: MultinodeBasis, x: float, max_order: int = 2):
    """Blending functions and derivatives at one off-node point, from the
    raw inverse-power products W_k = prod_{i in F_k} (x - x_i)^(-mu).

    Derivatives of W use Faa di Bruno on log W; the quotient
    B_k = W_k / sum W is then differentiated by the Leibniz identity
    B_k * D = W_k.  Returns an array of shape (max_order + 1, s).
    """
    nodes = basis.nodeset.nodes
    mu = basis.mu
    W = np.zeros((max_order + 1, basis.s))
    for k, f in enumerate(basis.covering.subsets):
        diff = x - nodes[f]
        if np.any(diff == 0.0):
            raise ValueError("closed-form oracle needs an off-node point")
        u1 = -mu * np.sum(1.0 / diff)
        u2 = mu * np.sum(diff**-2.0)
        u3 = -2.0 * mu * np.sum(diff**-3.0)
        u4 = 6.0 * mu * np.sum(diff**-4.0)
        w = np.prod(np.abs(diff) ** -float(mu))
        W[0, k] = w
        if max_order >= 1:
            W[1, k] = w * u1
        if max_order >= 2:
            W[2, k] = w * (u1**2 + u2)
        if max_order >= 3:
            W[3, k] = w * (u1**3 + 3 * u1 * u2 + u3)
        if max_order >= 4:
            W[4, k] = w * (u1**4 + 6 * u1**2 * u2 + 4 * u1 * u3 + 3 * u2**2 + u4)
    D = W.sum(axis=1)
    B = [W[0] / D[0]]
    for r in range(1, max_order + 1):
        acc = W[r] / D[0]
        for i in range(r):
            acc -= comb(r, i) * (D[r - i] / D[0]) * B[i]
        B.append(acc)
    return np.array(B)


def basis_quotient_form(basis: MultinodeBasis, x: float):
    """First and second blending-function derivatives from the logarithmic
    derivative of the normalized quotient.

    With S_k = d/dx log(C_k) (the C_k normalized against the nearest node)
    the quotient rule gives B_k' = B_k (S_k - sum_l B_l S_l) and one more
    differentiation yields B_k''.  This shares no code with the binomial
    recursion used by the library.  Returns (B', B'') row vectors.
    """
    nodes = basis.nodeset.nodes
    mu = basis.mu
    j = int(np.argmin(np.abs(x - nodes)))
    xj = nodes[j]
    B0 = basis.eval(x, 0).values[0]
    S = np.empty(basis.s)
    S1 = np.empty(basis.s)
    for k, f in enumerate(basis.covering.subsets):
        diff = x - nodes[f]
        has = np.any(f == j)
        invj = 0.0 if has else 1.0 / (x - xj)
        invj2 = 0.0 if has else 1.0 / (x - xj) ** 2
        d = diff[f != j] if has else diff
        S[k] = mu * (invj - np.sum(1.0 / d))
        S1[k] = -mu * (invj2 - np.sum(1.0 / d**2))
    T = np.sum(B0 * S)
    B1 = B0 * (S - T)
    T1 = np.sum(B1 * S + B0 * S1)
    B2 = B1 * (S - T) + B0 * (S1 - T1)
    return B1, B2


def jacobi_moment(a: float, j: int) -> float:
    """Analytic moment M_j = integral_{-1}^{1} (1-t)^a t^j dt.

    Integration by parts gives the numerically stable forward recurrence
    M_j = ((-1)^j 2^(a+1) + j M_{j-1}) / (a + 1 + j) from the Beta-value
    M_0 = 2^(a+1)/(a+1).  (The direct binomial expansion over Beta
    integrals cancels catastrophically for large j.)
    """
    m = 2.0 ** (a + 1) / (a + 1.0)
    for k in range(1, j + 1):
        m = ((-1.0) ** k * 2.0 ** (a + 1) + k * m) / (a + 1.0 + k)
    return m


def caputo_adaptive(ev: ShepardEvaluator, samples, alpha: float, x: float) -> float:
    """Adaptive-quadrature Caputo derivative of the blended interpolant:
    (1/Gamma(m-alpha)) * integral_0^x (x-t)^(m-alpha-1) M^(m)(t) dt."""
    m = ceil(alpha)
    val, _ = quad(
        lambda t: ev.eval_shepard(samples, t, order=m),
        0.0,
        x,
        weight="alg",
        wvar=(0.0, m - alpha - 1.0),
        limit=200,
    )
    return val / gamma(m - alpha)
