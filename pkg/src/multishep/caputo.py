"""Caputo fractional derivative of the blended interpolant.

The power-law kernel is absorbed into a Gauss-Jacobi weight with
exponents (m - alpha - 1, 0); the quadrature then only sees the smooth
m-th derivative cardinal rows.
"""

from __future__ import annotations

from math import ceil, gamma

import numpy as np

from .quadrature import GaussJacobiRule, gauss_jacobi
from .shepard import ShepardEvaluator


def caputo_exact_monomial(p: float, alpha: float, x) -> float:
    """Caputo derivative of x^p: Gamma(p+1)/Gamma(p+1-alpha) * x^(p-alpha).

    Returns 0 for integer powers p <= m-1, which the operator annihilates.
    """
    m = ceil(alpha)
    if p == np.floor(p) and p <= m - 1:
        return np.zeros_like(np.asarray(x, dtype=float)) + 0.0
    return gamma(p + 1) / gamma(p + 1 - alpha) * np.asarray(x, dtype=float) ** (p - alpha)


class CaputoOperator:
    """Point evaluations and weight rows for the fractional derivative of
    the Shepard approximant."""

    def __init__(self, alpha: float, ev: ShepardEvaluator):
        if alpha == np.floor(alpha):
            raise ValueError("alpha must not be an integer")
        m = ceil(alpha)
        if m not in (1, 2):
            raise ValueError("require 0 < alpha < 2, non-integer")
        self.alpha = alpha
        self.m = m
        self.ev = ev
        self.N = ceil((ev.n - m) / 2)
        self.rule: GaussJacobiRule = gauss_jacobi(self.N, m - alpha - 1.0, 0.0)
        self._gamma = gamma(m - alpha)

    def caputo_rows(self, x) -> np.ndarray:
        """Weight rows c_i(x_j) for a batch of abscissas, shape (len(x), n).

        (D^alpha M[f])(x_j) ~ sum_i c_i(x_j) f_i.  Rows at x = 0 are zero
        (empty integration interval).
        """
        x = np.atleast_1d(np.asarray(x, dtype=float))
        if np.any(x < 0.0):
            raise ValueError("require x >= 0")
        out = np.zeros((x.size, self.ev.n))
        pos = np.nonzero(x > 0.0)[0]
        if pos.size == 0:
            return out
        xp = x[pos]
        # all quadrature abscissas of all evaluation points in one batch
        t = 0.5 * xp[:, None] * (self.rule.nodes[None, :] + 1.0)
        g = self.ev.cardinal_rows(t.ravel(), orders=(self.m,))[self.m]
        g = g.reshape(pos.size, self.N, self.ev.n)
        pref = (0.5 * xp) ** (self.m - self.alpha) / self._gamma
        out[pos] = pref[:, None] * np.einsum("k,jki->ji", self.rule.weights, g)
        return out

    def caputo_row(self, x: float) -> np.ndarray:
        return self.caputo_rows(np.array([x]))[0]

    def caputo_apply(self, samples, x):
        """Approximate (D^alpha f)(x) from nodal samples of f."""
        samples = np.asarray(samples, dtype=float)
        if samples.size != self.ev.n:
            raise ValueError("sample vector length must equal the node count")
        x = np.asarray(x, dtype=float)
        vals = self.caputo_rows(np.atleast_1d(x)) @ samples
        return float(vals[0]) if x.ndim == 0 else vals
