"""Gauss-Jacobi quadrature for the weight (1-t)^a (1+t)^b on [-1, 1].

Nodes and weights come from the Golub-Welsch procedure: eigenvalues of
the symmetric tridiagonal matrix of the Jacobi three-term recurrence,
with weights proportional to the squared first eigenvector components.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lgamma

import numpy as np
from scipy.linalg import eigh_tridiagonal


@dataclass(frozen=True)
class GaussJacobiRule:
    a: float
    b: float
    N: int
    nodes: np.ndarray
    weights: np.ndarray

    def integrate(self, f) -> float:
        """Sum w_k f(x_k); f must be finite at the nodes."""
        return float(np.dot(self.weights, f(self.nodes)))


def jacobi_total_mass(a: float, b: float) -> float:
    """Integral of (1-t)^a (1+t)^b over [-1, 1]."""
    return np.exp(
        (a + b + 1) * np.log(2.0) + lgamma(a + 1) + lgamma(b + 1) - lgamma(a + b + 2)
    )


def _recurrence(N: int, a: float, b: float) -> tuple[np.ndarray, np.ndarray]:
    """Diagonal and off-diagonal of the symmetric Jacobi matrix of order N."""
    k = np.arange(N, dtype=float)
    ab = a + b
    diag = np.empty(N)
    diag[0] = (b - a) / (ab + 2.0)
    if N > 1:
        kk = k[1:]
        diag[1:] = (b * b - a * a) / ((2 * kk + ab) * (2 * kk + ab + 2.0))
    off = np.empty(max(N - 1, 0))
    if N > 1:
        # k = 1 separately: the generic formula is 0/0 when a + b + 1 = 0
        off[0] = np.sqrt(4.0 * (1 + a) * (1 + b) / ((ab + 2.0) ** 2 * (ab + 3.0)))
        if N > 2:
            kk = k[2:]
            num = 4.0 * kk * (kk + a) * (kk + b) * (kk + ab)
            den = (2 * kk + ab) ** 2 * (2 * kk + ab + 1.0) * (2 * kk + ab - 1.0)
            off[1:] = np.sqrt(num / den)
    return diag, off


def gauss_jacobi(N: int, a: float, b: float) -> GaussJacobiRule:
    """N-point rule, exact for polynomials of degree <= 2N-1 against the
    Jacobi weight (1-t)^a (1+t)^b.
    """
    if N < 1:
        raise ValueError("N must be at least 1")
    if a <= -1.0 or b <= -1.0:
        raise ValueError("require a > -1 and b > -1")
    mu0 = jacobi_total_mass(a, b)
    if N == 1:
        nodes = np.array([(b - a) / (a + b + 2.0)])
        weights = np.array([mu0])
        return GaussJacobiRule(a=a, b=b, N=N, nodes=nodes, weights=weights)
    diag, off = _recurrence(N, a, b)
    vals, vecs = eigh_tridiagonal(diag, off)
    weights = mu0 * vecs[0, :] ** 2
    return GaussJacobiRule(a=a, b=b, N=N, nodes=vals, weights=weights)
