"""Multinode blending functions and their derivatives.

Evaluation goes through the normalized form B_k = C_k / sum_l C_l with

    C_l(x) = (x - x_j)^mu * prod_{i in F_l} (x - x_{l_i})^(-mu),

where x_j is the node nearest to x.  The (x - x_j) factor cancels the
singular factor of every subset containing j, so the representation is
finite at and near the nodes.  Derivatives follow from the logarithmic
derivative sums of the factored form and a binomial recursion.
"""

from __future__ import annotations

from math import comb, factorial

import numpy as np

from .nodes import Covering, IndexSets, NodeSet, index_sets

MAX_ORDER = 4


class BasisEval:
    """Values and derivatives of all blending functions at a batch of points.

    ``derivative(r)`` has shape (npoints, nsubsets); ``values``, ``d1``
    and ``d2`` are shorthands for orders 0, 1 and 2.
    """

    def __init__(self, derivs: list[np.ndarray]):
        self._derivs = derivs

    def derivative(self, r: int) -> np.ndarray:
        return self._derivs[r]

    @property
    def values(self) -> np.ndarray:
        return self._derivs[0]

    @property
    def d1(self) -> np.ndarray:
        return self._derivs[1]

    @property
    def d2(self) -> np.ndarray:
        return self._derivs[2]

    @property
    def max_order(self) -> int:
        return len(self._derivs) - 1


class MultinodeBasis:
    """The pair (mu, covering), evaluable with derivatives up to order 4."""

    def __init__(self, nodeset: NodeSet, covering: Covering, mu: int = 4):
        if mu < 2 or mu % 2 != 0:
            raise ValueError("mu must be an even integer >= 2")
        covering.validate(nodeset.n)
        self.nodeset = nodeset
        self.covering = covering
        self.mu = mu
        self.index_sets: IndexSets = index_sets(covering, nodeset.n)

    @property
    def n(self) -> int:
        return self.nodeset.n

    @property
    def s(self) -> int:
        return self.covering.s

    def eval(self, x, max_order: int = 0, jstar=None) -> BasisEval:
        """Evaluate all B_k and derivatives up to ``max_order`` at x.

        x may be a scalar or 1-d array inside [0, T]; ``jstar`` optionally
        overrides the nearest-node choice (used to check continuity of
        the normalization across the nearest-node switch).
        """
        if not 0 <= max_order <= MAX_ORDER:
            raise ValueError(f"max_order must be in [0, {MAX_ORDER}]")
        x = np.atleast_1d(np.asarray(x, dtype=float))
        nodes = self.nodeset.nodes
        if np.any(x < 0.0) or np.any(x > self.nodeset.T):
            raise ValueError("evaluation point outside [0, T]")
        mu = self.mu
        m_pts, s = x.size, self.s

        if jstar is None:
            jstar = np.argmin(np.abs(x[:, None] - nodes[None, :]), axis=1)
        else:
            jstar = np.broadcast_to(np.asarray(jstar, dtype=int), x.shape).copy()
        xj = nodes[jstar]
        dxj = x - xj
        exact = dxj == 0.0
        dxj_safe = np.where(exact, 1.0, dxj)

        # C_l and the log-derivative sums S^(r) = (d/dx)^r (C_l'/C_l),
        # with the (x - x_j) factor cancelled against a matching subset node.
        logC = np.empty((m_pts, s))
        S = np.zeros((max(max_order, 1), m_pts, s))
        for k, f in enumerate(self.covering.subsets):
            diff = x[:, None] - nodes[f][None, :]
            has = f[None, :] == jstar[:, None]
            hasany = has.any(axis=1)
            safe = np.where(has, 1.0, diff)
            lc = -mu * np.sum(np.log(np.abs(safe)), axis=1)
            head = np.where(
                hasany, 0.0, np.where(exact, -np.inf, mu * np.log(np.abs(dxj_safe)))
            )
            logC[:, k] = lc + head
            for r in range(max_order):
                sign = mu * (-1.0) ** r * factorial(r)
                with np.errstate(over="ignore"):
                    inv = np.where(has, 0.0, safe ** -(r + 1))
                    invj = np.where(hasany | exact, 0.0, dxj_safe ** -(r + 1))
                    S[r, :, k] = sign * (invj - np.sum(inv, axis=1))

        # common per-point rescaling cancels in every ratio below
        mx = np.max(logC, axis=1)
        C = [np.exp(logC - mx[:, None])]
        for r in range(1, max_order + 1):
            acc = np.zeros((m_pts, s))
            for i in range(r):
                # a fully underflown weight contributes nothing even when
                # its log-derivative sum has overflown (avoids 0 * inf)
                with np.errstate(invalid="ignore"):
                    term = np.where(C[i] == 0.0, 0.0, C[i] * S[r - 1 - i])
                acc += comb(r - 1, i) * term
            C.append(acc)

        D = [c.sum(axis=1) for c in C]
        B = [C[0] / D[0][:, None]]
        for r in range(1, max_order + 1):
            acc = C[r] / D[0][:, None]
            for i in range(r):
                acc -= comb(r, i) * (D[r - i] / D[0])[:, None] * B[i]
            B.append(acc)
        return BasisEval(B)
