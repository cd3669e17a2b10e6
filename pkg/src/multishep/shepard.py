"""Local Lagrange polynomials and the multinode Shepard operator.

The operator is evaluated through cardinal functions: row vectors
g_i^(r)(x) such that the r-th derivative of the blended interpolant is
the dot product of the row with the nodal samples.
"""

from __future__ import annotations

from math import comb

import numpy as np
from numpy.polynomial import polynomial as P

from .basis import MAX_ORDER, MultinodeBasis


class LocalPolynomial:
    """Lagrange basis of one covering subset, in the scaled local
    variable u = (x - center) / half_width.

    ``coeffs[r]`` holds the r-times differentiated (in u) monomial
    coefficients, one column per Lagrange basis member.
    """

    def __init__(self, node_values: np.ndarray, max_order: int = MAX_ORDER):
        node_values = np.asarray(node_values, dtype=float)
        p = node_values.size
        self.center = 0.5 * (node_values[0] + node_values[-1])
        self.half_width = 0.5 * (node_values[-1] - node_values[0])
        u = (node_values - self.center) / self.half_width
        V = np.vander(u, p, increasing=True)
        base = np.linalg.solve(V, np.eye(p))  # (p, p): coeff row, member col
        self.coeffs = [base]
        for _ in range(max_order):
            self.coeffs.append(P.polyder(self.coeffs[-1], axis=0))

    def eval(self, x: np.ndarray, order: int) -> np.ndarray:
        """Values of all Lagrange members (columns) at points x, as the
        order-th derivative in x.  Shape (len(x), p)."""
        c = self.coeffs[order]
        if c.size == 0:
            return np.zeros((x.size, self.coeffs[0].shape[1]))
        u = (np.asarray(x) - self.center) / self.half_width
        return P.polyval(u, c).T / self.half_width**order


class ShepardEvaluator:
    """Evaluates the multinode Shepard operator and its derivatives from
    nodal samples, via cardinal rows."""

    def __init__(self, basis: MultinodeBasis):
        self.basis = basis
        nodes = basis.nodeset.nodes
        self.locals = [LocalPolynomial(nodes[f]) for f in basis.covering.subsets]

    @property
    def n(self) -> int:
        return self.basis.n

    @property
    def degree(self) -> int:
        """Guaranteed polynomial reproduction degree (min over subsets)."""
        return min(f.size for f in self.basis.covering.subsets) - 1

    def cardinal_rows(self, x, orders=(0,)) -> dict[int, np.ndarray]:
        """Cardinal rows g_i^(r)(x) for each requested derivative order.

        Returns a dict order -> array of shape (len(x), n).  Computing
        several orders at once shares one basis evaluation.
        """
        orders = tuple(orders)
        top = max(orders)
        if top > MAX_ORDER:
            raise ValueError(f"derivative order {top} not supported")
        x = np.atleast_1d(np.asarray(x, dtype=float))
        be = self.basis.eval(x, max_order=top)
        out = {r: np.zeros((x.size, self.n)) for r in orders}
        for k, f in enumerate(self.basis.covering.subsets):
            loc = self.locals[k]
            lag = [loc.eval(x, t) for t in range(top + 1)]
            for r in orders:
                contrib = np.zeros((x.size, f.size))
                for m in range(r + 1):
                    contrib += comb(r, m) * be.derivative(m)[:, k : k + 1] * lag[r - m]
                out[r][:, f] += contrib
        return out

    def cardinal_row(self, x: float, order: int = 0) -> np.ndarray:
        """Single row g^(order) at one abscissa."""
        return self.cardinal_rows(np.array([x]), orders=(order,))[order][0]

    def eval_shepard(self, samples, x, order: int = 0):
        """Derivative of order ``order`` of the blended interpolant at x."""
        samples = np.asarray(samples, dtype=float)
        if samples.size != self.n:
            raise ValueError("sample vector length must equal the node count")
        x = np.asarray(x, dtype=float)
        rows = self.cardinal_rows(np.atleast_1d(x), orders=(order,))[order]
        vals = rows @ samples
        return float(vals[0]) if x.ndim == 0 else vals
