"""scikit-learn style estimator front ends.

These wrap the functional core so the method composes with sklearn
pipelines and model-selection utilities: parameters live on the
constructor, ``fit`` learns from node samples, ``predict`` evaluates.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, RegressorMixin
from sklearn.utils.validation import check_is_fitted

from .basis import MultinodeBasis
from .caputo import CaputoOperator
from .collocation import FdeProblem, assemble_bvp, assemble_ivp, solve
from .experiments import ExperimentConfig, build_evaluator
from .shepard import ShepardEvaluator


def _as_points(X) -> np.ndarray:
    X = np.asarray(X, dtype=float)
    if X.ndim == 2:
        if X.shape[1] != 1:
            raise ValueError("expected a single feature column")
        X = X[:, 0]
    if X.ndim != 1:
        raise ValueError("expected 1-d abscissas or a (n, 1) array")
    return X


class _NodeConfigured(BaseEstimator):
    """Shared node-family/covering parameters and evaluator construction."""

    def __init__(self, node_family="equispaced", d=8, n=None, n_e=None,
                 q=None, mu=4, n_s=None, T=1.0):
        self.node_family = node_family
        self.d = d
        self.n = n
        self.n_e = n_e
        self.q = q
        self.mu = mu
        self.n_s = n_s
        self.T = T

    def _build_evaluator(self) -> ShepardEvaluator:
        config = ExperimentConfig(
            example_id="_estimator_", node_family=self.node_family, d=self.d,
            n=self.n, n_e=self.n_e, q=self.q, mu=self.mu, n_s=self.n_s,
            T=self.T)
        return build_evaluator(config)

    def get_nodes(self) -> np.ndarray:
        """The node abscissas the estimator expects samples at."""
        return self._build_evaluator().basis.nodeset.nodes


class MultinodeShepardInterpolator(_NodeConfigured, RegressorMixin):
    """Blended local-Lagrange interpolant on a structured node set.

    ``fit(X, y)`` expects X to coincide with the generated nodes (any
    order); ``predict(X)`` evaluates the interpolant, optionally a
    derivative of it.
    """

    def fit(self, X, y):
        ev = self._build_evaluator()
        x = _as_points(X)
        y = np.asarray(y, dtype=float)
        nodes = ev.basis.nodeset.nodes
        if x.size != nodes.size or y.size != nodes.size:
            raise ValueError(f"expected samples at all {nodes.size} nodes")
        order = np.argsort(x)
        if not np.allclose(x[order], nodes, rtol=0.0, atol=1e-12):
            raise ValueError("sample abscissas do not match the node set; "
                             "query nodes_ via get_nodes()")
        self.evaluator_ = ev
        self.nodes_ = nodes
        self.samples_ = y[order]
        return self

    def predict(self, X, order: int = 0):
        check_is_fitted(self, "evaluator_")
        return self.evaluator_.eval_shepard(self.samples_, _as_points(X), order)


class CaputoDerivativeEstimator(_NodeConfigured, RegressorMixin):
    """Fractional derivative of order alpha of a sampled function."""

    def __init__(self, alpha=0.5, node_family="equispaced", d=8, n=None,
                 n_e=None, q=None, mu=4, n_s=None, T=1.0):
        super().__init__(node_family=node_family, d=d, n=n, n_e=n_e, q=q,
                         mu=mu, n_s=n_s, T=T)
        self.alpha = alpha

    def fit(self, X, y):
        interp = MultinodeShepardInterpolator(
            node_family=self.node_family, d=self.d, n=self.n, n_e=self.n_e,
            q=self.q, mu=self.mu, n_s=self.n_s, T=self.T).fit(X, y)
        self.evaluator_ = interp.evaluator_
        self.samples_ = interp.samples_
        self.operator_ = CaputoOperator(self.alpha, self.evaluator_)
        return self

    def predict(self, X):
        check_is_fitted(self, "operator_")
        return self.operator_.caputo_apply(self.samples_, _as_points(X))


class BagleyTorvikCollocation(_NodeConfigured, RegressorMixin):
    """Collocation solver for rho*y'' + lam*(D^alpha y) + sigma*y = h.

    ``fit()`` assembles and solves the configured problem (it takes no
    data; X and y are accepted and ignored for pipeline compatibility).
    After fitting, ``predict(X)`` evaluates the approximate solution and
    ``cond_`` / ``residual_`` expose the conditioning diagnostics.
    """

    def __init__(self, rho=1.0, lam=1.0, sigma=1.0, h=None, alpha=1.5,
                 gamma1=0.0, gamma2=0.0, kind="boundary",
                 node_family="equispaced", d=8, n=None, n_e=None, q=None,
                 mu=4, n_s=None, T=1.0):
        super().__init__(node_family=node_family, d=d, n=n, n_e=n_e, q=q,
                         mu=mu, n_s=n_s, T=T)
        self.rho = rho
        self.lam = lam
        self.sigma = sigma
        self.h = h
        self.alpha = alpha
        self.gamma1 = gamma1
        self.gamma2 = gamma2
        self.kind = kind

    def fit(self, X=None, y=None):
        if self.h is None:
            raise ValueError("a right-hand side callable h is required")
        ev = self._build_evaluator()
        problem = FdeProblem(rho=self.rho, lam=self.lam, sigma=self.sigma,
                             h=self.h, alpha=self.alpha, gamma1=self.gamma1,
                             gamma2=self.gamma2, kind=self.kind, T=self.T)
        op = CaputoOperator(problem.alpha, ev)
        if problem.kind == "boundary":
            system = assemble_bvp(problem, op, ev)
        else:
            system = assemble_ivp(problem, op, ev)
        solution = solve(system, ev)
        self.evaluator_ = ev
        self.solution_ = solution
        self.nodal_values_ = solution.y
        self.cond_ = solution.cond
        self.residual_ = solution.residual_norm
        return self

    def predict(self, X):
        check_is_fitted(self, "solution_")
        return self.solution_(_as_points(X))
