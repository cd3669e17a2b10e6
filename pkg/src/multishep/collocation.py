"""Collocation for the Bagley-Torvik equation
rho*y'' + lambda*(D^alpha y) + sigma*y = h.

Boundary value problems lead to a square system in the interior nodal
values; initial value problems to an overdetermined (n x (n-1)) least
squares system that includes the derivative condition at 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import ceil
from typing import Callable, Optional

import numpy as np
from scipy.linalg import lstsq

from .caputo import CaputoOperator
from .shepard import ShepardEvaluator


class SolverError(RuntimeError):
    """Singular or rank-deficient collocation matrix."""

    def __init__(self, message: str, cond: float = np.inf):
        super().__init__(message)
        self.cond = cond


def _as_callable(c) -> Callable[[np.ndarray], np.ndarray]:
    if callable(c):
        return c
    value = float(c)
    return lambda x: np.full_like(np.asarray(x, dtype=float), value)


@dataclass
class FdeProblem:
    """Coefficients, right-hand side and side conditions of one problem.

    rho, lam and sigma may be constants or callables of x.  kind is
    "boundary" (y(0)=gamma1, y(T)=gamma2) or "initial"
    (y(0)=gamma1, y'(0)=gamma2).
    """

    rho: object
    lam: object
    sigma: object
    h: Callable
    alpha: float
    gamma1: float
    gamma2: float
    kind: str = "boundary"
    T: float = 1.0
    exact: Optional[Callable] = None

    def __post_init__(self):
        if self.kind not in ("boundary", "initial"):
            raise ValueError("kind must be 'boundary' or 'initial'")
        if self.alpha == np.floor(self.alpha) or not 0 < self.alpha < 2:
            raise ValueError("require non-integer alpha in (0, 2)")
        if self.T <= 0:
            raise ValueError("T must be positive")
        self.rho = _as_callable(self.rho)
        self.lam = _as_callable(self.lam)
        self.sigma = _as_callable(self.sigma)

    @property
    def m(self) -> int:
        return ceil(self.alpha)


@dataclass
class CollocationSystem:
    A: np.ndarray
    b: np.ndarray
    cond: float
    kind: str
    nodes: np.ndarray
    gamma1: float
    gamma2: float


@dataclass
class CollocationSolution:
    y: np.ndarray  # nodal values, side conditions filled in
    evaluator: Callable
    cond: float
    residual_norm: float = 0.0

    def __call__(self, x):
        return self.evaluator(x)


def operator_rows(problem: FdeProblem, op: CaputoOperator, ev: ShepardEvaluator,
                  x) -> np.ndarray:
    """Rows A_i(x_j) = rho*g_i'' + lam*(Caputo row)_i + sigma*g_i for a
    batch of collocation abscissas, shape (len(x), n)."""
    x = np.atleast_1d(np.asarray(x, dtype=float))
    rows = ev.cardinal_rows(x, orders=(0, 2))
    cap = op.caputo_rows(x)
    return (
        problem.rho(x)[:, None] * rows[2]
        + problem.lam(x)[:, None] * cap
        + problem.sigma(x)[:, None] * rows[0]
    )


def row_coefficients(problem: FdeProblem, op: CaputoOperator, ev: ShepardEvaluator,
                     xj: float) -> np.ndarray:
    """Length-n coefficient row of the discretized operator at one node."""
    if xj <= 0.0:
        raise ValueError("collocation abscissa must be positive")
    return operator_rows(problem, op, ev, np.array([xj]))[0]


def condition_number(A: np.ndarray) -> float:
    """2-norm condition number sigma_max / sigma_min."""
    if A.size == 0:
        raise ValueError("matrix is empty")
    sv = np.linalg.svd(A, compute_uv=False)
    if sv[-1] == 0.0:
        return np.inf
    return float(sv[0] / sv[-1])


def assemble_bvp(problem: FdeProblem, op: CaputoOperator,
                 ev: ShepardEvaluator) -> CollocationSystem:
    """Square (n-2) system collocated at the interior nodes.

    The right-boundary unknown y_n carries coefficient A_n, so the rhs
    subtracts A_n(x_j)*gamma2 (and A_1(x_j)*gamma1 on the left).
    """
    if problem.kind != "boundary":
        raise ValueError("problem is not a boundary value problem")
    nodes = ev.basis.nodeset.nodes
    n = nodes.size
    if n < 3:
        raise ValueError("need at least 3 nodes")
    full = operator_rows(problem, op, ev, nodes[1:-1])
    A = full[:, 1:-1]
    b = (
        problem.h(nodes[1:-1])
        - full[:, 0] * problem.gamma1
        - full[:, -1] * problem.gamma2
    )
    return CollocationSystem(A=A, b=b, cond=condition_number(A), kind="boundary",
                             nodes=nodes, gamma1=problem.gamma1,
                             gamma2=problem.gamma2)


def assemble_ivp(problem: FdeProblem, op: CaputoOperator,
                 ev: ShepardEvaluator) -> CollocationSystem:
    """n x (n-1) least squares system: collocation at x_2..x_n plus the
    derivative condition sum_i g_i'(0) y_i = gamma2."""
    if problem.kind != "initial":
        raise ValueError("problem is not an initial value problem")
    nodes = ev.basis.nodeset.nodes
    n = nodes.size
    full = operator_rows(problem, op, ev, nodes[1:])
    d1 = ev.cardinal_rows(np.array([0.0]), orders=(1,))[1][0]
    A = np.vstack([full[:, 1:], d1[1:]])
    b = np.concatenate([
        problem.h(nodes[1:]) - full[:, 0] * problem.gamma1,
        [problem.gamma2 - d1[0] * problem.gamma1],
    ])
    return CollocationSystem(A=A, b=b, cond=condition_number(A), kind="initial",
                             nodes=nodes, gamma1=problem.gamma1,
                             gamma2=problem.gamma2)


def solve(system: CollocationSystem, ev: ShepardEvaluator) -> CollocationSolution:
    """Solve the assembled system and wrap the result as an evaluable
    blended interpolant."""
    n = system.nodes.size
    y = np.empty(n)
    residual = 0.0
    if system.kind == "boundary":
        try:
            interior = np.linalg.solve(system.A, system.b)
        except np.linalg.LinAlgError as exc:
            raise SolverError(f"singular collocation matrix: {exc}",
                              cond=system.cond) from exc
        y[0] = system.gamma1
        y[-1] = system.gamma2
        y[1:-1] = interior
    else:
        sol, _, rank, _ = lstsq(system.A, system.b, lapack_driver="gelsy")
        if rank < system.A.shape[1]:
            raise SolverError("rank-deficient collocation matrix",
                              cond=system.cond)
        residual = float(np.linalg.norm(system.b - system.A @ sol))
        y[0] = system.gamma1
        y[1:] = sol

    def evaluator(x):
        return ev.eval_shepard(y, x)

    return CollocationSolution(y=y, evaluator=evaluator, cond=system.cond,
                               residual_norm=residual)


def solve_problem(problem: FdeProblem, ev: ShepardEvaluator) -> CollocationSolution:
    """Assemble and solve in one step."""
    op = CaputoOperator(problem.alpha, ev)
    if problem.kind == "boundary":
        system = assemble_bvp(problem, op, ev)
    else:
        system = assemble_ivp(problem, op, ev)
    return solve(system, ev)
