"""Caputo fractional derivatives and Bagley-Torvik collocation via the
univariate multinode Shepard operator."""

from .basis import BasisEval, MultinodeBasis
from .caputo import CaputoOperator, caputo_exact_monomial
from .collocation import (
    CollocationSolution,
    CollocationSystem,
    FdeProblem,
    SolverError,
    assemble_bvp,
    assemble_ivp,
    condition_number,
    row_coefficients,
    solve,
    solve_problem,
)
from .estimators import (
    BagleyTorvikCollocation,
    CaputoDerivativeEstimator,
    MultinodeShepardInterpolator,
)
from .nodes import (
    Covering,
    IndexSets,
    NodeSet,
    equispaced_covering,
    equispaced_nodes,
    index_sets,
    mixed_ec,
    mixed_emc,
)
from .quadrature import GaussJacobiRule, gauss_jacobi
from .shepard import LocalPolynomial, ShepardEvaluator

__all__ = [
    "BasisEval",
    "MultinodeBasis",
    "CaputoOperator",
    "caputo_exact_monomial",
    "CollocationSolution",
    "CollocationSystem",
    "FdeProblem",
    "SolverError",
    "assemble_bvp",
    "assemble_ivp",
    "condition_number",
    "row_coefficients",
    "solve",
    "solve_problem",
    "BagleyTorvikCollocation",
    "CaputoDerivativeEstimator",
    "MultinodeShepardInterpolator",
    "Covering",
    "IndexSets",
    "NodeSet",
    "equispaced_covering",
    "equispaced_nodes",
    "index_sets",
    "mixed_ec",
    "mixed_emc",
    "GaussJacobiRule",
    "gauss_jacobi",
    "LocalPolynomial",
    "ShepardEvaluator",
]

__version__ = "0.1.0"
