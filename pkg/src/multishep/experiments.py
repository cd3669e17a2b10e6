"""Problem registry, experiment runner and result serialization.

Twelve named problems are bundled: three fractional-derivative
approximation targets (deriv-*), six boundary value problems (bvp-*)
and three initial value problems (ivp-*), each with its exact solution
and any default configuration the experiments use.
"""

from __future__ import annotations

import csv
import json
import time
from dataclasses import dataclass, field, asdict
from math import ceil, gamma, pi, sqrt
from typing import Callable, Optional

import numpy as np

from . import specfun
from .basis import MultinodeBasis
from .caputo import CaputoOperator, caputo_exact_monomial
from .collocation import FdeProblem, assemble_bvp, assemble_ivp, solve
from .nodes import equispaced_covering, equispaced_nodes, mixed_ec, mixed_emc
from .shepard import ShepardEvaluator

NODE_FAMILIES = ("equispaced", "mixed-ec", "mixed-emc")
ALPHA_SWEEP = (1 / 5, 1 / 2, 4 / 5, 6 / 5, 3 / 2, 9 / 5)


# ---------------------------------------------------------------------------
# exact fractional derivatives of the derivative-approximation targets

def caputo_sin(alpha: float, x):
    """Closed form of D^alpha sin via the Mittag-Leffler function."""
    m = ceil(alpha)
    x = np.asarray(x, dtype=float)
    e_plus = specfun.mittag_leffler(1.0, m - alpha + 1.0, 1j * x)
    e_minus = specfun.mittag_leffler(1.0, m - alpha + 1.0, -1j * x)
    val = (1j**m) * x ** (m - alpha) / 2j * (e_plus - (-1) ** m * e_minus)
    return np.real(val)


def caputo_exp2(alpha: float, x):
    """Closed form of D^alpha e^(2x): 2^m x^(m-a) E_{1,m-a+1}(2x)."""
    m = ceil(alpha)
    x = np.asarray(x, dtype=float)
    return 2**m * x ** (m - alpha) * specfun.mittag_leffler(1.0, m - alpha + 1.0, 2 * x)


# ---------------------------------------------------------------------------
# registry

@dataclass(frozen=True)
class DerivativeCase:
    example_id: str
    f: Callable
    exact: Callable  # exact(alpha) -> callable of x
    default_ne: int
    default_d: int = 8


@dataclass(frozen=True)
class CollocationCase:
    example_id: str
    make_problem: Callable  # make_problem(alpha=None, omega=None) -> FdeProblem
    defaults: dict = field(default_factory=dict)


def _bvp2_h(x):
    x = np.asarray(x, dtype=float)
    p = -2373 + 10640 * x - 16240 * x**2 + 8000 * x**3
    q = (-34578 + 233262 * x - 448107 * x**2 + 264880 * x**3
         - 9425 * x**4 + 3250 * x**5)
    return (96 * np.sqrt(x) * p + 7 * sqrt(pi) * q) / (89250 * sqrt(pi))


def _bvp2_exact(x):
    x = np.asarray(x, dtype=float)
    return (27 / 125) * x - (339 / 250) * x**2 + (76 / 25) * x**3 - (29 / 10) * x**4 + x**5


def _bvp4_h(x):
    x = np.asarray(x, dtype=float)
    c = np.exp(-3 * pi) / (40 * sqrt(pi))
    return c * x**2 * (40 * x**3 - 74 * x + 33) + np.sqrt(x) / (70 * sqrt(pi)) * (
        1280 * x**3 - 1036 * x + 231
    )


def _bvp4_exact(x):
    x = np.asarray(x, dtype=float)
    return (x**3 - (37 / 20) * x + 33 / 40) * x**2


def _bvp6_sigma(x):
    x = np.asarray(x, dtype=float)
    return -(1 - x) / (1 + x) ** 2


def _bvp6_h(x):
    x = np.asarray(x, dtype=float)
    sx = np.sqrt(x)
    s1x = np.sqrt(1 + x)
    return (x - 1) / (1 + x) ** 4 + (
        sx * s1x * (33 + 26 * x + 8 * x**2) + 15 * np.log(sx + s1x)
    ) / (4 * sqrt(pi) * (1 + x) ** 3.5)


def _ivp1_h(x):
    # middle coefficient rebuilt from D^(3/2) x^(5/2); the printed form
    # uses a different constant that is inconsistent with the solution
    x = np.asarray(x, dtype=float)
    return (15 / 4) * np.sqrt(x) + (gamma(3.5) / 100) * x + x**2.5 / 200


def _ivp2_h(x):
    x = np.asarray(x, dtype=float)
    return 1.5 * np.exp(x) + 0.5 * np.exp(x) * specfun.erf(np.sqrt(x))


def _ivp3_h(omega: float):
    def h(x):
        x = np.asarray(x, dtype=float)
        wx = omega * x
        root = np.sqrt(wx)
        frac = (2 * omega**1.5 / sqrt(pi)) * (
            np.cos(wx) * specfun.fresnel_s(root) - np.sin(wx) * specfun.fresnel_c(root)
        )
        return np.sin(wx) - omega**2 * np.sin(wx) + frac

    return h


def _registry() -> dict:
    reg: dict[str, object] = {}
    reg["deriv-sin"] = DerivativeCase(
        "deriv-sin", np.sin, lambda a: (lambda x: caputo_sin(a, x)), default_ne=9)
    reg["deriv-x92"] = DerivativeCase(
        "deriv-x92", lambda x: np.asarray(x, dtype=float) ** 4.5,
        lambda a: (lambda x: caputo_exact_monomial(4.5, a, x)), default_ne=20)
    reg["deriv-exp2x"] = DerivativeCase(
        "deriv-exp2x", lambda x: np.exp(2 * np.asarray(x, dtype=float)),
        lambda a: (lambda x: caputo_exp2(a, x)), default_ne=10)

    reg["bvp-1"] = CollocationCase(
        "bvp-1",
        lambda alpha=None, omega=None: FdeProblem(
            rho=1.0, lam=1.0, sigma=1.0,
            h=lambda x: 1.0 + np.asarray(x, dtype=float),
            alpha=1.5, gamma1=1.0, gamma2=2.0, kind="boundary",
            exact=lambda x: 1.0 + np.asarray(x, dtype=float)),
        defaults=dict(d=3, n_e=3, n=8, q=2))
    reg["bvp-2"] = CollocationCase(
        "bvp-2",
        lambda alpha=None, omega=None: FdeProblem(
            rho=1.0, lam=8 / 17, sigma=13 / 51, h=_bvp2_h,
            alpha=1.5, gamma1=0.0, gamma2=0.0, kind="boundary",
            exact=_bvp2_exact),
        # the printed q=7 violates q < d; nearest feasible q is used
        defaults=dict(d=6, n_e=3, n=13, q=5))
    reg["bvp-3"] = CollocationCase(
        "bvp-3",
        lambda alpha=None, omega=None: FdeProblem(
            rho=0.0, lam=1.0, sigma=1.0,
            h=lambda x: 2 * np.sqrt(np.asarray(x, dtype=float)) / gamma(1.5)
            + np.asarray(x, dtype=float) ** 2 - np.asarray(x, dtype=float),
            alpha=1.5, gamma1=0.0, gamma2=0.0, kind="boundary",
            exact=lambda x: np.asarray(x, dtype=float) ** 2 - np.asarray(x, dtype=float)),
        defaults=dict(d=3, n_e=3, n=7, q=2))
    reg["bvp-4"] = CollocationCase(
        "bvp-4",
        lambda alpha=None, omega=None: FdeProblem(
            rho=0.0, lam=1.0, sigma=np.exp(-3 * pi) / sqrt(pi), h=_bvp4_h,
            alpha=1.5, gamma1=0.0, gamma2=-1 / 40, kind="boundary",
            exact=_bvp4_exact),
        defaults=dict(d=6, n_e=3, n=8, q=2))
    reg["bvp-5"] = CollocationCase(
        "bvp-5",
        lambda alpha=1.2, omega=None: FdeProblem(
            rho=0.0, lam=1.0, sigma=3 / 57,
            h=lambda x, a=alpha: (a + 1) * np.asarray(x, dtype=float)
            + (3 / 57) * np.asarray(x, dtype=float) ** (a + 1) / gamma(a + 1),
            alpha=alpha, gamma1=0.0, gamma2=1 / gamma(alpha + 1), kind="boundary",
            exact=lambda x, a=alpha: np.asarray(x, dtype=float) ** (a + 1) / gamma(a + 1)),
        defaults=dict(d=3, n_e=3, n=100, alpha=1.2))
    reg["bvp-6"] = CollocationCase(
        "bvp-6",
        lambda alpha=None, omega=None: FdeProblem(
            # the printed left boundary value 0 contradicts the exact
            # solution, which is 1 at x = 0
            rho=0.0, lam=1.0, sigma=_bvp6_sigma, h=_bvp6_h,
            alpha=1.5, gamma1=1.0, gamma2=0.25, kind="boundary",
            exact=lambda x: 1.0 / (1 + np.asarray(x, dtype=float)) ** 2),
        defaults=dict(d=3, n_e=6, n=40))
    reg["ivp-1"] = CollocationCase(
        "ivp-1",
        lambda alpha=None, omega=None: FdeProblem(
            rho=1.0, lam=1 / 100, sigma=1 / 200, h=_ivp1_h,
            alpha=1.5, gamma1=0.0, gamma2=0.0, kind="initial",
            exact=lambda x: np.asarray(x, dtype=float) ** 2.5),
        defaults=dict(d=3, n_e=14, n=40, ns_extra=5))
    reg["ivp-2"] = CollocationCase(
        "ivp-2",
        lambda alpha=None, omega=None: FdeProblem(
            rho=1.0, lam=0.5, sigma=0.5, h=_ivp2_h,
            alpha=1.5, gamma1=1.0, gamma2=1.0, kind="initial",
            exact=lambda x: np.exp(np.asarray(x, dtype=float))),
        defaults=dict(d=3, n_e=3, n=20))
    reg["ivp-3"] = CollocationCase(
        "ivp-3",
        lambda alpha=None, omega=1.0: FdeProblem(
            rho=1.0, lam=1.0, sigma=1.0, h=_ivp3_h(omega),
            alpha=1.5, gamma1=0.0, gamma2=omega, kind="initial",
            exact=lambda x, w=omega: np.sin(w * np.asarray(x, dtype=float))),
        defaults=dict(d=3, n_e=3, n=20, omega=1.0))
    return reg


_REGISTRY = _registry()


def registry() -> dict:
    """Named problems keyed by example id."""
    return dict(_REGISTRY)


def get_case(example_id: str):
    try:
        return _REGISTRY[example_id]
    except KeyError:
        raise KeyError(f"unknown example id {example_id!r}; "
                       f"known: {sorted(_REGISTRY)}") from None


# ---------------------------------------------------------------------------
# configuration and runner

@dataclass
class ExperimentConfig:
    example_id: str
    node_family: str = "equispaced"
    d: int = 8
    n: Optional[int] = None
    n_e: Optional[int] = None
    q: Optional[int] = None  # None: maximal overlap d - 1
    mu: int = 4
    alpha: Optional[float] = None
    omega: Optional[float] = None
    n_s: Optional[int] = None
    grid: int = 100
    T: float = 1.0

    def __post_init__(self):
        if self.node_family not in NODE_FAMILIES:
            raise ValueError(f"unknown node family {self.node_family!r}")

    @property
    def effective_q(self) -> int:
        """Window overlap actually used; defaults to the maximal d - 1."""
        return self.q if self.q is not None else self.d - 1


@dataclass
class ErrorReport:
    config: ExperimentConfig
    n: int
    pointwise: list  # (xi, error) pairs
    mean_error: float
    cond: Optional[float] = None
    residual: Optional[float] = None
    runtime_ms: float = 0.0


def build_evaluator(config: ExperimentConfig) -> ShepardEvaluator:
    """Nodes -> covering -> basis -> Shepard evaluator per the config."""
    fam, d = config.node_family, config.d
    if fam == "equispaced":
        n = config.n
        if n is None:
            if config.n_e is None:
                raise ValueError("equispaced family needs n or n_e")
            n = (config.n_e - 1) * d + 1
        nodeset = equispaced_nodes(n, config.T)
        covering = equispaced_covering(n, d, config.effective_q)
    elif fam == "mixed-ec":
        if config.n_e is None:
            raise ValueError("mixed-ec family needs n_e")
        nodeset, covering = mixed_ec(config.n_e, d, config.T)
    else:
        if config.n_e is None:
            raise ValueError("mixed-emc family needs n_e")
        nodeset, covering = mixed_emc(config.n_e, d, config.n_s, config.T)
    basis = MultinodeBasis(nodeset, covering, mu=config.mu)
    return ShepardEvaluator(basis)


def run(config: ExperimentConfig) -> ErrorReport:
    """Execute one experiment and report pointwise/mean errors on the
    equispaced evaluation grid."""
    case = get_case(config.example_id)
    start = time.perf_counter()
    ev = build_evaluator(config)
    grid = np.linspace(0.0, config.T, config.grid)
    cond = None
    residual = None
    if isinstance(case, DerivativeCase):
        alpha = config.alpha if config.alpha is not None else 0.5
        op = CaputoOperator(alpha, ev)
        samples = case.f(ev.basis.nodeset.nodes)
        approx = op.caputo_apply(samples, grid)
        exact = case.exact(alpha)(grid)
    else:
        kwargs = {}
        if config.alpha is not None:
            kwargs["alpha"] = config.alpha
        if config.omega is not None:
            kwargs["omega"] = config.omega
        problem = case.make_problem(**kwargs)
        op = CaputoOperator(problem.alpha, ev)
        if problem.kind == "boundary":
            system = assemble_bvp(problem, op, ev)
        else:
            system = assemble_ivp(problem, op, ev)
        solution = solve(system, ev)
        cond = solution.cond
        if problem.kind == "initial":
            residual = solution.residual_norm
        approx = solution(grid)
        exact = problem.exact(grid)
    errors = np.abs(np.asarray(approx) - np.asarray(exact))
    runtime_ms = (time.perf_counter() - start) * 1e3
    return ErrorReport(
        config=config, n=ev.n,
        pointwise=list(zip(grid.tolist(), errors.tolist())),
        mean_error=float(errors.mean()), cond=cond, residual=residual,
        runtime_ms=runtime_ms)


def default_config(example_id: str, node_family: str = "equispaced",
                   **overrides) -> ExperimentConfig:
    """Config pre-filled with the example's reference parameters."""
    case = get_case(example_id)
    kwargs = dict(example_id=example_id, node_family=node_family)
    if isinstance(case, DerivativeCase):
        # disjoint windows suffice for derivative approximation and are
        # much cheaper than overlapping ones on these node counts
        kwargs.update(d=case.default_d, n_e=case.default_ne, q=0)
    else:
        defaults = dict(case.defaults)
        ns_extra = defaults.pop("ns_extra", None)
        # carry both node counts so the family can be swept afterwards
        kwargs.update({k: v for k, v in defaults.items()
                       if k in ("d", "alpha", "omega", "n", "n_e")})
        if node_family == "equispaced" and "q" in defaults:
            kwargs["q"] = defaults["q"]
    kwargs.update(overrides)
    if (isinstance(case, CollocationCase) and ns_extra is not None
            and node_family == "mixed-emc" and "n_s" not in overrides):
        kwargs["n_s"] = 3 * (kwargs["d"] + 1) + ns_extra
    return ExperimentConfig(**kwargs)


def sweep(config: ExperimentConfig, vary: str, values) -> list[ErrorReport]:
    """Re-run the config once per value of the varied parameter.

    When d is varied, parameters tied to d are rescaled with it: a
    mock-Chebyshev candidate count n_s keeps its surplus over the
    minimal 3*(d+1), and an explicit overlap q is clamped below d.
    """
    if vary not in ExperimentConfig.__dataclass_fields__:
        raise ValueError(f"unknown parameter {vary!r}")
    reports = []
    for v in values:
        cfg = ExperimentConfig(**{**asdict(config), vary: v})
        if vary == "d":
            if cfg.node_family == "mixed-emc" and config.n_s is not None:
                extra = max(config.n_s - 3 * (config.d + 1), 0)
                cfg.n_s = 3 * (cfg.d + 1) + extra
            if cfg.q is not None:
                cfg.q = min(cfg.q, cfg.d - 1)
        reports.append(run(cfg))
    return reports


# ---------------------------------------------------------------------------
# serialization

CSV_COLUMNS = ("example_id", "node_family", "d", "n", "q", "mu", "alpha",
               "omega", "xi", "pointwise_error", "mean_error", "cond",
               "residual", "runtime_ms")


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def _report_key(report: ErrorReport) -> list:
    c = report.config
    return [c.example_id, c.node_family, c.d, report.n, c.effective_q, c.mu,
            c.alpha, c.omega]


def write_csv(reports, path, include_runtime: bool = True) -> None:
    """100 pointwise rows plus one summary row per report.

    ``include_runtime=False`` drops wall-clock times so repeated runs of
    the same configuration serialize to identical bytes.
    """
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_COLUMNS)
        for report in reports:
            key = _report_key(report)
            for xi, err in report.pointwise:
                writer.writerow([_fmt(v) for v in key]
                                + [_fmt(xi), _fmt(err), "", "", "", ""])
            runtime = report.runtime_ms if include_runtime else None
            writer.writerow([_fmt(v) for v in key]
                            + ["", "", _fmt(report.mean_error),
                               _fmt(report.cond), _fmt(report.residual),
                               _fmt(runtime)])


def write_json(reports, path, include_runtime: bool = True) -> None:
    payload = []
    for report in reports:
        entry = {
            "config": asdict(report.config),
            "n": report.n,
            "pointwise": [{"xi": xi, "error": err}
                          for xi, err in report.pointwise],
            "mean_error": report.mean_error,
            "cond": report.cond,
            "residual": report.residual,
        }
        if include_runtime:
            entry["runtime_ms"] = report.runtime_ms
        payload.append(entry)
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=2)


def read_json(path) -> list[ErrorReport]:
    with open(path) as fh:
        payload = json.load(fh)
    reports = []
    for entry in payload:
        reports.append(ErrorReport(
            config=ExperimentConfig(**entry["config"]),
            n=entry["n"],
            pointwise=[(p["xi"], p["error"]) for p in entry["pointwise"]],
            mean_error=entry["mean_error"],
            cond=entry.get("cond"),
            residual=entry.get("residual"),
            runtime_ms=entry.get("runtime_ms", 0.0)))
    return reports
