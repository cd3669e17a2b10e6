"""Special functions used by exact solutions and right-hand sides.

Gamma, erf, Dawson and the (un-normalized) Fresnel integrals are thin
wrappers around scipy.special; the generalized Mittag-Leffler function
is summed directly, which is accurate in the moderate-argument regime
the experiments use.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import special as sp


class AccuracyError(RuntimeError):
    """A series evaluation failed to converge to the requested tolerance."""


@dataclass(frozen=True)
class SeriesControl:
    tol: float = 1e-16
    max_terms: int = 500

    def __post_init__(self):
        if self.tol <= 0:
            raise ValueError("tol must be positive")
        if self.max_terms < 1:
            raise ValueError("max_terms must be at least 1")


def gamma_fn(x: float) -> float:
    """Gamma function; raises on the poles at non-positive integers."""
    if x <= 0 and x == np.floor(x):
        raise ValueError(f"gamma pole at x = {x}")
    return float(sp.gamma(x))


def mittag_leffler(g, d, z, control: SeriesControl = SeriesControl()):
    """Generalized Mittag-Leffler function E_{g,d}(z) by direct series.

    Accepts real or complex z (scalar or array).  Terms are
    z^k / Gamma(g*k + d); summation stops once the term magnitude drops
    below ``control.tol`` times the partial sum.
    """
    if np.real(g) <= 0 or np.real(d) <= 0:
        raise ValueError("require Re(g) > 0 and Re(d) > 0")
    zin = np.asarray(z)
    scalar = zin.ndim == 0
    complex_in = np.iscomplexobj(zin)
    zz = np.atleast_1d(zin).astype(complex)
    total = np.zeros(zz.shape, dtype=complex)
    term = np.ones(zz.shape, dtype=complex) / sp.gamma(d)
    for k in range(control.max_terms):
        total = total + term
        if np.all(np.abs(term) <= control.tol * np.maximum(np.abs(total), 1e-300)):
            break
        # next term: z^(k+1) / Gamma(g(k+1)+d)
        term = term * zz * sp.gamma(g * k + d) / sp.gamma(g * (k + 1) + d)
    else:
        raise AccuracyError("Mittag-Leffler series did not converge")
    result = total if complex_in else total.real
    if scalar:
        return complex(result[0]) if complex_in else float(result[0])
    return result


def erf(x):
    return sp.erf(x)


def dawson(x):
    """Dawson function exp(-x^2) * integral_0^x exp(t^2) dt."""
    return sp.dawsn(x)


_FRESNEL_SCALE = np.sqrt(np.pi / 2.0)


def fresnel_s(x):
    """S(x) = integral_0^x sin(t^2) dt (no pi/2 normalization)."""
    s, _ = sp.fresnel(np.asarray(x) / _FRESNEL_SCALE)
    return _FRESNEL_SCALE * s


def fresnel_c(x):
    """C(x) = integral_0^x cos(t^2) dt (no pi/2 normalization)."""
    _, c = sp.fresnel(np.asarray(x) / _FRESNEL_SCALE)
    return _FRESNEL_SCALE * c
