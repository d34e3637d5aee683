"""
Adaptive one-dimensional quadrature used by the dielectric-integral oracle.

Two rules are provided:

* `periodic_trapezoid` -- equally weighted nodes over a full period, doubled
  until two successive estimates agree.  For smooth periodic integrands the
  error falls geometrically; for trigonometric polynomials it is exact once
  the node count exceeds the degree.
* `adaptive_gauss_kronrod` -- globally adaptive 7/15-point Gauss-Kronrod with
  interval halving of the worst panel.  A semi-infinite range [lo, inf) with
  lo > 0 is mapped to (0, 1] by x = lo / t.

Integrands are vectorised: ``f(x)`` receives a 1-d array of nodes and returns
an array whose first axis runs over the nodes.  Trailing axes, and complex
values, are carried through, which lets one call integrate several
quantities at once and lets derivatives be taken by complex step.

Summation is done over panels sorted by position, so results are bitwise
reproducible for a fixed settings object.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass

import numpy as np


class QuadratureError(RuntimeError):
    """Raised when the requested tolerance is not reached.

    The best available estimate and its error bound are kept on the
    exception as `estimate` and `error`.
    """

    def __init__(self, message, estimate=None, error=None):
        super().__init__(message)
        self.estimate = estimate
        self.error = error


@dataclass(frozen=True)
class QuadratureSettings:
    rel_tol: float = 1e-12
    abs_tol: float = 1e-300
    max_subdivisions: int = 2000

    def __post_init__(self):
        if not 0 < self.rel_tol <= 1e-3:
            raise ValueError(f"rel_tol must lie in (0, 1e-3], got {self.rel_tol!r}")
        if not self.abs_tol >= 0:
            raise ValueError("abs_tol must be non-negative")
        if self.max_subdivisions < 1:
            raise ValueError("max_subdivisions must be positive")


DEFAULT_SETTINGS = QuadratureSettings()


# 15-point Kronrod nodes on [-1, 1] (positive half) and weights; the
# embedded 7-point Gauss rule uses the odd-indexed nodes.
_XK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])
_NODES = np.concatenate([-_XK[:-1], _XK[::-1]])
_WEIGHTS_K = np.concatenate([_WK[:-1], _WK[::-1]])
_WEIGHTS_G = np.zeros(15)
_WEIGHTS_G[1::2] = np.concatenate([_WG[:-1], _WG[::-1]])


def _norm(x):
    return float(np.max(np.abs(x))) if np.ndim(x) else abs(x)


def _gk15(f, lo, hi):
    half = 0.5 * (hi - lo)
    mid = 0.5 * (hi + lo)
    vals = np.asarray(f(mid + half * _NODES))
    k = half * np.tensordot(_WEIGHTS_K, vals, axes=(0, 0))
    g = half * np.tensordot(_WEIGHTS_G, vals, axes=(0, 0))
    resabs = abs(half) * _norm(np.tensordot(_WEIGHTS_K, np.abs(vals), axes=(0, 0)))
    return k, _norm(k - g), resabs


def _ordered_sum(values):
    arr = np.stack([np.asarray(v) for v in values])
    if np.iscomplexobj(arr):
        return _ordered_sum(arr.real) + 1j * _ordered_sum(arr.imag)
    if arr.ndim == 1:
        return math.fsum(arr)
    return np.array([math.fsum(col) for col in arr.reshape(len(arr), -1).T]).reshape(arr.shape[1:])


_ROUNDOFF = 50 * np.finfo(float).eps


def adaptive_gauss_kronrod(f, lo, hi, settings: QuadratureSettings = DEFAULT_SETTINGS, floor=0.0):
    """Integrate `f` over [lo, hi]; `hi` may be +inf when lo > 0.

    `floor` is an absolute error that counts as converged, for integrands
    known to cancel down to rounding.
    """
    if math.isinf(hi):
        if not lo > 0:
            raise ValueError("semi-infinite ranges need a positive lower limit")
        scale = lo

        def g(t):
            x = scale / t
            vals = np.asarray(f(x))
            jac = (scale / (t * t)).reshape((-1,) + (1,) * (vals.ndim - 1))
            return vals * jac

        return adaptive_gauss_kronrod(g, 0.0, 1.0, settings, floor)

    if hi == lo:
        return 0.0
    value, err, resabs = _gk15(f, lo, hi)
    # heap entries: (-error, left, right, value, resabs)
    heap = [(-err, lo, hi, value, resabs)]
    estimate, total_err, total_abs = value, err, resabs
    while True:
        tol = max(settings.abs_tol, settings.rel_tol * _norm(estimate), _ROUNDOFF * total_abs, floor)
        if total_err <= tol:
            break
        if len(heap) >= settings.max_subdivisions:
            raise QuadratureError(
                f"no convergence after {len(heap)} panels "
                f"(error bound {total_err:.3e})", estimate, total_err)
        neg_err, left, right, old, old_abs = heapq.heappop(heap)
        mid = 0.5 * (left + right)
        if not left < mid < right:
            raise QuadratureError("panel width underflow", estimate, total_err)
        estimate = estimate - old
        total_err += neg_err
        total_abs -= old_abs
        for a, b in ((left, mid), (mid, right)):
            v, e, ra = _gk15(f, a, b)
            heapq.heappush(heap, (-e, a, b, v, ra))
            estimate = estimate + v
            total_err += e
            total_abs += ra
    return _ordered_sum([p[3] for p in sorted(heap, key=lambda p: p[1])])


def periodic_trapezoid(f, settings: QuadratureSettings = DEFAULT_SETTINGS, period=2.0 * math.pi,
                       start=8, floor=0.0):
    """Integrate a `period`-periodic `f` over one period.

    `floor` is an absolute error below which the result counts as converged
    (scalar, or one per output component); callers whose integrand is a
    cancelling sum of larger terms use it to stop at the rounding level.

    Two successive doublings must agree, so a harmonic that happens to
    vanish on both the old and the new nodes cannot fake convergence; trig
    polynomials of degree below 4 * start are integrated exactly.
    """
    n = start
    agreed = 0
    vals = np.asarray(f(np.arange(n) * (period / n)))
    prev = period * np.mean(vals, axis=0)
    l1 = period * np.mean(np.abs(vals), axis=0)
    while True:
        n *= 2
        if n > 2 * settings.max_subdivisions:
            raise QuadratureError(f"periodic rule did not converge with {n // 2} nodes",
                                  prev, _norm(prev))
        # reuse the old nodes: new estimate = mean of old and midpoint sums
        mids = np.asarray(f((np.arange(n // 2) + 0.5) * (period / (n // 2))))
        cur = 0.5 * (prev + period * np.mean(mids, axis=0))
        l1 = 0.5 * (l1 + period * np.mean(np.abs(mids), axis=0))
        # convergence is judged against the integral of |f| so that integrals
        # that cancel to zero still terminate
        tol = np.maximum(max(settings.abs_tol, settings.rel_tol * _norm(l1)), floor)
        agreed = agreed + 1 if np.all(np.abs(cur - prev) <= tol) else 0
        if agreed == 2:
            return cur
        prev = cur
