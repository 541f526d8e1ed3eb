"""Chebyshev (sup) norm on the unit circle.

The estimate is a uniform grid in the angle followed by golden-section
refinement of the largest local maxima of ``|f(e^{i theta})|``. There is
no certified bound; accuracy is checked against brute-force grids in the
test suite.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Callable, Tuple

import numpy as np

from .poly import Polynomial, poly_eval
from .rational import DomainError, RationalFn, rational_eval

TWO_PI = 2.0 * math.pi
INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class NormConfig:
    coarse_samples: int = 4096
    refine_top: int = 8
    refine_tol: float = 1e-12
    max_refine_iters: int = 200

    def __post_init__(self):
        if self.coarse_samples < 16:
            raise ValueError("coarse_samples must be at least 16")
        if self.refine_top < 0:
            raise ValueError("refine_top must be nonnegative")
        if self.refine_tol <= 0 or self.max_refine_iters <= 0:
            raise ValueError("refinement tolerances must be positive")


@dataclass(frozen=True)
class NormEstimate:
    value: float
    argmax_theta: float
    samples_used: int
    refined: bool

    def to_json(self) -> dict:
        return asdict(self)

    @classmethod
    def from_json(cls, data: dict) -> "NormEstimate":
        return cls(**data)


def _evaluator(f) -> Callable[[np.ndarray], np.ndarray]:
    if isinstance(f, Polynomial):
        return lambda z: poly_eval(f, z)
    if isinstance(f, RationalFn):
        return lambda z: rational_eval(f, z)
    if callable(f):
        return lambda z: np.asarray(f(z))
    raise TypeError(f"cannot evaluate {type(f).__name__} on the circle")


def _modulus(g, theta: np.ndarray) -> np.ndarray:
    vals = np.abs(g(np.exp(1j * theta)))
    vals = np.broadcast_to(vals, np.shape(theta)).astype(float)
    if not np.all(np.isfinite(vals)):
        raise DomainError("function is not finite on the unit circle")
    return vals


def sup_norm_circle(f, cfg: NormConfig = NormConfig()) -> NormEstimate:
    """Estimate ``sup |f(z)|`` over ``|z| = 1`` together with a maximizing angle.

    ``f`` is a :class:`Polynomial`, a :class:`RationalFn` or any callable
    accepting a complex array.
    """
    g = _evaluator(f)
    m = cfg.coarse_samples
    step = TWO_PI / m
    theta = np.arange(m) * step
    vals = _modulus(g, theta)
    i_best = int(np.argmax(vals))
    best_theta, best_val = float(theta[i_best]), float(vals[i_best])
    used = m

    if cfg.refine_top == 0:
        return NormEstimate(best_val, best_theta, used, False)

    is_peak = (vals >= np.roll(vals, 1)) & (vals >= np.roll(vals, -1))
    peaks = np.flatnonzero(is_peak)
    order = np.argsort(-vals[peaks], kind="stable")
    peaks = peaks[order[: cfg.refine_top]]

    # golden-section maximization, all brackets advanced together
    lo = theta[peaks] - step
    hi = theta[peaks] + step
    x1 = hi - INV_PHI * (hi - lo)
    x2 = lo + INV_PHI * (hi - lo)
    f1 = _modulus(g, x1)
    f2 = _modulus(g, x2)
    used += 2 * peaks.size
    cand_t = [x1, x2]
    cand_v = [f1, f2]
    for _ in range(cfg.max_refine_iters):
        if np.max(hi - lo) <= cfg.refine_tol:
            break
        left = f1 > f2
        hi = np.where(left, x2, hi)
        lo = np.where(left, lo, x1)
        keep_t = np.where(left, x1, x2)
        keep_v = np.where(left, f1, f2)
        new_t = np.where(left, hi - INV_PHI * (hi - lo), lo + INV_PHI * (hi - lo))
        new_v = _modulus(g, new_t)
        used += peaks.size
        x1 = np.where(left, new_t, keep_t)
        f1 = np.where(left, new_v, keep_v)
        x2 = np.where(left, keep_t, new_t)
        f2 = np.where(left, keep_v, new_v)
        cand_t.append(new_t)
        cand_v.append(new_v)

    ct = np.concatenate(cand_t) % TWO_PI
    cv = _modulus(g, ct)
    j = int(np.argmax(cv))
    if cv[j] > best_val:
        best_theta, best_val = float(ct[j]), float(cv[j])
    return NormEstimate(best_val, best_theta, used, True)


def norm_pair(
    r: RationalFn, cfg: NormConfig = NormConfig()
) -> Tuple[NormEstimate, NormEstimate]:
    """``(||r||, ||p||)`` for ``r = p/w``."""
    return sup_norm_circle(r, cfg), sup_norm_circle(r.numerator, cfg)
