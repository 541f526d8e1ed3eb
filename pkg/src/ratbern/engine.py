"""Pointwise evaluation of the Bernstein-type inequalities and lemmas.

Every check produces :class:`CheckReport` records carrying both sides of
the inequality and the slack ``rhs - lhs``. Identities are reported with
``slack = -|lhs - rhs|`` so that the same ``slack >= -tolerance`` rule
decides pass/fail for both kinds.

Check ids
---------
rational   ``lmr14`` ``lmr15`` ``az16`` ``thm21`` ``cor22`` ``cor24`` ``cor26``
polynomial ``bernstein`` ``erdos_lax`` ``malik`` ``cor27`` ``cor29``
lemmas     ``lemma1`` ``lemma2`` ``unimodular`` ``rstar_modulus`` ``lemma3``
           ``lemma5`` ``halfplane`` ``lemma4``

``az16`` is the printed form of the Aziz-Zargar bound. It is known not to
hold as printed, so its reports are flagged ``quarantined`` and never
count as failures.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, List, Optional, Sequence

import numpy as np

from .norms import NormConfig, NormEstimate, sup_norm_circle
from .poly import Polynomial, poly_derivative, poly_eval
from .rational import (
    CirclePoint,
    DomainError,
    HypothesisError,
    PoleSet,
    RationalFn,
    blaschke_derivative,
    blaschke_derivative_modulus,
    blaschke_eval,
    conjugate_transform,
    denominator_eval,
    rational_derivative_eval,
    rational_eval,
)

TWO_PI = 2.0 * math.pi
EXCLUSION_RADIUS = 1e-8
HYPOTHESIS_RTOL = 1e-9
BETA_SLOP = 1e-12

RATIONAL_CHECKS = ("lmr14", "lmr15", "az16", "thm21", "cor22", "cor24", "cor26")
POLYNOMIAL_CHECKS = ("bernstein", "erdos_lax", "malik", "cor27", "cor29")
LEMMA_CHECKS = (
    "lemma1",
    "lemma2",
    "unimodular",
    "rstar_modulus",
    "lemma3",
    "lemma5",
    "halfplane",
)
ALL_CHECKS = RATIONAL_CHECKS + POLYNOMIAL_CHECKS + LEMMA_CHECKS + ("lemma4",)
QUARANTINED = frozenset({"az16"})
ROOT_CHECKS = frozenset({"thm21", "cor22"})


class NearSingularity(DomainError):
    """The evaluation point lies inside the exclusion radius of a zero of ``r``."""


@dataclass(frozen=True)
class Tolerances:
    slack: float = 1e-7
    identity: float = 1e-9
    lemma2_rel: float = 1e-10
    unimodular: float = 1e-12
    rstar_rel: float = 1e-11
    equality: float = 1e-8
    lemma4: float = 1e-12


@dataclass(frozen=True)
class CheckReport:
    check_id: str
    theta: Optional[float]
    lhs: float
    rhs: float
    slack: float
    hypotheses_ok: bool
    tolerance: float
    passed: bool
    quarantined: bool = False
    equality: bool = False
    case: Optional[int] = None

    def to_json(self) -> dict:
        return {
            "check_id": self.check_id,
            "case": self.case,
            "theta": self.theta,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "slack": self.slack,
            "hypotheses_ok": self.hypotheses_ok,
            "tolerance": self.tolerance,
            "pass": self.passed,
            "quarantined": self.quarantined,
            "equality": self.equality,
        }

    @property
    def is_failure(self) -> bool:
        return self.hypotheses_ok and not self.passed and not self.quarantined


def check_beta(beta) -> complex:
    beta = complex(beta)
    if abs(beta) > 1.0 + BETA_SLOP:
        raise HypothesisError(f"|beta| = {abs(beta)} exceeds 1")
    return beta


def check_k(k) -> float:
    k = float(k)
    if not k >= 1.0:
        raise HypothesisError(f"k = {k} must be at least 1")
    return k


def zeros_of(p: Polynomial) -> np.ndarray:
    """Known roots, or numerically computed ones for the hypothesis gates."""
    if p.roots is not None:
        return np.asarray(p.roots)
    if p.degree == 0:
        return np.zeros(0, dtype=complex)
    return np.roots(p.coeffs[::-1])


def _zeros_outside(zeros: np.ndarray, k: float) -> bool:
    return bool(np.all(np.abs(zeros) >= k * (1.0 - HYPOTHESIS_RTOL)))


def _zeros_inside(zeros: np.ndarray, k: float) -> bool:
    return bool(np.all(np.abs(zeros) <= k * (1.0 + HYPOTHESIS_RTOL)))


class NormCache:
    """Lazily computed circle norms of one instance, shared by all its checks."""

    def __init__(self, fn, cfg: NormConfig = NormConfig(), **known):
        self.fn = fn
        self.cfg = cfg
        self._known = {k: v for k, v in known.items() if v is not None}

    def _get(self, name, target):
        if name not in self._known:
            self._known[name] = sup_norm_circle(target, self.cfg)
        return self._known[name]

    @property
    def r(self) -> NormEstimate:
        return self._get("r", self.fn)

    @property
    def p(self) -> NormEstimate:
        fn = self.fn
        return self._get("p", fn.numerator if isinstance(fn, RationalFn) else fn)

    @property
    def dp(self) -> NormEstimate:
        p = self.fn.numerator if isinstance(self.fn, RationalFn) else self.fn
        return self._get("dp", poly_derivative(p))


class _Ctx:
    """Shared per-grid quantities for one (instance, k, beta)."""

    def __init__(self, fn, z, k, beta, norms: NormCache):
        self.fn = fn
        self.z = z
        self.k = k
        self.beta = beta
        self.norms = norms

    @cached_property
    def poly(self) -> Polynomial:
        return self.fn.numerator if isinstance(self.fn, RationalFn) else self.fn

    @cached_property
    def poles(self) -> PoleSet:
        return self.fn.poles if isinstance(self.fn, RationalFn) else self.fn

    @cached_property
    def zeros(self):
        return zeros_of(self.poly)

    @cached_property
    def near_zero(self):
        if self.zeros.size == 0:
            return np.zeros(self.z.shape, dtype=bool)
        d = np.abs(self.z[:, None] - self.zeros[None, :]).min(axis=1)
        return d < EXCLUSION_RADIUS

    @cached_property
    def r(self):
        return rational_eval(self.fn, self.z)

    @cached_property
    def dr(self):
        return rational_derivative_eval(self.fn, self.z)

    @cached_property
    def bp(self):
        return blaschke_derivative_modulus(self.poles, self.z)

    @cached_property
    def p(self):
        return poly_eval(self.poly, self.z)

    @cached_property
    def dp(self):
        return poly_eval(poly_derivative(self.poly), self.z)


@dataclass
class _Arrays:
    lhs: np.ndarray
    rhs: np.ndarray
    hypotheses_ok: bool
    identity: bool = False
    tolerance: Optional[np.ndarray] = None
    skip: Optional[np.ndarray] = None
    resid: Optional[np.ndarray] = None


def _need_rational(ctx: _Ctx, check_id: str) -> RationalFn:
    if not isinstance(ctx.fn, RationalFn):
        raise TypeError(f"{check_id} needs a RationalFn, got {type(ctx.fn).__name__}")
    return ctx.fn


def _need_roots(p: Polynomial, check_id: str) -> np.ndarray:
    if p.roots is None:
        raise ValueError(
            f"{check_id} needs the numerator's root list; use the coefficient "
            "form (cor24/cor26) when roots are unknown"
        )
    return np.asarray(p.roots)


def _log_ratio_terms(ctx: _Ctx, norm: float):
    absr = np.abs(ctx.r)
    with np.errstate(divide="ignore", invalid="ignore"):
        rho = absr**2 / norm**2
        ratio = norm / absr
    return rho, ratio


def _main_lhs(ctx: _Ctx, k: float):
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.abs(ctx.z * ctx.dr / ctx.r + ctx.beta * ctx.bp / (1.0 + k))


def _thm21_like(ctx: _Ctx, check_id: str, k: float) -> _Arrays:
    r = _need_rational(ctx, check_id)
    roots = _need_roots(r.numerator, check_id)
    n = r.n
    hyp = (
        r.numerator.degree == n
        and _zeros_outside(roots, k)
        and abs(ctx.beta) <= 1.0 + BETA_SLOP
    )
    norm = ctx.norms.r.value
    rho, ratio = _log_ratio_terms(ctx, norm)
    sig = n / (k + 1.0) - float(np.sum(1.0 / (1.0 + np.abs(roots))))
    rhs = _rhs_thm21_arrays(ctx.bp, rho, ratio, n, k, sig, ctx.beta.real)
    skip = ctx.near_zero | (ctx.r == 0)
    return _Arrays(_main_lhs(ctx, k), rhs, hyp, skip=skip)


def _rhs_thm21_arrays(bp, rho, ratio, n, k, sig, re_beta):
    with np.errstate(invalid="ignore"):
        return (
            0.5
            * (
                bp
                - n * rho * (k - 1.0) / (k + 1.0)
                - 2.0 * rho * (sig - re_beta * bp / (1.0 + k))
            )
            * ratio
        )


def _coefficient_ratio(p: Polynomial, n: int, k: float) -> float:
    c0 = abs(p.coeffs[0])
    cn = abs(p.coeffs[n]) if p.degree >= n else 0.0
    kn = k**n * cn
    return (c0 - kn) / (c0 + kn)


def _rhs_cor24_arrays(bp, rho, ratio, n, k, ratio_c, re_beta):
    with np.errstate(invalid="ignore"):
        return (
            0.5
            * (
                bp
                - n * rho * (k - 1.0) / (k + 1.0)
                - 2.0 * rho / (k + 1.0) * (ratio_c - re_beta * bp)
            )
            * ratio
        )


def _cor24_like(ctx: _Ctx, check_id: str, k: float) -> _Arrays:
    r = _need_rational(ctx, check_id)
    n = r.n
    hyp = (
        r.numerator.degree == n
        and _zeros_outside(ctx.zeros, k)
        and abs(ctx.beta) <= 1.0 + BETA_SLOP
    )
    rho, ratio = _log_ratio_terms(ctx, ctx.norms.r.value)
    xc = _coefficient_ratio(r.numerator, n, k)
    rhs = _rhs_cor24_arrays(ctx.bp, rho, ratio, n, k, xc, ctx.beta.real)
    skip = ctx.near_zero | (ctx.r == 0)
    return _Arrays(_main_lhs(ctx, k), rhs, hyp, skip=skip)


def _chk_lmr14(ctx):
    _need_rational(ctx, "lmr14")
    return _Arrays(np.abs(ctx.dr), ctx.bp * ctx.norms.r.value, True)


def _chk_lmr15(ctx):
    _need_rational(ctx, "lmr15")
    hyp = _zeros_outside(ctx.zeros, 1.0)
    return _Arrays(np.abs(ctx.dr), 0.5 * ctx.bp * ctx.norms.r.value, hyp)


def _chk_az16(ctx):
    r = _need_rational(ctx, "az16")
    k, n = ctx.k, r.n
    norm = ctx.norms.r.value
    hyp = k >= 1.0 and _zeros_outside(ctx.zeros, k)
    # printed form: the last two terms are not weighted alike
    rhs = 0.5 * (ctx.bp - n * (k - 1.0) / (k + 1.0) - np.abs(ctx.r) ** 2 / norm**2) * norm
    return _Arrays(np.abs(ctx.dr), rhs, hyp)


def _chk_thm21(ctx):
    return _thm21_like(ctx, "thm21", ctx.k)


def _chk_cor22(ctx):
    return _thm21_like(ctx, "cor22", 1.0)


def _chk_cor24(ctx):
    return _cor24_like(ctx, "cor24", ctx.k)


def _chk_cor26(ctx):
    return _cor24_like(ctx, "cor26", 1.0)


def _poly_global_or_point(ctx, factor: float, hyp: bool) -> _Arrays:
    """``||p'|| <= factor * ||p||`` globally, or ``|p'(z)| <= ...`` pointwise."""
    bound = factor * ctx.norms.p.value
    if ctx.z is None:
        return _Arrays(np.array([ctx.norms.dp.value]), np.array([bound]), hyp)
    return _Arrays(np.abs(ctx.dp), np.full(ctx.z.shape, bound), hyp)


def _chk_bernstein(ctx):
    return _poly_global_or_point(ctx, float(ctx.poly.degree), True)


def _chk_erdos_lax(ctx):
    hyp = _zeros_outside(ctx.zeros, 1.0)
    return _poly_global_or_point(ctx, ctx.poly.degree / 2.0, hyp)


def _chk_malik(ctx):
    hyp = ctx.k >= 1.0 and _zeros_outside(ctx.zeros, ctx.k)
    return _poly_global_or_point(ctx, ctx.poly.degree / (1.0 + ctx.k), hyp)


def _cor27_like(ctx, k: float) -> _Arrays:
    p = ctx.poly
    n = p.degree
    hyp = n >= 1 and _zeros_outside(ctx.zeros, k) and abs(ctx.beta) <= 1.0 + BETA_SLOP
    norm = ctx.norms.p.value
    lhs = np.abs(ctx.z * ctx.dp + n * ctx.beta * ctx.p / (1.0 + k))
    xc = _coefficient_ratio(p, n, k)
    rho = np.abs(ctx.p) ** 2 / norm**2
    rhs = 0.5 * norm * (
        n
        - 2.0 / (k + 1.0) * (n * (k - 1.0) / 2.0 + xc - n * ctx.beta.real) * rho
    )
    return _Arrays(lhs, rhs, hyp)


def _chk_cor27(ctx):
    return _cor27_like(ctx, ctx.k)


def _chk_cor29(ctx):
    return _cor27_like(ctx, 1.0)


def _chk_lemma1(ctx):
    poles = ctx.poles
    w, dw = denominator_eval(poles, ctx.z)
    lhs = np.real(ctx.z * dw / w)
    rhs = (poles.n - ctx.bp) / 2.0
    return _Arrays(lhs, rhs, True, identity=True)


def _chk_lemma2(ctx):
    q = ctx.z * blaschke_derivative(ctx.poles, ctx.z) / blaschke_eval(ctx.poles, ctx.z)
    # complex residual: the imaginary part must vanish as well
    return _Arrays(np.real(q), ctx.bp, True, identity=True, resid=np.abs(q - ctx.bp))


def _chk_unimodular(ctx):
    lhs = np.abs(blaschke_eval(ctx.poles, ctx.z))
    return _Arrays(lhs, np.ones_like(lhs), True, identity=True)


def _chk_rstar_modulus(ctx):
    r = _need_rational(ctx, "rstar_modulus")
    rs = rational_eval(conjugate_transform(r), ctx.z)
    return _Arrays(np.abs(rs), np.abs(ctx.r), True, identity=True)


def _chk_lemma3(ctx):
    r = _need_rational(ctx, "lemma3")
    drs = rational_derivative_eval(conjugate_transform(r), ctx.z)
    lhs = np.abs(drs) + np.abs(ctx.dr)
    return _Arrays(lhs, ctx.bp * ctx.norms.r.value, True)


def _chk_lemma5(ctx):
    r = _need_rational(ctx, "lemma5")
    k, n = ctx.k, r.n
    hyp = 0.0 < k <= 1.0 and r.numerator.degree == n and _zeros_inside(ctx.zeros, k)
    # reported as bound <= |r'| so that slack keeps the rhs - lhs convention
    lhs = 0.5 * (ctx.bp + n * (1.0 - k) / (1.0 + k)) * np.abs(ctx.r)
    return _Arrays(lhs, np.abs(ctx.dr), hyp)


_CHECKS = {
    "lmr14": _chk_lmr14,
    "lmr15": _chk_lmr15,
    "az16": _chk_az16,
    "thm21": _chk_thm21,
    "cor22": _chk_cor22,
    "cor24": _chk_cor24,
    "cor26": _chk_cor26,
    "bernstein": _chk_bernstein,
    "erdos_lax": _chk_erdos_lax,
    "malik": _chk_malik,
    "cor27": _chk_cor27,
    "cor29": _chk_cor29,
    "lemma1": _chk_lemma1,
    "lemma2": _chk_lemma2,
    "unimodular": _chk_unimodular,
    "rstar_modulus": _chk_rstar_modulus,
    "lemma3": _chk_lemma3,
    "lemma5": _chk_lemma5,
}


def _identity_tolerance(check_id, ctx, out, tol: Tolerances):
    shape = out.lhs.shape
    if check_id == "lemma1":
        return np.full(shape, tol.identity)
    if check_id == "lemma2":
        return tol.lemma2_rel * out.rhs
    if check_id == "unimodular":
        return np.full(shape, tol.unimodular)
    if check_id == "rstar_modulus":
        return np.full(shape, tol.rstar_rel * ctx.norms.r.value)
    raise ValueError(f"{check_id} is not an identity check")


def _reports(check_id, out: _Arrays, theta, tol: Tolerances, case) -> tuple:
    """Turn evaluated arrays into reports; returns ``(reports, n_skipped)``."""
    lhs = np.asarray(out.lhs, dtype=float)
    rhs = np.asarray(out.rhs, dtype=float)
    if out.identity:
        slack = -(np.abs(lhs - rhs) if out.resid is None else out.resid)
    else:
        slack = rhs - lhs
    if out.tolerance is None:
        tolerance = tol.slack * np.maximum(1.0, np.abs(rhs))
    else:
        tolerance = out.tolerance
    eq = np.abs(slack) <= tol.equality * np.maximum(1.0, np.abs(rhs))
    keep = np.ones(lhs.shape, dtype=bool) if out.skip is None else ~out.skip
    hyp = bool(out.hypotheses_ok)
    quarantined = check_id in QUARANTINED
    passed = hyp & (slack >= -tolerance)
    thetas = [None] * lhs.size if theta is None else np.broadcast_to(theta, lhs.shape).tolist()
    idx = np.flatnonzero(keep)
    reports = [
        CheckReport(
            check_id,
            thetas[i],
            float(lhs[i]),
            float(rhs[i]),
            float(slack[i]),
            hyp,
            float(tolerance[i]),
            bool(passed[i]),
            quarantined,
            bool(eq[i]),
            case,
        )
        for i in idx.tolist()
    ]
    return reports, int(lhs.size - idx.size)


def evaluate_check(
    check_id: str,
    fn,
    thetas=None,
    *,
    k: float = 1.0,
    beta: complex = 0.0,
    norms: Optional[NormCache] = None,
    tol: Tolerances = Tolerances(),
    case: Optional[int] = None,
    z=None,
):
    """Evaluate one check over an angle grid; returns ``(reports, n_skipped)``.

    ``thetas=None`` (and ``z=None``) selects the global, norm-level form of
    the classical polynomial inequalities.
    """
    if check_id == "halfplane":
        return _halfplane(fn, thetas, z, tol, case)
    if check_id not in _CHECKS:
        raise ValueError(f"unknown check id {check_id!r}")
    if norms is None:
        norms = NormCache(fn)
    if z is None and thetas is not None:
        thetas = np.atleast_1d(np.asarray(thetas, dtype=float)) % TWO_PI
        z = np.exp(1j * thetas)
    elif z is not None:
        z = np.atleast_1d(np.asarray(z, dtype=complex))
        thetas = np.angle(z) % TWO_PI
    if z is None and check_id not in ("bernstein", "erdos_lax", "malik"):
        raise ValueError(f"{check_id} is a pointwise check; give evaluation points")
    ctx = _Ctx(fn, z, float(k), complex(beta), norms)
    out = _CHECKS[check_id](ctx)
    if out.identity:
        out.tolerance = _identity_tolerance(check_id, ctx, out, tol)
    return _reports(check_id, out, thetas, tol, case)


def _halfplane(fn, thetas, z, tol: Tolerances, case):
    p = fn.numerator if isinstance(fn, RationalFn) else fn
    if isinstance(fn, (complex, float, int, np.number)):
        roots = np.array([complex(fn)])
    else:
        roots = zeros_of(p)
    if z is None:
        thetas = np.atleast_1d(np.asarray(thetas, dtype=float)) % TWO_PI
        z = np.exp(1j * thetas)
    else:
        z = np.atleast_1d(np.asarray(z, dtype=complex))
        thetas = np.angle(z) % TWO_PI
    reports, skipped = [], 0
    for zj in roots.tolist():
        d = z - zj
        skip = np.abs(d) < EXCLUSION_RADIUS
        with np.errstate(divide="ignore", invalid="ignore"):
            lhs = np.real(z / d)
        rhs = np.full(z.shape, 1.0 / (1.0 + abs(zj)))
        out = _Arrays(lhs, rhs, abs(zj) >= 1.0 - HYPOTHESIS_RTOL, skip=skip)
        rep, s = _reports("halfplane", out, thetas, tol, case)
        reports += rep
        skipped += s
    return reports, skipped


def _point(z):
    """``(thetas, None)`` for a CirclePoint, ``(None, z)`` for a complex point."""
    if isinstance(z, CirclePoint):
        return np.array([z.theta]), None
    return None, np.array([complex(z)])


def _as_points(z) -> np.ndarray:
    if isinstance(z, CirclePoint):
        return np.array([z.z])
    return np.atleast_1d(np.asarray(z, dtype=complex))


def _single(check_id, fn, z, **kw) -> CheckReport:
    thetas, zz = _point(z)
    reports, skipped = evaluate_check(check_id, fn, thetas, z=zz, **kw)
    if skipped:
        raise NearSingularity(f"{check_id}: evaluation point is too close to a zero of r")
    return reports[0]


def _as_cache(fn, norms) -> NormCache:
    if norms is None or isinstance(norms, NormCache):
        return norms or NormCache(fn)
    if isinstance(norms, NormEstimate):
        key = "r" if isinstance(fn, RationalFn) else "p"
        return NormCache(fn, **{key: norms})
    if isinstance(norms, dict):
        return NormCache(fn, **norms)
    raise TypeError(f"unsupported norms argument {type(norms).__name__}")


# --- public single-point API -------------------------------------------------


def lhs_theorem21(r: RationalFn, k: float, beta: complex, z) -> float:
    """``|z r'(z)/r(z) + beta |B'(z)| / (1 + k)|``."""
    k, beta = check_k(k), check_beta(beta)
    ctx = _Ctx(r, _as_points(z), k, beta, NormCache(r))
    if ctx.near_zero.any() or np.any(ctx.r == 0):
        raise NearSingularity("evaluation point is too close to a zero of r")
    return float(_main_lhs(ctx, k)[0])


def _pointwise_rhs(r, k, beta, z, norm, kind):
    k, beta = check_k(k), check_beta(beta)
    ctx = _Ctx(r, _as_points(z), k, beta, _as_cache(r, norm))
    if kind == "thm21":
        return float(_thm21_like(ctx, "thm21", k).rhs[0])
    return float(_cor24_like(ctx, "cor24", k).rhs[0])


def rhs_theorem21(r: RationalFn, k: float, beta: complex, z, norm=None) -> float:
    """Right-hand side of the zero-location refinement; needs the numerator roots."""
    return _pointwise_rhs(r, k, beta, z, norm, "thm21")


def rhs_corollary24(r: RationalFn, k: float, beta: complex, z, norm=None) -> float:
    """Coefficient form of the bound: uses only ``|c_0|`` and ``|c_n|``."""
    return _pointwise_rhs(r, k, beta, z, norm, "cor24")


def check_rational(
    check_id: str,
    r: RationalFn,
    k: float = 1.0,
    beta: complex = 0.0,
    z=CirclePoint(0.0),
    norms=None,
    tol: Tolerances = Tolerances(),
) -> CheckReport:
    if check_id not in RATIONAL_CHECKS:
        raise ValueError(f"unknown rational check id {check_id!r}")
    return _single(check_id, r, z, k=k, beta=beta, norms=_as_cache(r, norms), tol=tol)


def check_polynomial(
    check_id: str,
    p: Polynomial,
    k: float = 1.0,
    beta: complex = 0.0,
    z=None,
    norms=None,
    tol: Tolerances = Tolerances(),
) -> CheckReport:
    """Classical polynomial bounds and their refinements.

    With ``z=None`` the Bernstein, Erdos-Lax and Malik checks compare
    ``||p'||`` against the bound (a global report with ``theta=None``).
    """
    if check_id not in POLYNOMIAL_CHECKS:
        raise ValueError(f"unknown polynomial check id {check_id!r}")
    cache = _as_cache(p, norms)
    if z is None:
        reports, _ = evaluate_check(check_id, p, None, k=k, beta=beta, norms=cache, tol=tol)
        return reports[0]
    return _single(check_id, p, z, k=k, beta=beta, norms=cache, tol=tol)


def check_lemma(
    lemma_id: str,
    obj,
    z=CirclePoint(0.0),
    *,
    k: float = 1.0,
    norms=None,
    tol: Tolerances = Tolerances(),
) -> CheckReport:
    """Lemma identities and inequalities at one circle point.

    ``obj`` is a :class:`PoleSet` (lemma1, lemma2, unimodular), a
    :class:`RationalFn` (rstar_modulus, lemma3, lemma5) or a single zero
    ``z_j`` (halfplane).
    """
    if lemma_id == "lemma4":
        return lemma4_scalar(obj, tol.lemma4)
    if lemma_id not in LEMMA_CHECKS:
        raise ValueError(f"unknown lemma id {lemma_id!r}")
    if not isinstance(obj, (PoleSet, RationalFn)) and lemma_id != "halfplane":
        obj = PoleSet(obj)
    cache = _as_cache(obj, norms) if isinstance(obj, RationalFn) else NormCache(obj)
    return _single(lemma_id, obj, z, k=k, norms=cache, tol=tol)


def lemma4_scalar(zetas: Sequence[float], tol: float = 1e-12) -> CheckReport:
    """``sum (1 - t)/(1 + t) <= (1 - prod t)/(1 + prod t)`` for ``t >= 1``."""
    z = np.asarray(zetas, dtype=float)
    if z.size == 0 or np.any(z < 1.0):
        raise HypothesisError("lemma 4 needs a nonempty tuple with every entry >= 1")
    lhs = float(np.sum((1.0 - z) / (1.0 + z)))
    prod = float(np.prod(z))
    rhs = (1.0 - prod) / (1.0 + prod) if math.isfinite(prod) else -1.0
    slack = rhs - lhs
    return CheckReport(
        "lemma4", None, lhs, rhs, slack, True, tol, slack >= -tol,
        equality=abs(slack) <= tol,
    )


# --- suites -------------------------------------------------------------------


@dataclass(frozen=True)
class Case:
    """One (instance, k, beta) combination fed to :func:`run_suite`."""

    fn: object
    k: float = 1.0
    beta: complex = 0.0
    instance: int = 0


_APPLICABLE = {
    **{c: (RationalFn,) for c in RATIONAL_CHECKS},
    **{c: (RationalFn, Polynomial) for c in POLYNOMIAL_CHECKS},
    "lemma1": (PoleSet, RationalFn),
    "lemma2": (PoleSet, RationalFn),
    "unimodular": (PoleSet, RationalFn),
    "rstar_modulus": (RationalFn,),
    "lemma3": (RationalFn,),
    "lemma5": (RationalFn,),
    "halfplane": (RationalFn, Polynomial),
    "lemma4": (tuple,),
}


@dataclass
class SuiteReport:
    reports: List[CheckReport]
    skipped: int = 0
    seed: Optional[int] = None
    config: dict = field(default_factory=dict)
    cases: list = field(default_factory=list)

    @property
    def counts(self) -> dict:
        c = {
            "total": len(self.reports),
            "pass": 0,
            "fail": 0,
            "hypothesis_violations": 0,
            "quarantined": 0,
            "equalities": 0,
            "skipped": self.skipped,
        }
        for rep in self.reports:
            if rep.quarantined:
                c["quarantined"] += 1
            elif not rep.hypotheses_ok:
                c["hypothesis_violations"] += 1
            elif rep.passed:
                c["pass"] += 1
            else:
                c["fail"] += 1
            if rep.passed and rep.equality:
                c["equalities"] += 1
        return c

    @property
    def failures(self) -> List[CheckReport]:
        return [r for r in self.reports if r.is_failure]

    @property
    def exit_code(self) -> int:
        return 1 if self.failures else 0

    def min_slack(self, check_id: Optional[str] = None) -> float:
        vals = [
            r.slack
            for r in self.reports
            if r.hypotheses_ok and (check_id is None or r.check_id == check_id)
        ]
        return min(vals) if vals else math.inf

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "config": self.config,
            "counts": self.counts,
            "cases": self.cases,
            "reports": [r.to_json() for r in self.reports],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1, allow_nan=False)

    def to_csv(self) -> str:
        buf = io.StringIO()
        cols = list(CheckReport("", None, 0, 0, 0, True, 0, True).to_json())
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for rep in self.reports:
            row = []
            for key in cols:
                v = rep.to_json()[key]
                if isinstance(v, float):
                    v = f"{v:.17g}"
                elif v is None:
                    v = ""
                row.append(v)
            w.writerow(row)
        return buf.getvalue()


def _sort_key(rep: CheckReport):
    return (
        rep.check_id,
        -1 if rep.case is None else rep.case,
        -1.0 if rep.theta is None else rep.theta,
    )


def run_suite(
    cases: Iterable[Case],
    check_ids: Sequence[str],
    grid_size: int = 128,
    tolerances: Tolerances = Tolerances(),
    seed: Optional[int] = None,
    norm_cfg: NormConfig = NormConfig(),
    thetas: Optional[Sequence[float]] = None,
    config: Optional[dict] = None,
) -> SuiteReport:
    """Run every applicable check on every case over a uniform circle grid.

    Checks whose input type does not match a case are not run for it, nor
    are the root-based checks on numerators without a root list.
    Norms are computed once per instance and shared. Points inside the
    exclusion radius of a zero are counted in ``skipped``.
    """
    for cid in check_ids:
        if cid not in ALL_CHECKS:
            raise ValueError(f"unknown check id {cid!r}")
    if thetas is None:
        thetas = TWO_PI * np.arange(grid_size) / grid_size
    thetas = np.asarray(thetas, dtype=float)
    reports: List[CheckReport] = []
    skipped = 0
    caches = {}
    case_rows = []
    for ci, case in enumerate(cases):
        fn = case.fn
        case_rows.append(
            {
                "case": ci,
                "instance": case.instance,
                "k": float(case.k),
                "beta": [complex(case.beta).real, complex(case.beta).imag],
            }
        )
        if id(fn) not in caches:
            caches[id(fn)] = (fn, NormCache(fn, norm_cfg))
        cache = caches[id(fn)][1]
        for cid in check_ids:
            if not isinstance(fn, _APPLICABLE[cid]):
                continue
            if cid in ROOT_CHECKS and fn.numerator.roots is None:
                continue
            if cid == "lemma4":
                rep = lemma4_scalar(fn, tolerances.lemma4)
                reports.append(CheckReport(**{**rep.__dict__, "case": ci}))
                continue
            rep, s = evaluate_check(
                cid, fn, thetas, k=case.k, beta=case.beta, norms=cache,
                tol=tolerances, case=ci,
            )
            reports += rep
            skipped += s
    reports.sort(key=_sort_key)
    return SuiteReport(
        reports,
        skipped=skipped,
        seed=seed,
        config={
            "check_ids": list(check_ids),
            "grid_size": int(thetas.size),
            "tolerances": tolerances.__dict__,
            **(config or {}),
        },
        cases=case_rows,
    )
