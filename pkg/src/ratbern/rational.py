"""Rational functions ``r = p/w`` with prescribed poles outside the unit disk.

``w(z) = prod(z - a_j)`` and the associated Blaschke product is
``B(z) = prod((1 - conj(a_j) z) / (z - a_j))``. Everything here accepts a
scalar or a numpy array of evaluation points.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .poly import (
    Polynomial,
    poly_derivative,
    poly_eval,
    poly_from_roots,
    reverse_conjugate,
)

POLE_MARGIN = 1e-6
POLE_RADIUS = 1e-12
ROOT_POLE_RADIUS = 1e-12


class HypothesisError(ValueError):
    """An input violates a standing assumption (pole location, zero region, ...)."""


class DomainError(ValueError):
    """Evaluation requested too close to a pole."""

    def __init__(self, message, pole_index=None):
        super().__init__(message)
        self.pole_index = pole_index


@dataclass(frozen=True)
class CirclePoint:
    theta: float

    def __post_init__(self):
        object.__setattr__(self, "theta", float(self.theta) % (2 * math.pi))

    @property
    def z(self) -> complex:
        return complex(math.cos(self.theta), math.sin(self.theta))




def as_z(z):
    if isinstance(z, CirclePoint):
        return z.z
    return np.asarray(z, dtype=complex)


@dataclass(frozen=True, eq=False)
class PoleSet:
    """Poles ``a_1..a_n``, each strictly outside the closed unit disk."""

    poles: np.ndarray
    margin: float = POLE_MARGIN

    def __post_init__(self):
        a = np.atleast_1d(np.asarray(self.poles, dtype=complex)).copy()
        if a.ndim != 1 or a.size < 1:
            raise ValueError("a pole set needs at least one pole")
        bad = np.flatnonzero(np.abs(a) <= 1.0 + self.margin)
        if bad.size:
            raise HypothesisError(
                f"pole {a[bad[0]]} (index {bad[0]}) is not outside the unit "
                f"disk by margin {self.margin}"
            )
        a.setflags(write=False)
        object.__setattr__(self, "poles", a)

    @property
    def n(self) -> int:
        return self.poles.size

    def __len__(self):
        return self.poles.size

    def to_json(self) -> list:
        return [[a.real, a.imag] for a in self.poles.tolist()]

    @classmethod
    def from_json(cls, data) -> "PoleSet":
        return cls([complex(re, im) for re, im in data])


@dataclass(frozen=True, eq=False)
class RationalFn:
    numerator: Polynomial
    poles: PoleSet

    @property
    def n(self) -> int:
        return self.poles.n

    def __call__(self, z):
        return rational_eval(self, z)

    def to_json(self) -> dict:
        return {"numerator": self.numerator.to_json(), "poles": self.poles.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "RationalFn":
        return make_rational(
            Polynomial.from_json(data["numerator"]), PoleSet.from_json(data["poles"])
        )


def _as_poleset(poles) -> PoleSet:
    return poles if isinstance(poles, PoleSet) else PoleSet(poles)


def make_rational(numerator: Polynomial, poles) -> RationalFn:
    poles = _as_poleset(poles)
    if numerator.degree > poles.n:
        raise ValueError(
            f"numerator degree {numerator.degree} exceeds the number of poles {poles.n}"
        )
    if numerator.roots is not None and numerator.roots.size:
        d = np.abs(numerator.roots[:, None] - poles.poles[None, :])
        if d.min() < ROOT_POLE_RADIUS:
            raise ValueError("a numerator root coincides with a pole")
    return RationalFn(numerator, poles)


def _pole_guard(poles: np.ndarray, z: np.ndarray):
    diff = z[..., None] - poles
    dist = np.abs(diff)
    if dist.size and dist.min() < POLE_RADIUS:
        idx = int(np.unravel_index(np.argmin(dist), dist.shape)[-1])
        raise DomainError(f"evaluation point is within {POLE_RADIUS} of pole {idx}", idx)
    return diff


def _scalar(out):
    return out[()] if np.ndim(out) == 0 else out


def denominator_eval(poles, z):
    """``w(z)`` and ``w'(z)``; the derivative via ``w * sum 1/(z - a_j)``."""
    a = _as_poleset(poles).poles
    diff = _pole_guard(a, as_z(z))
    w = np.prod(diff, axis=-1)
    dw = w * np.sum(1.0 / diff, axis=-1)
    return _scalar(w), _scalar(dw)


def rational_eval(r: RationalFn, z):
    z = as_z(z)
    w, _ = denominator_eval(r.poles, z)
    return _scalar(poly_eval(r.numerator, z) / w)


def rational_derivative_eval(r: RationalFn, z):
    """``r'(z) = (p' w - p w') / w**2``."""
    z = as_z(z)
    w, dw = denominator_eval(r.poles, z)
    p = poly_eval(r.numerator, z)
    dp = poly_eval(poly_derivative(r.numerator), z)
    return _scalar((dp * w - p * dw) / (w * w))


def _blaschke_factors(a: np.ndarray, z: np.ndarray):
    diff = _pole_guard(a, z)
    factors = (1.0 - np.conj(a) * z[..., None]) / diff
    dfactors = (np.abs(a) ** 2 - 1.0) / diff**2
    return factors, dfactors


def blaschke_eval(poles, z):
    a = _as_poleset(poles).poles
    factors, _ = _blaschke_factors(a, as_z(z))
    return _scalar(np.prod(factors, axis=-1))


def blaschke_derivative(poles, z):
    """``B'(z)`` by the product rule, ``sum_j f_j' prod_{i != j} f_i``."""
    a = _as_poleset(poles).poles
    factors, dfactors = _blaschke_factors(a, as_z(z))
    ones = np.ones(factors.shape[:-1] + (1,), dtype=complex)
    before = np.cumprod(np.concatenate([ones, factors[..., :-1]], axis=-1), axis=-1)
    after = np.cumprod(
        np.concatenate([ones, factors[..., :0:-1]], axis=-1), axis=-1
    )[..., ::-1]
    return _scalar(np.sum(dfactors * before * after, axis=-1))


def blaschke_derivative_modulus(poles, z):
    """``|B'(z)|``; on the unit circle this also equals ``z B'(z) / B(z)``."""
    return _scalar(np.abs(blaschke_derivative(poles, z)))


def conjugate_transform(r: RationalFn) -> RationalFn:
    """``r*(z) = B(z) conj(r(1/conj z))``, realized exactly as ``p*/w``."""
    return RationalFn(reverse_conjugate(r.numerator, r.n), r.poles)


def blaschke_as_rational(poles) -> RationalFn:
    """``B`` itself as an element of the class: numerator ``prod(1 - conj(a_j) z)``."""
    ps = _as_poleset(poles)
    a = ps.poles
    # 1 - conj(a) z = -conj(a) (z - 1/conj(a))
    leading = complex(np.prod(-np.conj(a)))
    return make_rational(poly_from_roots(1.0 / np.conj(a), leading), ps)
