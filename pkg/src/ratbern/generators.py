"""Seeded instance generation and the extremal families.

Per-instance streams come from ``numpy.random.SeedSequence(seed).spawn``,
so instance ``i`` of a batch is the same whether the batch is generated
serially or in parallel chunks.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import List, Optional, Sequence

import numpy as np

from .poly import MAX_DEGREE, Polynomial, poly_from_roots
from .rational import PoleSet, RationalFn, blaschke_as_rational, make_rational

COLLISION_RADIUS = 1e-9
MAX_RETRIES = 100


@dataclass(frozen=True)
class InstanceSpec:
    n: int
    k: float = 1.0
    zero_width: float = 1.0
    pole_margin: float = 0.5
    pole_width: float = 1.0
    seed: int = 0
    on_circle_prob: float = 0.0

    def __post_init__(self):
        if not 1 <= self.n <= MAX_DEGREE:
            raise ValueError(f"n must be in [1, {MAX_DEGREE}], got {self.n}")
        if not self.k >= 1.0:
            raise ValueError(f"k must be at least 1, got {self.k}")
        if self.zero_width < 0 or self.pole_width < 0 or self.pole_margin <= 0:
            raise ValueError("shell widths must be >= 0 and pole_margin > 0")
        if not 0.0 <= self.on_circle_prob <= 1.0:
            raise ValueError("on_circle_prob must be a probability")

    @property
    def zero_shell(self):
        return (self.k, self.k + self.zero_width)

    @property
    def pole_shell(self):
        return (1.0 + self.pole_margin, 1.0 + self.pole_margin + self.pole_width)

    def to_json(self) -> dict:
        return asdict(self)

    @classmethod
    def from_json(cls, data: dict) -> "InstanceSpec":
        return cls(**data)


def _shell_points(rng: np.random.Generator, n: int, lo: float, hi: float) -> np.ndarray:
    rad = rng.uniform(lo, hi, n)
    ang = rng.uniform(0.0, 2.0 * math.pi, n)
    return rad * np.exp(1j * ang)


def _unimodular(rng: np.random.Generator) -> complex:
    return complex(np.exp(1j * rng.uniform(0.0, 2.0 * math.pi)))


def gen_instance(spec: InstanceSpec, rng: Optional[np.random.Generator] = None) -> RationalFn:
    """Random ``r = p/w`` with all zeros in ``|z| >= k`` and poles in the pole shell."""
    if rng is None:
        rng = np.random.default_rng(spec.seed)
    poles = _shell_points(rng, spec.n, *spec.pole_shell)
    for _ in range(MAX_RETRIES):
        roots = _shell_points(rng, spec.n, *spec.zero_shell)
        pin = rng.uniform(size=spec.n) < spec.on_circle_prob
        roots[pin] = spec.k * roots[pin] / np.abs(roots[pin])
        if np.abs(roots[:, None] - poles[None, :]).min() >= COLLISION_RADIUS:
            break
    else:
        raise RuntimeError("could not separate zeros from poles")
    return make_rational(poly_from_roots(roots, _unimodular(rng)), PoleSet(poles))


def instance_seeds(seed: int, count: int) -> List[np.random.SeedSequence]:
    return np.random.SeedSequence(seed).spawn(count)


def gen_batch(spec: InstanceSpec, count: int, vary_n: bool = False) -> List[RationalFn]:
    """``count`` instances from independent child streams of ``spec.seed``.

    With ``vary_n`` the degree of each instance is drawn from ``1..spec.n``.
    """
    out = []
    for child in instance_seeds(spec.seed, count):
        rng = np.random.default_rng(child)
        s = spec
        if vary_n:
            s = InstanceSpec(**{**asdict(spec), "n": int(rng.integers(1, spec.n + 1))})
        out.append(gen_instance(s, rng))
    return out


def gen_poleset(n: int, rng: np.random.Generator, margin: float = 0.5, width: float = 1.0) -> PoleSet:
    return PoleSet(_shell_points(rng, n, 1.0 + margin, 1.0 + margin + width))


def gen_interior_instance(
    n: int,
    radius: float,
    rng: np.random.Generator,
    margin: float = 0.5,
    width: float = 1.0,
) -> RationalFn:
    """All ``n`` zeros in the closed disk ``|z| <= radius``; for the lower-bound lemma.

    Half the draws are the Blaschke product itself (zeros at ``1/conj(a_j)``)
    scaled by a unimodular constant, with poles pushed out to ``|a| >= 1/radius``
    so those zeros stay in the disk; the rest have independent interior zeros.
    """
    if not 0.0 < radius <= 1.0:
        raise ValueError("radius must lie in (0, 1]")
    if rng.uniform() < 0.5:
        lo = max(1.0 + margin, 1.0 / radius)
        poles = PoleSet(_shell_points(rng, n, lo, lo + width))
        b = blaschke_as_rational(poles)
        u = _unimodular(rng)
        p = poly_from_roots(b.numerator.roots, b.numerator.leading * u)
        return make_rational(p, poles)
    poles = gen_poleset(n, rng, margin, width)
    roots = _shell_points(rng, n, 0.0, radius)
    return make_rational(poly_from_roots(roots, _unimodular(rng)), poles)


def extremal_instance(n: int, k: float, a: float) -> RationalFn:
    """``((z + k)/(z - a))**n``; equality in the main bound at ``z = 1``, ``beta = 0``."""
    if not a > 1.0:
        raise ValueError(f"pole a={a} must exceed 1")
    if not k >= 1.0:
        raise ValueError(f"k={k} must be at least 1")
    if n < 1:
        raise ValueError("n must be positive")
    return make_rational(poly_from_roots([-k] * n), PoleSet([a] * n))


def boundary_cases(n: int = 3, poles: Optional[Sequence[complex]] = None) -> List[RationalFn]:
    """``[B, B + 1]`` for the given (or default) poles."""
    if poles is None:
        poles = [2.0 * np.exp(2j * math.pi * j / n) * (1 + 0.25 * j) for j in range(n)]
    ps = PoleSet(poles)
    b = blaschke_as_rational(ps)
    w = poly_from_roots(ps.poles)
    b_plus_one = make_rational(Polynomial(b.numerator.coeffs + w.coeffs), ps)
    return [b, b_plus_one]
