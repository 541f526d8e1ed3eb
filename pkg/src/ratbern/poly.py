"""Complex polynomials in ascending-power coefficient form.

Coefficients are stored as ``c_0, c_1, ..., c_n``. A polynomial may also
carry its root list, in which case ``p(z) = c_n * prod(z - z_j)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

MAX_DEGREE = 30
TRIM_RTOL = 1e-14


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


def _trim(coeffs: np.ndarray) -> np.ndarray:
    mags = np.abs(coeffs)
    top = mags.max() if mags.size else 0.0
    if top == 0.0:
        return np.zeros(1, dtype=complex)
    keep = np.nonzero(mags >= TRIM_RTOL * top)[0][-1]
    return coeffs[: keep + 1]


@dataclass(frozen=True, eq=False)
class Polynomial:
    """Immutable complex polynomial.

    ``coeffs`` are ascending powers after trimming negligible trailing
    entries. ``roots`` is ``None`` unless the polynomial was built from
    its factored form.
    """

    coeffs: np.ndarray
    roots: Optional[np.ndarray] = None

    def __post_init__(self):
        c = np.atleast_1d(np.asarray(self.coeffs, dtype=complex)).copy()
        if self.roots is None:
            c = _trim(c)
            object.__setattr__(self, "coeffs", _frozen(c))
        else:
            r = np.atleast_1d(np.asarray(self.roots, dtype=complex)).copy()
            # the factored form fixes the degree; no relative trimming here
            if len(c) < r.size + 1 or c[r.size + 1 :].any() or c[r.size] == 0:
                raise ValueError(
                    f"root list has {r.size} entries for coefficients {c.tolist()}"
                )
            object.__setattr__(self, "coeffs", _frozen(c[: r.size + 1]))
            object.__setattr__(self, "roots", _frozen(r))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> complex:
        return complex(self.coeffs[-1])

    @property
    def is_zero(self) -> bool:
        return self.degree == 0 and self.coeffs[0] == 0

    def __call__(self, z):
        return poly_eval(self, z)

    def __repr__(self):
        return f"Polynomial(degree={self.degree}, coeffs={self.coeffs.tolist()})"

    def to_json(self) -> dict:
        return {
            "coeffs": [[c.real, c.imag] for c in self.coeffs.tolist()],
            "roots": None
            if self.roots is None
            else [[z.real, z.imag] for z in self.roots.tolist()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Polynomial":
        coeffs = [complex(re, im) for re, im in data["coeffs"]]
        roots = data.get("roots")
        if roots is not None:
            roots = [complex(re, im) for re, im in roots]
        return cls(coeffs, roots)


def poly_from_roots(
    roots: Sequence[complex], leading: complex = 1.0, max_degree: int = MAX_DEGREE
) -> Polynomial:
    """Expand ``leading * prod(z - z_j)`` by sequential linear-factor convolution."""
    if leading == 0:
        raise ValueError("leading coefficient must be nonzero")
    roots = np.atleast_1d(np.asarray(roots, dtype=complex))
    if roots.size > max_degree:
        raise ValueError(f"degree {roots.size} exceeds supported maximum {max_degree}")
    coeffs = np.array([complex(leading)])
    for zj in roots:
        # (c_0 + c_1 z + ...)(z - zj)
        nxt = np.zeros(len(coeffs) + 1, dtype=complex)
        nxt[1:] += coeffs
        nxt[:-1] -= zj * coeffs
        coeffs = nxt
    return Polynomial(coeffs, roots)


def poly_eval(p: Polynomial, z):
    """Horner evaluation; ``z`` may be a scalar or an array."""
    z = np.asarray(z, dtype=complex)
    acc = np.full(z.shape, p.coeffs[-1], dtype=complex)
    for c in p.coeffs[-2::-1]:
        acc = acc * z + c
    return acc[()] if acc.ndim == 0 else acc


def poly_derivative(p: Polynomial) -> Polynomial:
    if p.degree == 0:
        return Polynomial([0.0])
    k = np.arange(1, p.degree + 1)
    return Polynomial(p.coeffs[1:] * k)


def reverse_conjugate(p: Polynomial, n: Optional[int] = None) -> Polynomial:
    """Return ``z**n * conj(p(1/conj(z)))``, i.e. coefficients ``conj(c_{n-m})``.

    ``p`` is zero-padded up to degree ``n`` before reversal, so the result
    may have lower degree than ``n`` when ``c_0 = 0``.
    """
    if n is None:
        n = p.degree
    if n < p.degree:
        raise ValueError(f"n={n} is below the degree {p.degree}")
    padded = np.zeros(n + 1, dtype=complex)
    padded[: p.degree + 1] = p.coeffs
    coeffs = np.conj(padded[::-1])

    roots = None
    if p.roots is not None and not p.is_zero:
        # zero roots of p drop out; each missing degree contributes a root at 0
        nz = p.roots[p.roots != 0]
        reflected = 1.0 / np.conj(nz)
        extra = n - p.degree
        candidate = np.concatenate([np.zeros(extra, dtype=complex), reflected])
        if coeffs.any() and candidate.size == np.flatnonzero(coeffs)[-1]:
            roots = candidate
    return Polynomial(coeffs, roots)
