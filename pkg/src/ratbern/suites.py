"""Named verification suites assembled from generated instances."""

from __future__ import annotations

from typing import Iterable, List, Optional, Sequence

import numpy as np

from .engine import Case, SuiteReport, Tolerances, run_suite
from .generators import (
    InstanceSpec,
    boundary_cases,
    extremal_instance,
    gen_batch,
    gen_interior_instance,
    instance_seeds,
)
from .norms import NormConfig
from .poly import Polynomial, poly_from_roots

SUITES = ("identities", "rational", "polynomial", "lemmas", "sharpness")

SUITE_CHECKS = {
    "identities": ("lemma1", "lemma2", "unimodular", "rstar_modulus"),
    "rational": ("lmr14", "lmr15", "az16", "thm21", "cor22", "cor24", "cor26"),
    "polynomial": ("bernstein", "erdos_lax", "malik", "cor27", "cor29"),
    "lemmas": ("lemma3", "lemma5", "halfplane", "lemma4"),
    "sharpness": ("thm21", "cor22", "cor24", "bernstein", "malik", "lmr14"),
}


def _sub_seed(seed: int, tag: int) -> int:
    """Independent integer seed for one part of a suite."""
    return int(np.random.SeedSequence([seed, tag]).generate_state(1, np.uint64)[0])


def identity_cases(count: int, seed: int, max_n: int = 8) -> List[Case]:
    insts = gen_batch(InstanceSpec(n=max_n, k=1.0, seed=seed), count, vary_n=True)
    return [Case(r, 1.0, 0.0, i) for i, r in enumerate(insts)]


def rational_cases(
    count: int,
    seed: int,
    ks: Sequence[float],
    betas: Sequence[complex],
    max_n: int = 8,
    instances=None,
) -> List[Case]:
    cases = []
    for j, k in enumerate(ks):
        if instances is None:
            spec = InstanceSpec(n=max_n, k=k, seed=_sub_seed(seed, j))
            insts = gen_batch(spec, count, vary_n=True)
        else:
            insts = instances
        for i, r in enumerate(insts):
            for b in betas:
                cases.append(Case(r, k, b, i))
    return cases


def boundary_suite_cases(n: int = 3) -> List[Case]:
    return [Case(r, 1.0, 0.0, -1 - i) for i, r in enumerate(boundary_cases(n))]


def polynomial_cases(
    count: int, seed: int, ks: Sequence[float], betas: Sequence[complex], max_n: int = 8
) -> List[Case]:
    cases = []
    for j, k in enumerate(ks):
        insts = gen_batch(InstanceSpec(n=max_n, k=k, seed=_sub_seed(seed, 100 + j)), count, vary_n=True)
        for i, r in enumerate(insts):
            for b in betas:
                cases.append(Case(r.numerator, k, b, i))
    return cases


def lemma_cases(count: int, seed: int, max_n: int = 8) -> List[Case]:
    cases = []
    for i, r in enumerate(gen_batch(InstanceSpec(n=max_n, seed=_sub_seed(seed, 200)), count, vary_n=True)):
        cases.append(Case(r, 1.0, 0.0, i))
    for i, child in enumerate(instance_seeds(_sub_seed(seed, 201), count)):
        rng = np.random.default_rng(child)
        n = int(rng.integers(1, max_n + 1))
        radius = float(rng.uniform(0.2, 1.0))
        cases.append(Case(gen_interior_instance(n, radius, rng), radius, 0.0, count + i))
    rng = np.random.default_rng(_sub_seed(seed, 202))
    for i in range(count):
        m = int(rng.integers(1, 11))
        cases.append(Case(tuple(rng.uniform(1.0, 100.0, m).tolist()), 1.0, 0.0, 2 * count + i))
    return cases


def sharpness_cases(
    ns: Sequence[int] = (1, 2, 3),
    ks: Sequence[float] = (1.0, 2.0),
    a_values: Sequence[float] = (2.0, 3.0),
) -> List[Case]:
    cases = []
    idx = 0
    for n in ns:
        for k in ks:
            for a in a_values:
                cases.append(Case(extremal_instance(n, k, a), k, 0.0, idx))
                idx += 1
            cases.append(Case(poly_from_roots([-k] * n), k, 0.0, idx))
            idx += 1
        cases.append(Case(Polynomial([0.0] * n + [1.0]), 1.0, 0.0, idx))
        idx += 1
    for r in boundary_cases(3)[:1]:
        cases.append(Case(r, 1.0, 0.0, idx))
        idx += 1
    return cases


def build_suite(
    suite: str,
    *,
    count: int = 10,
    seed: int = 0,
    ks: Sequence[float] = (1.0, 2.0),
    betas: Sequence[complex] = (0.0,),
    ns: Sequence[int] = (1, 2, 3),
    a_values: Sequence[float] = (2.0, 3.0),
    max_n: int = 8,
    instances=None,
):
    """``(cases, check_ids, thetas)`` for one named suite; ``thetas=None`` means the grid."""
    if suite == "identities":
        if instances is not None:
            return [Case(r, 1.0, 0.0, i) for i, r in enumerate(instances)], SUITE_CHECKS[suite], None
        return identity_cases(count, _sub_seed(seed, 1), max_n), SUITE_CHECKS[suite], None
    if suite == "rational":
        cases = rational_cases(count, _sub_seed(seed, 2), ks, betas, max_n, instances)
        return cases + boundary_suite_cases(), SUITE_CHECKS[suite], None
    if suite == "polynomial":
        if instances is not None:
            cases = [Case(r.numerator, k, b, i) for k in ks for i, r in enumerate(instances) for b in betas]
        else:
            cases = polynomial_cases(count, _sub_seed(seed, 3), ks, betas, max_n)
        return cases, SUITE_CHECKS[suite], None
    if suite == "lemmas":
        return lemma_cases(count, _sub_seed(seed, 4), max_n), SUITE_CHECKS[suite], None
    if suite == "sharpness":
        return sharpness_cases(ns, ks, a_values), SUITE_CHECKS[suite], [0.0]
    raise ValueError(f"unknown suite {suite!r}")


def run_named_suites(
    names: Iterable[str],
    *,
    grid_size: int = 128,
    tolerances: Tolerances = Tolerances(),
    norm_cfg: NormConfig = NormConfig(),
    seed: int = 0,
    config: Optional[dict] = None,
    **kw,
) -> SuiteReport:
    """Run several suites and merge them into one report.

    Case indices are offset per suite so they stay unique in the merged report.
    """
    merged = None
    offset = 0
    for name in names:
        cases, checks, thetas = build_suite(name, seed=seed, **kw)
        rep = run_suite(
            cases, checks, grid_size, tolerances, seed, norm_cfg, thetas,
        )
        for row in rep.cases:
            row["case"] += offset
            row["suite"] = name
        reports = [
            type(r)(**{**r.__dict__, "case": r.case + offset}) for r in rep.reports
        ]
        offset += len(cases)
        if merged is None:
            merged = SuiteReport([], 0, seed, {"suites": [], **(config or {})}, [])
        merged.reports += reports
        merged.skipped += rep.skipped
        merged.cases += rep.cases
        merged.config["suites"].append({"name": name, **rep.config})
    if merged is None:
        merged = SuiteReport([], 0, seed, dict(config or {}), [])
    return merged
