"""Floating-point verification of harmonicity and conformality for maps the
exact pipeline cannot carry (sqrt, division).

Derivatives are always symbolic (two applications for the Laplacian, never
nested finite differences), so only evaluation roundoff remains; a central
finite difference cross-checks every first derivative once per run.  Results
are falsification/confirmation evidence, not proofs, and reports say so.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .expr import EvalDomainError, SmoothMap, Var, add, derivative, eval_float, mul


class SamplingError(RuntimeError):
    """Rejection sampling could not find enough guard-satisfying points."""


class InternalConsistencyError(RuntimeError):
    """A symbolic derivative disagrees with its finite-difference cross-check."""


@dataclass(frozen=True)
class ResidualReport:
    points: tuple
    laplacian_residuals: tuple     # per component: max |Laplacian| over points
    conformality_residual: float   # max over points and (k, l) of |G_kl - L*d_kl|
    tolerance: float
    verdict: bool                  # all residuals <= tolerance at all points
    witness_point: tuple = None    # first point exceeding the tolerance
    notes: tuple = (
        "numeric evidence only: residuals are sampled, not proven bounds",
    )


def numeric_complete_lift(phi: SmoothMap) -> SmoothMap:
    """Symbolic complete lift: component k becomes sum_j d(phi^k)/dx_j * y_j."""
    m = phi.domain_dim
    components = []
    for comp in phi.components:
        total = None
        for j in range(m):
            term = mul(derivative(comp, j), Var(m + j))
            total = term if total is None else add(total, term)
        components.append(total)
    names = phi.names() + tuple(f"y{j + 1}" for j in range(m))
    return SmoothMap(2 * m, tuple(components), phi.guards, names)


def _finite_difference(comp, point, j, step=1e-6):
    forward = list(point)
    backward = list(point)
    forward[j] += step
    backward[j] -= step
    return (eval_float(comp, forward) - eval_float(comp, backward)) / (2 * step)


def numeric_check(phi: SmoothMap, points, tolerance: float) -> ResidualReport:
    """Sampled residuals of the harmonicity and conformality conditions.

    The squared dilation has no closed form here, so per point it is
    estimated as the mean diagonal of G = J J^t; the conformality residual
    then measures the distance of G from that multiple of the identity.
    """
    m = phi.domain_dim
    n = phi.codomain_dim
    first = [[derivative(c, j) for j in range(m)] for c in phi.components]
    second = [[derivative(first[k][j], j) for j in range(m)]
              for k in range(n)]

    points = [tuple(p) for p in points]
    if points:
        # cross-check every symbolic first derivative at the first point
        p0 = points[0]
        phi.check_guards(p0)
        for k in range(n):
            for j in range(m):
                symbolic = eval_float(first[k][j], p0)
                numeric = _finite_difference(phi.components[k], p0, j)
                scale = max(1.0, abs(symbolic))
                if abs(symbolic - numeric) > 1e-4 * scale:
                    raise InternalConsistencyError(
                        f"d(component {k + 1})/dx{j + 1}: symbolic "
                        f"{symbolic:.6g} vs finite difference {numeric:.6g}")

    laplacian_max = [0.0] * n
    conformality_max = 0.0
    witness = None
    for point in points:
        phi.check_guards(point)
        for k in range(n):
            residual = abs(sum(eval_float(second[k][j], point).real
                               for j in range(m)))
            if residual > laplacian_max[k]:
                laplacian_max[k] = residual
            if residual > tolerance and witness is None:
                witness = point
        jac = [[eval_float(first[k][j], point).real for j in range(m)]
               for k in range(n)]
        g = [[sum(jac[k][i] * jac[l][i] for i in range(m)) for l in range(n)]
             for k in range(n)]
        dilation = sum(g[k][k] for k in range(n)) / n
        for k in range(n):
            for l in range(n):
                target = dilation if k == l else 0.0
                residual = abs(g[k][l] - target)
                if residual > conformality_max:
                    conformality_max = residual
                if residual > tolerance and witness is None:
                    witness = point
    verdict = witness is None
    return ResidualReport(tuple(points), tuple(laplacian_max),
                          conformality_max, tolerance, verdict, witness)


def sample_points(phi: SmoothMap, count: int, seed: int, box,
                  margin: float = 1e-6) -> list[tuple]:
    """Deterministic guarded sampling: uniform draws in the box, rejecting
    points whose guard values fall below the margin."""
    bounds = _normalize_box(box, phi.domain_dim)
    rng = random.Random(seed)
    points: list[tuple] = []
    attempts = 0
    limit = max(1000, count * 100)
    while len(points) < count:
        if attempts >= limit:
            raise SamplingError(
                f"rejected {attempts} of {attempts + len(points)} draws; "
                "choose a box further from the excluded locus")
        attempts += 1
        point = tuple(rng.uniform(lo, hi) for lo, hi in bounds)
        try:
            guard_values = phi.guard_values(point)
        except EvalDomainError:
            continue
        if all(value >= margin for value in guard_values):
            points.append(point)
    return points


def _normalize_box(box, dim: int):
    box = list(box)
    if len(box) == 2 and not hasattr(box[0], "__len__"):
        return [(float(box[0]), float(box[1]))] * dim
    if len(box) != dim:
        raise SamplingError(f"box must give {dim} coordinate ranges")
    return [(float(lo), float(hi)) for lo, hi in box]
