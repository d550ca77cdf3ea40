"""The isotropic-span criterion for complex-valued harmonic morphisms.

A submersive harmonic morphism Phi from R^{2m} to C is holomorphic with
respect to some Kaehler structure iff all its complex gradients lie in one
m-dimensional isotropic subspace of C^{2m} (isotropic for the bilinear, not
Hermitian, product).  If gradients at finitely many points already span more
than m dimensions, no such subspace can exist; that rank-overflow argument is
the certificate this module produces.  Rank at most m is reported as
inconclusive: existence of an isotropic subspace through the span is not
decided here.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .calculus import complex_gradient, jacobian
from .exact import (
    DimensionMismatch,
    ExactMatrix,
    GaussianRational,
    Scalar,
    bilinear_dot,
    imag_part,
    real_part,
)
from .maps import RealPolyMap

NOT_KAEHLER = "not_kaehler_certified"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class KaehlerReport:
    sample_points: tuple          # complex coordinates, length m each
    gradients: tuple              # vectors in C^{2m}
    rank: int
    isotropy_ok: bool             # every gradient satisfies <v, v> = 0
    pairwise_orthogonal: bool     # <v_a, v_b> = 0 for all pairs
    verdict: str                  # NOT_KAEHLER or INCONCLUSIVE
    jacobian_ranks: tuple = ()    # rank of the real 2x2m Jacobian per point
    notes: tuple = ()

    def __post_init__(self):
        if self.rank > len(self.gradients):
            raise ValueError("rank cannot exceed the number of gradients")


def complex_point_to_real(point) -> tuple:
    """Interleave (re, im) parts of complex coordinates."""
    reals = []
    for value in point:
        reals.append(real_part(value))
        reals.append(imag_part(value))
    return tuple(reals)


def gradient_at(Phi: RealPolyMap, point) -> tuple:
    """Exact complex gradient of Phi (a map to R^2 read as C) at a complex
    point given in the ambient complex coordinates."""
    if 2 * len(point) != Phi.domain_dim:
        raise DimensionMismatch(
            f"point has {len(point)} complex coordinates; the map needs "
            f"{Phi.domain_dim // 2}")
    gradient_polys = complex_gradient(Phi)
    real_point = complex_point_to_real(point)
    return tuple(p.evaluate(real_point) for p in gradient_polys)


def _real_jacobian_rank(Phi: RealPolyMap, real_point) -> int:
    return ExactMatrix(jacobian(Phi).evaluate(real_point)).rank()


def span_report(Phi: RealPolyMap, points) -> KaehlerReport:
    """Evaluate gradients at the given complex points and certify (or not)
    that no m-dimensional isotropic subspace contains them all."""
    gradient_polys = complex_gradient(Phi)
    m = Phi.domain_dim // 2
    gradients = []
    jacobian_ranks = []
    for point in points:
        real_point = complex_point_to_real(point)
        gradients.append(tuple(p.evaluate(real_point) for p in gradient_polys))
        jacobian_ranks.append(_real_jacobian_rank(Phi, real_point))
    matrix = ExactMatrix(gradients) if gradients else ExactMatrix([])
    rank = matrix.rank() if gradients else 0
    isotropy_ok = all(bilinear_dot(g, g) == 0 for g in gradients)
    pairwise = all(bilinear_dot(gradients[a], gradients[b]) == 0
                   for a in range(len(gradients))
                   for b in range(a + 1, len(gradients)))
    verdict = NOT_KAEHLER if rank > m else INCONCLUSIVE
    notes = ()
    if verdict == NOT_KAEHLER:
        notes = (f"gradient span has rank {rank} > m = {m}: no m-dimensional "
                 "subspace (isotropic or not) contains every gradient",)
    return KaehlerReport(tuple(points), tuple(gradients), rank, isotropy_ok,
                         pairwise, verdict, tuple(jacobian_ranks), notes)


_ALPHABET: tuple[Scalar, ...] = (
    0, 1, -1,
    GaussianRational(0, 1), GaussianRational(0, -1), GaussianRational(1, -1),
)


def search_points(Phi: RealPolyMap, budget: int, seed: int) -> KaehlerReport:
    """Greedy deterministic search for points whose gradients overflow the
    rank bound.  Samples small Gaussian-integer coordinates, keeps a point
    iff it increases the span rank, stops at rank > m or budget exhaustion."""
    rng = random.Random(seed)
    gradient_polys = complex_gradient(Phi)
    m = Phi.domain_dim // 2
    kept_points = []
    kept_gradients: list[tuple] = []
    rank = 0
    for _ in range(budget):
        point = tuple(rng.choice(_ALPHABET) for _ in range(m))
        real_point = complex_point_to_real(point)
        gradient = tuple(p.evaluate(real_point) for p in gradient_polys)
        if all(value == 0 for value in gradient):
            continue
        candidate = ExactMatrix(kept_gradients + [gradient])
        new_rank = candidate.rank()
        if new_rank > rank:
            kept_points.append(point)
            kept_gradients.append(gradient)
            rank = new_rank
        if rank > m:
            break
    return span_report(Phi, kept_points)
