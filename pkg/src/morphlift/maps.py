"""Exact polynomial map representations and the conversions between them.

Real identification fixes the interleaved coordinate convention once and for
all: the complex point (z_1, ..., z_m) corresponds to the real point
(x_1, x_2, ..., x_{2m-1}, x_{2m}) with z_k = x_{2k-1} + i*x_{2k}, and a
complex codomain splits as (u^1, v^1, ..., u^n, v^n).
"""

from __future__ import annotations

from fractions import Fraction

from .exact import (
    DimensionMismatch,
    ExactMatrix,
    I,
    imag_part,
    real_part,
)
from .poly import MultiPoly, default_names


class ShapeError(ValueError):
    """A map does not have the shape an operation requires."""


class RealPolyMap:
    """A polynomial map R^m -> R^n with exact rational coefficients."""

    __slots__ = ("domain_dim", "codomain_dim", "components", "var_names")

    def __init__(self, domain_dim: int, codomain_dim: int, components,
                 var_names=None):
        components = tuple(components)
        if len(components) != codomain_dim:
            raise DimensionMismatch("component count does not match codomain")
        for c in components:
            if c.num_vars != domain_dim or c.num_complex != 0:
                raise DimensionMismatch("component lives in the wrong ring")
        object.__setattr__(self, "domain_dim", domain_dim)
        object.__setattr__(self, "codomain_dim", codomain_dim)
        object.__setattr__(self, "components", components)
        object.__setattr__(self, "var_names",
                           tuple(var_names) if var_names is not None else None)

    def __setattr__(self, name, value):
        raise AttributeError("RealPolyMap is immutable")

    def names(self) -> tuple:
        if self.var_names is not None:
            return self.var_names
        return default_names(self.domain_dim)

    def __eq__(self, other):
        if not isinstance(other, RealPolyMap):
            return NotImplemented
        return (self.domain_dim == other.domain_dim
                and self.components == other.components)

    def __hash__(self):
        return hash((self.domain_dim, self.components))

    def __repr__(self):
        return f"RealPolyMap(R^{self.domain_dim} -> R^{self.codomain_dim})"

    def evaluate(self, point) -> tuple:
        return tuple(c.evaluate(point) for c in self.components)


class ComplexPolyMap:
    """A polynomial map C^m -> C^n in the variables z_k and their formal
    conjugates zb_k (Gaussian-rational coefficients)."""

    __slots__ = ("domain_dim", "codomain_dim", "components", "var_names")

    def __init__(self, domain_dim: int, codomain_dim: int, components,
                 var_names=None):
        components = tuple(components)
        if len(components) != codomain_dim:
            raise DimensionMismatch("component count does not match codomain")
        for c in components:
            if c.num_vars != 2 * domain_dim or c.num_complex != domain_dim:
                raise DimensionMismatch("component lives in the wrong ring")
        object.__setattr__(self, "domain_dim", domain_dim)
        object.__setattr__(self, "codomain_dim", codomain_dim)
        object.__setattr__(self, "components", components)
        object.__setattr__(self, "var_names",
                           tuple(var_names) if var_names is not None else None)

    def __setattr__(self, name, value):
        raise AttributeError("ComplexPolyMap is immutable")

    def names(self) -> tuple:
        """Full 2m-variable name list (holomorphic block then conjugates)."""
        if self.var_names is not None:
            holo = self.var_names
        else:
            holo = tuple(f"z{j + 1}" for j in range(self.domain_dim))
        return holo + tuple(f"{n[0]}b{n[1:]}" for n in holo)

    def __eq__(self, other):
        if not isinstance(other, ComplexPolyMap):
            return NotImplemented
        return (self.domain_dim == other.domain_dim
                and self.components == other.components)

    def __hash__(self):
        return hash((self.domain_dim, self.components))

    def __repr__(self):
        return f"ComplexPolyMap(C^{self.domain_dim} -> C^{self.codomain_dim})"

    def evaluate(self, zpoint) -> tuple:
        return tuple(c.evaluate_complex(zpoint) for c in self.components)


class QuadraticMap:
    """A map whose components are the quadratic forms X^t A_i X."""

    __slots__ = ("domain_dim", "codomain_dim", "matrices")

    def __init__(self, matrices):
        matrices = tuple(matrices)
        if not matrices:
            raise DimensionMismatch("a quadratic map needs at least one form")
        m = matrices[0].rows
        for a in matrices:
            if a.rows != m or a.cols != m:
                raise DimensionMismatch("all forms must be square of equal size")
            if not a.is_symmetric():
                raise ShapeError("quadratic form matrix is not symmetric")
        object.__setattr__(self, "matrices", matrices)
        object.__setattr__(self, "domain_dim", m)
        object.__setattr__(self, "codomain_dim", len(matrices))

    def __setattr__(self, name, value):
        raise AttributeError("QuadraticMap is immutable")

    def __eq__(self, other):
        if not isinstance(other, QuadraticMap):
            return NotImplemented
        return self.matrices == other.matrices

    def __hash__(self):
        return hash(self.matrices)

    def __repr__(self):
        return f"QuadraticMap(R^{self.domain_dim} -> R^{self.codomain_dim})"


PolyMap = RealPolyMap | ComplexPolyMap


# ---------------------------------------------------------------------------
# Real identification and complexification
# ---------------------------------------------------------------------------

def real_identification(phi: ComplexPolyMap) -> RealPolyMap:
    """The map R^{2m} -> R^{2n} obtained by splitting into real and imaginary
    parts under the interleaved identification z_k = x_{2k-1} + i*x_{2k}."""
    m = phi.domain_dim
    real_vars = 2 * m
    values = []
    for k in range(m):
        re_var = MultiPoly.variable(real_vars, 2 * k)
        im_var = MultiPoly.variable(real_vars, 2 * k + 1)
        values.append(re_var + im_var.scale(I))
    for k in range(m):
        re_var = MultiPoly.variable(real_vars, 2 * k)
        im_var = MultiPoly.variable(real_vars, 2 * k + 1)
        values.append(re_var - im_var.scale(I))
    components = []
    for comp in phi.components:
        mixed = comp.compose(values)
        u_terms = {}
        v_terms = {}
        for exponents, coeff in mixed.terms.items():
            u_terms[exponents] = real_part(coeff)
            v_terms[exponents] = imag_part(coeff)
        components.append(MultiPoly(real_vars, u_terms))
        components.append(MultiPoly(real_vars, v_terms))
    return RealPolyMap(real_vars, 2 * phi.codomain_dim, components)


def complexify(phi_r: RealPolyMap) -> ComplexPolyMap:
    """Inverse of :func:`real_identification` (even dimensions required)."""
    if phi_r.domain_dim % 2 or phi_r.codomain_dim % 2:
        raise DimensionMismatch(
            "complexification needs even domain and codomain dimensions")
    m = phi_r.domain_dim // 2
    n = phi_r.codomain_dim // 2
    num_vars = 2 * m
    half = Fraction(1, 2)
    values = []
    for k in range(m):
        z = MultiPoly.variable(num_vars, k, m)
        zb = MultiPoly.variable(num_vars, m + k, m)
        values.append((z + zb).scale(half))        # x_{2k-1} = (z + zb)/2
        values.append((z - zb).scale(-I * half))   # x_{2k}   = (z - zb)/(2i)
    components = []
    for l in range(n):
        u = phi_r.components[2 * l].compose(values)
        v = phi_r.components[2 * l + 1].compose(values)
        components.append(u + v.scale(I))
    return ComplexPolyMap(m, n, components)


# ---------------------------------------------------------------------------
# Composition
# ---------------------------------------------------------------------------

def compose(outer: PolyMap, inner: PolyMap) -> PolyMap:
    """Exact polynomial composition outer o inner."""
    if isinstance(outer, RealPolyMap) and isinstance(inner, RealPolyMap):
        if inner.codomain_dim != outer.domain_dim:
            raise DimensionMismatch(
                f"cannot compose: inner codomain {inner.codomain_dim} != "
                f"outer domain {outer.domain_dim}")
        values = list(inner.components)
        return RealPolyMap(inner.domain_dim, outer.codomain_dim,
                           [c.compose(values) for c in outer.components],
                           inner.var_names)
    if isinstance(outer, ComplexPolyMap) and isinstance(inner, ComplexPolyMap):
        if inner.codomain_dim != outer.domain_dim:
            raise DimensionMismatch(
                f"cannot compose: inner codomain {inner.codomain_dim} != "
                f"outer domain {outer.domain_dim}")
        values = list(inner.components)
        values.extend(c.conjugate_poly() for c in inner.components)
        return ComplexPolyMap(inner.domain_dim, outer.codomain_dim,
                              [c.compose(values) for c in outer.components],
                              inner.var_names)
    raise DimensionMismatch("can only compose maps of matching kind "
                            "(real with real, complex with complex)")


# ---------------------------------------------------------------------------
# Quadratic normal form
# ---------------------------------------------------------------------------

def to_quadratic(phi: RealPolyMap) -> QuadraticMap:
    """Extract the symmetric matrices A_i of a homogeneous degree-2 map."""
    m = phi.domain_dim
    matrices = []
    for index, comp in enumerate(phi.components, start=1):
        rows = [[Fraction(0)] * m for _ in range(m)]
        if comp.is_zero:
            raise ShapeError(f"component {index} is zero, not degree 2")
        for exponents, coeff in comp.terms.items():
            if sum(exponents) != 2:
                raise ShapeError(
                    f"component {index} is not homogeneous of degree 2")
            support = [j for j, e in enumerate(exponents) if e]
            if len(support) == 1:
                j = support[0]
                rows[j][j] = Fraction(coeff)
            else:
                j, k = support
                half = Fraction(coeff) / 2
                rows[j][k] += half
                rows[k][j] += half
        matrices.append(ExactMatrix(rows))
    return QuadraticMap(matrices)


def from_quadratic(Q: QuadraticMap) -> RealPolyMap:
    """Expand each X^t A_i X back into a polynomial component."""
    m = Q.domain_dim
    components = []
    for a in Q.matrices:
        terms: dict = {}
        for j in range(m):
            for k in range(j, m):
                coeff = a[j, k] if j == k else a[j, k] + a[k, j]
                if coeff == 0:
                    continue
                exponents = [0] * m
                exponents[j] += 1
                exponents[k] += 1
                terms[tuple(exponents)] = terms.get(tuple(exponents), 0) + coeff
        components.append(MultiPoly(m, terms))
    return RealPolyMap(m, Q.codomain_dim, components)
