"""Complete lifts of maps and the inverse (anti-lift) problem.

The real complete lift of phi: R^m -> R^n doubles the variables and contracts
the Jacobian against the new block:

    Phi(x_1..x_m, y_1..y_m)^k = sum_j (d phi^k / d x_j)(x) * y_j

The complex complete lift uses only the holomorphic Wirtinger partials and
fresh fiber variables w_1..w_m.  The anti-lift decides whether a given map of
doubled variables arises this way and reconstructs the base map when it does.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .calculus import jacobian
from .exact import DimensionMismatch
from .maps import ComplexPolyMap, QuadraticMap, RealPolyMap
from .poly import MultiPoly, render


@dataclass(frozen=True)
class LiftSplit:
    """A choice of base/fiber split: variables 1..m base, m+1..2m fiber."""

    total_dim: int
    split_index: int

    def __post_init__(self):
        if self.total_dim != 2 * self.split_index:
            raise DimensionMismatch(
                f"split {self.split_index} does not halve {self.total_dim} variables")


@dataclass(frozen=True)
class NotPartialLinear:
    """A component has a monomial whose fiber degree is not exactly one."""

    component: int          # 1-based
    monomial: tuple
    fiber_degree: int

    def describe(self) -> str:
        return (f"component {self.component} has a monomial of degree "
                f"{self.fiber_degree} in the fiber block (needs exactly 1)")


@dataclass(frozen=True)
class MixedPartialObstruction:
    """The coefficient matrix M(x) is not a Jacobian: two mixed partials differ."""

    component: int          # 1-based
    var_j: int              # 1-based
    var_k: int              # 1-based
    value_jk: MultiPoly     # d M[component][j] / d x_k
    value_kj: MultiPoly     # d M[component][k] / d x_j

    def describe(self) -> str:
        return (f"component {self.component}: d^2/dx{self.var_k}dx{self.var_j} = "
                f"{render(self.value_jk)} differs from "
                f"d^2/dx{self.var_j}dx{self.var_k} = {render(self.value_kj)}")


Obstruction = NotPartialLinear | MixedPartialObstruction


def complete_lift_real(phi: RealPolyMap) -> RealPolyMap:
    m = phi.domain_dim
    index_map = {j: j for j in range(m)}
    components = []
    for comp in phi.components:
        lifted = MultiPoly.zero(2 * m)
        for j in range(m):
            partial = comp.partial(j)
            if partial.is_zero:
                continue
            extended = partial.remap(2 * m, index_map)
            lifted = lifted + extended * MultiPoly.variable(2 * m, m + j)
        components.append(lifted)
    names = tuple(phi.names()) + tuple(f"y{j + 1}" for j in range(m))
    if len(set(names)) != len(names):
        names = None  # repeated lifting: fall back to canonical x-names
    return RealPolyMap(2 * m, phi.codomain_dim, components, names)


def complete_lift_complex(phi: ComplexPolyMap) -> ComplexPolyMap:
    """Lift by holomorphic partials only; fiber variables w_1..w_m (their
    formal conjugates exist in the ring but never occur in the lift)."""
    m = phi.domain_dim
    new_vars = 4 * m
    # old z_j -> j, old zb_j -> 2m + j; fiber w_j -> m + j, wb_j -> 3m + j
    index_map = {j: j for j in range(m)}
    index_map.update({m + j: 2 * m + j for j in range(m)})
    components = []
    for comp in phi.components:
        lifted = MultiPoly.zero(new_vars, 2 * m)
        for j in range(m):
            partial = comp.partial(j)  # holomorphic Wirtinger partial
            if partial.is_zero:
                continue
            extended = partial.remap(new_vars, index_map, 2 * m)
            lifted = lifted + extended * MultiPoly.variable(new_vars, m + j, 2 * m)
        components.append(lifted)
    if phi.var_names is not None:
        holo = phi.var_names
    else:
        holo = tuple(f"z{j + 1}" for j in range(m))
    names = holo + tuple(f"w{j + 1}" for j in range(m))
    if len(set(names)) != len(names):
        names = None  # repeated lifting: fall back to canonical z-names
    return ComplexPolyMap(2 * m, phi.codomain_dim, components, names)


def quadratic_complete_lift(Q: QuadraticMap) -> RealPolyMap:
    """The bilinear lift (X, Y) -> (2 X^t A_1 Y, ..., 2 X^t A_n Y)."""
    m = Q.domain_dim
    components = []
    for a in Q.matrices:
        terms: dict = {}
        for j in range(m):
            for k in range(m):
                coeff = 2 * a[j, k]
                if coeff == 0:
                    continue
                exponents = [0] * (2 * m)
                exponents[j] += 1
                exponents[m + k] += 1
                key = tuple(exponents)
                terms[key] = terms.get(key, 0) + coeff
        components.append(MultiPoly(2 * m, terms))
    names = tuple(f"x{j + 1}" for j in range(m)) + tuple(f"y{j + 1}" for j in range(m))
    return RealPolyMap(2 * m, Q.codomain_dim, components, names)


def block_jacobian_check(Q: QuadraticMap) -> bool:
    """Verify symbolically that J(Phi)(X, Y) = [ J(phi)(Y) | J(phi)(X) ].

    This is the identity that transfers horizontal weak conformality between a
    quadratic map and its lift; it holds precisely because the A_i are
    symmetric (enforced on construction).
    """
    from .maps import from_quadratic

    phi = from_quadratic(Q)
    m = Q.domain_dim
    lift = quadratic_complete_lift(Q)
    left = jacobian(lift)

    base_jac = jacobian(phi)
    to_y = {j: m + j for j in range(m)}    # substitute x -> y block
    to_x = {j: j for j in range(m)}
    for i in range(phi.codomain_dim):
        for j in range(m):
            jac_at_y = base_jac[i, j].remap(2 * m, to_y)
            jac_at_x = base_jac[i, j].remap(2 * m, to_x)
            if left[i, j] != jac_at_y:
                return False
            if left[i, m + j] != jac_at_x:
                return False
    return True


def anti_lift(Phi: RealPolyMap, split: LiftSplit) -> RealPolyMap | Obstruction:
    """Decide whether Phi(x, y) is the complete lift of some phi(x).

    Three stages: (a) every monomial must have fiber degree exactly one,
    giving the coefficient matrix M(x) with Phi = M(x) y; (b) M must satisfy
    the integrability conditions dM_ij/dx_k = dM_ik/dx_j; (c) phi is then
    reconstructed by exact monomial-wise radial integration, normalized to
    zero constant term.  Returns the reconstructed map or the first failing
    stage's obstruction witness.
    """
    if Phi.domain_dim != split.total_dim:
        raise DimensionMismatch(
            f"map has {Phi.domain_dim} variables, split describes {split.total_dim}")
    m = split.split_index

    # stage (a): extract M(x) with Phi^i = sum_j M[i][j](x) * y_j
    coefficient_rows: list[list[MultiPoly]] = []
    for index, comp in enumerate(Phi.components, start=1):
        row = [MultiPoly.zero(m) for _ in range(m)]
        for exponents, coeff in comp.terms.items():
            fiber = exponents[m:]
            fiber_degree = sum(fiber)
            if fiber_degree != 1:
                return NotPartialLinear(index, exponents, fiber_degree)
            j = fiber.index(1)
            base_exp = exponents[:m]
            row[j] = row[j] + MultiPoly(m, {base_exp: coeff})
        coefficient_rows.append(row)

    # stage (b): integrability dM_ij/dx_k == dM_ik/dx_j
    for index, row in enumerate(coefficient_rows, start=1):
        for j in range(m):
            for k in range(j + 1, m):
                djk = row[j].partial(k)
                dkj = row[k].partial(j)
                if djk != dkj:
                    return MixedPartialObstruction(index, j + 1, k + 1, djk, dkj)

    # stage (c): phi^i(x) = sum_j integral_0^1 M_ij(t x) x_j dt, exactly
    components = []
    for row in coefficient_rows:
        terms: dict = {}
        for j in range(m):
            for exponents, coeff in row[j].terms.items():
                degree = sum(exponents)
                lifted = list(exponents)
                lifted[j] += 1
                key = tuple(lifted)
                if isinstance(coeff, int):
                    scaled = Fraction(coeff, degree + 1)
                else:
                    scaled = coeff / (degree + 1)
                terms[key] = terms.get(key, 0) + scaled
        components.append(MultiPoly(m, terms))
    return RealPolyMap(m, Phi.codomain_dim, components)
