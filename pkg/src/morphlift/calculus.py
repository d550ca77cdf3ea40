"""Differential operators on exact polynomial maps.

Wirtinger partials are purely formal on the z/zb polynomial ring: z_k and
zb_k differentiate as independent variables, which makes every check in the
analysis module an exact, decidable polynomial identity.
"""

from __future__ import annotations

from .exact import DimensionMismatch, I
from .maps import ComplexPolyMap, RealPolyMap, ShapeError
from .poly import MultiPoly, poly_dot


class PolyMatrix:
    """Immutable rectangular matrix of polynomials in a common ring."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        rows = tuple(tuple(row) for row in entries)
        width = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != width:
                raise DimensionMismatch("ragged polynomial matrix")
        ring = None
        for row in rows:
            for p in row:
                if ring is None:
                    ring = (p.num_vars, p.num_complex)
                elif (p.num_vars, p.num_complex) != ring:
                    raise DimensionMismatch("entries live in different rings")
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", width)

    def __setattr__(self, name, value):
        raise AttributeError("PolyMatrix is immutable")

    def __getitem__(self, index):
        i, j = index
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __repr__(self):
        return f"PolyMatrix({self.rows}x{self.cols})"

    def row(self, i):
        return self.entries[i]

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(zip(*self.entries)) if self.rows else PolyMatrix([])

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        cols = list(zip(*other.entries))
        return PolyMatrix([[poly_dot(list(row), list(col)) for col in cols]
                           for row in self.entries])

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("shape mismatch")
        return PolyMatrix([[a + b for a, b in zip(r1, r2)]
                           for r1, r2 in zip(self.entries, other.entries)])

    def __neg__(self) -> "PolyMatrix":
        return PolyMatrix([[-p for p in row] for row in self.entries])

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        return self + (-other)

    def is_zero(self) -> bool:
        return all(p.is_zero for row in self.entries for p in row)

    def evaluate(self, point):
        """Evaluate every entry; returns a list of lists of scalars."""
        return [[p.evaluate(point) for p in row] for row in self.entries]


def jacobian(phi: RealPolyMap) -> PolyMatrix:
    """Entry (i, j) is the partial of component i by variable j."""
    return PolyMatrix([[c.partial(j) for j in range(phi.domain_dim)]
                       for c in phi.components])


def hessian(p: MultiPoly) -> PolyMatrix:
    if p.num_complex:
        raise DimensionMismatch("hessian is defined for real variable kinds")
    firsts = [p.partial(i) for i in range(p.num_vars)]
    return PolyMatrix([[firsts[i].partial(j) for j in range(p.num_vars)]
                       for i in range(p.num_vars)])


def laplacian(p: MultiPoly) -> MultiPoly:
    if p.num_complex:
        raise DimensionMismatch("laplacian is defined for real variable kinds")
    total = MultiPoly.zero(p.num_vars)
    for i in range(p.num_vars):
        total = total + p.partial(i).partial(i)
    return total


def laplacian_map(phi: RealPolyMap) -> list[MultiPoly]:
    return [laplacian(c) for c in phi.components]


def wirtinger_jacobian(phi: ComplexPolyMap) -> PolyMatrix:
    """Holomorphic Jacobian: entry (i, j) = formal partial of component i by z_j."""
    return PolyMatrix([[c.partial(j) for j in range(phi.domain_dim)]
                       for c in phi.components])


def antiholomorphic_jacobian(phi: ComplexPolyMap) -> PolyMatrix:
    """Entry (i, j) = formal partial of component i by zb_j."""
    m = phi.domain_dim
    return PolyMatrix([[c.partial(m + j) for j in range(m)]
                       for c in phi.components])


def complex_gradient(phi: RealPolyMap) -> list[MultiPoly]:
    """For a map to R^2 read as one complex component u + i*v, the vector of
    partials (du/dx_j + i * dv/dx_j), Gaussian-rational coefficients over the
    real variables."""
    if phi.codomain_dim != 2:
        raise ShapeError(
            f"complex gradient needs a two-component map, got {phi.codomain_dim}")
    u, v = phi.components
    return [u.partial(j) + v.partial(j).scale(I) for j in range(phi.domain_dim)]


def gram(j: PolyMatrix) -> PolyMatrix:
    """The symmetric matrix J * J^t of row-by-row polynomial dot products."""
    n = j.rows
    rows = [list(r) for r in j.entries]
    entries = [[None] * n for _ in range(n)]
    for k in range(n):
        for l in range(k, n):
            value = poly_dot(rows[k], rows[l])
            entries[k][l] = value
            entries[l][k] = value
    return PolyMatrix(entries)
