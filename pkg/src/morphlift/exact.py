"""Exact scalar arithmetic and exact dense linear algebra.

Scalars are Python ints, ``fractions.Fraction`` or :class:`GaussianRational`
(a + b*i with rational a, b).  All arithmetic is exact; there is no tolerance
anywhere in this module.  Values normalize aggressively: a Fraction with
denominator 1 becomes an int, a Gaussian rational with zero imaginary part
becomes its real part.  This keeps structural equality meaningful and makes
the common all-integer case fast.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union


class DimensionMismatch(ValueError):
    """Operands have incompatible shapes or arities."""


def normalize_rational(value) -> Union[int, Fraction]:
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, int):
        return value
    raise TypeError(f"not a rational value: {value!r}")


class GaussianRational:
    """A Gaussian rational a + b*i, with exact Fraction components.

    Construction normalizes components; use :func:`make_scalar` if the result
    should demote to a plain rational when the imaginary part vanishes.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, float) or isinstance(im, float):
            raise TypeError("GaussianRational takes exact components, not floats")
        object.__setattr__(self, "re", normalize_rational(Fraction(re)))
        object.__setattr__(self, "im", normalize_rational(Fraction(im)))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # -- coercion -----------------------------------------------------------

    @staticmethod
    def _parts(other):
        if isinstance(other, GaussianRational):
            return other.re, other.im
        if isinstance(other, (int, Fraction)):
            return other, 0
        return None

    # -- field operations ---------------------------------------------------

    def __add__(self, other):
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        return make_scalar(self.re + parts[0], self.im + parts[1])

    __radd__ = __add__

    def __sub__(self, other):
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        return make_scalar(self.re - parts[0], self.im - parts[1])

    def __rsub__(self, other):
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        return make_scalar(parts[0] - self.re, parts[1] - self.im)

    def __mul__(self, other):
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        a, b = self.re, self.im
        c, d = parts
        return make_scalar(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        c, d = parts
        norm = c * c + d * d
        if norm == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        a, b = self.re, self.im
        return make_scalar(Fraction(a * c + b * d, 1) / norm,
                           Fraction(b * c - a * d, 1) / norm)

    def __rtruediv__(self, other):
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        a, b = parts
        c, d = self.re, self.im
        norm = c * c + d * d
        if norm == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return make_scalar(Fraction(a * c + b * d, 1) / norm,
                           Fraction(b * c - a * d, 1) / norm)

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = 1
        base = self
        k = exponent
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    # -- comparison / hashing -----------------------------------------------

    def __eq__(self, other):
        parts = self._parts(other)
        if parts is None:
            if isinstance(other, complex):
                return complex(self) == other
            return NotImplemented
        return self.re == parts[0] and self.im == parts[1]

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        return render_scalar(self)


Scalar = Union[int, Fraction, GaussianRational]

I = GaussianRational(0, 1)


def make_scalar(re, im=0) -> Scalar:
    """Build a scalar from rational parts, demoting to int/Fraction if real."""
    if im == 0:
        return normalize_rational(Fraction(re))
    return GaussianRational(re, im)


def conjugate(value: Scalar) -> Scalar:
    if isinstance(value, GaussianRational):
        return value.conjugate()
    return value


def real_part(value: Scalar) -> Union[int, Fraction]:
    if isinstance(value, GaussianRational):
        return value.re
    return value


def imag_part(value: Scalar) -> Union[int, Fraction]:
    if isinstance(value, GaussianRational):
        return value.im
    return 0


def to_complex(value: Scalar) -> complex:
    if isinstance(value, GaussianRational):
        return complex(value)
    return complex(float(value), 0.0)


def _render_rational(value) -> str:
    return str(value)


def render_scalar(value: Scalar) -> str:
    """Canonical text form: ``a/b``, ``c/d*i`` or ``a/b+c/d*i``."""
    re, im = real_part(value), imag_part(value)
    if im == 0:
        return _render_rational(re)
    if im == 1:
        im_text = "i"
    elif im == -1:
        im_text = "-i"
    else:
        im_text = f"{_render_rational(im)}*i"
    if re == 0:
        return im_text
    joiner = "" if im_text.startswith("-") else "+"
    return f"{_render_rational(re)}{joiner}{im_text}"


# ---------------------------------------------------------------------------
# Vectors and matrices
# ---------------------------------------------------------------------------

Vector = tuple


def as_vector(entries: Iterable[Scalar]) -> Vector:
    return tuple(entries)


def bilinear_dot(u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
    """The complex-bilinear product sum(u_i * v_i); no conjugation."""
    if len(u) != len(v):
        raise DimensionMismatch(f"vector lengths differ: {len(u)} vs {len(v)}")
    total: Scalar = 0
    for a, b in zip(u, v):
        total = total + a * b
    return total


class ExactMatrix:
    """Immutable dense matrix over exact scalars."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Iterable[Scalar]]):
        rows = tuple(tuple(row) for row in entries)
        if rows:
            width = len(rows[0])
            if any(len(row) != width for row in rows):
                raise DimensionMismatch("ragged rows")
        else:
            width = 0
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", width)

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls([[0] * cols for _ in range(rows)])

    def __getitem__(self, index):
        i, j = index
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        body = "; ".join(", ".join(render_scalar(x) for x in row)
                         for row in self.entries)
        return f"ExactMatrix[{self.rows}x{self.cols}]({body})"

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(zip(*self.entries)) if self.rows else ExactMatrix([])

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        cols = other.transpose().entries
        return ExactMatrix([[bilinear_dot(row, col) for col in cols]
                            for row in self.entries])

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("shape mismatch in addition")
        return ExactMatrix([[a + b for a, b in zip(r1, r2)]
                            for r1, r2 in zip(self.entries, other.entries)])

    def scale(self, factor: Scalar) -> "ExactMatrix":
        return ExactMatrix([[factor * x for x in row] for row in self.entries])

    def append_row(self, row: Sequence[Scalar]) -> "ExactMatrix":
        if self.rows and len(row) != self.cols:
            raise DimensionMismatch("appended row has wrong length")
        return ExactMatrix(list(self.entries) + [tuple(row)])

    def is_symmetric(self) -> bool:
        return self == self.transpose()

    def rank(self) -> int:
        """Rank by fraction-free (Bareiss) elimination, first-nonzero pivots.

        Divisions in the Bareiss update are exact over any integral domain;
        with Fraction-backed entries they are exact field divisions.
        """
        work = [[Fraction(x) if isinstance(x, int) else x for x in row]
                for row in self.entries]
        n_rows, n_cols = self.rows, self.cols
        rank = 0
        prev = 1
        for col in range(n_cols):
            pivot_row = None
            for i in range(rank, n_rows):
                if work[i][col] != 0:
                    pivot_row = i
                    break
            if pivot_row is None:
                continue
            if pivot_row != rank:
                work[rank], work[pivot_row] = work[pivot_row], work[rank]
            pivot = work[rank][col]
            for i in range(rank + 1, n_rows):
                head = work[i][col]
                for j in range(col, n_cols):
                    numerator = pivot * work[i][j] - head * work[rank][j]
                    if isinstance(numerator, int):
                        numerator = Fraction(numerator)
                    work[i][j] = numerator / prev
            prev = pivot
            rank += 1
            if rank == n_rows:
                break
        return rank

    def rref(self) -> tuple["ExactMatrix", tuple[int, ...]]:
        """Reduced row echelon form (exact field division), with pivot columns."""
        work = [[Fraction(x) if isinstance(x, int) else x for x in row]
                for row in self.entries]
        pivots = []
        r = 0
        for col in range(self.cols):
            pivot_row = None
            for i in range(r, self.rows):
                if work[i][col] != 0:
                    pivot_row = i
                    break
            if pivot_row is None:
                continue
            work[r], work[pivot_row] = work[pivot_row], work[r]
            inv = work[r][col]
            work[r] = [(Fraction(x) if isinstance(x, int) else x) / inv
                       for x in work[r]]
            for i in range(self.rows):
                if i != r and work[i][col] != 0:
                    factor = work[i][col]
                    work[i] = [a - factor * b for a, b in zip(work[i], work[r])]
            pivots.append(col)
            r += 1
            if r == self.rows:
                break
        return ExactMatrix(work), tuple(pivots)

    def nullspace(self) -> list[Vector]:
        """A basis of the right kernel (one vector per free column)."""
        reduced, pivots = self.rref()
        pivot_set = set(pivots)
        free_cols = [c for c in range(self.cols) if c not in pivot_set]
        basis = []
        for free in free_cols:
            vec = [0] * self.cols
            vec[free] = 1
            for row_index, pivot_col in enumerate(pivots):
                vec[pivot_col] = -reduced.entries[row_index][free]
            basis.append(as_vector(make_scalar_like(x) for x in vec))
        return basis


def make_scalar_like(value) -> Scalar:
    """Normalize an arbitrary exact value into canonical scalar form."""
    if isinstance(value, GaussianRational):
        return make_scalar(value.re, value.im)
    return normalize_rational(Fraction(value))


def span_contains(matrix: ExactMatrix, vector: Sequence[Scalar]) -> bool:
    """True iff ``vector`` lies in the row span of ``matrix``."""
    if matrix.rows and len(vector) != matrix.cols:
        raise DimensionMismatch(
            f"vector length {len(vector)} does not match {matrix.cols} columns")
    return matrix.append_row(vector).rank() == matrix.rank()
