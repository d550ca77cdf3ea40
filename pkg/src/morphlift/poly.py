"""Exact multivariate polynomials over rationals or Gaussian rationals.

A polynomial is a mapping from exponent tuples to nonzero coefficients:

    x1^2*x2 + 3  ->  {(2, 1): 1, (0, 0): 3}     (num_vars=2)

Complex polynomial rings carry formal conjugate variables: a ring with
``num_complex = k`` has ``num_vars = 2k`` where variable ``j < k`` is the
holomorphic variable z_{j+1} and variable ``k + j`` is its conjugate partner
zb_{j+1}.  Formal (Wirtinger) partials treat all 2k variables as independent,
so :meth:`MultiPoly.partial` is the same operation for real and complex kinds.
"""

from __future__ import annotations

from fractions import Fraction

from .exact import (
    DimensionMismatch,
    GaussianRational,
    Scalar,
    conjugate,
    imag_part,
    make_scalar_like,
    real_part,
    render_scalar,
)


class ConsistencyError(ValueError):
    """A complex evaluation point assigns zb a value other than conj(z)."""


class MultiPoly:
    """Immutable sparse polynomial in canonical form (no zero coefficients)."""

    __slots__ = ("num_vars", "num_complex", "terms")

    def __init__(self, num_vars: int, terms: dict, num_complex: int = 0):
        if num_complex and num_vars != 2 * num_complex:
            raise DimensionMismatch(
                f"complex ring with {num_complex} pairs needs {2 * num_complex} "
                f"variables, got {num_vars}")
        clean = {}
        for exponents, coeff in terms.items():
            if len(exponents) != num_vars:
                raise DimensionMismatch(
                    f"exponent tuple {exponents} has length {len(exponents)}, "
                    f"expected {num_vars}")
            value = make_scalar_like(coeff)
            if value != 0:
                clean[tuple(exponents)] = value
        object.__setattr__(self, "num_vars", num_vars)
        object.__setattr__(self, "num_complex", num_complex)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, num_vars: int, num_complex: int = 0) -> "MultiPoly":
        return cls(num_vars, {}, num_complex)

    @classmethod
    def constant(cls, num_vars: int, value: Scalar, num_complex: int = 0) -> "MultiPoly":
        return cls(num_vars, {(0,) * num_vars: value}, num_complex)

    @classmethod
    def variable(cls, num_vars: int, index: int, num_complex: int = 0) -> "MultiPoly":
        if not 0 <= index < num_vars:
            raise DimensionMismatch(f"variable index {index} out of range")
        exponents = [0] * num_vars
        exponents[index] = 1
        return cls(num_vars, {tuple(exponents): 1}, num_complex)

    # -- basic protocol --------------------------------------------------------

    def _check_ring(self, other: "MultiPoly"):
        if (self.num_vars, self.num_complex) != (other.num_vars, other.num_complex):
            raise DimensionMismatch(
                f"ring mismatch: ({self.num_vars},{self.num_complex}) vs "
                f"({other.num_vars},{other.num_complex})")

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return (self.num_vars == other.num_vars
                and self.num_complex == other.num_complex
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.num_vars, self.num_complex,
                     frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self):
        return f"MultiPoly({render(self)!r})"

    # -- ring operations --------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = MultiPoly.constant(self.num_vars, other, self.num_complex)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_ring(other)
        terms = dict(self.terms)
        for exponents, coeff in other.terms.items():
            terms[exponents] = terms.get(exponents, 0) + coeff
        return MultiPoly(self.num_vars, terms, self.num_complex)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.num_vars,
                         {e: -c for e, c in self.terms.items()},
                         self.num_complex)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = MultiPoly.constant(self.num_vars, other, self.num_complex)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_ring(other)
        terms: dict = {}
        accumulate_product(terms, self, other)
        return MultiPoly(self.num_vars, terms, self.num_complex)

    __rmul__ = __mul__

    def scale(self, factor: Scalar) -> "MultiPoly":
        return MultiPoly(self.num_vars,
                         {e: factor * c for e, c in self.terms.items()},
                         self.num_complex)

    def __pow__(self, exponent: int) -> "MultiPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial powers take natural exponents")
        result = MultiPoly.constant(self.num_vars, 1, self.num_complex)
        base = self
        k = exponent
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # -- calculus ----------------------------------------------------------------

    def partial(self, index: int) -> "MultiPoly":
        """Formal partial derivative in variable ``index`` (Wirtinger for
        complex-kind variables: z and zb differentiate independently)."""
        if not 0 <= index < self.num_vars:
            raise DimensionMismatch(f"variable index {index} out of range")
        terms = {}
        for exponents, coeff in self.terms.items():
            e = exponents[index]
            if e == 0:
                continue
            lowered = exponents[:index] + (e - 1,) + exponents[index + 1:]
            terms[lowered] = terms.get(lowered, 0) + e * coeff
        return MultiPoly(self.num_vars, terms, self.num_complex)

    def conjugate_poly(self) -> "MultiPoly":
        """Swap each z_k with zb_k and conjugate every coefficient."""
        if self.num_complex == 0:
            raise DimensionMismatch("conjugate_poly needs complex variable kinds")
        k = self.num_complex
        terms = {}
        for exponents, coeff in self.terms.items():
            swapped = exponents[k:] + exponents[:k]
            terms[swapped] = conjugate(coeff)
        return MultiPoly(self.num_vars, terms, self.num_complex)

    # -- evaluation / substitution -------------------------------------------------

    def evaluate(self, point) -> Scalar:
        """Exact evaluation.  For complex rings the point must be
        conjugation-consistent: value(zb_k) == conj(value(z_k))."""
        if len(point) != self.num_vars:
            raise DimensionMismatch(
                f"point length {len(point)} != arity {self.num_vars}")
        if self.num_complex:
            k = self.num_complex
            for j in range(k):
                if point[k + j] != conjugate(point[j]):
                    raise ConsistencyError(
                        f"value for zb{j + 1} is not the conjugate of z{j + 1}")
        return self._evaluate_raw(point)

    def _evaluate_raw(self, point) -> Scalar:
        total: Scalar = 0
        for exponents, coeff in self.terms.items():
            value = coeff
            for base, e in zip(point, exponents):
                if e:
                    value = value * base ** e
            total = total + value
        return make_scalar_like(total) if not isinstance(total, int) else total

    def evaluate_complex(self, zpoint) -> Scalar:
        """Evaluate a complex-ring polynomial at z-values; zb gets conj(z)."""
        if self.num_complex == 0:
            raise DimensionMismatch("evaluate_complex needs a complex ring")
        if len(zpoint) != self.num_complex:
            raise DimensionMismatch(
                f"expected {self.num_complex} complex coordinates, got {len(zpoint)}")
        full = tuple(zpoint) + tuple(conjugate(z) for z in zpoint)
        return self._evaluate_raw(full)

    def compose(self, values: list["MultiPoly"]) -> "MultiPoly":
        """Substitute values[j] for variable j, for every variable at once."""
        if len(values) != self.num_vars:
            raise DimensionMismatch(
                f"need {self.num_vars} substitution values, got {len(values)}")
        if not values:
            return self
        ring = (values[0].num_vars, values[0].num_complex)
        for q in values:
            if (q.num_vars, q.num_complex) != ring:
                raise DimensionMismatch("substitution values live in mixed rings")
        result = MultiPoly.zero(*ring)
        power_cache: dict[tuple[int, int], MultiPoly] = {}
        for exponents, coeff in self.terms.items():
            term = MultiPoly.constant(ring[0], coeff, ring[1])
            for j, e in enumerate(exponents):
                if e == 0:
                    continue
                key = (j, e)
                if key not in power_cache:
                    power_cache[key] = values[j] ** e
                term = term * power_cache[key]
            result = result + term
        return result

    def substitute(self, index: int, value: "MultiPoly") -> "MultiPoly":
        """Substitute ``value`` for variable ``index``.  The value may live
        in a different ring only when no other variable occurs."""
        if not 0 <= index < self.num_vars:
            raise DimensionMismatch(f"variable index {index} out of range")
        same_ring = (value.num_vars, value.num_complex) == \
            (self.num_vars, self.num_complex)
        if same_ring:
            filler = [MultiPoly.variable(self.num_vars, j, self.num_complex)
                      for j in range(self.num_vars)]
        else:
            for exponents in self.terms:
                if any(e and j != index for j, e in enumerate(exponents)):
                    raise DimensionMismatch(
                        "cross-ring substitution needs a polynomial in the "
                        "substituted variable only")
            # untouched slots are never raised to a positive power
            filler = [MultiPoly.zero(value.num_vars, value.num_complex)
                      for _ in range(self.num_vars)]
        filler[index] = value
        return self.compose(filler)

    def remap(self, num_vars: int, index_map: dict[int, int],
              num_complex: int = 0) -> "MultiPoly":
        """Embed into a larger ring, sending old variable j to index_map[j]."""
        terms = {}
        for exponents, coeff in self.terms.items():
            new_exp = [0] * num_vars
            for j, e in enumerate(exponents):
                if e:
                    new_exp[index_map[j]] = e
            terms[tuple(new_exp)] = coeff
        return MultiPoly(num_vars, terms, num_complex)

    # -- inspection -------------------------------------------------------------

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)



def accumulate_product(accumulator: dict, p: MultiPoly, q: MultiPoly) -> None:
    """accumulator += p*q, as raw term dict updates (hot path for Gram
    matrices and polynomial matrix products)."""
    q_items = list(q.terms.items())
    for ep, cp in p.terms.items():
        for eq, cq in q_items:
            key = tuple(a + b for a, b in zip(ep, eq))
            accumulator[key] = accumulator.get(key, 0) + cp * cq


def poly_dot(left: list[MultiPoly], right: list[MultiPoly]) -> MultiPoly:
    """Exact sum of products sum_j left[j]*right[j] with one accumulator."""
    if len(left) != len(right):
        raise DimensionMismatch("poly_dot length mismatch")
    if not left:
        raise DimensionMismatch("poly_dot of empty vectors")
    num_vars, num_complex = left[0].num_vars, left[0].num_complex
    terms: dict = {}
    for p, q in zip(left, right):
        accumulate_product(terms, p, q)
    return MultiPoly(num_vars, terms, num_complex)


# ---------------------------------------------------------------------------
# Canonical rendering
# ---------------------------------------------------------------------------

def default_names(num_vars: int, num_complex: int = 0) -> tuple[str, ...]:
    if num_complex:
        k = num_complex
        return tuple(f"z{j + 1}" for j in range(k)) + tuple(f"zb{j + 1}" for j in range(k))
    return tuple(f"x{j + 1}" for j in range(num_vars))


def _graded_lex_key(exponents: tuple) -> tuple:
    return (sum(exponents), exponents)


def _render_coefficient(coeff: Scalar, has_vars: bool) -> tuple[str, str]:
    """Return (sign, body) where body omits the leading sign."""
    re, im = real_part(coeff), imag_part(coeff)
    if im == 0:
        sign = "-" if re < 0 else "+"
        magnitude = -re if re < 0 else re
        if has_vars and magnitude == 1:
            return sign, ""
        return sign, f"{magnitude}*" if has_vars else str(magnitude)
    if re == 0:
        sign = "-" if im < 0 else "+"
        magnitude = -im if im < 0 else im
        body = "i" if magnitude == 1 else f"{magnitude}*i"
        return sign, f"{body}*" if has_vars else body
    body = f"({render_scalar(coeff)})"
    return "+", f"{body}*" if has_vars else body


def render(p: MultiPoly, names=None) -> str:
    """Canonical text form: graded-lex order, explicit ``*`` and ``^``."""
    if names is None:
        names = default_names(p.num_vars, p.num_complex)
    if not p.terms:
        return "0"
    pieces = []
    for exponents in sorted(p.terms, key=_graded_lex_key, reverse=True):
        coeff = p.terms[exponents]
        factors = []
        for j, e in enumerate(exponents):
            if e == 1:
                factors.append(names[j])
            elif e > 1:
                factors.append(f"{names[j]}^{e}")
        sign, coeff_body = _render_coefficient(coeff, bool(factors))
        pieces.append((sign, coeff_body + "*".join(factors)))
    first_sign, first_body = pieces[0]
    out = [first_body if first_sign == "+" else f"-{first_body}"]
    for sign, body in pieces[1:]:
        out.append(f" {sign} {body}")
    return "".join(out)
