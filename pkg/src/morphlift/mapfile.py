"""The map-definition text format.

Grammar (UTF-8 text, ``#`` comments to end of line)::

    map NAME: (R|C)^m -> (R|C)^n {
        local = EXPR;        # let-style binding, inlined at parse time
        NAME1 = EXPR;        # components, named after the map
        ...
        NAMEn = EXPR;
        guard EXPR;          # EXPR must be > 0 on the valid domain
    }

Operator precedence: ``^`` binds tightest, then unary minus, then ``*`` and
``/``, then ``+`` and ``-``.  Real maps use variables ``x1..xm``; complex maps
use ``z1..zm`` (``zb1..zbm`` for formal conjugates), the reserved constant
``i`` and the function ``conj``.  Complex syntax inside a declared-real map is
an error.  Maps whose components are all polynomial parse to the exact
representations; otherwise (division, sqrt, or any guard) the result is a
:class:`~morphlift.expr.SmoothMap`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact import GaussianRational, Scalar
from .expr import (
    Conj,
    Const,
    Expr,
    Im,
    Re,
    SmoothMap,
    Sqrt,
    Var,
    add,
    div,
    is_polynomial,
    lower_to_poly,
    mul,
    neg,
    power,
    sub,
)
from .maps import ComplexPolyMap, RealPolyMap
from .poly import MultiPoly, default_names


class MapSyntaxError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        self.line = line
        self.column = column
        super().__init__(f"{line}:{column}: {message}")


@dataclass(frozen=True)
class _Token:
    kind: str  # ident, number, symbol, end
    text: str
    line: int
    column: int


_SYMBOLS = ("->", "+", "-", "*", "/", "^", "(", ")", "{", "}", ":", ";", "=", ",")


def _tokenize(source: str) -> list[_Token]:
    tokens = []
    line, column = 1, 1
    index = 0
    length = len(source)
    while index < length:
        ch = source[index]
        if ch == "\n":
            line += 1
            column = 1
            index += 1
            continue
        if ch in " \t\r":
            index += 1
            column += 1
            continue
        if ch == "#":
            while index < length and source[index] != "\n":
                index += 1
            continue
        if ch.isdigit():
            start = index
            while index < length and source[index].isdigit():
                index += 1
            if index < length and source[index] == ".":
                raise MapSyntaxError("decimal literals are not supported; "
                                     "use exact fractions like 1/2", line, column)
            tokens.append(_Token("number", source[start:index], line, column))
            column += index - start
            continue
        if ch.isalpha() or ch == "_":
            start = index
            while index < length and (source[index].isalnum() or source[index] == "_"):
                index += 1
            tokens.append(_Token("ident", source[start:index], line, column))
            column += index - start
            continue
        matched = None
        for symbol in _SYMBOLS:
            if source.startswith(symbol, index):
                matched = symbol
                break
        if matched is None:
            raise MapSyntaxError(f"unexpected character {ch!r}", line, column)
        tokens.append(_Token("symbol", matched, line, column))
        index += len(matched)
        column += len(matched)
    tokens.append(_Token("end", "", line, column))
    return tokens


class _Parser:
    """Recursive-descent expression parser over a binding environment."""

    def __init__(self, tokens: list[_Token], env: dict[str, Expr], is_complex: bool):
        self.tokens = tokens
        self.pos = 0
        self.env = env
        self.is_complex = is_complex

    # -- token plumbing ------------------------------------------------------

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def error(self, message: str, token: _Token = None):
        token = token or self.peek()
        raise MapSyntaxError(message, token.line, token.column)

    def expect(self, kind: str, text: str = None) -> _Token:
        token = self.peek()
        if token.kind != kind or (text is not None and token.text != text):
            expected = text or kind
            raise self.error(f"expected {expected!r}, found {token.text or 'end of input'!r}")
        return self.advance()

    def at_symbol(self, text: str) -> bool:
        token = self.peek()
        return token.kind == "symbol" and token.text == text

    # -- grammar ------------------------------------------------------------

    def parse_expr(self) -> Expr:
        node = self.parse_term()
        while self.at_symbol("+") or self.at_symbol("-"):
            op = self.advance().text
            right = self.parse_term()
            node = add(node, right) if op == "+" else sub(node, right)
        return node

    def parse_term(self) -> Expr:
        node = self.parse_factor()
        while self.at_symbol("*") or self.at_symbol("/"):
            op = self.advance().text
            right = self.parse_factor()
            node = mul(node, right) if op == "*" else div(node, right)
        return node

    def parse_factor(self) -> Expr:
        if self.at_symbol("-"):
            self.advance()
            return neg(self.parse_factor())
        if self.at_symbol("+"):
            self.advance()
            return self.parse_factor()
        return self.parse_power()

    def parse_power(self) -> Expr:
        base = self.parse_atom()
        if self.at_symbol("^"):
            self.advance()
            token = self.expect("number")
            return power(base, int(token.text))
        return base

    def parse_atom(self) -> Expr:
        token = self.peek()
        if token.kind == "number":
            self.advance()
            return Const(int(token.text))
        if self.at_symbol("("):
            self.advance()
            node = self.parse_expr()
            self.expect("symbol", ")")
            return node
        if token.kind == "ident":
            self.advance()
            name = token.text
            if self.at_symbol("("):
                self.advance()
                arg = self.parse_expr()
                self.expect("symbol", ")")
                return self.apply_function(name, arg, token)
            return self.lookup(name, token)
        raise self.error(f"expected an expression, found {token.text or 'end of input'!r}")

    def apply_function(self, name: str, arg: Expr, token: _Token) -> Expr:
        if name == "sqrt":
            return Sqrt(arg)
        if name in ("conj", "re", "im"):
            if not self.is_complex:
                raise self.error(f"{name!r} is complex syntax in a declared-real map",
                                 token)
            return {"conj": Conj, "re": Re, "im": Im}[name](arg)
        raise self.error(f"unknown function {name!r}", token)

    def lookup(self, name: str, token: _Token) -> Expr:
        if name in self.env:
            return self.env[name]
        if name == "i":
            if not self.is_complex:
                raise self.error("'i' is complex syntax in a declared-real map", token)
            return Const(GaussianRational(0, 1))
        head = "zb" if name.startswith("zb") else name[0]
        tail = name[len(head):]
        if head in ("x", "z", "zb") and tail.isdigit():
            if head in ("z", "zb") and not self.is_complex:
                raise self.error(f"variable {name!r} is complex syntax in a "
                                 "declared-real map", token)
            if head == "x" and self.is_complex:
                raise self.error(f"variable {name!r} is real syntax in a "
                                 "declared-complex map (use z variables)", token)
            raise self.error(f"variable {name!r} exceeds the declared arity", token)
        raise self.error(f"unknown identifier {name!r}", token)


def _seed_variables(env: dict[str, Expr], domain_dim: int, is_complex: bool):
    if is_complex:
        for j in range(domain_dim):
            env[f"z{j + 1}"] = Var(j)
            env[f"zb{j + 1}"] = Var(domain_dim + j)
    else:
        for j in range(domain_dim):
            env[f"x{j + 1}"] = Var(j)


def _parse_space(parser: _Parser) -> tuple[str, int]:
    token = parser.expect("ident")
    if token.text not in ("R", "C"):
        raise parser.error("expected a space like R^4 or C^2", token)
    parser.expect("symbol", "^")
    dim = int(parser.expect("number").text)
    if dim <= 0:
        raise parser.error("dimension must be positive", token)
    return token.text, dim


def parse_map(source: str):
    """Parse a map definition; returns RealPolyMap, ComplexPolyMap or SmoothMap."""
    tokens = _tokenize(source)
    parser = _Parser(tokens, {}, is_complex=False)
    parser.expect("ident", "map")
    name_token = parser.expect("ident")
    map_name = name_token.text
    if map_name in ("guard", "sqrt", "conj", "re", "im", "i"):
        raise parser.error(f"{map_name!r} is reserved and cannot name a map",
                           name_token)
    parser.expect("symbol", ":")
    domain_kind, domain_dim = _parse_space(parser)
    parser.expect("symbol", "->")
    codomain_kind, codomain_dim = _parse_space(parser)
    if domain_kind != codomain_kind:
        raise parser.error("domain and codomain must both be real or both complex",
                           name_token)
    is_complex = domain_kind == "C"
    parser.is_complex = is_complex
    _seed_variables(parser.env, domain_dim, is_complex)

    variable_names = frozenset(parser.env)
    component_names = [f"{map_name}{k + 1}" for k in range(codomain_dim)]
    components: dict[str, Expr] = {}
    guards: list[Expr] = []
    parser.expect("symbol", "{")
    while not parser.at_symbol("}"):
        token = parser.peek()
        if token.kind == "ident" and token.text == "guard":
            parser.advance()
            guards.append(parser.parse_expr())
            parser.expect("symbol", ";")
            continue
        binding_token = parser.expect("ident")
        binding = binding_token.text
        parser.expect("symbol", "=")
        value = parser.parse_expr()
        parser.expect("symbol", ";")
        if binding in variable_names:
            raise parser.error(f"{binding!r} shadows a variable", binding_token)
        if binding in components or binding in parser.env:
            raise parser.error(f"{binding!r} is defined twice", binding_token)
        if binding in component_names:
            components[binding] = value
        else:
            parser.env[binding] = value
    parser.expect("symbol", "}")
    parser.expect("end")

    missing = [c for c in component_names if c not in components]
    if missing:
        raise MapSyntaxError(f"missing component definitions: {', '.join(missing)}",
                             name_token.line, name_token.column)
    ordered = [components[c] for c in component_names]

    num_vars = 2 * domain_dim if is_complex else domain_dim
    num_complex = domain_dim if is_complex else 0
    all_poly = not guards and all(is_polynomial(c, allow_conj=is_complex)
                                  for c in ordered)
    if is_complex:
        if not all_poly:
            raise MapSyntaxError(
                "non-polynomial complex maps are not supported; only real "
                "maps may use sqrt, division or guards",
                name_token.line, name_token.column)
        polys = [lower_to_poly(c, num_vars, num_complex) for c in ordered]
        return ComplexPolyMap(domain_dim, codomain_dim, tuple(polys))
    if all_poly:
        polys = [lower_to_poly(c, num_vars) for c in ordered]
        return RealPolyMap(domain_dim, codomain_dim, tuple(polys))
    return SmoothMap(domain_dim, tuple(ordered), tuple(guards))


# ---------------------------------------------------------------------------
# Polynomial expressions and Gaussian-rational literals
# ---------------------------------------------------------------------------

def parse_poly(source: str, num_vars: int, num_complex: int = 0,
               names=None) -> MultiPoly:
    """Parse one polynomial in canonical variables (round-trips ``render``)."""
    env: dict[str, Expr] = {}
    if names is None:
        names = default_names(num_vars, num_complex)
    for index, name in enumerate(names):
        env[name] = Var(index)
    parser = _Parser(_tokenize(source), env, is_complex=num_complex > 0)
    node = parser.parse_expr()
    parser.expect("end")
    return lower_to_poly(node, num_vars, num_complex)


def parse_gaussian(source: str) -> Scalar:
    """Parse an exact Gaussian-rational literal such as ``1-1*i`` or ``3/2``."""
    from .expr import NotPolynomial

    parser = _Parser(_tokenize(source), {}, is_complex=True)
    node = parser.parse_expr()
    parser.expect("end")
    try:
        constant = lower_to_poly(node, 0, 0)
    except NotPolynomial as error:
        raise MapSyntaxError(f"not an exact literal: {error}", 1, 1) from error
    if constant.is_zero:
        return 0
    return constant.terms[()]


def parse_points(source: str, expected_length: int) -> list[tuple]:
    """Parse a points file: one complex point per line, comma-separated."""
    points = []
    for line_number, raw in enumerate(source.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        cells = [cell.strip() for cell in line.split(",")]
        if len(cells) != expected_length:
            raise MapSyntaxError(
                f"point has {len(cells)} coordinates, expected {expected_length}",
                line_number, 1)
        try:
            points.append(tuple(parse_gaussian(cell) for cell in cells))
        except MapSyntaxError as error:
            raise MapSyntaxError(f"bad coordinate: {error}", line_number, 1) from error
    return points


def render_map_source(the_map, name: str = "f") -> str:
    """Render a parsed map back to the text format (a parse fixed point).

    Always uses the grammar's canonical variable names, regardless of any
    display names the map carries.
    """
    from .expr import render_expr
    from .poly import render

    if isinstance(the_map, SmoothMap):
        names = default_names(the_map.domain_dim)
        kind, domain_dim = "R", the_map.domain_dim
        bodies = [render_expr(c, names) for c in the_map.components]
        guards = [render_expr(g, names) for g in the_map.guards]
    elif isinstance(the_map, ComplexPolyMap):
        names = default_names(2 * the_map.domain_dim, the_map.domain_dim)
        kind, domain_dim = "C", the_map.domain_dim
        bodies = [render(c, names) for c in the_map.components]
        guards = []
    elif isinstance(the_map, RealPolyMap):
        names = default_names(the_map.domain_dim)
        kind, domain_dim = "R", the_map.domain_dim
        bodies = [render(c, names) for c in the_map.components]
        guards = []
    else:
        raise TypeError(f"cannot render {the_map!r} as a map source")
    header = f"map {name}: {kind}^{domain_dim} -> {kind}^{len(bodies)} {{"
    body = [f"    {name}{k + 1} = {text};" for k, text in enumerate(bodies)]
    body.extend(f"    guard {text};" for text in guards)
    return "\n".join([header, *body, "}"])
