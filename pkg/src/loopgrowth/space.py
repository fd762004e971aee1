"""Compositional space presentations: spheres, wedge, product, smash, suspension.

The expression language is

    expr  := wedge
    wedge := prod { "v" prod }
    prod  := smash { "x" smash }
    smash := atom { "^" atom }
    atom  := "S" integer | "Susp" "(" expr ")" | "(" expr ")"

with sphere dimension >= 2, precedence ^ over x over v, all operators left
associative, whitespace ignored. Every expressible space is simply connected
with finite-dimensional total homology, so homology generating functions are
polynomials and connectivity/dimension bounds are computed structurally.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .polynomial import IntPolynomial, ONE
from .series import RationalGF


class ParseError(ValueError):
    """Syntax error with the offending offset and the expected token kinds."""

    def __init__(self, message: str, offset: int, expected: tuple = ()):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset
        self.expected = expected


# -- AST --------------------------------------------------------------------


class SpaceExpr:
    """Base class; concrete nodes below are frozen and compare structurally."""

    __slots__ = ()


@dataclass(frozen=True)
class Sphere(SpaceExpr):
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("spheres must be simply connected (n >= 2)")


@dataclass(frozen=True)
class Wedge(SpaceExpr):
    left: SpaceExpr
    right: SpaceExpr


@dataclass(frozen=True)
class Product(SpaceExpr):
    left: SpaceExpr
    right: SpaceExpr


@dataclass(frozen=True)
class Smash(SpaceExpr):
    left: SpaceExpr
    right: SpaceExpr


@dataclass(frozen=True)
class Susp(SpaceExpr):
    inner: SpaceExpr


# -- parsing ------------------------------------------------------------------

_TOKEN_RE = re.compile(r"Susp|S(\d+)|[vx^()]")
_ATOM_EXPECTED = ("S<int>", "Susp", "(")


def _tokenize(text: str):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        lexeme = m.group(0)
        if m.group(1) is not None:
            tokens.append(("SPHERE", int(m.group(1)), pos))
        elif lexeme == "Susp":
            tokens.append(("SUSP", None, pos))
        else:
            tokens.append((lexeme, None, pos))
        pos = m.end()
    tokens.append(("END", None, n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, expected):
        kind, _, offset = self.peek()
        what = "end of input" if kind == "END" else f"{self.text[offset]!r}"
        raise ParseError(
            f"unexpected {what}; expected one of {', '.join(expected)}",
            offset,
            tuple(expected),
        )

    def expect(self, kind, expected):
        if self.peek()[0] != kind:
            self.fail(expected)
        return self.advance()

    def parse_expr(self) -> SpaceExpr:
        node = self.parse_prod()
        while self.peek()[0] == "v":
            self.advance()
            node = Wedge(node, self.parse_prod())
        return node

    def parse_prod(self) -> SpaceExpr:
        node = self.parse_smash()
        while self.peek()[0] == "x":
            self.advance()
            node = Product(node, self.parse_smash())
        return node

    def parse_smash(self) -> SpaceExpr:
        node = self.parse_atom()
        while self.peek()[0] == "^":
            self.advance()
            node = Smash(node, self.parse_atom())
        return node

    def parse_atom(self) -> SpaceExpr:
        kind, value, offset = self.peek()
        if kind == "SPHERE":
            self.advance()
            if value < 2:
                raise ParseError("spheres must be simply connected (n >= 2)", offset)
            return Sphere(value)
        if kind == "SUSP":
            self.advance()
            self.expect("(", ("(",))
            inner = self.parse_expr()
            self.expect(")", (")",))
            return Susp(inner)
        if kind == "(":
            self.advance()
            inner = self.parse_expr()
            self.expect(")", (")",))
            return inner
        self.fail(_ATOM_EXPECTED)


def parse(text: str) -> SpaceExpr:
    """Parse an expression; raises ParseError with offset and expected tokens.

    >>> parse("S2 v S3 x S4")
    Wedge(left=Sphere(n=2), right=Product(left=Sphere(n=3), right=Sphere(n=4)))
    """
    p = _Parser(text)
    node = p.parse_expr()
    if p.peek()[0] != "END":
        p.fail(("v", "x", "^", "end of input"))
    return node


# -- canonical printing -------------------------------------------------------

_PREC = {Wedge: 1, Product: 2, Smash: 3}
_OP = {Wedge: "v", Product: "x", Smash: "^"}


def to_text(expr: SpaceExpr) -> str:
    """Canonical form with minimal parentheses; parse(to_text(e)) == e.

    >>> to_text(parse("(S2 v S3) x S4"))
    '(S2 v S3) x S4'
    >>> to_text(parse("S2 v (S3 x S4)"))
    'S2 v S3 x S4'
    """
    return _render(expr, 0, False)


def _render(expr, parent_prec, is_right_child):
    if isinstance(expr, Sphere):
        return f"S{expr.n}"
    if isinstance(expr, Susp):
        return f"Susp({_render(expr.inner, 0, False)})"
    prec = _PREC[type(expr)]
    text = (
        f"{_render(expr.left, prec, False)} {_OP[type(expr)]} "
        f"{_render(expr.right, prec, True)}"
    )
    if prec < parent_prec or (prec == parent_prec and is_right_child):
        return f"({text})"
    return text


# -- homology -----------------------------------------------------------------


def homology_gf(x: SpaceExpr) -> RationalGF:
    """Hilbert series of the rational homology (a polynomial with constant 1).

    >>> homology_gf(parse("S2 ^ S3")).num.coeffs
    (1, 0, 0, 0, 0, 1)
    """
    return RationalGF(IntPolynomial(_homology_poly(x)), ONE)


def reduced_gf(x: SpaceExpr) -> RationalGF:
    """Reduced homology series: homology_gf minus 1."""
    return homology_gf(x) - RationalGF.constant(1)


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, c in enumerate(a):
        if c:
            for j, d in enumerate(b):
                out[i + j] += c * d
    return out


def _poly_add(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]


def _reduced(coeffs):
    out = list(coeffs)
    out[0] -= 1
    return out


def _homology_poly(x: SpaceExpr):
    if isinstance(x, Sphere):
        return [1] + [0] * (x.n - 1) + [1]
    if isinstance(x, Wedge):
        left = _reduced(_homology_poly(x.left))
        right = _reduced(_homology_poly(x.right))
        out = _poly_add(left, right)
        out[0] += 1
        return out
    if isinstance(x, Product):
        return _poly_mul(_homology_poly(x.left), _homology_poly(x.right))
    if isinstance(x, Smash):
        out = _poly_mul(
            _reduced(_homology_poly(x.left)), _reduced(_homology_poly(x.right))
        )
        out[0] += 1
        return out
    if isinstance(x, Susp):
        out = [0] + _reduced(_homology_poly(x.inner))
        out[0] = 1
        return out
    raise TypeError(f"not a space expression: {x!r}")


# -- connectivity / dimension profile ------------------------------------------


@dataclass(frozen=True)
class Profile:
    """Connectivity s (s-connected), top nonzero degree d, nontriviality flag."""

    connectivity: int
    dimension: int
    rationally_nontrivial: bool


def profile(x: SpaceExpr) -> Profile:
    """Structural connectivity and dimension bounds; 1 <= s < d always holds.

    >>> profile(parse("Susp(S2 ^ S2)"))
    Profile(connectivity=4, dimension=5, rationally_nontrivial=True)
    """
    s, d = _profile_bounds(x)
    red = _reduced(_homology_poly(x))
    return Profile(s, d, any(c != 0 for c in red))


def _profile_bounds(x: SpaceExpr):
    if isinstance(x, Sphere):
        return x.n - 1, x.n
    if isinstance(x, (Wedge, Product)):
        sl, dl = _profile_bounds(x.left)
        sr, dr = _profile_bounds(x.right)
        if isinstance(x, Wedge):
            return min(sl, sr), max(dl, dr)
        return min(sl, sr), dl + dr
    if isinstance(x, Smash):
        sl, dl = _profile_bounds(x.left)
        sr, dr = _profile_bounds(x.right)
        return sl + sr + 1, dl + dr
    if isinstance(x, Susp):
        s, d = _profile_bounds(x.inner)
        return s + 1, d + 1
    raise TypeError(f"not a space expression: {x!r}")


# -- wedge decomposition --------------------------------------------------------


@dataclass(frozen=True)
class SphereList:
    """Multiset of sphere dimensions, sorted; the decomposition certificate."""

    spheres: tuple  # ((dimension, multiplicity), ...) sorted by dimension

    def series(self) -> RationalGF:
        """Homology series of the corresponding sphere wedge."""
        coeffs = [1]
        for dim, mult in self.spheres:
            while len(coeffs) <= dim:
                coeffs.append(0)
            coeffs[dim] += mult
        return RationalGF.from_coeffs(coeffs)

    def least_dimension(self) -> int:
        return self.spheres[0][0]


def is_rational_sphere_wedge(x: SpaceExpr) -> bool:
    """True when x splits rationally as a wedge of spheres.

    Spheres and suspensions qualify; wedges of qualifying pieces qualify; a
    smash qualifies when either factor does (a smash with a suspension is a
    suspension); products never do on their own.
    """
    if isinstance(x, (Sphere, Susp)):
        return True
    if isinstance(x, Wedge):
        return is_rational_sphere_wedge(x.left) and is_rational_sphere_wedge(x.right)
    if isinstance(x, Smash):
        return is_rational_sphere_wedge(x.left) or is_rational_sphere_wedge(x.right)
    return False


def wedge_decomposition(x: SpaceExpr) -> SphereList:
    """Sphere multiset read off the reduced homology of a rational sphere wedge.

    >>> wedge_decomposition(parse("Susp(S2 ^ (S2 v S3))")).spheres
    ((5, 1), (6, 1))
    """
    if not is_rational_sphere_wedge(x):
        raise ValueError("not rationally a wedge of spheres: product detected")
    red = _reduced(_homology_poly(x))
    spheres = tuple((dim, mult) for dim, mult in enumerate(red) if mult)
    return SphereList(spheres)
