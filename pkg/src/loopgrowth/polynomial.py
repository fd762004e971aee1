"""Dense integer polynomials with exact root counting.

Coefficients are arbitrary-precision ints stored low degree first. Everything
here is exact: evaluation at Fraction points, gcd over the rationals (returned
as a primitive integer polynomial), Sturm sequences, and root counting on
half-open intervals (a, b]. No floating point enters any certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as int_gcd


def _strip(coeffs):
    n = len(coeffs)
    while n > 0 and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


@dataclass(frozen=True)
class IntPolynomial:
    """An integer polynomial; coeffs[i] is the coefficient of z^i.

    Trailing zeros are stripped on construction, so degree() is the index of
    the last nonzero coefficient (-1 for the zero polynomial).

    >>> p = IntPolynomial((1, 0, -2))
    >>> p.degree(), p.eval_at(Fraction(1, 2))
    (2, Fraction(1, 2))
    """

    coeffs: tuple

    def __post_init__(self):
        stripped = _strip(tuple(int(c) for c in self.coeffs))
        object.__setattr__(self, "coeffs", stripped)

    # -- basic queries ----------------------------------------------------

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def constant_term(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def eval_at(self, x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(tuple(self[i] + other[i] for i in range(n)))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(tuple(self[i] - other[i] for i in range(n)))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero() or other.is_zero():
            return ZERO
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def scale(self, k: int) -> "IntPolynomial":
        return IntPolynomial(tuple(k * c for c in self.coeffs))

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by z^k."""
        if k < 0:
            raise ValueError("shift exponent must be nonnegative")
        if self.is_zero():
            return ZERO
        return IntPolynomial((0,) * k + self.coeffs)

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(tuple(i * c for i, c in enumerate(self.coeffs))[1:])

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = int_gcd(g, abs(c))
        return g

    def primitive(self) -> "IntPolynomial":
        """Divide out the content; the sign of the leading coefficient is kept."""
        g = self.content()
        if g in (0, 1):
            return self
        return IntPolynomial(tuple(c // g for c in self.coeffs))

    def low_degree(self) -> int:
        """Index of the first nonzero coefficient (-1 for zero)."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return -1


ZERO = IntPolynomial(())
ONE = IntPolynomial((1,))


def poly_from_fractions(coeffs) -> IntPolynomial:
    """Clear denominators of a rational coefficient list; primitive result."""
    coeffs = [Fraction(c) for c in coeffs]
    lcm = 1
    for c in coeffs:
        lcm = lcm * c.denominator // int_gcd(lcm, c.denominator)
    return IntPolynomial(tuple(int(c * lcm) for c in coeffs)).primitive()


def _frac_divmod(num, den):
    """divmod of Fraction coefficient lists (low degree first)."""
    num = list(num)
    dd = len(den) - 1
    while den and den[-1] == 0:
        den = den[:-1]
        dd -= 1
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    lead = den[-1]
    q = [Fraction(0)] * max(len(num) - dd, 0)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i] / lead
        if c:
            q[i - dd] = c
            for j in range(dd + 1):
                num[i - dd + j] -= c * den[j]
    while num and num[-1] == 0:
        num.pop()
    return q, num


def poly_divexact(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Exact division a / b; raises if b does not divide a."""
    q, r = _frac_divmod([Fraction(c) for c in a.coeffs], [Fraction(c) for c in b.coeffs])
    if r:
        raise ValueError("polynomial division is not exact")
    for c in q:
        if c.denominator != 1:
            raise ValueError("polynomial division is not exact over the integers")
    return IntPolynomial(tuple(int(c) for c in q))


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Gcd over Q[z], returned primitive over Z with positive leading coefficient.

    >>> poly_gcd(IntPolynomial((-1, 0, 1)), IntPolynomial((1, 1))).coeffs
    (1, 1)
    """
    fa = [Fraction(c) for c in a.coeffs]
    fb = [Fraction(c) for c in b.coeffs]
    while fb:
        _, r = _frac_divmod(fa, fb)
        fa, fb = fb, r
    if not fa:
        return ZERO
    g = poly_from_fractions(fa)
    if g.leading() < 0:
        g = -g
    return g


def squarefree_part(f: IntPolynomial) -> IntPolynomial:
    """f / gcd(f, f'): same roots, all simple."""
    if f.degree() <= 0:
        return f
    g = poly_gcd(f, f.derivative())
    if g.degree() <= 0:
        return f
    return poly_divexact(f, g)


# -- Sturm sequences -------------------------------------------------------


def sturm_chain(f: IntPolynomial):
    """Sturm chain of a squarefree polynomial, as Fraction coefficient lists."""
    chain = [[Fraction(c) for c in f.coeffs]]
    if f.degree() >= 1:
        chain.append([Fraction(c) for c in f.derivative().coeffs])
        while True:
            _, r = _frac_divmod(chain[-2], chain[-1])
            if not r:
                break
            chain.append([-c for c in r])
    return chain


def _eval_list(coeffs, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def sign_variations(chain, x: Fraction) -> int:
    signs = []
    for coeffs in chain:
        v = _eval_list(coeffs, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def count_roots_halfopen(f: IntPolynomial, a: Fraction, b: Fraction, chain=None) -> int:
    """Number of distinct real roots of f in (a, b].

    Requires a < b and f(a) != 0. f need not be squarefree; counting happens
    on its squarefree part. With the zeros-skipped variation count, a root at
    the right endpoint is included, which is what interval bisection needs.
    A precomputed `chain` must be the Sturm chain of the squarefree part of f.
    """
    if a >= b:
        raise ValueError("need a < b")
    if chain is None:
        f = squarefree_part(f)
        if f.degree() <= 0:
            return 0
        chain = sturm_chain(f)
    elif f.degree() <= 0:
        return 0
    if f.eval_at(a) == 0:
        raise ValueError("left endpoint must not be a root")
    return sign_variations(chain, a) - sign_variations(chain, b)


def cauchy_root_bound(f: IntPolynomial) -> Fraction:
    """B with every complex root strictly inside |z| < B."""
    if f.degree() < 1:
        raise ValueError("bound needs degree >= 1")
    lead = abs(f.leading())
    biggest = max(abs(c) for c in f.coeffs[:-1])
    return 1 + Fraction(biggest, lead)


def positive_real_roots(f: IntPolynomial) -> int:
    """Count of distinct positive real roots (exact)."""
    sf = squarefree_part(f)
    if sf.degree() <= 0:
        return 0
    if sf.constant_term() == 0:
        raise ValueError("root at zero; divide out the z power first")
    bound = cauchy_root_bound(sf)
    return count_roots_halfopen(sf, Fraction(0), bound)
