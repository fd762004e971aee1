"""Exact rational generating functions and certified growth data.

A RationalGF is a fraction num/den of integer polynomials, normalized so the
polynomial gcd is removed, the integer contents of numerator and denominator
are coprime, and the denominator has positive constant term. With that form,
two generating functions are equal iff their fields are equal.

Radii of convergence are certified, not sampled: the smallest positive root of
the reduced denominator is isolated by Sturm counts and rational bisection, so
every Radius comes with an exact rational interval that provably contains
exactly one denominator root. Strict comparisons between radii refine both
intervals until they are disjoint, or certify equality through a common factor
of the two denominators.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd as int_gcd

from .polynomial import (
    IntPolynomial,
    ONE,
    ZERO,
    cauchy_root_bound,
    count_roots_halfopen,
    poly_divexact,
    poly_gcd,
    squarefree_part,
    sturm_chain,
)

DEFAULT_POLE_TOLERANCE = Fraction(1, 10**12)


def _normalize(num: IntPolynomial, den: IntPolynomial):
    if den.is_zero():
        raise ZeroDivisionError("denominator is the zero polynomial")
    if den.constant_term() == 0:
        raise ValueError("denominator constant term is zero; no power series at z = 0")
    if num.is_zero():
        return ZERO, ONE
    g = poly_gcd(num, den)
    if g.degree() > 0:
        num = poly_divexact(num, g)
        den = poly_divexact(den, g)
    c = int_gcd(num.content(), den.content())
    if c > 1:
        num = IntPolynomial(tuple(x // c for x in num.coeffs))
        den = IntPolynomial(tuple(x // c for x in den.coeffs))
    if den.constant_term() < 0:
        num, den = -num, -den
    return num, den


@dataclass(frozen=True)
class RationalGF:
    """num(z)/den(z) in canonical reduced form.

    >>> RationalGF.from_coeffs([1], [1, -2]).expand(4).coeffs
    (Fraction(1, 1), Fraction(2, 1), Fraction(4, 1), Fraction(8, 1), Fraction(16, 1))
    """

    num: IntPolynomial
    den: IntPolynomial

    def __post_init__(self):
        num, den = _normalize(self.num, self.den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def from_coeffs(cls, num, den=(1,)) -> "RationalGF":
        return cls(IntPolynomial(tuple(num)), IntPolynomial(tuple(den)))

    @classmethod
    def constant(cls, k: int) -> "RationalGF":
        return cls(IntPolynomial((k,)), ONE)

    @classmethod
    def monomial(cls, k: int, coeff: int = 1) -> "RationalGF":
        return cls(IntPolynomial((0,) * k + (coeff,)), ONE)

    def __add__(self, other: "RationalGF") -> "RationalGF":
        return RationalGF(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: "RationalGF") -> "RationalGF":
        return RationalGF(self.num * other.den - other.num * self.den, self.den * other.den)

    def __neg__(self) -> "RationalGF":
        return RationalGF(-self.num, self.den)

    def __mul__(self, other: "RationalGF") -> "RationalGF":
        return RationalGF(self.num * other.num, self.den * other.den)

    def reciprocal(self) -> "RationalGF":
        if self.num.is_zero() or self.num.constant_term() == 0:
            raise ValueError("not invertible as a power series")
        return RationalGF(self.den, self.num)

    def shifted(self, k: int) -> "RationalGF":
        return RationalGF(self.num.shift(k), self.den)

    def is_polynomial(self) -> bool:
        return self.den.degree() == 0

    def constant_coefficient(self) -> Fraction:
        return Fraction(self.num.constant_term(), self.den.constant_term())

    def eval_at(self, x: Fraction) -> Fraction:
        d = self.den.eval_at(x)
        if d == 0:
            raise ZeroDivisionError("evaluation at a pole")
        return self.num.eval_at(x) / d

    def expand(self, trunc_degree: int) -> "TruncatedSeries":
        return expand(self, trunc_degree)


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients c_0 .. c_N of a power series, exact rationals."""

    coeffs: tuple
    trunc_degree: int

    def __post_init__(self):
        if len(self.coeffs) != self.trunc_degree + 1:
            raise ValueError("coefficient count does not match truncation degree")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i]

    def __len__(self) -> int:
        return len(self.coeffs)

    def as_dims(self) -> tuple:
        """Coefficients as nonnegative integers; raises if any is not one."""
        out = []
        for i, c in enumerate(self.coeffs):
            if c.denominator != 1 or c < 0:
                raise ValueError(f"coefficient at degree {i} is not a nonnegative integer: {c}")
            out.append(int(c))
        return tuple(out)

    @classmethod
    def from_dims(cls, dims) -> "TruncatedSeries":
        dims = tuple(dims)
        for i, c in enumerate(dims):
            if not isinstance(c, int) or c < 0:
                raise ValueError(f"dimension at degree {i} must be a nonnegative integer")
        return cls(dims, len(dims) - 1)


def gf_add(a: RationalGF, b: RationalGF) -> RationalGF:
    return a + b


def gf_mul(a: RationalGF, b: RationalGF) -> RationalGF:
    return a * b


def gf_reciprocal(a: RationalGF) -> RationalGF:
    return a.reciprocal()


def gf_shift(a: RationalGF, k: int) -> RationalGF:
    return a.shifted(k)


def expand(gf: RationalGF, trunc_degree: int) -> TruncatedSeries:
    """Power series coefficients through z^trunc_degree, by linear recurrence."""
    if trunc_degree < 0:
        raise ValueError("truncation degree must be nonnegative")
    den = gf.den.coeffs
    num = gf.num
    d0 = Fraction(den[0])
    out = []
    for k in range(trunc_degree + 1):
        acc = Fraction(num[k])
        for j in range(1, min(k, len(den) - 1) + 1):
            acc -= den[j] * out[k - j]
        out.append(acc / d0)
    return TruncatedSeries(tuple(out), trunc_degree)


# -- radius of convergence -------------------------------------------------


@dataclass(frozen=True)
class Radius:
    """Smallest positive pole, certified.

    Finite: lo <= hi are positive rationals, the reduced denominator has
    exactly one root in [lo, hi] and none in (0, lo). A degenerate interval
    (lo == hi) pins a rational pole exactly. Infinite: no positive pole;
    `polynomial` records whether the series is a polynomial (so dimensions
    are eventually zero).

    The smallest positive pole equals the radius of convergence only for
    series with nonnegative coefficients; `pringsheim_ok` goes false when a
    negative coefficient was spotted in a desk-scale expansion of the source.
    """

    lo: Fraction | None
    hi: Fraction | None
    polynomial: bool = False
    _sqfree: IntPolynomial | None = field(default=None, repr=False, compare=False)
    _chain: tuple = field(default=(), repr=False, compare=False)
    pringsheim_ok: bool = field(default=True, compare=False)

    @property
    def is_infinite(self) -> bool:
        return self.lo is None

    @property
    def is_exact(self) -> bool:
        return self.lo is not None and self.lo == self.hi

    def width(self) -> Fraction:
        if self.is_infinite:
            return Fraction(0)
        return self.hi - self.lo

    def midpoint(self) -> Fraction:
        if self.is_infinite:
            raise ValueError("infinite radius has no midpoint")
        return (self.lo + self.hi) / 2

    def refined(self, tol: Fraction) -> "Radius":
        """Shrink the isolating interval to width <= tol (no-op when exact)."""
        if self.is_infinite or self.is_exact or self.width() <= tol:
            return self
        lo, hi = _bisect(self._sqfree, self._chain or None, self.lo, self.hi, tol)
        return Radius(lo, hi, self.polynomial, self._sqfree, self._chain, self.pringsheim_ok)

    def certificate_holds(self) -> bool:
        """Recheck the defining properties from scratch (used by tests)."""
        if self.is_infinite:
            return True
        f = self._sqfree
        if self.is_exact:
            # the pinned point is a root and is the first one past zero
            return (
                self.lo > 0
                and f.eval_at(self.lo) == 0
                and count_roots_halfopen(f, Fraction(0), self.lo) == 1
            )
        if not (0 < self.lo < self.hi):
            return False
        if f.eval_at(self.lo) == 0:
            return False
        one_inside = count_roots_halfopen(f, self.lo, self.hi) == 1
        none_before = count_roots_halfopen(f, Fraction(0), self.lo) == 0
        sign_change = f.eval_at(self.lo) * f.eval_at(self.hi) < 0
        return none_before and (one_inside or sign_change)


def _bisect(sf, chain, lo, hi, tol):
    """Shrink (lo, hi] around the smallest positive root of sf.

    Invariants: no root in (0, lo], at least one in (lo, hi]. Returns either a
    degenerate rational-root interval or one of width <= tol isolating a
    single root.
    """
    while True:
        narrow = hi - lo <= tol
        if narrow and count_roots_halfopen(sf, lo, hi, chain) == 1:
            return lo, hi
        mid = (lo + hi) / 2
        if sf.eval_at(mid) == 0:
            return mid, mid
        if count_roots_halfopen(sf, lo, mid, chain) == 0:
            lo = mid
        else:
            hi = mid


def _divisors(n: int):
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _smallest_positive_rational_root(sf: IntPolynomial) -> Fraction | None:
    """Rational-root-theorem scan; None when none exists or coefficients are huge."""
    sf = sf.primitive()
    a0, an = abs(sf.constant_term()), abs(sf.leading())
    if a0 > 10**7 or an > 10**7:
        return None
    best = None
    for p in _divisors(a0):
        for q in _divisors(an):
            cand = Fraction(p, q)
            if (best is None or cand < best) and sf.eval_at(cand) == 0:
                best = cand
    return best


def smallest_positive_pole(gf: RationalGF, tol: Fraction = DEFAULT_POLE_TOLERANCE) -> Radius:
    """Certified isolating interval for the smallest positive denominator root.

    The gf is already reduced, so every denominator root is a genuine pole.
    Rational poles are pinned exactly (degenerate interval); irrational ones
    get a bisection interval of width <= tol.

    >>> r = smallest_positive_pole(RationalGF.from_coeffs([1], [1, -2]))
    >>> (r.lo, r.hi)
    (Fraction(1, 2), Fraction(1, 2))
    """
    # Pringsheim guard: pole = radius only for nonnegative series
    ok = all(c >= 0 for c in gf.expand(64).coeffs)
    den = gf.den
    if den.degree() == 0:
        return Radius(None, None, polynomial=True, pringsheim_ok=ok)
    sf = squarefree_part(den)
    if sf.leading() < 0:
        sf = -sf
    bound = cauchy_root_bound(sf)
    chain = sturm_chain(sf)
    if count_roots_halfopen(sf, Fraction(0), bound, chain) == 0:
        return Radius(None, None, polynomial=False, pringsheim_ok=ok)
    rat = _smallest_positive_rational_root(sf)
    if rat is not None:
        if count_roots_halfopen(sf, Fraction(0), rat, chain) == 1:
            return Radius(rat, rat, False, sf, chain, ok)
        # a smaller irrational root exists; bisect below the rational one
        bound = rat
    lo, hi = _bisect(sf, chain, Fraction(0), bound, tol)
    return Radius(lo, hi, False, sf, chain, ok)


def compare_radii(a: Radius, b: Radius, tol: Fraction = DEFAULT_POLE_TOLERANCE):
    """Certified three-way comparison of two radii.

    Returns (cmp, a_refined, b_refined) with cmp in {-1, 0, 1}. Strict answers
    come from disjoint isolating intervals; equality is certified by a common
    root of the two reduced denominators trapped in the overlap.
    """
    if a.is_infinite and b.is_infinite:
        return 0, a, b
    if a.is_infinite:
        return 1, a, b
    if b.is_infinite:
        return -1, a, b
    common = None
    if a._sqfree is not None and b._sqfree is not None:
        g = poly_gcd(a._sqfree, b._sqfree)
        common = g if g.degree() >= 1 else None
    cur = tol
    ra, rb = a.refined(tol), b.refined(tol)
    for _ in range(300):
        decided = _disjoint_verdict(ra, rb)
        if decided is not None:
            return decided, ra, rb
        # overlapping intervals: either the radii share a denominator root
        # (equality, certified below) or refinement will separate them
        if ra.is_exact and rb._sqfree is not None:
            if rb._sqfree.eval_at(ra.lo) == 0:
                return 0, ra, rb
        elif rb.is_exact and ra._sqfree is not None:
            if ra._sqfree.eval_at(rb.lo) == 0:
                return 0, ra, rb
        elif common is not None:
            lo = max(ra.lo, rb.lo)
            hi = min(ra.hi, rb.hi)
            if lo < hi and common.eval_at(lo) != 0:
                if count_roots_halfopen(common, lo, hi) >= 1:
                    return 0, ra, rb
        cur = cur / 2**8
        ra, rb = ra.refined(cur), rb.refined(cur)
    raise RuntimeError("radius comparison did not resolve; intervals would not separate")


def _disjoint_verdict(ra: Radius, rb: Radius):
    # non-exact intervals from bisection have their root strictly inside,
    # so touching endpoints still decide the order
    if ra.is_exact and rb.is_exact:
        return -1 if ra.lo < rb.lo else (1 if ra.lo > rb.lo else 0)
    if ra.hi <= rb.lo:
        return -1
    if rb.hi <= ra.lo:
        return 1
    return None


# -- log index -------------------------------------------------------------


@dataclass(frozen=True)
class LogIndex:
    """Exponential growth rate -ln(radius), with a propagated error bound."""

    value: float
    halfwidth: float = 0.0
    eventually_zero: bool = False


def log_index_exact(rho: Radius) -> LogIndex:
    """-ln(rho) on the interval midpoint; interval width gives the error bound.

    An infinite radius reports 0.0; `eventually_zero` marks the degenerate
    polynomial case (dimensions vanish from some degree on).
    """
    if rho.is_infinite:
        return LogIndex(0.0, 0.0, eventually_zero=rho.polynomial)
    value = -math.log(rho.midpoint())
    if value == 0.0:
        value = 0.0  # avoid the -0.0 artifact at radius 1
    if rho.is_exact:
        return LogIndex(value, 0.0)
    halfwidth = (math.log(rho.hi) - math.log(rho.lo)) / 2
    return LogIndex(value, halfwidth)


def _log_fraction(q: Fraction) -> float:
    return math.log(q.numerator) - math.log(q.denominator)


def log_index_empirical(s: TruncatedSeries, tail_start: int) -> float:
    """max over the tail of log(c_i)/i, skipping zero coefficients.

    >>> log_index_empirical(expand(RationalGF.from_coeffs([1], [1, -2]), 40), 10)
    0.6931471805599453
    """
    if not 0 <= tail_start <= s.trunc_degree:
        raise ValueError("tail start outside the truncation range")
    best = None
    for i in range(max(tail_start, 1), s.trunc_degree + 1):
        c = s[i]
        if c <= 0:
            if c < 0:
                raise ValueError("series has negative coefficients; growth undefined")
            continue
        v = _log_fraction(c) / i
        if best is None or v > best:
            best = v
    if best is None:
        raise ValueError("series has no tail growth to measure")
    return best


# -- controlled exponential growth ----------------------------------------


@dataclass(frozen=True)
class GrowthCheckResult:
    """Outcome of the finite controlled-growth certificate.

    `sequence` is the greedy maximal admissible degree sequence in [k_min, N],
    `alphas` the per-degree rates log(dim)/degree. The check passes when the
    sequence is nonempty, starts within ratio lambda of k_min, has every
    consecutive ratio below lambda, and lambda * n_last >= N, so truncation
    hides no gap.
    """

    passed: bool
    sequence: tuple
    alphas: tuple
    target: float
    lam: float
    epsilon: float
    k_min: int
    trunc_degree: int
    dims: tuple = field(repr=False, default=())

    def cumulative(self, k: int) -> Fraction:
        """r_k: sum of dimensions through degree k."""
        if not 0 <= k <= self.trunc_degree:
            raise ValueError("degree outside the truncation range")
        return sum(self.dims[: k + 1], Fraction(0))


def controlled_growth_check(
    s: TruncatedSeries,
    target: float,
    lam: float = 1.5,
    epsilon: float = 0.1,
    k_min: int = 10,
) -> GrowthCheckResult:
    """Finite certificate for controlled exponential growth at rate `target`.

    Admissible degrees n in [k_min, N] have dim > 0 and |log(dim)/n - target|
    <= epsilon. All admissible degrees are selected (greedy maximal sequence);
    the ratio and coverage conditions then decide the verdict.
    """
    if lam <= 1:
        raise ValueError("ratio bound must exceed 1")
    if epsilon < 0:
        raise ValueError("tolerance must be nonnegative")
    if not 1 <= k_min <= s.trunc_degree:
        raise ValueError("k_min outside the truncation range")
    seq = []
    alphas = []
    for n in range(k_min, s.trunc_degree + 1):
        c = s[n]
        if c < 0:
            raise ValueError("series has negative coefficients; growth undefined")
        if c == 0:
            continue
        alpha = _log_fraction(c) / n
        if abs(alpha - target) <= epsilon:
            seq.append(n)
            alphas.append(alpha)
    passed = bool(seq)
    if passed and seq[0] >= lam * k_min:
        passed = False
    if passed:
        for prev, nxt in zip(seq, seq[1:]):
            if nxt >= lam * prev:
                passed = False
                break
    if passed and lam * seq[-1] < s.trunc_degree:
        passed = False
    return GrowthCheckResult(
        passed=passed,
        sequence=tuple(seq),
        alphas=tuple(alphas),
        target=target,
        lam=lam,
        epsilon=epsilon,
        k_min=k_min,
        trunc_degree=s.trunc_degree,
        dims=s.coeffs,
    )
