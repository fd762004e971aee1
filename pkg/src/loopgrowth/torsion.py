"""Prime exclusion sets, p-local splitting tests, Hilton-Milnor censuses.

A suspension with cells between connectivity s and dimension d splits
p-locally into a wedge of spheres once p > (d - s + 1)/2; the finitely many
primes at or below that bound form the exclusion set. Loops on a wedge of two
spheres split (integrally) as a product of loop spaces of spheres, one factor
per basic product, and basic products are counted by Lyndon words over a
two-letter alphabet weighted by the generator degrees m-1 and n-1. The census
here counts those sphere factors with the classical (ungraded) Witt numbers:
it is a statement about actual sphere factors, not about rational homotopy
ranks, so no Koszul-sign regrading applies. The graded rank table lives in
`loop.pi_ranks` and the two agree exactly when every generator degree is
even.

Torsion consequences are reported in two registers. The census growth rate is
rigorous. Per-degree torsion counts are not: how many summands each sphere
factor contributes is not determined by this data, so t_lower is emitted
under an explicitly named counting model and must not be read as a theorem.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, gcd

from .freeloop import _divisors, _mobius
from .series import TruncatedSeries, log_index_empirical
from .space import SpaceExpr, Susp, profile, reduced_gf, wedge_decomposition

WORD_LENGTH_GUARD = 20


def _require_prime(p: int) -> None:
    if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
        raise ValueError(f"{p} is not prime")


@dataclass(frozen=True)
class PrimeSet:
    """Finite sorted set of primes, the exclusion set of a (d, s) profile."""

    primes: tuple

    def __post_init__(self):
        object.__setattr__(self, "primes", tuple(sorted(set(self.primes))))
        for p in self.primes:
            _require_prime(p)

    def __contains__(self, p: int) -> bool:
        return p in self.primes

    def __or__(self, other: "PrimeSet") -> "PrimeSet":
        return PrimeSet(self.primes + other.primes)


def primes_set(d: int, s: int) -> PrimeSet:
    """Primes q with 2q <= d - s + 1, for a space of dimension d, connectivity s.

    >>> primes_set(7, 1).primes
    (2, 3)
    >>> primes_set(3, 2).primes
    ()
    >>> primes_set(12, 1).primes
    (2, 3, 5)
    """
    if s < 1 or d <= s:
        raise ValueError("dimension must exceed connectivity")
    bound = d - s + 1
    return PrimeSet(tuple(q for q in range(2, bound // 2 + 1) if 2 * q <= bound and _is_prime(q)))


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % q for q in range(2, int(n**0.5) + 1))


def primes_set_of(x: SpaceExpr) -> PrimeSet:
    """Exclusion set from the structural (connectivity, dimension) profile."""
    pr = profile(x)
    return primes_set(pr.dimension, pr.connectivity)


def suspension_splits_locally(x: SpaceExpr, p: int) -> bool:
    """True when the suspension of x splits p-locally into a wedge of spheres.

    >>> from .space import parse
    >>> suspension_splits_locally(parse("S2 v S5"), 3)
    True
    >>> suspension_splits_locally(parse("S2 v S5"), 2)
    False
    """
    _require_prime(p)
    pr = profile(x)
    return 2 * p > pr.dimension - pr.connectivity + 1


def least_p_torsion_dim(n: int, p: int) -> int:
    """First homotopy degree where loops on S^n can carry p-torsion: n + 2p - 3.

    >>> least_p_torsion_dim(3, 5)
    10
    >>> least_p_torsion_dim(3, 2)
    4
    """
    if n < 2:
        raise ValueError("sphere dimension must be at least 2")
    _require_prime(p)
    return n + 2 * p - 3


# -- Lyndon words and the sphere-factor census --------------------------------


def lyndon_words(alphabet_size: int, max_len: int):
    """All Lyndon words (as index tuples) of length <= max_len, lexicographic.

    Duval's generation: extend periodically, bump the last letter, trim.
    """
    if alphabet_size < 1 or max_len < 1:
        return []
    out = []
    w = [0]
    while w:
        if len(w) <= max_len:
            out.append(tuple(w))
        # periodic extension to max_len, then strip trailing top letters
        w = (w * (max_len // len(w) + 1))[:max_len]
        while w and w[-1] == alphabet_size - 1:
            w.pop()
        if w:
            w[-1] += 1
    return out


def lyndon_basic_products(m: int, n: int, max_len: int):
    """Lyndon words over letters of weight m-1, n-1 with their weight degrees.

    Returns (word, degree) pairs; basic products of loops on S^m v S^n
    correspond one-to-one to these words, the word of weight t naming a
    sphere factor of dimension t + 1.

    >>> [(''.join('ab'[i] for i in w), d) for w, d in lyndon_basic_products(2, 2, 3)]
    [('a', 1), ('aab', 3), ('ab', 2), ('abb', 3), ('b', 1)]
    """
    if max_len > WORD_LENGTH_GUARD:
        raise ValueError(
            f"word length guard exceeded: max_len must be at most {WORD_LENGTH_GUARD}"
        )
    if m < 2 or n < 2:
        raise ValueError("sphere dimensions must be at least 2")
    weights = (m - 1, n - 1)
    return [
        (w, sum(weights[i] for i in w)) for w in lyndon_words(2, max_len)
    ]


def _witt_bivariate(i: int, j: int) -> int:
    """Number of Lyndon words with i copies of one letter and j of the other."""
    if i == 0 and j == 0:
        return 0
    total = 0
    for e in _divisors(gcd(i, j) if i and j else max(i, j)):
        total += _mobius(e) * comb((i + j) // e, i // e)
    return total // (i + j)


@dataclass(frozen=True)
class HiltonMilnorCensus:
    """Sphere-factor multiplicities of loops on S^m v S^n up to weight N.

    factors maps a sphere dimension D to the number of loop-space factors on
    S^D, which equals the number of Lyndon words of weight D-1 over letters
    weighted m-1 and n-1.
    """

    generators: tuple
    factors: dict = field(compare=False)
    trunc_degree: int = 0

    def factor_counts(self) -> TruncatedSeries:
        """Counts as a series in the weight degree t = D - 1."""
        dims = [0] * (self.trunc_degree + 1)
        for dim, count in self.factors.items():
            dims[dim - 1] = count
        return TruncatedSeries.from_dims(dims)

    def reconstruct(self) -> TruncatedSeries:
        """Product of 1/(1 - z^t) over all factors, t the weight degree.

        Unique factorization of words into nonincreasing Lyndon products
        makes this equal the word-counting series 1/(1 - z^{m-1} - z^{n-1}).
        """
        n = self.trunc_degree
        cur = [0] * (n + 1)
        cur[0] = 1
        for dim in sorted(self.factors):
            t = dim - 1
            for _ in range(self.factors[dim]):
                # multiply by 1/(1 - z^t): prefix-sum with stride t
                for k in range(t, n + 1):
                    cur[k] += cur[k - t]
        return TruncatedSeries.from_dims(cur)


def hilton_milnor_census(m: int, n: int, trunc_degree: int) -> HiltonMilnorCensus:
    """Count sphere factors of loops on S^m v S^n by dimension, weight <= N.

    >>> hilton_milnor_census(2, 2, 6).factors
    {2: 2, 3: 1, 4: 2, 5: 3, 6: 6, 7: 9}
    """
    if m < 2 or n < 2:
        raise ValueError("sphere dimensions must be at least 2")
    a, b = m - 1, n - 1
    factors = {}
    for i in range(trunc_degree // a + 1):
        for j in range(trunc_degree // b + 1):
            t = i * a + j * b
            if t == 0 or t > trunc_degree:
                continue
            c = _witt_bivariate(i, j)
            if c:
                factors[t + 1] = factors.get(t + 1, 0) + c
    return HiltonMilnorCensus(
        generators=(a, b), factors=dict(sorted(factors.items())), trunc_degree=trunc_degree
    )


# -- torsion and retraction reports --------------------------------------------


@dataclass(frozen=True)
class TorsionReport:
    """Exponent witness and modeled torsion lower bounds at a prime power.

    census_log_index is the rigorous growth statistic. t_lower counts one
    torsion class per loop-sphere factor S^{2k+1} with k >= r, placed at the
    first degree where that factor can carry p-torsion; that per-factor
    count is a modeling choice, named by model_id, not a theorem.
    """

    prime: int
    r: int
    census: HiltonMilnorCensus
    exponent_witness: int
    t_lower: dict
    census_log_index: float
    excluded: PrimeSet
    prime_excluded: bool
    model_id: str = "factor-count-v1"


def torsion_report(
    m: int,
    n: int,
    p: int,
    r: int,
    trunc_degree: int,
    excluded: PrimeSet = PrimeSet(()),
    tail_start: int = 10,
) -> TorsionReport:
    """Assemble the torsion-side report for loops on S^m v S^n at p^r.

    The witness is the least sphere-factor dimension 2k+1 with k >= r in the
    census; factor exponents grow with dimension, so every larger factor
    witnesses the same bound.
    """
    _require_prime(p)
    if r < 1:
        raise ValueError("r must be a positive integer")
    census = hilton_milnor_census(m, n, trunc_degree)
    witness = None
    for dim in census.factors:
        if dim % 2 == 1 and (dim - 1) // 2 >= r:
            witness = dim
            break
    if witness is None:
        raise ValueError(
            "increase truncation: no odd sphere factor of dimension 2k+1 "
            f"with k >= {r} below degree {trunc_degree}"
        )
    t_lower = {}
    for dim, count in census.factors.items():
        if dim % 2 == 1 and (dim - 1) // 2 >= r:
            deg = least_p_torsion_dim(dim, p)
            t_lower[deg] = t_lower.get(deg, 0) + count
    rate = log_index_empirical(
        census.factor_counts(), max(1, min(tail_start, trunc_degree))
    )
    return TorsionReport(
        prime=p,
        r=r,
        census=census,
        exponent_witness=witness,
        t_lower=dict(sorted(t_lower.items())),
        census_log_index=rate,
        excluded=excluded,
        prime_excluded=p in excluded,
    )


class RetractionReport:
    """Sphere pair (m, n) with a wedge retraction off the cofiber's loops."""

    __slots__ = ("m", "n", "excluded")

    def __init__(self, m: int, n: int, excluded: PrimeSet):
        self.m = m
        self.n = n
        self.excluded = excluded

    def __repr__(self):
        return f"RetractionReport(m={self.m}, n={self.n}, excluded={self.excluded.primes})"

    def __eq__(self, other):
        return (
            isinstance(other, RetractionReport)
            and (self.m, self.n, self.excluded) == (other.m, other.n, other.excluded)
        )


def retraction_report(A: SpaceExpr, Z: SpaceExpr) -> RetractionReport:
    """Locate the two-sphere wedge retracting off loops of the cofiber.

    m is the least sphere dimension in the wedge decomposition of the
    suspension of A. n is m-1 plus the least degree with nonzero reduced
    homology of Z, a rational proxy for the least cell of the (m-1)-fold
    suspension of Z. The excluded primes combine both profiles.

    >>> from .space import parse
    >>> retraction_report(parse("S2"), parse("S2 x S2"))
    RetractionReport(m=3, n=4, excluded=(2,))
    """
    red_a = reduced_gf(A)
    red_z = reduced_gf(Z)
    if red_a.num.is_zero():
        raise ValueError("A is rationally trivial")
    if red_z.num.is_zero():
        raise ValueError("Z is rationally trivial")
    m = wedge_decomposition(Susp(A)).least_dimension()
    n = (m - 1) + red_z.num.low_degree()
    return RetractionReport(m, n, primes_set_of(A) | primes_set_of(Z))
