"""Independent reference implementations used to freeze expected values.

Everything here works on plain truncated coefficient lists with Fraction
arithmetic, with no shared code with the package: rational-function results
are checked against direct series manipulation, census counts against brute
word enumeration, and sparse ranks against dense elimination.
"""

from fractions import Fraction


def tadd(a, b, n):
    out = [Fraction(0)] * (n + 1)
    for i in range(n + 1):
        if i < len(a):
            out[i] += Fraction(a[i])
        if i < len(b):
            out[i] += Fraction(b[i])
    return out


def tmul(a, b, n):
    out = [Fraction(0)] * (n + 1)
    for i in range(min(len(a), n + 1)):
        if a[i] == 0:
            continue
        ai = Fraction(a[i])
        for j in range(min(len(b), n + 1 - i)):
            out[i + j] += ai * Fraction(b[j])
    return out


def trecip(a, n):
    # reciprocal of a power series with a[0] != 0
    a0 = Fraction(a[0])
    if a0 == 0:
        raise ZeroDivisionError("constant term is zero")
    out = [Fraction(0)] * (n + 1)
    out[0] = 1 / a0
    for k in range(1, n + 1):
        s = Fraction(0)
        for j in range(1, min(k, len(a) - 1) + 1):
            s += Fraction(a[j]) * out[k - j]
        out[k] = -s / a0
    return out

def tshift(a, k, n):
    out = [Fraction(0)] * (n + 1)
    for i, c in enumerate(a):
        if i + k <= n:
            out[i + k] = Fraction(c)
    return out


def texpand(num, den, n):
    """Expansion of num/den as lists of coefficients, exact."""
    return tmul(list(num), trecip(list(den), n), n)


def word_count_series(degrees, n):
    """dim of the free associative algebra on generators of the given degrees."""
    dims = [0] * (n + 1)
    dims[0] = 1
    for k in range(1, n + 1):
        dims[k] = sum(dims[k - d] for d in degrees if k >= d)
    return dims


def all_words(alphabet_size, length):
    if length == 0:
        return [()]
    return [
        w + (c,)
        for w in all_words(alphabet_size, length - 1)
        for c in range(alphabet_size)
    ]


def is_lyndon(w):
    """Strictly smallest among its rotations."""
    n = len(w)
    return all(w < w[i:] + w[:i] for i in range(1, n))


def brute_lyndon(alphabet_size, max_len):
    out = []
    for length in range(1, max_len + 1):
        out.extend(w for w in all_words(alphabet_size, length) if is_lyndon(w))
    return sorted(out)


def dense_rank(rows, ncols):
    """Gaussian elimination over Fractions on dense copies of sparse rows."""
    mat = []
    for row in rows:
        dense = [Fraction(0)] * ncols
        for c, v in row.items():
            dense[c] = Fraction(v)
        mat.append(dense)
    rank = 0
    col = 0
    nrows = len(mat)
    while rank < nrows and col < ncols:
        pivot = next((i for i in range(rank, nrows) if mat[i][col] != 0), None)
        if pivot is None:
            col += 1
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        pv = mat[rank][col]
        for i in range(rank + 1, nrows):
            if mat[i][col] != 0:
                f = mat[i][col] / pv
                for j in range(col, ncols):
                    mat[i][j] -= f * mat[rank][j]
        rank += 1
        col += 1
    return rank


def signed_necklace_hh0(degrees, k):
    """Count cyclic word classes of degree k alive under the signed rotation.

    Walks every word explicitly: a class dies when some rotation returns the
    word with accumulated sign -1. Exponential; for small cross-checks only.
    """
    if k == 0:
        return 1
    words = []

    def grow(prefix, weight):
        if weight == k:
            words.append(prefix)
            return
        for j, d in enumerate(degrees):
            if weight + d <= k:
                grow(prefix + (j,), weight + d)

    grow((), 0)
    seen = set()
    alive = 0
    for w in words:
        if w in seen:
            continue
        orbit = {w}
        cur = w
        sign = 1
        dead = False
        for _ in range(len(w)):
            d = degrees[cur[0]]
            sign *= -1 if (d * (k - d)) % 2 else 1
            cur = cur[1:] + (cur[0],)
            orbit.add(cur)
            if cur == w and sign == -1:
                dead = True
        seen |= orbit
        if not dead:
            alive += 1
    return alive
