"""Independent oracles used by the tests.

These deliberately avoid the library's own algorithms: determinants by
cofactor expansion or fraction-free elimination written here, divisor chains
by gcds of minors, weight pairings by direct rational arithmetic.
"""

from fractions import Fraction
from itertools import combinations
from math import gcd


def det_cofactor(rows):
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    sign = 1
    for j in range(n):
        if rows[0][j]:
            minor = [r[:j] + r[j + 1:] for r in rows[1:]]
            total += sign * rows[0][j] * det_cofactor(minor)
        sign = -sign
    return total


def det_fraction_free(rows):
    a = [list(r) for r in rows]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


def minors_gcd_chain(rows):
    """Divisor chain d_1 | d_2 | ... from gcds of k x k minors.

    Early exit: the gcd of k-minors is always a multiple of the gcd of
    (k-1)-minors, so once it reaches that floor no smaller value can occur.
    """
    m, n = len(rows), len(rows[0]) if rows else 0
    chain = []
    prev = 1
    for k in range(1, min(m, n) + 1):
        g = 0
        done = False
        for rsel in combinations(range(m), k):
            for csel in combinations(range(n), k):
                sub = [[rows[i][j] for j in csel] for i in rsel]
                g = gcd(g, det_fraction_free(sub))
                if g == prev:
                    done = True
                    break
            if done:
                break
        if g == 0:
            break
        chain.append(g // prev)
        prev = g
    return chain


def spinor_weight_vectors(n):
    """Half-sum sign vectors indexed by subsets in binary mask order."""
    out = []
    for mask in range(1 << n):
        out.append(
            tuple(
                Fraction(-1, 2) if (mask >> (j - 1)) & 1 else Fraction(1, 2)
                for j in range(1, n + 1)
            )
        )
    return out


def pairing(x, y, scale):
    return scale * sum(a * b for a, b in zip(x, y))
