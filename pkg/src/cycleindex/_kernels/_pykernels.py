"""Pure-Python versions of the hot loops.

Polynomials here are plain dicts ``{monomial code: coefficient}``; monomial
product is code addition (see :mod:`cycleindex.partitions`).
"""

from math import gcd


def mul_accumulate(acc, a, b, scale):
    """acc += scale * a * b, all three sparse over monomial codes."""
    if not scale or not a or not b:
        return
    get = acc.get
    items = list(b.items())
    for ka, va in a.items():
        sva = va * scale
        for kb, vb in items:
            k = ka + kb
            acc[k] = get(k, 0) + sva * vb


def add_accumulate(acc, a, scale):
    """acc += scale * a."""
    if not scale:
        return
    get = acc.get
    for k, v in a.items():
        acc[k] = get(k, 0) + v * scale


def gcd_cross_sum(mu, nu):
    """Sum of gcd(i, j) over parts i of mu and j of nu."""
    total = 0
    for i in mu:
        for j in nu:
            total += gcd(i, j)
    return total


def gcd_pairwise_sum(mu):
    """Sum of gcd(mu[i], mu[j]) over index pairs i < j."""
    total = 0
    n = len(mu)
    for i in range(n):
        a = mu[i]
        for j in range(i + 1, n):
            total += gcd(a, mu[j])
    return total
