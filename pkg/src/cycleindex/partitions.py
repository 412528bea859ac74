"""Integer partitions, cycle types and the monomial encoding used by the kernels.

A partition doubles as the cycle type of a permutation and as the index of a
power-sum monomial ``p_lambda``.  Internally, monomials are keyed by an integer
code that packs the multiplicity vector into 16-bit digits, so the product of
two monomials is the sum of their codes.
"""

from collections import Counter
from functools import lru_cache
from math import factorial

DIGIT_BITS = 16
DIGIT_MASK = (1 << DIGIT_BITS) - 1
MAX_DEGREE = DIGIT_MASK


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    def __new__(cls, parts=()):
        if isinstance(parts, Partition):
            return parts
        parts = sorted((int(p) for p in parts), reverse=True)
        if parts and parts[-1] < 1:
            raise ValueError(f"partition parts must be positive, got {parts}")
        self = super().__new__(cls, parts)
        self.size = sum(parts)
        return self

    def __repr__(self):
        return f"Partition({list(self)})"

    def __str__(self):
        return "[" + ",".join(map(str, self)) + "]"

    def multiplicities(self):
        """Map part value -> number of occurrences."""
        return Counter(self)

    def to_list(self):
        return list(self)


def z_aut(lam):
    """Order of the centralizer of a permutation with cycle type ``lam``.

    >>> z_aut(Partition([2, 2, 1]))
    8
    """
    out = 1
    for i, m in Counter(lam).items():
        out *= i**m * factorial(m)
    return out


def union_parts(mu, nu):
    return Partition(tuple(mu) + tuple(nu))


def scale_parts(mu, k):
    if k < 1:
        raise ValueError(f"scale factor must be a positive integer, got {k}")
    return Partition([p * k for p in mu])


@lru_cache(maxsize=None)
def _partitions_bounded(n, largest):
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def partitions(n):
    """All partitions of ``n`` in decreasing lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return tuple(Partition(p) for p in _partitions_bounded(n, n))


def partition_count(n):
    return len(partitions(n))


# -- monomial codes ----------------------------------------------------------

def encode(lam):
    """Pack a partition into its monomial code."""
    code = 0
    for part in lam:
        code += 1 << (DIGIT_BITS * (part - 1))
    return code


@lru_cache(maxsize=None)
def decode(code):
    """Inverse of :func:`encode`."""
    parts = []
    i = 1
    while code:
        m = code & DIGIT_MASK
        if m:
            parts.extend([i] * m)
        code >>= DIGIT_BITS
        i += 1
    return Partition(parts)


def ones_multiplicity(code):
    """Number of parts equal to 1, read straight off the code."""
    return code & DIGIT_MASK


@lru_cache(maxsize=1 << 16)
def stretch_code(code, k):
    """Code of the partition with every part multiplied by ``k``."""
    if k == 1:
        return code
    out = 0
    i = 1
    while code:
        m = code & DIGIT_MASK
        if m:
            out += m << (DIGIT_BITS * (i * k - 1))
        code >>= DIGIT_BITS
        i += 1
    return out
