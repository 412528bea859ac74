"""Homogeneous polynomials in the power-sum symmetric functions.

Coefficients are exact.  A degree-``n`` polynomial stores each coefficient
multiplied by ``n!``; for cycle indices of (virtual) species these scaled
values are integers, which keeps the hot loops in integer arithmetic.  A
non-integral scaled value is kept as a :class:`~fractions.Fraction`, so
arbitrary rational input is still exact, only slower.
"""

import re
from fractions import Fraction
from math import comb, factorial

from . import _kernels
from .partitions import (
    MAX_DEGREE,
    Partition,
    decode,
    encode,
    ones_multiplicity,
    stretch_code,
)


def _normalize(value):
    if type(value) is Fraction and value.denominator == 1:
        return value.numerator
    return value


def _clean(data):
    return {k: _normalize(v) for k, v in data.items() if v}


def _exact_div(value, d):
    """value / d, staying an int when the division is exact."""
    if type(value) is int and value % d == 0:
        return value // d
    return _normalize(Fraction(value) / d)


class PowerSumPoly:
    """A homogeneous element of degree ``degree`` in the power-sum basis.

    Build one from a mapping ``{partition: coefficient}``; every partition
    must have size ``degree``.  Instances are immutable.
    """

    __slots__ = ("degree", "_data", "_hash")

    def __init__(self, degree, terms=None):
        degree = int(degree)
        if not 0 <= degree <= MAX_DEGREE:
            raise ValueError(f"degree out of range: {degree}")
        scale = factorial(degree)
        data = {}
        for lam, coeff in (terms or {}).items():
            lam = Partition(lam)
            if lam.size != degree:
                raise ValueError(f"partition {lam} does not have size {degree}")
            code = encode(lam)
            data[code] = data.get(code, 0) + Fraction(coeff) * scale
        self.degree = degree
        self._data = _clean(data)
        self._hash = None

    @classmethod
    def _from_scaled(cls, degree, data):
        """Wrap already-scaled data (``n! * coefficient``) without copying."""
        self = cls.__new__(cls)
        self.degree = degree
        self._data = data
        self._hash = None
        return self

    @classmethod
    def zero(cls, degree):
        return cls._from_scaled(degree, {})

    @classmethod
    def one(cls):
        return cls._from_scaled(0, {0: 1})

    @classmethod
    def monomial(cls, parts, coeff=1):
        lam = Partition(parts)
        return cls(lam.size, {lam: coeff})

    # -- inspection ----------------------------------------------------------

    def coefficient(self, lam):
        lam = Partition(lam)
        if lam.size != self.degree:
            return Fraction(0)
        return Fraction(self._data.get(encode(lam), 0)) / factorial(self.degree)

    def terms(self):
        """``{Partition: Fraction}``, partitions in decreasing lexicographic order."""
        scale = factorial(self.degree)
        items = sorted(((decode(k), v) for k, v in self._data.items()), reverse=True)
        return {lam: Fraction(v) / scale for lam, v in items}

    def __len__(self):
        return len(self._data)

    def __bool__(self):
        return bool(self._data)

    def is_zero(self):
        return not self._data

    def scaled_terms(self):
        """Raw ``{code: n! * coefficient}`` view.  Do not mutate."""
        return self._data

    def sum_of_coefficients(self):
        """Value at p_i = x^i, divided by x^n: the type-generating coefficient."""
        return Fraction(sum(self._data.values())) / factorial(self.degree)

    def ones_coefficient(self):
        """Coefficient of p_1^n: the exponential-generating coefficient."""
        code = self.degree  # p_1^n has multiplicity n in the first digit
        return Fraction(self._data.get(code, 0)) / factorial(self.degree)

    # -- arithmetic ----------------------------------------------------------

    def _check_degree(self, other):
        if self.degree != other.degree:
            raise ValueError(
                f"degree mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other):
        if not isinstance(other, PowerSumPoly):
            return NotImplemented
        self._check_degree(other)
        acc = dict(self._data)
        _kernels.add_accumulate(acc, other._data, 1)
        return PowerSumPoly._from_scaled(self.degree, _clean(acc))

    def __neg__(self):
        return PowerSumPoly._from_scaled(
            self.degree, {k: -v for k, v in self._data.items()})

    def __sub__(self, other):
        if not isinstance(other, PowerSumPoly):
            return NotImplemented
        self._check_degree(other)
        acc = dict(self._data)
        _kernels.add_accumulate(acc, other._data, -1)
        return PowerSumPoly._from_scaled(self.degree, _clean(acc))

    def __mul__(self, other):
        if isinstance(other, PowerSumPoly):
            n = self.degree + other.degree
            acc = {}
            _kernels.mul_accumulate(
                acc, self._data, other._data, comb(n, self.degree))
            return PowerSumPoly._from_scaled(n, _clean(acc))
        try:
            c = Fraction(other)
        except TypeError:
            return NotImplemented
        return PowerSumPoly._from_scaled(
            self.degree, _clean({k: v * c for k, v in self._data.items()}))

    __rmul__ = __mul__

    def stretch(self, k):
        """Substitute p_i -> p_{ik}."""
        if k < 1:
            raise ValueError(f"stretch factor must be positive, got {k}")
        if k == 1:
            return self
        n = self.degree
        # scaled coefficient must go from n! to (kn)!
        ratio = factorial(k * n) // factorial(n)
        return PowerSumPoly._from_scaled(
            k * n, {stretch_code(c, k): v * ratio for c, v in self._data.items()})

    def derivative_p1(self):
        """Partial derivative with respect to p_1 (degree drops by one)."""
        if self.degree == 0:
            return PowerSumPoly.zero(0)
        n = self.degree
        data = {}
        for code, v in self._data.items():
            m = ones_multiplicity(code)
            if m:
                # n!c -> (n-1)! * m * c
                data[code - 1] = _exact_div(v * m, n)
        return PowerSumPoly._from_scaled(n - 1, data)

    def point(self):
        """Multiply each monomial by its number of parts equal to 1."""
        data = {}
        for code, v in self._data.items():
            m = ones_multiplicity(code)
            if m:
                data[code] = v * m
        return PowerSumPoly._from_scaled(self.degree, data)

    # -- comparison / display ------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, PowerSumPoly):
            return self.degree == other.degree and self._data == other._data
        if other == 0:
            return not self._data
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.degree, frozenset(self._data.items())))
        return self._hash

    def __repr__(self):
        return f"PowerSumPoly({self.degree}, {format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def poly_add(f, g):
    return f + g


def poly_mul(f, g):
    return f * g


def stretch(f, k):
    return f.stretch(k)


# -- text format --------------------------------------------------------------

def format_poly(f):
    """Canonical text: ``2/3*p[3] + 3/2*p[2,1] - p[1,1,1]``; ``0`` if zero."""
    pieces = []
    for lam, c in f.terms().items():
        mono = "p" + str(lam)
        sign = "-" if c < 0 else "+"
        a = abs(c)
        body = mono if a == 1 else f"{a}*{mono}"
        pieces.append((sign, body))
    if not pieces:
        return "0"
    sign, body = pieces[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


_TERM = re.compile(
    r"\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s*\*\s*)?p\[([\d,\s]*)\]\s*")


def parse_poly(text, degree=None):
    """Inverse of :func:`format_poly`."""
    text = text.strip()
    if text == "0":
        if degree is None:
            raise ValueError("degree needed to parse the zero polynomial")
        return PowerSumPoly.zero(degree)
    terms = {}
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial at offset {pos}: {text!r}")
        sign, coeff, parts = m.groups()
        c = Fraction(coeff) if coeff else Fraction(1)
        if sign == "-":
            c = -c
        lam = Partition([int(p) for p in parts.replace(" ", "").split(",") if p])
        terms[lam] = terms.get(lam, 0) + c
        pos = m.end()
    sizes = {lam.size for lam in terms}
    if len(sizes) != 1:
        raise ValueError(f"inhomogeneous polynomial: {text!r}")
    d = sizes.pop()
    if degree is not None and d != degree:
        raise ValueError(f"expected degree {degree}, found {d}")
    return PowerSumPoly(d, terms)
