"""Lazy cycle index series.

A :class:`CycleIndexSeries` produces its degree-``n`` component on demand and
memoizes it.  Components are always forced in increasing degree, so computing
degree ``n`` never recurses deeper than one level per series, and a series
that asks for its own degree ``n`` while computing it raises
:class:`UnguardedRecursionError`.

Forcing is single-threaded: share computed series freely between threads, but
force components from one thread at a time.
"""

from fractions import Fraction
from math import comb, factorial

from . import _kernels
from .partitions import DIGIT_BITS
from .powersum import PowerSumPoly, _clean, _exact_div


class SeriesError(Exception):
    """Base class for errors raised while building or forcing series."""


class UnguardedRecursionError(SeriesError):
    def __init__(self, name, degree):
        super().__init__(
            f"unguarded recursion: series {name!r} needs its own degree-{degree} "
            f"component to compute it")
        self.name = name
        self.degree = degree


class UndefinedSeriesError(SeriesError):
    pass


class CompositionError(SeriesError, ValueError):
    pass


class NonIntegralCountError(SeriesError, ValueError):
    pass


class CycleIndexSeries:
    """Lazily computed ``n -> PowerSumPoly`` of degree ``n``.

    ``compute`` is called once per degree, in increasing order.
    """

    def __init__(self, compute, name=None):
        self._compute = compute
        self._memo = []
        self._forcing = None
        self.name = name or "series"
        self._powers = None
        self._stretched = None

    # -- forcing -------------------------------------------------------------

    def component(self, n):
        if n < 0:
            raise ValueError(f"degree must be nonnegative, got {n}")
        memo = self._memo
        if n < len(memo):
            return memo[n]
        while len(memo) <= n:
            k = len(memo)
            if self._forcing is not None:
                raise UnguardedRecursionError(self.name, self._forcing)
            self._forcing = k
            try:
                poly = self._compute(k)
            finally:
                self._forcing = None
            if poly.degree != k:
                raise SeriesError(
                    f"{self.name}: component {k} has degree {poly.degree}")
            memo.append(poly)
        return memo[n]

    __getitem__ = component

    def is_forcing(self, n):
        return self._forcing == n

    def computed_degrees(self):
        return len(self._memo)

    def coefficients(self, count):
        """The first ``count`` components."""
        return [self.component(n) for n in range(count)]

    # -- specializations -----------------------------------------------------

    def egf_coefficient(self, n):
        return self.component(n).ones_coefficient()

    def tgf_coefficient(self, n):
        return self.component(n).sum_of_coefficients()

    def egf_coefficients(self, count):
        return [self.egf_coefficient(n) for n in range(count)]

    def tgf_coefficients(self, count):
        return [self.tgf_coefficient(n) for n in range(count)]

    def labeled_count(self, n):
        return labeled_count(self, n)

    def unlabeled_count(self, n):
        return unlabeled_count(self, n)

    # -- operators -----------------------------------------------------------

    def __add__(self, other):
        return cis_add(self, other)

    def __sub__(self, other):
        return cis_sub(self, other)

    def __neg__(self):
        return cis_scale(self, -1)

    def __mul__(self, other):
        if isinstance(other, CycleIndexSeries):
            return cis_mul(self, other)
        return cis_scale(self, other)

    def __rmul__(self, other):
        return cis_scale(self, other)

    def __call__(self, inner):
        return cis_compose(self, inner)

    def derivative(self):
        return cis_derivative(self)

    def point(self):
        return cis_point(self)

    def __repr__(self):
        return f"<CycleIndexSeries {self.name} ({len(self._memo)} computed)>"

    # -- caches used by composition -----------------------------------------

    def _power(self, m):
        """self ** m as a lazy series; assumes a zero constant term."""
        if self._powers is None:
            self._powers = [None, self]
        powers = self._powers
        while len(powers) <= m:
            powers.append(_lazy_power(self, powers[-1], len(powers)))
        return powers[m]

    def _stretched_power(self, m, j, k):
        """Scaled data of component ``k`` of stretch(self**m, j)."""
        if k % j:
            return None
        cache = self._stretched
        if cache is None:
            cache = self._stretched = {}
        key = (m, j, k)
        hit = cache.get(key)
        if hit is None:
            hit = self._power(m).component(k // j).stretch(j).scaled_terms()
            cache[key] = hit
        return hit


class SeriesHandle(CycleIndexSeries):
    """A series whose definition is attached later, allowing self-reference.

    >>> L = SeriesHandle("L")
    >>> L.define(one() + singleton() * L)
    """

    def __init__(self, name=None):
        super().__init__(self._undefined, name or "handle")
        self._defined = False

    def _undefined(self, n):
        raise UndefinedSeriesError(
            f"series {self.name!r} forced at degree {n} before define()")

    def define(self, body):
        if self._defined:
            raise SeriesError(f"series {self.name!r} already defined")
        self._defined = True
        self._compute = body.component


def define(handle, body):
    handle.define(body)
    return handle


# -- constructors -------------------------------------------------------------

def from_function(fn, name=None):
    """Series whose component ``n`` is ``fn(n)``."""
    return CycleIndexSeries(fn, name)


def from_components(polys, name=None):
    """Finite series: the given components, then zero."""
    polys = list(polys)

    def compute(n):
        return polys[n] if n < len(polys) else PowerSumPoly.zero(n)

    return CycleIndexSeries(compute, name)


def zero():
    return CycleIndexSeries(PowerSumPoly.zero, "0")


def one():
    return from_components([PowerSumPoly.one()], "1")


def singleton():
    return from_components(
        [PowerSumPoly.zero(0), PowerSumPoly.monomial([1])], "X")


# -- the five operations ------------------------------------------------------

def cis_add(f, g):
    return CycleIndexSeries(
        lambda n: f.component(n) + g.component(n), f"({f.name} + {g.name})")


def cis_sub(f, g):
    return CycleIndexSeries(
        lambda n: f.component(n) - g.component(n), f"({f.name} - {g.name})")


def cis_scale(f, c):
    c = Fraction(c)
    return CycleIndexSeries(lambda n: f.component(n) * c, f"{c}*{f.name}")


def _product_component(f, g, n):
    acc = {}
    for k in range(n + 1):
        # force the lower-degree factor first and skip the other when it is zero,
        # so guarded self-reference never touches the degree being computed
        if k <= n - k:
            a = f.component(k)
            if not a:
                continue
            b = g.component(n - k)
            if not b:
                continue
        else:
            b = g.component(n - k)
            if not b:
                continue
            a = f.component(k)
            if not a:
                continue
        _kernels.mul_accumulate(acc, a.scaled_terms(), b.scaled_terms(), comb(n, k))
    return PowerSumPoly._from_scaled(n, _clean(acc))


def cis_mul(f, g):
    return CycleIndexSeries(
        lambda n: _product_component(f, g, n), f"{f.name}*{g.name}")


def _lazy_power(base, prev, m):
    def compute(k):
        # base has zero constant term: prev starts at degree m-1, base at 1
        acc = {}
        for a in range(m - 1, k):
            pa = prev.component(a)
            if not pa:
                continue
            b = base.component(k - a)
            if not b:
                continue
            _kernels.mul_accumulate(acc, pa.scaled_terms(), b.scaled_terms(), comb(k, a))
        return PowerSumPoly._from_scaled(k, _clean(acc))

    return CycleIndexSeries(compute, f"{base.name}^{m}")


class Plethysm:
    """Degree-by-degree evaluation of an outer series at stretched inner series.

    The outer monomial ``c * p_lambda`` becomes ``c * prod_i stretch(B_i, i)``
    where ``B_i = inner_for_part(i)``; for ordinary composition every ``B_i``
    is the same series.  Monomials are grouped by their multiplicity vector
    from the smallest part up (a Horner scheme), and each node of that trie is
    memoized per degree.

    Node values for prefix degree ``s`` at degree ``d`` are stored scaled by
    ``(s + d)! * d!``, which keeps them integral for species.
    """

    def __init__(self, outer, inner_for_part, inner_series):
        self.outer = outer
        self.inner_for_part = inner_for_part
        self.inner_series = list(inner_series)
        self._nodes = {}
        self._checked = False

    def _check_inner(self, lazy_ok):
        if self._checked:
            return
        for g in self.inner_series:
            if lazy_ok and g.is_forcing(0):
                return
            if g.component(0):
                raise CompositionError(
                    f"cannot compose into {g.name}: nonzero constant term")
        self._checked = True

    def component(self, n):
        if n == 0:
            self._check_inner(lazy_ok=True)
            return self.outer.component(0)
        self._check_inner(lazy_ok=False)
        w = self._node(0, 0, 0, n)
        nf = factorial(n)
        return PowerSumPoly._from_scaled(
            n, _clean({k: _exact_div(v, nf) for k, v in w.items()}))

    def _node(self, level, prefix, s, d):
        key = (level, prefix, d)
        hit = self._nodes.get(key)
        if hit is not None:
            return hit
        if d == 0:
            c = self.outer.component(s).scaled_terms().get(prefix, 0)
            res = {0: c} if c else {}
        elif level >= d:
            # remaining parts are all > d
            res = {}
        else:
            j = level + 1
            acc = dict(self._node(j, prefix, s, d))
            base = self.inner_for_part(j)
            shift = DIGIT_BITS * (j - 1)
            fsd = factorial(s + d)
            for m in range(1, d // j + 1):
                prefix_m = prefix + (m << shift)
                s_m = s + j * m
                for k in range(j * m, d + 1):
                    child = self._node(j, prefix_m, s_m, d - k)
                    if not child:
                        continue
                    bk = base._stretched_power(m, j, k)
                    if not bk:
                        continue
                    scale = comb(d, k) * (fsd // factorial(s_m + d - k))
                    _kernels.mul_accumulate(acc, bk, child, scale)
            res = _clean(acc)
        self._nodes[key] = res
        return res


def cis_compose(f, g):
    """Plethysm ``f o g``; ``g`` must have zero constant term."""
    engine = Plethysm(f, lambda i: g, [g])
    return CycleIndexSeries(engine.component, f"{f.name}({g.name})")


def cis_derivative(f):
    return CycleIndexSeries(
        lambda n: f.component(n + 1).derivative_p1(), f"{f.name}'")


def cis_point(f):
    return CycleIndexSeries(lambda n: f.component(n).point(), f"{f.name}*")


def cis_comp_inverse(f, name=None):
    """Compositional inverse of ``f``, whose degree-1 part must be exactly p_1."""
    if f.component(0):
        raise CompositionError(f"{f.name} has a nonzero constant term")
    if f.component(1) != PowerSumPoly.monomial([1]):
        raise CompositionError(f"{f.name} must start with exactly p[1]")
    x = singleton()
    result = SeriesHandle(name or f"inv({f.name})")
    result.define(x - cis_compose(f - x, result))
    return result


# -- counts -------------------------------------------------------------------

def egf_coefficient(f, n):
    return f.egf_coefficient(n)


def tgf_coefficient(f, n):
    return f.tgf_coefficient(n)


def labeled_count(f, n):
    """n! times the exponential coefficient, required to be an integer."""
    v = f.egf_coefficient(n) * factorial(n)
    if v.denominator != 1:
        raise NonIntegralCountError(
            f"{f.name}: labeled count at n={n} is not an integer ({v})")
    return v.numerator


def unlabeled_count(f, n):
    v = f.tgf_coefficient(n)
    if v.denominator != 1:
        raise NonIntegralCountError(
            f"{f.name}: unlabeled count at n={n} is not an integer ({v})")
    return v.numerator


def first_difference(f, g, upto):
    """Smallest degree <= upto where f and g differ, or None."""
    for n in range(upto + 1):
        if f.component(n) != g.component(n):
            return n
    return None


def agree(f, g, upto):
    return first_difference(f, g, upto) is None
