"""Cycle index series of the named species.

Every constructor returns a fresh lazy series; :func:`get` returns the shared
instance registered under a catalog name.
"""

from fractions import Fraction
from math import factorial, gcd

from . import _kernels
from .partitions import DIGIT_BITS, encode, partitions, z_aut
from .powersum import PowerSumPoly
from .series import (
    CycleIndexSeries,
    SeriesHandle,
    cis_comp_inverse,
    cis_compose,
    cis_mul,
)
from .series import one as _one
from .series import singleton as _singleton
from .series import zero as _zero


def _sum_over_partitions(n, weight):
    """Component sum_{lam |- n} weight(lam) * p_lam / z_lam, scaled by n!."""
    nf = factorial(n)
    data = {}
    for lam in partitions(n):
        w = weight(lam)
        if w:
            data[encode(lam)] = w * (nf // z_aut(lam))
    return PowerSumPoly._from_scaled(n, data)


def zero():
    return _zero()


def one():
    return _one()


def singleton():
    return _singleton()


def sets():
    return CycleIndexSeries(lambda n: _sum_over_partitions(n, lambda lam: 1), "E")


def sets_plus():
    e = sets()
    return CycleIndexSeries(
        lambda n: PowerSumPoly.zero(0) if n == 0 else e.component(n), "E+")


def sets_k(k):
    if k < 0:
        raise ValueError("k must be nonnegative")
    e = sets()
    return CycleIndexSeries(
        lambda n: e.component(n) if n == k else PowerSumPoly.zero(n), f"E{k}")


def linear_orders():
    return CycleIndexSeries(
        lambda n: PowerSumPoly._from_scaled(n, {n: factorial(n)}), "L")


def permutations():
    # every permutation of cycle type lam fixes z_lam permutations
    return CycleIndexSeries(lambda n: _sum_over_partitions(n, z_aut), "S")


def _totient(n):
    return sum(1 for k in range(1, n + 1) if gcd(n, k) == 1)


def _cycles_component(n):
    if n == 0:
        return PowerSumPoly.zero(0)
    nf = factorial(n)
    data = {}
    for d in range(1, n + 1):
        if n % d == 0:
            # phi(d)/n * p_d^(n/d)
            code = (n // d) << (DIGIT_BITS * (d - 1))
            data[code] = _totient(d) * (nf // n)
    return PowerSumPoly._from_scaled(n, data)


def cycles():
    return CycleIndexSeries(_cycles_component, "C")


def graph_edge_orbits(lam):
    """Number of orbits on vertex pairs of a permutation with cycle type lam."""
    total = sum(p // 2 for p in lam)
    return total + _kernels.gcd_pairwise_sum(lam)


def simple_graphs():
    return CycleIndexSeries(
        lambda n: _sum_over_partitions(n, lambda lam: 2 ** graph_edge_orbits(lam)),
        "G")


def _omega_terms():
    terms = [PowerSumPoly.zero(0), PowerSumPoly.monomial([1])]

    def term(n):
        while len(terms) <= n:
            m = len(terms)
            acc = PowerSumPoly.monomial([1] * m, (-1) ** (m - 1))
            for d in range(1, m):
                if m % d == 0:
                    acc = acc - d * terms[d].stretch(m // d)
            terms.append(acc * Fraction(1, m))
        return terms[n]

    return term


def omega():
    """Combinatorial logarithm, by the explicit divisor recursion."""
    return CycleIndexSeries(_omega_terms(), "Omega")


def omega_by_inversion():
    """Combinatorial logarithm as the compositional inverse of E+."""
    return cis_comp_inverse(sets_plus(), "Omega")


def rooted_trees():
    a = SeriesHandle("A")
    a.define(cis_mul(singleton(), cis_compose(sets(), a)))
    return a


def unrooted_trees(rooted=None):
    """Dissymmetry: a = A + E2(A) - A^2."""
    a = rooted if rooted is not None else rooted_trees()
    u = a + cis_compose(sets_k(2), a) - a * a
    u.name = "a"
    return u


def rooted_trees_inverse(rooted=None):
    return cis_comp_inverse(rooted if rooted is not None else rooted_trees(), "Ainv")


def endofunctions():
    f = cis_compose(permutations(), rooted_trees())
    f.name = "End"
    return f


def subsets():
    f = cis_mul(sets(), sets())
    f.name = "Sub"
    return f


def partitions_species():
    f = cis_compose(sets(), sets_plus())
    f.name = "Part"
    return f


def connected_graphs():
    g = simple_graphs()
    f = cis_compose(omega(), g - one())
    f.name = "Gc"
    return f


# -- registry -----------------------------------------------------------------

class CatalogEntry:
    __slots__ = ("name", "factory", "description", "_series")

    def __init__(self, name, factory, description):
        self.name = name
        self.factory = factory
        self.description = description
        self._series = None

    @property
    def series(self):
        if self._series is None:
            self._series = self.factory()
            self._series.name = self.name
        return self._series


def _bipartite(attr):
    def factory():
        from . import bipartite
        return getattr(bipartite.default_pipeline(), attr)()
    return factory


_ENTRIES = [
    ("0", zero, "empty species"),
    ("1", one, "empty set"),
    ("X", singleton, "singletons"),
    ("E", sets, "sets"),
    ("E+", sets_plus, "nonempty sets"),
    ("E2", lambda: sets_k(2), "two-element sets"),
    ("L", linear_orders, "linear orders"),
    ("S", permutations, "permutations"),
    ("C", cycles, "cyclic permutations"),
    ("Part", partitions_species, "set partitions, E(E+)"),
    ("G", simple_graphs, "simple graphs"),
    ("Gc", connected_graphs, "connected graphs, Omega(G - 1)"),
    ("Omega", omega, "combinatorial logarithm (virtual)"),
    ("A", rooted_trees, "rooted trees, X*E(A)"),
    ("a", lambda: unrooted_trees(get("A")), "unrooted trees"),
    ("Ainv", lambda: rooted_trees_inverse(get("A")), "compositional inverse of A (virtual)"),
    ("End", endofunctions, "endofunctions, S(A)"),
    ("Sub", subsets, "subsets, E*E"),
    ("BC", _bipartite("bc_identity"), "nonempty bicolored graphs"),
    ("CBC", _bipartite("cbc_identity"), "connected bicolored graphs"),
    ("CBP", _bipartite("cbp"), "connected bipartite graphs"),
    ("BP", _bipartite("bp"), "bipartite graphs"),
    ("PBP", _bipartite("pbp"), "point-determining bipartite graphs"),
    ("CPBP", _bipartite("cpbp"), "connected point-determining bipartite graphs"),
]

CATALOG = {name: CatalogEntry(name, f, d) for name, f, d in _ENTRIES}
NAMES = tuple(CATALOG)
ALIASES = {"Epos": "E+"}


def get(name):
    """Shared series for a catalog name."""
    name = ALIASES.get(name, name)
    try:
        return CATALOG[name].series
    except KeyError:
        raise KeyError(f"unknown species {name!r}") from None
