"""Brute-force ground truth on small labeled structures.

Structures are enumerated explicitly on the labels ``0..n-1`` together with
the transport of each structure along a permutation.  Fixed-point counts give
empirical cycle indices, and Burnside's lemma gives unlabeled counts, with no
reference to the algebraic code paths.

Permutations are tuples ``sigma`` with ``sigma[i]`` the image of ``i``.
"""

from collections import deque
from fractions import Fraction
from itertools import combinations, permutations, product
from math import factorial

from .partitions import Partition, partitions
from .powersum import PowerSumPoly


class BudgetError(ValueError):
    """Requested size is beyond what exhaustive enumeration supports."""


MAX_VERTICES = 7


# -- permutations ---------------------------------------------------------------

def cycle_type(sigma):
    n = len(sigma)
    seen = [False] * n
    lengths = []
    for i in range(n):
        if not seen[i]:
            length = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = sigma[j]
                length += 1
            lengths.append(length)
    return Partition(lengths)


def permutation_of_type(lam):
    """A representative permutation with cycle type ``lam``."""
    sigma = []
    start = 0
    for length in lam:
        sigma.extend(start + (i + 1) % length for i in range(length))
        start += length
    return tuple(sigma)


def compose(tau, sigma):
    """(tau o sigma)[i] = tau[sigma[i]]."""
    return tuple(tau[s] for s in sigma)


def inverse(sigma):
    out = [0] * len(sigma)
    for i, s in enumerate(sigma):
        out[s] = i
    return tuple(out)


# -- graphs -----------------------------------------------------------------------

_EDGE_TABLES = {}


def _edges(n):
    table = _EDGE_TABLES.get(n)
    if table is None:
        pairs = list(combinations(range(n), 2))
        table = (pairs, {p: i for i, p in enumerate(pairs)})
        _EDGE_TABLES[n] = table
    return table


class SmallGraph:
    """Simple graph on vertices ``0..n-1``, edges packed into a bitmask."""

    __slots__ = ("n", "mask")

    def __init__(self, n, mask=0):
        if not 0 <= n <= MAX_VERTICES:
            raise BudgetError(f"graphs are limited to {MAX_VERTICES} vertices")
        self.n = n
        self.mask = mask

    @classmethod
    def from_edges(cls, n, edges):
        _, index = _edges(n)
        mask = 0
        for u, v in edges:
            if u == v:
                raise ValueError("loops are not allowed")
            mask |= 1 << index[min(u, v), max(u, v)]
        return cls(n, mask)

    @classmethod
    def complete(cls, n):
        return cls(n, (1 << (n * (n - 1) // 2)) - 1)

    def edges(self):
        pairs, _ = _edges(self.n)
        return [p for i, p in enumerate(pairs) if self.mask >> i & 1]

    def neighborhoods(self):
        nb = [0] * self.n
        for u, v in self.edges():
            nb[u] |= 1 << v
            nb[v] |= 1 << u
        return nb

    def degrees(self):
        return [bin(x).count("1") for x in self.neighborhoods()]

    def transport(self, sigma):
        _, index = _edges(self.n)
        mask = 0
        for u, v in self.edges():
            a, b = sigma[u], sigma[v]
            mask |= 1 << index[min(a, b), max(a, b)]
        return SmallGraph(self.n, mask)

    def __eq__(self, other):
        return (isinstance(other, SmallGraph)
                and self.n == other.n and self.mask == other.mask)

    def __hash__(self):
        return hash((self.n, self.mask))

    def __repr__(self):
        return f"SmallGraph({self.n}, {self.edges()})"


def all_graphs(n):
    m = n * (n - 1) // 2
    return [SmallGraph(n, mask) for mask in range(1 << m)]


def components(g):
    nb = g.neighborhoods()
    seen = 0
    count = 0
    for start in range(g.n):
        if seen >> start & 1:
            continue
        count += 1
        queue = deque([start])
        seen |= 1 << start
        while queue:
            u = queue.popleft()
            for v in range(g.n):
                if nb[u] >> v & 1 and not seen >> v & 1:
                    seen |= 1 << v
                    queue.append(v)
    return count


def is_connected(g):
    """The empty graph is not connected."""
    return g.n > 0 and components(g) == 1


def proper_colorings(g):
    """All maps vertex -> {0, 1} with no monochromatic edge, by brute force."""
    edges = g.edges()
    return [c for c in product((0, 1), repeat=g.n)
            if all(c[u] != c[v] for u, v in edges)]


def count_bicolorings(g):
    return len(proper_colorings(g))


def is_bipartite(g):
    nb = g.neighborhoods()
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] >= 0:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in range(g.n):
                if nb[u] >> v & 1:
                    if color[v] < 0:
                        color[v] = 1 - color[u]
                        queue.append(v)
                    elif color[v] == color[u]:
                        return False
    return True


def is_point_determining(g):
    nb = g.neighborhoods()
    return len(set(nb)) == len(nb)


def is_endpoint_free(g):
    return all(d != 1 for d in g.degrees())


def is_tree(g):
    return is_connected(g) and len(g.edges()) == g.n - 1


# -- families -----------------------------------------------------------------------

class StructureFamily:
    """Enumerator plus transport for one species, valid up to ``max_n`` labels.

    ``twist``, when given, is a structure map commuting with transport (a group
    action on structures such as swapping colors).
    """

    def __init__(self, name, enumerate, act, max_n, twist=None):
        self.name = name
        self._enumerate = enumerate
        self.act = act
        self.max_n = max_n
        self.twist = twist
        self._cache = {}

    def enumerate(self, n):
        if n > self.max_n:
            raise BudgetError(
                f"family {self.name!r} is limited to n <= {self.max_n}, got {n}")
        hit = self._cache.get(n)
        if hit is None:
            hit = self._cache[n] = list(self._enumerate(n))
        return hit

    def __repr__(self):
        return f"<StructureFamily {self.name}>"


def _graph_family(name, predicate, max_n=5):
    return StructureFamily(
        name,
        lambda n: [g for g in all_graphs(n) if predicate(g)],
        lambda sigma, g: g.transport(sigma),
        max_n)


def _bicolored(n, connected=False):
    out = []
    for g in all_graphs(n):
        if connected and not is_connected(g):
            continue
        for c in proper_colorings(g):
            out.append((g, c))
    return out


def _act_colored(sigma, s):
    g, c = s
    colors = [0] * len(c)
    for v, x in enumerate(c):
        colors[sigma[v]] = x
    return g.transport(sigma), tuple(colors)


def _flip_colors(s):
    g, c = s
    return g, tuple(1 - x for x in c)


def _act_rooted(sigma, s):
    g, root = s
    return g.transport(sigma), sigma[root]


def _conjugate(sigma, f):
    """Transport of a map f: [n] -> [n] along sigma, i.e. sigma f sigma^-1."""
    out = [0] * len(f)
    for i, x in enumerate(f):
        out[sigma[i]] = sigma[x]
    return tuple(out)


def _is_single_cycle(p):
    return len(p) > 0 and len(cycle_type(p)) == 1


def _families():
    fams = [
        StructureFamily("E", lambda n: [frozenset(range(n))],
                        lambda sigma, s: frozenset(sigma[x] for x in s), 7),
        StructureFamily("L", lambda n: list(permutations(range(n))),
                        lambda sigma, s: tuple(sigma[x] for x in s), 6),
        StructureFamily("S", lambda n: list(permutations(range(n))), _conjugate, 6),
        StructureFamily("C", lambda n: [p for p in permutations(range(n))
                                        if _is_single_cycle(p)], _conjugate, 6),
        StructureFamily("End", lambda n: list(product(range(n), repeat=n)),
                        _conjugate, 5),
        _graph_family("G", lambda g: True),
        _graph_family("Gc", is_connected),
        _graph_family("P", is_point_determining),
        _graph_family("BP", is_bipartite),
        _graph_family("CBP", lambda g: is_bipartite(g) and is_connected(g)),
        _graph_family("PBP", lambda g: is_bipartite(g) and is_point_determining(g)),
        _graph_family("CPBP", lambda g: is_bipartite(g) and is_connected(g)
                      and is_point_determining(g)),
        _graph_family("MC", lambda g: is_connected(g) and is_endpoint_free(g), 6),
        _graph_family("CBPM", lambda g: is_bipartite(g) and is_connected(g)
                      and is_endpoint_free(g), 6),
        _graph_family("a", is_tree, 6),
        StructureFamily("A", lambda n: [(g, r) for g in all_graphs(n) if is_tree(g)
                                        for r in range(n)], _act_rooted, 6),
        StructureFamily("BC", lambda n: _bicolored(n), _act_colored, 5,
                        twist=_flip_colors),
        StructureFamily("CBC", lambda n: _bicolored(n, connected=True),
                        _act_colored, 5, twist=_flip_colors),
    ]
    return {f.name: f for f in fams}


FAMILIES = _families()


def family(name):
    try:
        return FAMILIES[name]
    except KeyError:
        raise KeyError(f"no oracle family {name!r}") from None


# -- counting ---------------------------------------------------------------------

def fixed_count(fam, sigma, twisted=False):
    act = fam.act
    twist = fam.twist if twisted else None
    if twisted and twist is None:
        raise ValueError(f"family {fam.name!r} has no group action")
    count = 0
    for s in fam.enumerate(len(sigma)):
        t = act(sigma, s)
        if twist is not None:
            t = twist(t)
        if t == s:
            count += 1
    return count


def empirical_cycle_index(fam, n, twisted=False, all_permutations=False):
    """(1/n!) sum over sigma in S_n of fix(F[sigma]) p_{cycle type of sigma}.

    By default one representative per cycle type is used, weighted by the
    class size; ``all_permutations=True`` sums over every permutation.
    With ``twisted=True`` the family's group action is applied after
    transport, giving the cycle index at the nontrivial group element.
    """
    if n > fam.max_n:
        raise BudgetError(
            f"family {fam.name!r} is limited to n <= {fam.max_n}, got {n}")
    totals = {}
    if all_permutations:
        for sigma in permutations(range(n)):
            lam = cycle_type(sigma)
            totals[lam] = totals.get(lam, 0) + fixed_count(fam, sigma, twisted)
    else:
        nf = factorial(n)
        for lam in partitions(n):
            fix = fixed_count(fam, permutation_of_type(lam), twisted)
            if fix:
                z = 1
                for i, m in lam.multiplicities().items():
                    z *= i**m * factorial(m)
                totals[lam] = fix * (nf // z)
    nf = factorial(n)
    return PowerSumPoly(n, {lam: Fraction(v, nf) for lam, v in totals.items() if v})


def labeled_count(fam, n):
    return len(fam.enumerate(n))


def unlabeled_count(fam, n):
    """Number of orbits under relabeling, by Burnside's lemma."""
    v = empirical_cycle_index(fam, n).sum_of_coefficients()
    assert v.denominator == 1
    return v.numerator


def functor_law_check(fam, n):
    """Identity and composition laws of transport on all structures of size n."""
    structs = fam.enumerate(n)
    ident = tuple(range(n))
    for s in structs:
        if fam.act(ident, s) != s:
            return False
    perms = list(permutations(range(n)))
    for sigma in perms:
        for tau in perms:
            ts = compose(tau, sigma)
            for s in structs:
                if fam.act(ts, s) != fam.act(tau, fam.act(sigma, s)):
                    return False
    if fam.twist is not None:
        for sigma in perms:
            for s in structs:
                if fam.twist(fam.act(sigma, s)) != fam.act(sigma, fam.twist(s)):
                    return False
    return True
