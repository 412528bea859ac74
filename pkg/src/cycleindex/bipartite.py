"""Point-determining bipartite graphs and the generalized Phi_P / Phi_M operators.

The chain is

    BC  --Omega o_S2-->  CBC  --/S2-->  CBP  --E o-->  BP  --o Omega-->  PBP

where BC is the S2-cycle index of nonempty bicolored graphs (S2 swaps the
colors) and CPBP = CBP o Omega - Omega + X.
"""

from math import factorial

from . import _kernels, catalog
from .gamma import GammaCIS, gamma_compose, lift_ordinary, quotient, s2
from .partitions import encode, partitions, scale_parts, z_aut
from .powersum import PowerSumPoly, _clean
from .series import CycleIndexSeries, cis_compose, labeled_count, unlabeled_count


def bc_e_fix(mu, nu):
    """Bicolored graphs fixed by a color-preserving permutation.

    ``mu`` and ``nu`` are the cycle types on the two color classes.
    """
    return 2 ** _kernels.gcd_cross_sum(mu, nu)


def bc_t_exponent(mu):
    return (len(mu) + sum((p + 1) // 2 for p in mu)
            + _kernels.gcd_pairwise_sum(mu))


def bc_t_fix(mu):
    """Bicolored graphs fixed by a color swap composed with a permutation of type 2*mu."""
    return 2 ** bc_t_exponent(mu)


def _bc_identity_component(n):
    if n == 0:
        return PowerSumPoly.zero(0)
    nf = factorial(n)
    acc = {}
    cross = _kernels.gcd_cross_sum
    for a in range(n + 1):
        left = [(tuple(mu), encode(mu), z_aut(mu)) for mu in partitions(a)]
        right = [(tuple(nu), encode(nu), z_aut(nu)) for nu in partitions(n - a)]
        for mu, cmu, zmu in left:
            w = nf // zmu
            for nu, cnu, znu in right:
                code = cmu + cnu
                acc[code] = acc.get(code, 0) + (w // znu) * (1 << cross(mu, nu))
    return PowerSumPoly._from_scaled(n, _clean(acc))


def _bc_swap_component(n):
    if n == 0 or n % 2:
        return PowerSumPoly.zero(n)
    nf = factorial(n)
    data = {}
    for mu in partitions(n // 2):
        doubled = scale_parts(mu, 2)
        data[encode(doubled)] = (nf // z_aut(doubled)) * bc_t_fix(mu)
    return PowerSumPoly._from_scaled(n, data)


def bc_identity():
    return CycleIndexSeries(_bc_identity_component, "BC[e]")


def bc_swap():
    return CycleIndexSeries(_bc_swap_component, "BC[t]")


def phi_point_determining(phi, omega=None):
    """Point-determining Phi-graphs for Phi closed under duplicating vertices."""
    return cis_compose(phi, omega if omega is not None else catalog.omega())


def phi_point_determining_connected(phi, omega=None):
    """Point-determining Phi-graphs for a connected Phi containing the one-vertex graph.

    Phi minus X is closed under duplicates, so Phi_P = Phi o Omega - Omega + X.
    """
    omega = omega if omega is not None else catalog.omega()
    return cis_compose(phi, omega) - omega + catalog.singleton()


def phi_endpoint_free(phi, contains_singleton, ainv=None):
    """Phi-graphs without endpoints, for a connected Phi closed under endpoints."""
    ainv = ainv if ainv is not None else catalog.rooted_trees_inverse()
    out = cis_compose(phi, ainv)
    if contains_singleton:
        x = catalog.singleton()
        out = out - catalog.sets_k(2) + x * x
    return out


class BipartitePipeline:
    """Lazily built stages of the computation, sharing one Omega."""

    def __init__(self):
        self.group = s2()
        self.omega = catalog.omega()
        self._stages = {}

    def _stage(self, key, build):
        s = self._stages.get(key)
        if s is None:
            s = self._stages[key] = build()
            if isinstance(s, CycleIndexSeries):
                s.name = key
        return s

    def bc(self):
        return self._stage("BCgamma", lambda: GammaCIS(
            self.group, {"e": bc_identity(), "t": bc_swap()}))

    def cbc(self):
        return self._stage("CBCgamma", lambda: gamma_compose(
            lift_ordinary(self.omega, self.group), self.bc()))

    def bc_identity(self):
        return self.bc().at["e"]

    def cbc_identity(self):
        return self.cbc().at["e"]

    def cbp(self):
        return self._stage("CBP", lambda: quotient(self.cbc()))

    def bp(self):
        return self._stage("BP", lambda: cis_compose(catalog.sets(), self.cbp()))

    def pbp(self):
        return self._stage("PBP", lambda: cis_compose(self.bp(), self.omega))

    def cpbp(self):
        return self._stage("CPBP", lambda: phi_point_determining_connected(
            self.cbp(), self.omega))


_default = None


def default_pipeline():
    global _default
    if _default is None:
        _default = BipartitePipeline()
    return _default


# -- tables -------------------------------------------------------------------

def table_rows(series, max_n):
    return [(n, labeled_count(series, n), unlabeled_count(series, n))
            for n in range(max_n + 1)]


def format_table(rows, fmt="text"):
    header = ("n", "labeled", "unlabeled")
    if fmt == "tsv":
        lines = ["\t".join(header)]
        lines += ["\t".join(map(str, row)) for row in rows]
        return "\n".join(lines) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown table format {fmt!r}")
    cells = [header] + [tuple(map(str, row)) for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(3)]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells]
    return "\n".join(lines) + "\n"
