"""Oracle-equivalence suites: brute-force cycle indices vs the algebraic series."""

from . import bipartite, catalog, oracle


def _suites():
    pipe = bipartite.default_pipeline()
    g = catalog.get
    return [
        # (family, twisted, algebraic series factory, smallest degree checked)
        ("E", False, lambda: g("E"), 0),
        ("L", False, lambda: g("L"), 0),
        ("S", False, lambda: g("S"), 0),
        ("C", False, lambda: g("C"), 0),
        ("End", False, lambda: g("End"), 0),
        ("G", False, lambda: g("G"), 0),
        ("Gc", False, lambda: g("Gc"), 0),
        ("P", False, lambda: bipartite.phi_point_determining(g("G"), g("Omega")), 0),
        ("A", False, lambda: g("A"), 0),
        ("a", False, lambda: g("a"), 0),
        ("MC", False, lambda: bipartite.phi_endpoint_free(g("Gc"), True, g("Ainv")), 0),
        ("CBPM", False, lambda: bipartite.phi_endpoint_free(pipe.cbp(), True, g("Ainv")), 0),
        # BC is stored without its empty structure, so degree 0 is skipped
        ("BC", False, lambda: pipe.bc().at["e"], 1),
        ("BC", True, lambda: pipe.bc().at["t"], 1),
        ("CBC", False, lambda: pipe.cbc().at["e"], 0),
        ("CBC", True, lambda: pipe.cbc().at["t"], 0),
        ("BP", False, pipe.bp, 0),
        ("CBP", False, pipe.cbp, 0),
        ("PBP", False, pipe.pbp, 0),
        ("CPBP", False, pipe.cpbp, 0),
    ]


def _describe(fam_name, twisted, n, empirical, algebraic):
    label = fam_name + (" [color swap]" if twisted else "")
    keys = set(empirical.terms()) | set(algebraic.terms())
    for lam in sorted(keys, reverse=True):
        a, b = empirical.coefficient(lam), algebraic.coefficient(lam)
        if a != b:
            return (f"{label}: degree {n}, coefficient of p{lam}: "
                    f"oracle {a}, series {b}")
    return f"{label}: degree {n}: mismatch"


def cycle_index_discrepancies(max_n=5, families=None):
    """Compare every suite up to ``max_n`` (capped by each family's budget)."""
    out = []
    for name, twisted, build, lo in _suites():
        if families is not None and name not in families:
            continue
        fam = oracle.family(name)
        series = build()
        for n in range(lo, min(max_n, fam.max_n) + 1):
            emp = oracle.empirical_cycle_index(fam, n, twisted=twisted)
            alg = series.component(n)
            if emp != alg:
                out.append(_describe(name, twisted, n, emp, alg))
    return out


def functor_law_discrepancies(max_n=4):
    out = []
    for name, fam in oracle.FAMILIES.items():
        for n in range(min(max_n, fam.max_n) + 1):
            if not oracle.functor_law_check(fam, n):
                out.append(f"{name}: transport laws fail at n={n}")
    return out


def bicoloring_discrepancies(max_n=5):
    out = []
    for n in range(max_n + 1):
        for gr in oracle.all_graphs(n):
            if oracle.is_bipartite(gr):
                expected = 2 ** oracle.components(gr)
            else:
                expected = 0
            got = oracle.count_bicolorings(gr)
            if got != expected:
                out.append(f"bicolorings of {gr}: {got}, expected {expected}")
    return out


def verify(max_n=5):
    """All suites; returns the list of discrepancy reports (empty when green)."""
    return (cycle_index_discrepancies(max_n)
            + functor_law_discrepancies(min(max_n, 4))
            + bicoloring_discrepancies(max_n))
