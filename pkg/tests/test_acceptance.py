"""Acceptance criteria, one check each.

Run under pytest (the summary lists PASS/FAIL per criterion) or directly with
``python tests/test_acceptance.py``.
"""

import io
import os
import subprocess
import sys
import time
from fractions import Fraction

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from cycleindex import catalog, cli, oracle  # noqa: E402
from cycleindex.bipartite import (  # noqa: E402
    default_pipeline,
    phi_endpoint_free,
    phi_point_determining_connected,
)
from cycleindex.series import agree, cis_compose, singleton, unlabeled_count  # noqa: E402

import golden  # noqa: E402
from conftest import poly  # noqa: E402

RESULTS = {}
TABLE_BUDGET = 300.0
VERIFY_BUDGET = 60.0


def _table_via_cli(which):
    t0 = time.time()
    proc = subprocess.run(
        [sys.executable, "-m", "cycleindex", "table", which, "--max-n", "20", "--format", "tsv"],
        capture_output=True, text=True, check=False)
    elapsed = time.time() - t0
    assert proc.returncode == 0, proc.stderr
    rows = [tuple(map(int, line.split("\t"))) for line in proc.stdout.splitlines()[1:]]
    return rows, elapsed


def check_pbp_table():
    rows, elapsed = _table_via_cli("pbp")
    assert rows == golden.PBP_TABLE
    assert rows[15] == (15, 379092680506164049425, 303100595)
    assert elapsed <= TABLE_BUDGET
    return f"21 rows bit-exact in {elapsed:.1f}s"


def check_cpbp_table():
    rows, elapsed = _table_via_cli("cpbp")
    assert rows == golden.CPBP_TABLE
    assert rows[17] == (17, 105278651889065640047462400, 300974046019)
    assert elapsed <= TABLE_BUDGET
    return f"21 rows bit-exact in {elapsed:.1f}s"


def check_pbp_series():
    pbp = default_pipeline().pbp()
    for n, text in enumerate(golden.PBP_CIS):
        assert pbp.component(n) == poly(text), n
    assert [pbp.egf_coefficient(n) for n in range(10)] == [Fraction(v) for v in golden.PBP_EGF]
    assert [pbp.tgf_coefficient(n) for n in range(10)] == golden.PBP_TGF
    return "components 0..5, egf 0..9, tgf 0..9"


def check_golden_suite():
    g = catalog.get("G")
    assert [str(g.egf_coefficient(n)) for n in range(5)] == golden.G_EGF
    assert [g.tgf_coefficient(n) for n in range(9)] == golden.G_TGF
    part = cis_compose(catalog.get("E"), catalog.get("E+"))
    assert [str(part.egf_coefficient(n)) for n in range(10)] == golden.PART_EGF
    assert [part.tgf_coefficient(n) for n in range(10)] == golden.PART_TGF
    for n, text in enumerate(golden.PART_CIS):
        assert part.component(n) == poly(text)
    lin = catalog.get("L")
    for n in range(10):
        assert lin.component(n) == poly("p[" + ",".join(["1"] * n) + "]")
    return "G egf/tgf, Part egf/cis/tgf, L all-ones"


def check_inverse_pairs():
    x = singleton()
    ep, om = catalog.get("E+"), catalog.get("Omega")
    a, ainv = catalog.get("A"), catalog.get("Ainv")
    for f, h in ((ep, om), (om, ep), (a, ainv), (ainv, a)):
        assert agree(cis_compose(f, h), x, 12)
    assert agree(om, catalog.omega_by_inversion(), 12)
    return "through degree 12"


def check_endpoint_correspondence():
    pipe = default_pipeline()
    cases = [
        ("Gc", phi_point_determining_connected(catalog.get("Gc")), catalog.get("Gc")),
        ("CBP", pipe.cpbp(), pipe.cbp()),
    ]
    for _, phi_p, phi in cases:
        phi_m = phi_endpoint_free(phi, True)
        for n in range(13):
            diff = unlabeled_count(phi_p, n) - unlabeled_count(phi_m, n)
            assert diff == (1 if n == 2 else 0), n
    return "Gc and CBP through degree 12"


def check_oracle_equivalence():
    pipe = default_pipeline()
    suites = [
        ("G", False, catalog.get("G"), 0),
        ("BC", False, pipe.bc().at["e"], 1),
        ("BC", True, pipe.bc().at["t"], 1),
        ("BP", False, pipe.bp(), 0),
        ("CBP", False, pipe.cbp(), 0),
        ("PBP", False, pipe.pbp(), 0),
    ]
    for name, twisted, series, lo in suites:
        fam = oracle.family(name)
        for n in range(lo, 6):
            assert oracle.empirical_cycle_index(fam, n, twisted=twisted) == series.component(n), \
                (name, twisted, n)
    t0 = time.time()
    code = cli.main(["verify"], out=io.StringIO())
    elapsed = time.time() - t0
    assert code == 0
    assert elapsed <= VERIFY_BUDGET
    return f"n <= 5; verify exit 0 in {elapsed:.1f}s"


def check_functor_laws():
    for name, fam in oracle.FAMILIES.items():
        for n in range(min(4, fam.max_n) + 1):
            assert oracle.functor_law_check(fam, n), (name, n)
    return f"{len(oracle.FAMILIES)} families, n <= 4"


CRITERIA = [
    (1, "point-determining bipartite table", check_pbp_table),
    (2, "connected point-determining bipartite table", check_cpbp_table),
    (3, "PBP cycle index and generating series spot checks", check_pbp_series),
    (4, "catalog golden values", check_golden_suite),
    (5, "inverse pairs and the two Omega constructions", check_inverse_pairs),
    (6, "point-determining vs endpoint-free type series", check_endpoint_correspondence),
    (7, "oracle equivalence", check_oracle_equivalence),
    (8, "transport functor laws", check_functor_laws),
]


def _run(number, title, check):
    try:
        detail = check()
    except Exception as e:  # report, then re-raise for pytest
        RESULTS[number] = f"FAIL criterion {number}: {title} ({type(e).__name__}: {e})"
        print(RESULTS[number])
        raise
    RESULTS[number] = f"PASS criterion {number}: {title} ({detail})"
    print(RESULTS[number])


@pytest.mark.parametrize("number, title, check", CRITERIA, ids=[f"c{n}" for n, _, _ in CRITERIA])
def test_criterion(number, title, check):
    _run(number, title, check)


if __name__ == "__main__":
    failed = 0
    for number, title, check in CRITERIA:
        try:
            _run(number, title, check)
        except Exception:
            failed += 1
    sys.exit(1 if failed else 0)
