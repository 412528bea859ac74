import pytest

from cycleindex import catalog
from cycleindex.gamma import (
    FiniteGroup,
    GammaCIS,
    cyclic_group,
    gamma_add,
    gamma_compose,
    gamma_mul,
    lift_ordinary,
    quotient,
    s2,
)
from cycleindex.series import agree, cis_compose, cis_mul, singleton

get = catalog.get


def test_groups_satisfy_axioms():
    assert s2().check_axioms()
    for n in range(1, 6):
        assert cyclic_group(n).check_axioms()
    g = s2()
    assert g.power("t", 2) == "e"
    assert g.power("t", 3) == "t"


def test_broken_group_is_detected():
    # subtraction mod 3 is not associative
    bad = FiniteGroup(range(3), lambda a, b: (a - b) % 3, 0)
    assert not bad.check_axioms()


def test_lift_and_quotient():
    g = s2()
    om = get("Omega")
    lifted = lift_ordinary(om, g)
    assert lifted.at["t"] is om
    assert agree(quotient(lift_ordinary(get("G"), g)), get("G"), 8)
    assert all(not quotient(lift_ordinary(get("0"), g)).component(n) for n in range(5))


def test_sum_and_product_with_units():
    g = s2()
    f = GammaCIS(g, {"e": get("G"), "t": get("L")})
    z = lift_ordinary(get("0"), g)
    u = lift_ordinary(get("1"), g)
    for x in g:
        assert agree(gamma_add(f, z).at[x], f.at[x], 6)
        assert agree(gamma_mul(f, u).at[x], f.at[x], 6)
    x2 = gamma_mul(lift_ordinary(singleton(), g), lift_ordinary(singleton(), g))
    assert agree(x2.at["t"], singleton() * singleton(), 5)


def test_product_is_pointwise(pipeline):
    bc = pipeline.bc()
    sq = gamma_mul(bc, bc)
    assert agree(sq.at["t"], cis_mul(bc.at["t"], bc.at["t"]), 4)


def test_compose_of_trivial_actions():
    g = s2()
    lhs = gamma_compose(lift_ordinary(get("E"), g), lift_ordinary(get("E+"), g))
    rhs = cis_compose(get("E"), get("E+"))
    for x in g:
        assert agree(lhs.at[x], rhs, 6)


def test_compose_over_cyclic_group():
    # trivial actions over Z/3 still reduce to ordinary plethysm
    g = cyclic_group(3)
    lhs = gamma_compose(lift_ordinary(get("C"), g), lift_ordinary(get("Gc"), g))
    for x in g:
        assert agree(lhs.at[x], cis_compose(get("C"), get("Gc")), 6)


def test_identity_part_is_ordinary_composition(pipeline):
    cbc = pipeline.cbc()
    assert agree(cbc.at["e"], cis_compose(pipeline.omega, pipeline.bc().at["e"]), 8)


def test_quotient_is_linear(pipeline):
    g = s2()
    f = pipeline.cbc()
    h = GammaCIS(g, {"e": get("G"), "t": get("S")})
    lhs = quotient(gamma_add(f, h))
    rhs = quotient(f) + quotient(h)
    assert agree(lhs, rhs, 8)


def test_group_mismatch():
    assert s2() == s2()
    assert s2() != cyclic_group(2)
    a = lift_ordinary(get("E"), s2())
    b = lift_ordinary(get("E"), cyclic_group(2))
    with pytest.raises(ValueError):
        gamma_add(a, b)
    with pytest.raises(ValueError):
        GammaCIS(s2(), {"e": get("E")})
