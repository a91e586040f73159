import pytest

from conftest import model
from ydlab.bialgebra import check_algebra
from ydlab.groups import GroupAction, canonical_group_pairing, cyclic_group, symmetric_group
from ydlab.models import (
    function_algebra,
    group_algebra,
    groupoid_algebras,
    heisenberg_over_double,
    transformation_coactions,
    transformation_report,
    verify_crossed_isos,
)
from ydlab.scalar import ONE

ACTIONS = ["z2-on-2points", "z3-on-z3", "s3-on-3points"]


@pytest.mark.parametrize("name", ACTIONS)
def test_groupoid_algebras(name):
    act = model(name).action
    K, L = groupoid_algebras(act)
    assert K.dim == L.dim == act.group.n * act.m
    assert check_algebra(K).ok and check_algebra(L).ok


def test_trivial_group_groupoid_is_function_algebra():
    G = cyclic_group(1)
    act = GroupAction(G, 3, [[0, 1, 2]])
    K, L = groupoid_algebras(act)
    X = function_algebra(3)
    assert K.prod == X.prod == L.prod


@pytest.mark.parametrize("name", ACTIONS)
def test_crossed_isos(name):
    assert verify_crossed_isos(model(name).action).ok


def test_transformation_alpha_formula():
    act = model("s3-on-3points").action
    G = act.group
    al, be = transformation_coactions(act)
    for t in range(3):
        assert al.cols[t] == {g * 3 + act.act(G.inv[g], t): ONE for g in range(6)}
        assert be.cols[t] == {t: ONE}


@pytest.mark.parametrize("name", ACTIONS)
def test_transformation_report(name):
    assert transformation_report(model(name).action).ok


def test_group_algebra_star():
    X = group_algebra(symmetric_group(3))
    assert check_algebra(X).ok


@pytest.mark.parametrize("name", ["z2", "z3"])
def test_heisenberg_over_double(name):
    hd = heisenberg_over_double(model(name).pairing())
    assert hd.report.ok
    n = model(name).group.n
    assert hd.H.dim == n * n


def test_heisenberg_over_double_trivial_group():
    hd = heisenberg_over_double(canonical_group_pairing(cyclic_group(1)))
    assert hd.report.ok
    assert hd.H.dim == 1


@pytest.mark.slow
def test_heisenberg_over_double_s3():
    assert heisenberg_over_double(model("s3").pairing()).report.ok
