import pytest

from conftest import model
from ydlab.bialgebra import (
    FDAlgebra,
    FDHopf,
    check_algebra,
    check_galois_maps,
    check_hopf_axioms,
    check_hopf_morphism,
    coopposite_hopf,
    dual_hopf,
    find_unit,
    galois_maps,
    one_dim_hopf,
    opposite_hopf,
    relabel_map,
    same_structure,
)
from ydlab.multilinear import LinearMap, Tensor
from ydlab.scalar import ONE

CATALOG = ["z2", "z3", "z4", "klein4", "s3", "d4"]


@pytest.mark.parametrize("name", CATALOG)
def test_group_models_are_hopf(name):
    m = model(name)
    for h in (m.function_hopf(), m.group_hopf()):
        assert check_hopf_axioms(h).ok
        assert check_galois_maps(h).ok


def test_function_algebra_z2_structure():
    K = model("z2").function_hopf()
    r = check_algebra(K.alg)
    assert r.ok and r.names()[:2] == ["associativity", "unit"]
    assert K.unit == {0: ONE, 1: ONE}
    assert K.eps({0: ONE}) == ONE and K.eps({1: ONE}) == 0


def test_group_algebra_antipode_z2():
    L = model("z2").group_hopf()
    assert L.S({1: ONE}) == {1: ONE}
    L3 = model("z3").group_hopf()
    assert L3.delta({1: ONE}) == {1 * 3 + 1: ONE}
    assert L3.S({1: ONE}) == {2: ONE}


def test_one_dim_algebra():
    assert check_algebra(one_dim_hopf().alg).ok


def test_algebra_without_unit():
    mult = Tensor.from_sparse((2, 2, 2), {1 * 4 + 0 * 2 + 0: ONE, 0 * 4 + 1 * 2 + 1: ONE})
    alg = FDAlgebra.from_tensor(["e1", "e2"], mult, None)
    assert find_unit(alg) is None
    r = check_algebra(alg)
    assert not r.get("unit").ok
    assert r.get("unit").detail == "no solution of the unit equations"


def test_swap_antipode_fails_law_first():
    K = model("z2").function_hopf()
    swap = LinearMap(2, 2, [{1: ONE}, {0: ONE}])
    r = check_hopf_axioms(FDHopf(K.alg, K.delta, K.counit, swap, "swap"))
    f = r.first_failure()
    assert f.name == "antipode: law"
    assert "d_e" in f.detail


@pytest.mark.parametrize("name", ["z2", "z3", "s3"])
def test_duals_and_biduality(name):
    m = model(name)
    K, L = m.function_hopf(), m.group_hopf()
    assert same_structure(dual_hopf(K), L)
    assert same_structure(dual_hopf(L), K)
    assert same_structure(dual_hopf(dual_hopf(K)), K)
    assert check_hopf_axioms(dual_hopf(dual_hopf(L))).ok


@pytest.mark.parametrize("name", ["z3", "s3"])
def test_op_and_co(name):
    m = model(name)
    for h in (m.function_hopf(), m.group_hopf()):
        for d in (opposite_hopf(h), coopposite_hopf(h), opposite_hopf(coopposite_hopf(h))):
            assert check_hopf_axioms(d).ok
        assert same_structure(opposite_hopf(opposite_hopf(h)), h)
        assert same_structure(coopposite_hopf(coopposite_hopf(h)), h)


def test_commutative_opposite_is_itself():
    K = model("s3").function_hopf()
    assert same_structure(opposite_hopf(K), K)


def test_noncommutative_opposite_differs():
    L = model("s3").group_hopf()
    assert not same_structure(opposite_hopf(L), L)
    # inversion on the basis is an isomorphism k[G] -> k[G]^op as algebras and coalgebras
    inv = relabel_map(model("s3").group.inv)
    r = check_hopf_morphism(inv, L, opposite_hopf(L))
    assert r.get("algebra map").ok and r.get("coalgebra map").ok


def test_one_dim_hopf_self_dual():
    k = one_dim_hopf()
    assert check_hopf_axioms(k).ok
    assert same_structure(dual_hopf(k), k)


def test_galois_r1_on_function_algebra():
    # R1 of K(Z2) sends d_x (x) d_y to sum over g with g y^-1 = x (d_g (x) d_y)
    K = model("z2").function_hopf()
    r = check_galois_maps(K)
    R1 = r.data["R1"]
    T1, _ = galois_maps(K)
    assert (R1 @ T1).cols == LinearMap.identity((2, 2)).cols
    G = model("z2").group
    for x in range(2):
        for y in range(2):
            g = G.mul(x, y)
            assert R1.cols[x * 2 + y] == {g * 2 + y: ONE}
