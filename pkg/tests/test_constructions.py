import pytest

from conftest import model
from ydlab.actions import LEFT, Coaction
from ydlab.bialgebra import (
    FDAlgebra,
    check_algebra,
    check_hopf_axioms,
    coopposite_hopf,
    same_structure,
)
from ydlab.constructions import (
    check_double_bicrossed,
    check_skew_copairing,
    check_twisting,
    crossed_product,
    double_codouble_pairing,
    drinfeld_codouble,
    drinfeld_double,
    flip_cotwisting,
    flip_twisting,
    heisenberg,
    heisenberg_relations,
    iota_A,
    iota_B,
    lu_anti_isos,
    solve_antipode,
    twisted_coproduct,
    twisted_coproduct_from_skew_copairing,
)
from ydlab.models import function_algebra, transformation_coactions
from ydlab.multilinear import LinearMap, Tensor, vkron
from ydlab.pairing import flip_pairing
from ydlab.scalar import ONE


@pytest.mark.parametrize("name", ["z2", "z3", "s3"])
def test_heisenberg_algebra(name):
    p = model(name).pairing()
    H = heisenberg(p)
    n = model(name).group.n
    assert H.dim == n * n
    assert check_algebra(H).ok
    assert heisenberg_relations(p, H).ok


def test_heisenberg_is_full_matrix_algebra_z2():
    # H(p_G) is End(K(G)); its centre is one-dimensional
    p = model("z2").pairing()
    H = heisenberg(p)
    centre = [k for k in range(4) if all(H.mul({k: ONE}, {j: ONE}) == H.mul({j: ONE}, {k: ONE}) for j in range(4))]
    assert centre == []
    one = H.unit
    assert all(H.mul(one, {j: ONE}) == {j: ONE} for j in range(4))


def test_embeddings_are_multiplicative():
    p = model("s3").pairing()
    H = heisenberg(p)
    for a in range(6):
        for b in range(6):
            x = p.A.mul({a: ONE}, {b: ONE})
            assert H.mul(iota_A(p, {a: ONE}), iota_A(p, {b: ONE})) == iota_A(p, x)
            y = p.B.mul({a: ONE}, {b: ONE})
            assert H.mul(iota_B(p, {a: ONE}), iota_B(p, {b: ONE})) == iota_B(p, y)


@pytest.mark.parametrize("name", ["z3", "s3"])
def test_lu_anti_isomorphisms(name):
    L, Lp, r = lu_anti_isos(model(name).pairing())
    assert r.ok
    assert L.is_bijective()


def test_smash_over_double_z2_has_16_dims():
    dc = double_codouble_pairing(model("z2").pairing())
    H = heisenberg(dc.pairing)
    assert H.dim == 16
    assert check_algebra(H).ok


def test_crossed_product_z2_swap():
    act = model("z2-on-2points").action
    p = model("z2").pairing()
    al, _ = transformation_coactions(act)
    cp = crossed_product(Coaction(p.A, function_algebra(2), al, LEFT, "alpha"), p)
    assert cp.report.ok
    assert cp.algebra.dim == 4
    assert cp.iso.is_bijective()


def test_crossed_product_rejects_wrong_side():
    from ydlab.constructions import ConstructionError

    p = model("z2").pairing()
    X = function_algebra(2)
    c = Coaction(p.A, X, LinearMap(2, 4, [{0: ONE}, {1: ONE}]), "right", "r")
    with pytest.raises(ConstructionError):
        crossed_product(c, p)


def test_flip_twisting_gives_tensor_product():
    m = model("z3")
    A, B = m.function_hopf(), m.group_hopf()
    assert check_twisting(flip_twisting(A, B), A, B).ok
    assert check_twisting(flip_cotwisting(A, B), A, B).ok
    h = twisted_coproduct(A, B, flip_cotwisting(A, B))
    assert check_hopf_axioms(h).ok


def test_solve_antipode_recovers_known_antipode():
    for name in ("z3", "s3"):
        for h in (model(name).function_hopf(), model(name).group_hopf()):
            S = solve_antipode(h.alg, h.delta, h.counit)
            assert S is not None and S.cols == h.antipode.cols


def test_solve_antipode_fails_on_monoid_bialgebra():
    # k[M] for the monoid {1, 0} under multiplication: a bialgebra with no antipode
    alg = FDAlgebra(["1", "0"], [[{0: ONE}, {1: ONE}], [{1: ONE}, {1: ONE}]], {0: ONE})
    delta = LinearMap(2, (2, 2), [{0: ONE}, {3: ONE}])
    counit = LinearMap(2, 1, [{0: ONE}, {0: ONE}])
    assert solve_antipode(alg, delta, counit) is None


def test_multiplier_is_skew_copairing():
    # U in A (x) B is a skew-copairing in A^co (x) B
    p = model("s3").pairing()
    r = check_skew_copairing(p.U, p.B, coopposite_hopf(p.A))
    assert r.ok


def test_twisted_coproduct_from_skew_copairing():
    p = model("z3").pairing()
    h, T, r = twisted_coproduct_from_skew_copairing(p.U, p.B, coopposite_hopf(p.A))
    assert r.ok
    assert check_hopf_axioms(h).ok


def test_trivial_skew_copairing_is_plain_tensor_product():
    m = model("z2")
    A, B = m.function_hopf(), m.group_hopf()
    one = Tensor.from_sparse((2, 2), vkron(B.unit, A.unit, 2))
    h, _, r = twisted_coproduct_from_skew_copairing(one, A, B)
    assert r.ok
    assert same_structure(h, twisted_coproduct(A, B, flip_cotwisting(A, B)))


@pytest.mark.parametrize("name", ["z2", "s3"])
def test_drinfeld_double(name):
    p = model(name).pairing()
    D, T, r = drinfeld_double(p)
    assert r.ok
    assert D.dim == model(name).group.n ** 2
    assert check_hopf_axioms(D).ok
    assert check_double_bicrossed(p, D).ok


@pytest.mark.parametrize("name", ["z2", "z3"])
def test_drinfeld_codouble(name):
    Tc, sigma, r = drinfeld_codouble(model(name).pairing())
    assert r.ok
    assert check_hopf_axioms(Tc).ok


def test_codouble_of_abelian_group_is_tensor_product():
    # for abelian G, Ad(U) is trivial on K(G)^op (x) k[G], so sigma is the flip
    p = model("z3").pairing()
    Tc, sigma, _ = drinfeld_codouble(p)
    assert sigma.map.cols == flip_cotwisting(p.A, p.B).map.cols


@pytest.mark.parametrize("name", ["z2", "z3"])
def test_double_codouble_multiplier(name):
    dc = double_codouble_pairing(model(name).pairing())
    assert dc.report.ok
    assert dc.W == dc.VU
    assert dc.pairing.U.sparse() == dc.W


def test_double_codouble_for_flipped_pairing():
    dc = double_codouble_pairing(flip_pairing(model("z2").pairing()))
    assert dc.report.ok
