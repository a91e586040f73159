from conftest import model
from ydlab.actions import (
    LEFT,
    RIGHT,
    Action,
    Coaction,
    check_action,
    check_coaction,
    trivial_action,
    trivial_coaction,
)
from ydlab.models import function_algebra
from ydlab.multilinear import LinearMap, add_into, vkron
from ydlab.scalar import ONE


def adjoint_action(h):
    """a |> a' = a(1) a' S(a(2))."""
    n = h.dim

    def f(a, x):
        out = {}
        for k, c in h.delta.cols[a].items():
            a1, a2 = divmod(k, n)
            add_into(out, h.mul(h.mul({a1: ONE}, {x: ONE}), h.S({a2: ONE})), c)
        return out
    return Action.from_function(h, h.alg, f, LEFT, "adjoint")


def test_adjoint_action_on_function_algebra():
    K = model("z3").function_hopf()
    a = adjoint_action(K)
    assert check_action(a).ok
    # K(G) is commutative, so the adjoint action is eps(a) a'
    for i in range(3):
        for j in range(3):
            assert a.act({i: ONE}, {j: ONE}) == ({j: ONE} if i == 0 else {})


def test_adjoint_action_on_group_algebra_s3():
    L = model("s3").group_hopf()
    a = adjoint_action(L)
    assert check_action(a).ok
    G = model("s3").group
    for g in range(6):
        for h in range(6):
            assert a.act({g: ONE}, {h: ONE}) == {G.mul(G.mul(g, h), G.inv[g]): ONE}


def test_trivial_action_and_coaction():
    K = model("z2").function_hopf()
    X = function_algebra(3)
    for side in (LEFT, RIGHT):
        assert check_action(trivial_action(K, X, side)).ok
        assert check_coaction(trivial_coaction(K, X, side)).ok


def test_scaled_coaction_fails_counit():
    K = model("z2").function_hopf()
    X = function_algebra(2)
    cols = [vkron(K.unit, {x: 2 * ONE}, 2) for x in range(2)]
    r = check_coaction(Coaction(K, X, LinearMap(2, 4, cols), LEFT, "scaled"))
    assert not r.get("counit: (eps (x) id)Gamma = id").ok


def test_regular_coaction_is_delta():
    L = model("s3").group_hopf()
    r = check_coaction(Coaction(L, L.alg, L.delta, LEFT, "delta"))
    assert r.ok
    assert check_coaction(Coaction(L, L.alg, L.delta, RIGHT, "delta")).ok
