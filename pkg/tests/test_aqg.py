import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import model
from strategies import scalars
from ydlab.aqg import (
    AQGError,
    Integral,
    check_aqg,
    dual_aqg,
    find_integral,
    gram_matrix,
    hermitian_psd,
    integral_report,
    involution_grading,
    multiplicative_unitary_checks,
    quantum_group_pairing,
    yd_quantum_check,
)
from ydlab.bialgebra import one_dim_hopf
from ydlab.groups import GroupAction, cyclic_group
from ydlab.models import transformation_yd
from ydlab.multilinear import LinearMap
from ydlab.pairing import check_pairing_axioms
from ydlab.scalar import ONE, ZERO, Scalar
from ydlab.suites import Model
from ydlab.yd import dualize_yd, rl_from_ll, square_corners

GROUPS = ["z2", "z3", "klein4", "s3"]


@pytest.mark.parametrize("name", GROUPS)
def test_integrals(name):
    m = model(name)
    n = m.group.n
    K, L = m.function_hopf(), m.group_hopf()
    assert find_integral(K).values == [ONE] * n
    assert find_integral(L).values == [ONE] + [ZERO] * (n - 1)
    for h in (K, L):
        assert find_integral(h, "right").values == find_integral(h).values


def test_integral_of_one_dim_hopf():
    assert find_integral(one_dim_hopf()).values == [ONE]


def test_signed_functional_is_not_invariant():
    K = model("z2").function_hopf()
    phi = Integral(LinearMap(2, 1, [{0: ONE}, {0: -ONE}]))
    r = integral_report(K, phi)
    assert not r.ok
    assert r.first_failure().detail == "on d_e"


def test_bad_side_rejected():
    with pytest.raises(ValueError):
        find_integral(model("z2").function_hopf(), "middle")


@pytest.mark.parametrize("name", GROUPS)
def test_check_aqg(name):
    m = model(name)
    for h in (m.function_hopf(), m.group_hopf()):
        r = check_aqg(h, find_integral(h))
        assert r.ok


def test_gram_matrix_of_counting_measure():
    K = model("s3").function_hopf()
    M = gram_matrix(K, find_integral(K))
    assert all(M[i][j] == (ONE if i == j else ZERO) for i in range(6) for j in range(6))


def test_non_positive_functional_fails():
    K = model("z2").function_hopf()
    phi = Integral(LinearMap(2, 1, [{0: ONE}, {0: -ONE}]))
    r = check_aqg(K, phi)
    assert not r.get("positive: phi(a* a) >= 0").ok


@pytest.mark.parametrize("name", ["z2", "z3", "s3"])
def test_dual_aqg(name):
    h = model(name).function_hopf()
    hd, phd, r = dual_aqg(h)
    assert r.ok
    assert hd.dim == h.dim


@pytest.mark.parametrize("name", ["z2", "z3", "s3"])
def test_multiplicative_unitary(name):
    m = model(name)
    for h in (m.function_hopf(), m.group_hopf()):
        assert multiplicative_unitary_checks(h).ok


def test_quantum_group_pairing():
    p = quantum_group_pairing(model("s3").function_hopf())
    assert check_pairing_axioms(p).ok


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_gram_of_any_matrix_is_psd(rows, cols, data):
    A = [[data.draw(scalars) for _ in range(cols)] for _ in range(rows)]
    M = [[sum((A[k][i].conjugate() * A[k][j] for k in range(rows)), ZERO) for j in range(cols)]
         for i in range(cols)]
    psd, rank = hermitian_psd(M)
    assert psd
    assert rank <= min(rows, cols)


def test_indefinite_matrix_is_not_psd():
    one, zero = ONE, ZERO
    assert hermitian_psd([[one, zero], [zero, -one]])[0] is False
    assert hermitian_psd([[zero, one], [one, zero]])[0] is False
    assert hermitian_psd([[Scalar(2), Scalar(0, 1)], [Scalar(0, -1), one]]) == (True, 2)


def _left_form(act):
    m = Model(act.name, act.group, act)
    rr = square_corners(rl_from_ll(dualize_yd(transformation_yd(act, m.pairing()))))["rr"]
    return m, rr


@pytest.mark.parametrize("name", ["z2-on-2points", "z3-on-z3", "s3-on-3points"])
def test_yd_quantum_both_forms(name):
    m = model(name)
    K = m.function_hopf()
    _, rr = _left_form(m.action)
    left = yd_quantum_check(rr.X, rr.alpha.map, rr.beta.map, K, "left")
    assert left.ok and left.data["yd"] == (True, True)
    yd = transformation_yd(m.action, m.pairing())
    right = yd_quantum_check(yd.X, yd.alpha.map, yd.beta.map, K, "right")
    assert right.ok and right.data["bc"] is True


def test_trivial_pair_on_commutative_carrier():
    G = cyclic_group(2)
    m = Model("z2", G, GroupAction(G, 3, [[0, 1, 2]] * 2))
    t = transformation_yd(m.action, m.pairing())
    q = yd_quantum_check(t.X, t.alpha.map, t.beta.map, m.function_hopf(), "right")
    assert q.ok and q.data["bc"] is True


def test_perturbed_theta_hat_fails_only_the_law():
    G = cyclic_group(2)
    act = GroupAction(G, 4, [[0, 1, 2, 3], [1, 0, 3, 2]])
    m, rr = _left_form(act)
    q = yd_quantum_check(rr.X, rr.alpha.map, involution_grading(4, [0, 2, 1, 3]), m.function_hopf(), "left")
    assert [c.name for c in q.failures()] == ["YD G-*-algebra law", "via rr: rr YD law"]
    assert q.get("routes agree").ok


def test_grading_by_the_acting_involution_commutes():
    # grading K(4) by the same involution the group acts with gives a YD G-*-algebra
    G = cyclic_group(2)
    act = GroupAction(G, 4, [[0, 1, 2, 3], [1, 0, 3, 2]])
    m, rr = _left_form(act)
    q = yd_quantum_check(rr.X, rr.alpha.map, involution_grading(4, [1, 0, 3, 2]), m.function_hopf(), "left")
    assert q.ok


def test_involution_grading_rejects_non_involution():
    with pytest.raises(ValueError):
        involution_grading(3, [1, 2, 0])


def test_bad_side_for_quantum_check():
    m = model("z2-on-2points")
    yd = transformation_yd(m.action, m.pairing())
    with pytest.raises(ValueError):
        yd_quantum_check(yd.X, yd.alpha.map, yd.beta.map, m.function_hopf(), "up")


def test_aqg_error_is_value_error():
    assert issubclass(AQGError, ValueError)
