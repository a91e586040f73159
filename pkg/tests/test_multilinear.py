from hypothesis import given
from hypothesis import strategies as st

from conftest import model
from strategies import scalars
from ydlab.groups import expected_multiplier
from ydlab.multilinear import (
    LinearMap,
    NonUnique,
    NoSolution,
    Tensor,
    apply_on_legs,
    flip,
    kron_maps,
    leg_embed,
    left_inverse,
    map_legs,
    permute_legs,
    ravel,
    solve_exact,
    tensor_product,
    unravel,
)
from ydlab.pairing import multiplier_system
from ydlab.scalar import ONE, ZERO, Scalar


def tensors(shape):
    n = 1
    for d in shape:
        n *= d
    return st.lists(scalars, min_size=n, max_size=n).map(lambda e: Tensor(shape, e))


def test_basis_product():
    t = tensor_product(Tensor((2,), [1, 0]), Tensor((2,), [0, 1]))
    assert t.shape == (2, 2)
    assert t.entries == (ZERO, ONE, ZERO, ZERO)


def test_product_with_unit_leg():
    x = Tensor((3,), [1, 2, 3])
    assert tensor_product(x, Tensor((1,), [1])).reshape((3,)) == x


def test_ravel_unravel():
    shape = (2, 3, 4)
    for k in range(24):
        assert ravel(unravel(k, shape), shape) == k


def test_leg_embed_identity_and_fill():
    t = Tensor((2, 3), range(6))
    assert leg_embed(t, (0, 1), (2, 3)) == t
    e = leg_embed(Tensor((2,), [1, 2]), (1,), (3, 2), [Tensor((3,), [1, 0, 0])])
    assert e[(0, 0)] == 1 and e[(0, 1)] == 2 and e[(1, 1)] == 0


def test_flip_of_multiplier_z2():
    U = expected_multiplier(model("z2").group)
    F = flip(U)
    assert F.shape == (2, 2)
    for g in range(2):
        for h in range(2):
            assert F[(h, g)] == U[(g, h)]


@given(tensors((2, 3, 2)))
def test_flip_involution(t):
    assert flip(flip(t, 0, 2), 0, 2) == t
    assert permute_legs(permute_legs(t, (1, 2, 0)), (2, 0, 1)) == t


@given(tensors((2, 2)), tensors((3,)))
def test_serialize_round_trip(a, b):
    t = tensor_product(a, b)
    assert Tensor.deserialize(t.serialize()) == t


def test_solve_identity():
    b = Tensor((3,), [1, Scalar(0, 1), 5])
    assert solve_exact(LinearMap.identity(3), b) == b


def test_solve_rank_one():
    A = LinearMap.from_matrix([[1, 2], [2, 4]])
    sol = solve_exact(A, Tensor((2,), [3, 6]))
    assert isinstance(sol, NonUnique)
    assert len(sol.kernel) == 1
    k = sol.kernel[0]
    assert k[0] + 2 * k[1] == 0
    assert isinstance(solve_exact(A, Tensor((2,), [1, 0])), NoSolution)


def test_solve_multiplier_system_z3():
    p = model("z3").pairing()
    sol = solve_exact(multiplier_system(p), p.P)
    assert sol == expected_multiplier(model("z3").group)


def test_left_inverse():
    M = LinearMap.from_matrix([[1, 0], [1, 1], [0, 2]])
    L = left_inverse(M)
    assert (L @ M).cols == LinearMap.identity(2).cols


def test_left_inverse_rejects_non_injective():
    import pytest

    with pytest.raises(ValueError):
        left_inverse(LinearMap.from_matrix([[1, 1], [1, 1]]))


def test_map_legs_matches_kron():
    f = LinearMap.from_matrix([[1, 2], [0, 1]])
    g = LinearMap.from_matrix([[0, 1, 0], [1, 0, 1], [2, 0, 0]])
    fg = kron_maps(f, g)
    for k in range(6):
        x = {k: ONE}
        assert map_legs(x, (2, 3), {0: f, 1: g})[0] == fg.cols[k]


def test_apply_on_legs_restores_positions():
    s = LinearMap.from_function((2, 2), (2, 2), lambda k: {(k % 2) * 2 + k // 2: ONE})
    x = {ravel((1, 0, 0), (2, 3, 2)): ONE}
    y, shape = apply_on_legs(x, (2, 3, 2), (0, 2), s)
    assert shape == (2, 3, 2)
    assert y == {ravel((0, 0, 1), (2, 3, 2)): ONE}


def test_inverse_and_rank():
    M = LinearMap.from_matrix([[2, 1], [1, 1]])
    assert M.rank() == 2 and M.is_bijective()
    assert (M.inverse() @ M).cols == LinearMap.identity(2).cols
    assert LinearMap.from_matrix([[1, 1], [1, 1]]).kernel()
