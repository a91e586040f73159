import pytest
from hypothesis import given
from hypothesis import strategies as st

from ydlab.groups import (
    CATALOG_NAMES,
    ActionError,
    FiniteGroup,
    GroupAction,
    GroupError,
    canonical_group_pairing,
    catalog,
    cyclic_group,
    dihedral_group,
    expected_multiplier,
    product_group,
    regular_action,
    symmetric_group,
    trivial_action,
)
from ydlab.scalar import ONE

LOOP5 = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]


@pytest.mark.parametrize("name", CATALOG_NAMES)
def test_catalog_entries(name):
    G, act = catalog(name)
    assert G.table[0] == list(range(G.n))
    if act is not None:
        assert act.group is G


def test_orders():
    assert [catalog(n)[0].n for n in ("z2", "z3", "z4", "klein4", "s3", "d4")] == [2, 3, 4, 4, 6, 8]
    assert not symmetric_group(3).is_abelian()
    assert product_group(cyclic_group(2), cyclic_group(2)).is_abelian()
    assert not dihedral_group(4).is_abelian()


def test_inverses():
    G = symmetric_group(3)
    for g in range(G.n):
        assert G.mul(g, G.inv[g]) == 0 == G.mul(G.inv[g], g)


def test_unknown_catalog_name():
    with pytest.raises(KeyError):
        catalog("a5")


def test_loop_is_rejected_with_triple():
    with pytest.raises(GroupError, match=r"not associative: \(. .\) . != . \(. .\)"):
        FiniteGroup("eabcd", LOOP5, "loop")


@pytest.mark.parametrize("table, message", [
    ([[0, 1], [1]], "table must be"),
    ([[0, 1], [1, 2]], "out of range"),
    ([[1, 0], [0, 1]], "not an identity"),
    ([[0, 1, 2], [1, 1, 1], [2, 1, 1]], "no inverse"),
])
def test_table_validation(table, message):
    with pytest.raises(GroupError, match=message):
        FiniteGroup([str(i) for i in range(len(table))], table)


def test_action_validation():
    G = cyclic_group(2)
    with pytest.raises(ActionError, match="not a permutation"):
        GroupAction(G, 2, [[0, 1], [0, 0]])
    with pytest.raises(ActionError, match="identity"):
        GroupAction(G, 2, [[1, 0], [0, 1]])
    with pytest.raises(ActionError, match="one permutation per"):
        GroupAction(G, 2, [[0, 1]])


def test_non_action_rejected():
    G = cyclic_group(3)
    with pytest.raises(ActionError, match="not compatible with the group law"):
        GroupAction(G, 3, [[0, 1, 2], [1, 2, 0], [1, 0, 2]])


def test_regular_and_trivial_actions():
    G = symmetric_group(3)
    assert regular_action(G).m == 6
    t = trivial_action(G, 4)
    assert all(t.act(g, s) == s for g in range(6) for s in range(4))


def test_canonical_pairing_and_multiplier():
    G = cyclic_group(2)
    p = canonical_group_pairing(G)
    assert p({0: ONE}, {0: ONE}) == ONE and p({0: ONE}, {1: ONE}) == 0
    assert expected_multiplier(G).sparse() == {0: ONE, 3: ONE}


@given(st.sampled_from(["z3", "z4", "klein4", "s3"]), st.data())
def test_single_entry_perturbation_is_rejected(name, data):
    # changing one entry of a group table breaks the Latin property, so the result is never a group
    G, _ = catalog(name)
    n = G.n
    i = data.draw(st.integers(0, n - 1))
    j = data.draw(st.integers(0, n - 1))
    v = data.draw(st.integers(0, n - 1).filter(lambda v: v != G.table[i][j]))
    table = [list(r) for r in G.table]
    table[i][j] = v
    with pytest.raises(GroupError):
        FiniteGroup(G.labels, table)


@given(st.sampled_from(["z2-on-2points", "z3-on-z3", "s3-on-3points"]), st.data())
def test_swapping_two_images_breaks_an_action(name, data):
    G, act = catalog(name)
    g = data.draw(st.integers(1, G.n - 1))
    s = data.draw(st.integers(0, act.m - 1))
    t = data.draw(st.integers(0, act.m - 1).filter(lambda t: act.act(g, t) != act.act(g, s)))
    perm = [list(p) for p in act.perm]
    perm[g][s], perm[g][t] = perm[g][t], perm[g][s]
    # the result is a bijection, and it is an action only by accident when the
    # modified permutation still defines a homomorphism; check against brute force
    ok = all(perm[G.mul(a, b)][x] == perm[a][perm[b][x]]
             for a in range(G.n) for b in range(G.n) for x in range(act.m))
    if ok:
        GroupAction(G, act.m, perm)
    else:
        with pytest.raises(ActionError):
            GroupAction(G, act.m, perm)
