import pytest

from cubicfano.groups import (
    UnknownGroup,
    a5_matrices,
    check_group_axioms,
    conjugacy_class,
    dihedral,
    element_order,
    enumerate_group,
    involutions,
    linear_characters,
    pair_order_histogram,
    psl2_element,
)


@pytest.mark.parametrize(
    "name, order, n_inv",
    [("z2", 2, 1), ("d2", 4, 3), ("d3", 6, 3), ("d5", 10, 5), ("d6", 12, 7), ("a5", 60, 15), ("psl2_11", 660, 55)],
)
def test_census(name, order, n_inv):
    G = enumerate_group(name)
    assert len(G) == order
    assert len(involutions(G)) == n_inv


@pytest.mark.parametrize("name", ["z2", "d2", "d3", "d5", "d6", "a5", "psl2_11"])
def test_axioms(name):
    check_group_axioms(enumerate_group(name), samples=300)


def test_psl2_structure():
    G = enumerate_group("psl2_11")
    assert sorted({element_order(G, g) for g in G.elements}) == [1, 2, 3, 5, 6, 11]
    # 55 choose 2 pairs split by product order
    assert pair_order_histogram(G) == {2: 165, 3: 330, 5: 660, 6: 330}
    assert sum(pair_order_histogram(G).values()) == 55 * 54 // 2
    # involutions form a single conjugacy class
    inv = involutions(G)
    assert sorted(conjugacy_class(G, inv[0])) == sorted(inv)


def test_psl2_canonical_representative():
    assert psl2_element(10, 0, 0, 10) == (1, 0, 0, 1)
    assert psl2_element(-1, 0, 0, -1) == (1, 0, 0, 1)
    with pytest.raises(ValueError):
        psl2_element(1, 1, 1, 1)
    G = enumerate_group("psl2_11")
    assert element_order(G, psl2_element(0, 1, -1, 0)) == 2


def test_a5_relations():
    G = enumerate_group("a5")
    a, b = (G.generators[k] for k in ("a", "b"))
    assert element_order(G, a) == 2
    assert element_order(G, b) == 3
    assert element_order(G, G.mul(a, b)) == 5
    assert pair_order_histogram(G) == {2: 15, 3: 30, 5: 60}


def test_a5_generator_matrix_entries():
    m = a5_matrices()
    assert [m["a"][i][i] for i in range(5)] == [-1, -1, 1, 1, 1]
    assert m["b"][4] == [0, 0, -2, -2, -1]


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 8, 12])
def test_dihedral_relations(n):
    G = dihedral(n)
    a, b = G.generators["a"], G.generators["b"]
    assert element_order(G, a) == n
    assert element_order(G, b) == 2
    assert G.mul(G.mul(b, a), b) == G.inverse(a)
    expected = n + (1 if n % 2 == 0 else 0)
    assert len(involutions(G)) == expected


def test_d6_histogram():
    assert pair_order_histogram(dihedral(6)) == {2: 9, 3: 6, 6: 6}


def test_linear_characters():
    assert set(linear_characters(dihedral(5))) == {"T", "L"}
    assert set(linear_characters(dihedral(4))) == {"T", "L", "L1", "L2"}
    with pytest.raises(UnknownGroup):
        linear_characters(enumerate_group("a5"))


def test_unknown_group():
    with pytest.raises(UnknownGroup):
        enumerate_group("s7")
