"""The matrix PROP: composition, tensor, symmetry, enrichment."""

import random

import pytest

from matprop import (
    BOOL, F2, NAT,
    Matrix, RigMismatchError, ShapeError,
    add, compose, elementary, format_matrix, from_ints, generator_matrix,
    identity, map_entries, nat_embedding, parse_matrix, symmetry, tensor,
    transpose, zeros,
)
from matprop.axioms import bimonoid_matrix_checks

from helpers import ALL_RIGS, naive_compose, naive_tensor, random_matrix


def test_compose_row_example():
    # (1 1) after the block of a wire and a merge gives the triple merge
    g = from_ints(NAT, [[1, 1]])
    f = from_ints(NAT, [[1, 0, 0], [0, 1, 1]])
    assert compose(g, f) == from_ints(NAT, [[1, 1, 1]])


@pytest.mark.parametrize("rig", ALL_RIGS, ids=lambda r: r.name)
def test_compose_matches_naive_oracle(rig):
    rng = random.Random(101)
    for _ in range(40):
        k = rng.randint(0, 3)
        f = random_matrix(rng, rig, dom=rng.randint(0, 3), cod=k)
        g = random_matrix(rng, rig, dom=k, cod=rng.randint(0, 3))
        assert compose(g, f) == naive_compose(g, f)


def test_compose_against_fixed_nat_case():
    rng = random.Random(5)
    f = random_matrix(rng, NAT, dom=2, cod=3)
    g = random_matrix(rng, NAT, dom=3, cod=2)
    assert compose(g, f) == naive_compose(g, f)


def test_identity_laws():
    rng = random.Random(7)
    assert identity(NAT, 0) == Matrix(NAT, 0, 0, ())
    assert identity(NAT, 2) == from_ints(NAT, [[1, 0], [0, 1]])
    for rig in ALL_RIGS:
        f = random_matrix(rng, rig)
        assert compose(identity(rig, f.cod), f) == f
        assert compose(f, identity(rig, f.dom)) == f
    f = random_matrix(rng, NAT, dom=2, cod=3)
    assert compose(identity(NAT, 3), f) == f


def test_compose_associative():
    rng = random.Random(11)
    for rig in ALL_RIGS:
        for _ in range(25):
            a, b = rng.randint(0, 3), rng.randint(0, 3)
            f = random_matrix(rng, rig, cod=a)
            g = random_matrix(rng, rig, dom=a, cod=b)
            h = random_matrix(rng, rig, dom=b)
            assert compose(h, compose(g, f)) == compose(compose(h, g), f)


def test_shape_and_rig_mismatch_errors():
    f = from_ints(NAT, [[1, 2]])
    with pytest.raises(ShapeError):
        compose(f, f)
    with pytest.raises(ShapeError):
        add(f, from_ints(NAT, [[1], [2]]))
    with pytest.raises(RigMismatchError):
        compose(f, from_ints(BOOL, [[1], [1]]))
    with pytest.raises(RigMismatchError):
        tensor(f, from_ints(BOOL, [[1]]))


def test_tensor_of_scalars_is_diagonal():
    a = from_ints(NAT, [[2]])
    b = from_ints(NAT, [[3]])
    assert tensor(a, b) == from_ints(NAT, [[2, 0], [0, 3]])


def test_tensor_unit_is_empty_matrix():
    rng = random.Random(13)
    unit = Matrix(NAT, 0, 0, ())
    f = random_matrix(rng, NAT)
    assert tensor(f, unit) == f
    assert tensor(unit, f) == f


def test_tensor_matches_block_oracle():
    rng = random.Random(17)
    f = random_matrix(rng, BOOL, dom=1, cod=2)
    g = random_matrix(rng, BOOL, dom=2, cod=1)
    assert tensor(f, g) == naive_tensor(f, g)
    for rig in ALL_RIGS:
        for _ in range(25):
            x = random_matrix(rng, rig, max_side=3)
            y = random_matrix(rng, rig, max_side=3)
            assert tensor(x, y) == naive_tensor(x, y)


def test_composing_tensor_built_matrices_matches_oracle():
    rng = random.Random(18)
    for rig in ALL_RIGS:
        for _ in range(15):
            a = random_matrix(rng, rig, max_side=2)
            b = random_matrix(rng, rig, max_side=2)
            block = tensor(a, b)
            c = random_matrix(rng, rig, cod=block.dom, max_side=3)
            assert compose(block, c) == naive_compose(block, c)


def test_tensor_associative_and_interchange():
    rng = random.Random(19)
    for rig in ALL_RIGS:
        for _ in range(15):
            f = random_matrix(rng, rig, max_side=2)
            g = random_matrix(rng, rig, max_side=2)
            h = random_matrix(rng, rig, max_side=2)
            assert tensor(tensor(f, g), h) == tensor(f, tensor(g, h))
            a, b = rng.randint(0, 2), rng.randint(0, 2)
            f1 = random_matrix(rng, rig, cod=a, max_side=2)
            g1 = random_matrix(rng, rig, dom=a, max_side=2)
            f2 = random_matrix(rng, rig, cod=b, max_side=2)
            g2 = random_matrix(rng, rig, dom=b, max_side=2)
            assert compose(tensor(g1, g2), tensor(f1, f2)) == tensor(
                compose(g1, f1), compose(g2, f2)
            )


def test_symmetry_fixed_cases():
    assert symmetry(NAT, 1, 1) == from_ints(NAT, [[0, 1], [1, 0]])
    assert symmetry(NAT, 3, 0) == identity(NAT, 3)
    assert symmetry(NAT, 0, 2) == identity(NAT, 2)
    for m in range(4):
        for n in range(4):
            assert compose(symmetry(NAT, n, m), symmetry(NAT, m, n)) == identity(
                NAT, m + n
            )


def test_symmetry_naturality():
    rng = random.Random(23)
    for rig in ALL_RIGS:
        for _ in range(15):
            f = random_matrix(rng, rig, max_side=3)
            g = random_matrix(rng, rig, max_side=3)
            lhs = compose(symmetry(rig, f.cod, g.cod), tensor(f, g))
            rhs = compose(tensor(g, f), symmetry(rig, f.dom, g.dom))
            assert lhs == rhs


def test_transpose_swaps_generators():
    for rig in ALL_RIGS:
        assert transpose(generator_matrix("mu", rig)) == generator_matrix("delta", rig)
        assert transpose(generator_matrix("eta", rig)) == generator_matrix("eps", rig)


def test_transpose_involution_and_contravariance():
    rng = random.Random(29)
    for rig in ALL_RIGS:
        f = random_matrix(rng, rig)
        assert transpose(transpose(f)) == f
        k = rng.randint(0, 3)
        f = random_matrix(rng, rig, cod=k)
        g = random_matrix(rng, rig, dom=k)
        assert transpose(compose(g, f)) == compose(transpose(f), transpose(g))


def test_elementary_examples():
    one = NAT.one_element()
    e12 = elementary(1, 2, 2, 2, one)
    e21 = elementary(2, 1, 2, 2, one)
    assert add(e12, e21) == symmetry(NAT, 1, 1)
    r = NAT.element(7)
    assert elementary(1, 1, 1, 1, r) == from_ints(NAT, [[7]])
    with pytest.raises(IndexError):
        elementary(0, 1, 2, 2, one)
    with pytest.raises(IndexError):
        elementary(1, 3, 2, 2, one)


@pytest.mark.parametrize("rig", ALL_RIGS, ids=lambda r: r.name)
def test_every_matrix_is_a_sum_of_elementaries(rig):
    rng = random.Random(31)
    for _ in range(20):
        m = random_matrix(rng, rig, dom=rng.randint(1, 3), cod=rng.randint(1, 3))
        acc = zeros(rig, m.dom, m.cod)
        for i in range(m.cod):
            for j in range(m.dom):
                acc = add(acc, elementary(i + 1, j + 1, m.cod, m.dom, m.entry(i, j)))
        assert acc == m


def test_generator_matrices():
    assert generator_matrix("mu", NAT) == from_ints(NAT, [[1, 1]])
    eta = generator_matrix("eta", NAT)
    assert (eta.dom, eta.cod) == (0, 1)
    eps = generator_matrix("eps", NAT)
    assert (eps.dom, eps.cod) == (1, 0)
    assert generator_matrix("delta", NAT) == transpose(generator_matrix("mu", NAT))


def test_add_examples():
    assert add(from_ints(NAT, [[1, 0], [0, 1]]), from_ints(NAT, [[0, 1], [1, 0]])) == \
        from_ints(NAT, [[1, 1], [1, 1]])
    rng = random.Random(37)
    f = random_matrix(rng, BOOL)
    assert add(f, f) == f
    g = random_matrix(rng, F2)
    assert add(g, g) == zeros(F2, g.dom, g.cod)


@pytest.mark.parametrize("rig", ALL_RIGS, ids=lambda r: r.name)
def test_enriched_structure(rig):
    rng = random.Random(41)
    for _ in range(30):
        dom, cod = rng.randint(0, 3), rng.randint(0, 3)
        f = random_matrix(rng, rig, dom=dom, cod=cod)
        g = random_matrix(rng, rig, dom=dom, cod=cod)
        h = random_matrix(rng, rig, dom=dom, cod=cod)
        zero = zeros(rig, dom, cod)
        assert add(add(f, g), h) == add(f, add(g, h))
        assert add(f, g) == add(g, f)
        assert add(f, zero) == f
        k = random_matrix(rng, rig, dom=cod)
        assert compose(k, add(f, g)) == add(compose(k, f), compose(k, g))
        k2 = random_matrix(rng, rig, dom=cod, cod=k.cod)
        assert compose(add(k, k2), f) == add(compose(k, f), compose(k2, f))


@pytest.mark.parametrize("rig", ALL_RIGS, ids=lambda r: r.name)
def test_endomorphisms_of_one_wire_form_a_rig(rig):
    rng = random.Random(43)
    zero = zeros(rig, 1, 1)
    one = identity(rig, 1)
    for _ in range(60):
        a = random_matrix(rng, rig, dom=1, cod=1)
        b = random_matrix(rng, rig, dom=1, cod=1)
        c = random_matrix(rng, rig, dom=1, cod=1)
        assert add(add(a, b), c) == add(a, add(b, c))
        assert add(a, b) == add(b, a)
        assert add(a, zero) == a
        assert compose(compose(a, b), c) == compose(a, compose(b, c))
        assert compose(a, b) == compose(b, a)
        assert compose(a, one) == a
        assert compose(a, add(b, c)) == add(compose(a, b), compose(a, c))
        assert compose(a, zero) == zero


def test_zero_object_is_initial_and_terminal():
    # shape forces the entries: there is exactly one matrix n x 0 and 0 x n
    for n in range(4):
        into = zeros(NAT, 0, n)
        out = zeros(NAT, n, 0)
        assert into.entries == () and out.entries == ()
        assert compose(out, into) == zeros(NAT, 0, 0)
        f = from_ints(NAT, [[1] * 2] * n, dom=2)
        assert compose(out, f) == zeros(NAT, 2, 0)


@pytest.mark.parametrize("rig", ALL_RIGS, ids=lambda r: r.name)
def test_bimonoid_axioms_per_rig(rig):
    for check in bimonoid_matrix_checks(rig):
        assert check.holds, check.name


def test_map_entries():
    h = nat_embedding(BOOL)
    m = from_ints(NAT, [[2, 0, 1]])
    assert map_entries(h, m) == from_ints(BOOL, [[1, 0, 1]])
    from matprop import identity_hom

    rng = random.Random(47)
    f = random_matrix(rng, NAT)
    assert map_entries(identity_hom(NAT), f) == f
    for _ in range(30):
        k = rng.randint(0, 3)
        f = random_matrix(rng, NAT, cod=k)
        g = random_matrix(rng, NAT, dom=k)
        assert map_entries(h, compose(g, f)) == compose(map_entries(h, g), map_entries(h, f))
        x = random_matrix(rng, NAT, max_side=2)
        y = random_matrix(rng, NAT, max_side=2)
        assert map_entries(h, tensor(x, y)) == tensor(map_entries(h, x), map_entries(h, y))
        z = random_matrix(rng, NAT, dom=x.dom, cod=x.cod)
        assert map_entries(h, add(x, z)) == add(map_entries(h, x), map_entries(h, z))
    with pytest.raises(RigMismatchError):
        map_entries(h, from_ints(BOOL, [[1]]))


@pytest.mark.parametrize("rig", ALL_RIGS, ids=lambda r: r.name)
def test_text_format_roundtrip(rig):
    rng = random.Random(53)
    for _ in range(40):
        m = random_matrix(rng, rig)
        assert parse_matrix(format_matrix(m)) == m
    # zero-dimensional matrices are header-only
    z = zeros(rig, 0, 3)
    assert format_matrix(z).strip() == f"{rig.name} 3 0"
    assert parse_matrix(format_matrix(z)) == z
    z2 = zeros(rig, 2, 0)
    assert parse_matrix(format_matrix(z2)) == z2
