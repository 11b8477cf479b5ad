"""Signed permutation algebra against its matrix semantics."""

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polytope_forge.cubefamily import build_atlas, group_cube
from polytope_forge.signedperm import SignedPerm, act, block_pair


def matmul(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n))


signed_perms = st.builds(
    lambda perm, signs: SignedPerm(signs, perm),
    st.permutations(list(range(1, 5))),
    st.tuples(*[st.sampled_from((1, -1))] * 4),
)


@pytest.fixture(scope="module")
def atlas():
    return build_atlas()


def test_petrie_symmetry_display(atlas):
    assert atlas.pi == atlas.rho0 * atlas.rho1 * atlas.rho2 * atlas.rho3
    assert atlas.pi == SignedPerm.parse("(-1,1,1,1)·(4,3,2,1)")
    assert atlas.pi.matrix() == (
        (0, 0, 0, -1), (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0))


def test_compose_identity_is_neutral(atlas):
    ident = SignedPerm.identity(4)
    for g in (atlas.pi, atlas.mu0, atlas.sigma2):
        assert g * ident == g
        assert ident * g == g


def test_petrie_symmetry_has_period_eight(atlas):
    power = atlas.pi
    for _ in range(7):
        power = power * atlas.pi
    assert power == SignedPerm.identity(4)
    assert atlas.pi.order() == 8


@given(a=signed_perms, b=signed_perms)
def test_composition_matches_matrix_product(a, b):
    assert (a * b).matrix() == matmul(a.matrix(), b.matrix())


def test_composition_matches_matrix_product_inside_the_big_group():
    rng = random.Random(7)
    elements = list(group_cube())
    for _ in range(200):
        a, b = rng.choice(elements), rng.choice(elements)
        assert (a * b).matrix() == matmul(a.matrix(), b.matrix())


def test_inverse_of_identity():
    ident = SignedPerm.identity(4)
    assert ident.inverse() == ident


def test_inverse_of_petrie_symmetry_by_repeated_composition(atlas):
    # independent oracle: the seventh power, accumulated step by step
    seventh = atlas.pi
    for _ in range(6):
        seventh = seventh * atlas.pi
    assert atlas.pi.inverse() == seventh
    assert atlas.pi * atlas.pi.inverse() == SignedPerm.identity(4)


def test_reflections_are_involutions(atlas):
    for g in (atlas.rho0, atlas.rho1, atlas.rho2, atlas.rho3):
        assert g.inverse() == g
        assert g.is_involution()


@given(g=signed_perms)
def test_inverse_cancels(g):
    ident = SignedPerm.identity(4)
    assert g * g.inverse() == ident
    assert g.inverse() * g == ident


def test_action_on_base_vertex(atlas):
    assert atlas.pi.act((1, 1, 1, 1)) == (1, 1, 1, -1)
    assert atlas.sigma2.act((1, 1, 1, 1)) == (1, 1, 1, 1)
    assert SignedPerm.identity(4).act((1, -1, 1, -1)) == (1, -1, 1, -1)


def test_action_is_compatible_with_composition(atlas):
    rng = random.Random(11)
    elements = list(group_cube())
    points = [tuple(rng.choice((1, -1)) for _ in range(4)) for _ in range(8)]
    for _ in range(100):
        a, b = rng.choice(elements), rng.choice(elements)
        for p in points:
            assert act(act(p, a), b) == act(p, a * b)


def test_determinants(atlas):
    assert atlas.rho0.determinant() == -1
    assert SignedPerm.identity(4).determinant() == 1
    # oracle: a product of four reflections multiplies four -1 determinants
    expected = 1
    for g in (atlas.rho0, atlas.rho1, atlas.rho2, atlas.rho3):
        expected *= g.determinant()
    assert atlas.pi.determinant() == expected == 1


def test_determinant_is_a_homomorphism():
    rng = random.Random(3)
    elements = list(group_cube())
    for _ in range(200):
        a, b = rng.choice(elements), rng.choice(elements)
        assert (a * b).determinant() == a.determinant() * b.determinant()


def test_conjugation(atlas):
    negate_second = SignedPerm((1, -1, 1, 1), SignedPerm.identity(4).perm)
    assert atlas.rho0.conjugate(atlas.rho1) == negate_second
    assert atlas.pi.conjugate(SignedPerm.identity(4)) == atlas.pi
    for h in list(group_cube())[:50]:
        assert atlas.zeta.conjugate(h) == atlas.zeta


def test_block_pair_displays(atlas):
    assert block_pair(atlas.sigma1, atlas.sigma1_bar) == SignedPerm.parse(
        "(-1,1,1,1,1,1,1,-1)·(4,3,2,1)(5,6,7,8)")
    ident4 = SignedPerm.identity(4)
    assert block_pair(ident4, ident4) == SignedPerm.identity(8)
    assert (atlas.kappa1 * atlas.kappa3) ** 4 == block_pair(atlas.zeta, ident4)


def test_block_pair_is_an_embedding(atlas):
    rng = random.Random(5)
    elements = list(group_cube())
    for _ in range(100):
        a, b, c, d = (rng.choice(elements) for _ in range(4))
        assert block_pair(a, b) * block_pair(c, d) == block_pair(a * c, b * d)


def test_text_round_trip():
    rng = random.Random(9)
    for g in rng.sample(list(group_cube()), 40):
        assert SignedPerm.parse(str(g)) == g
    g8 = build_atlas().kappa2
    assert SignedPerm.parse(str(g8)) == g8


def test_dimension_mismatch_rejected(atlas):
    with pytest.raises(ValueError):
        atlas.pi * atlas.kappa1
    with pytest.raises(ValueError):
        atlas.pi.act((1, 1, 1, 1, 1, 1, 1, 1))


def test_invalid_constructions_rejected():
    with pytest.raises(ValueError):
        SignedPerm((1, 1, 1, 2), (1, 2, 3, 4))
    with pytest.raises(ValueError):
        SignedPerm((1, 1, 1, 1), (1, 2, 2, 4))
    with pytest.raises(ValueError):
        SignedPerm.parse("garbage")
