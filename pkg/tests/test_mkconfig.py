"""Exact field arithmetic and the configuration of eight points and lines."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polytope_forge import mkconfig as mk
from polytope_forge.cubefamily import build_atlas, point_labels
from polytope_forge.mkconfig import ONE, QF, ZERO


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
field_elements = st.builds(QF, rationals, rationals, rationals, rationals)


# -- the field -------------------------------------------------------------------


@given(x=field_elements, y=field_elements, z=field_elements)
def test_multiplication_is_associative(x, y, z):
    assert (x * y) * z == x * (y * z)


@given(x=field_elements, y=field_elements, z=field_elements)
def test_multiplication_distributes(x, y, z):
    assert x * (y + z) == x * y + x * z


@given(x=field_elements, y=field_elements)
def test_conjugations_are_ring_automorphisms(x, y):
    assert (x * y).conj_i() == x.conj_i() * y.conj_i()
    assert (x * y).conj_sqrt3() == x.conj_sqrt3() * y.conj_sqrt3()
    assert (x + y).conj_i() == x.conj_i() + y.conj_i()
    assert x.conj_i().conj_i() == x


@given(x=field_elements, y=field_elements)
def test_norm_is_multiplicative(x, y):
    assert (x * y).norm() == x.norm() * y.norm()


@given(x=field_elements)
def test_inverse(x):
    if x.is_zero():
        with pytest.raises(ZeroDivisionError):
            x.inverse()
    else:
        assert x * x.inverse() == ONE


def test_field_constants():
    r = QF.r()
    assert r * r == QF(4) - 2 * QF.sqrt3()
    assert QF.i() * QF.i() == QF(-1)
    assert QF.sqrt3() * QF.sqrt3() == QF(3)


# -- the complex structure ----------------------------------------------------------


def test_j_squares_to_minus_identity():
    j = mk.build_J()
    minus_i4 = tuple(tuple(-x for x in row) for row in
                     tuple(tuple(ONE if a == b else ZERO for b in range(4))
                           for a in range(4)))
    assert mk.mat_mul(j, j) == minus_i4


def test_j_sends_basis_rows_to_their_partners():
    a1, b1, a2, b2 = mk.build_L()
    j = mk.build_J()
    assert mk.row_times_matrix(a1, j) == b1
    assert mk.row_times_matrix(a2, j) == b2


def test_i_of_i_u_is_minus_u():
    i = QF.i()
    for point in [(1, 1, 1, 1), (1, -1, 1, -1), (2, 0, 3, -1)]:
        u = mk.lift(point)
        twice = mk.apply_complex(i, mk.apply_complex(i, u))
        assert twice == tuple(-x for x in u)


def test_basis_orthogonality_relations():
    a1, b1, a2, b2 = mk.build_L()
    assert mk.dot(a1, a1) == mk.dot(b1, b1)
    assert mk.dot(a1, b1) == ZERO
    assert mk.dot(a1, a2) == ZERO
    # a rational rescaling keeps every orthogonality relation
    scaled = [mk.scalar_mul(QF(Fraction(3, 7)), row) for row in (a1, b1, a2, b2)]
    assert mk.dot(scaled[0], scaled[1]) == ZERO
    assert mk.dot(scaled[0], scaled[0]) == mk.dot(scaled[1], scaled[1])


# -- complexification -----------------------------------------------------------------


def test_complexify_basis_vector():
    a1 = mk.build_L()[0]
    z1, z2 = mk.complexify(a1)
    assert z1 == ONE and z2 == ZERO


def test_complexify_labelled_points():
    labeling = point_labels()
    r = QF.r()
    i = QF.i()
    z1, z2 = mk.complexify(labeling.point_of[0])
    assert (z1, z2) == (r, ONE - i)
    z1n, z2n = mk.complexify(labeling.point_of[4])
    assert (z1n, z2n) == (-r, -ONE + i)


@given(a=rationals, b=rationals)
def test_complexify_is_complex_linear(a, b):
    scalar = QF(a, 0, b, 0)
    u = mk.lift((1, 1, 1, -1))
    w = mk.lift((1, -1, 1, 1))
    lhs = mk.complexify(mk.vec_add(u, mk.apply_complex(scalar, w)))
    zu = mk.complexify(u)
    zw = mk.complexify(w)
    rhs = (zu[0] + scalar * zw[0], zu[1] + scalar * zw[1])
    assert lhs == rhs


# -- the configuration -----------------------------------------------------------------


@pytest.fixture(scope="module")
def config():
    return mk.build_configuration()


def test_incidence_matrix(config):
    assert config.incidence_row_sums() == (3,) * 8
    assert config.incidence_col_sums() == (3,) * 8
    assert {ln.points for ln in config.lines} == {
        tuple(sorted(line)) for line in mk.CONFIGURATION_LINES}


def test_each_line_contains_exactly_its_three_points(config):
    for line in config.lines:
        on = [p.label for p in config.points if line.contains(p)]
        assert tuple(on) == line.points


def test_vertex_zero_lies_on_line_013(config):
    line = next(ln for ln in config.lines if ln.points == (0, 1, 3))
    assert line.contains(config.points[0])


def test_line_167_equation_matches_display(config):
    assert mk.line_matches_paper(config)


def test_coordinate_table_matches_literally(config):
    cmp = mk.compare_with_table(config)
    assert cmp["matches"] and cmp["literal"]


def test_published_last_row_is_the_antipode_of_point_three():
    # the printed table labels its final row 0; decoding the coordinates
    # shows it is the negation of point 3, hence point 7
    table = mk.table_coordinates()
    z1, z2 = table[7]
    assert (z1, z2) == (-table[3][0], -table[3][1])
    decoded = mk.table_labeling()
    assert decoded.point_of[7] == tuple(-x for x in decoded.point_of[3])


def test_table_policy_agrees_with_constraint_solve():
    assert mk.table_labeling().point_of == point_labels().point_of


def test_central_symmetry(config):
    assert mk.central_symmetry_pairs(config)


def test_plane_shadows(config):
    assert mk.plane_shadow_positions(config) == mk.expected_shadow_positions()


def test_mutually_inscribed_in_three_ways(config):
    # construction already asserts this; re-run the check standalone
    mk._check_mutually_inscribed(config)


def test_relabelings_form_a_group_of_order_48():
    relabelings = mk.configuration_relabelings()
    assert len(relabelings) == 48
    perms = set(relabelings)
    for p in list(perms)[:8]:
        for q in list(perms)[:8]:
            assert tuple(p[q[i]] for i in range(8)) in perms


# -- the unitary triangle group ----------------------------------------------------------


def test_group_333_report():
    report = mk.group_333()
    assert report["gamma1_order_3"]
    assert report["gamma2_order_3"]  # a consequence of the braid relation
    assert report["braid_relation"]
    assert report["relators_hold"]
    assert report["group_order"] == 24
    assert report["centralizer_order"] == 24
    assert report["centralizer_equals_group"]
    assert report["presentation_index"] == 24


def test_gamma1_is_an_unsigned_three_cycle():
    atlas = build_atlas()
    assert atlas.gamma1.signs == (1, 1, 1, 1)
    assert atlas.gamma1.cycles() == ((1, 4, 2),)


def test_j_commutes_with_exactly_the_triangle_group():
    report = mk.group_333()
    assert report["centralizer_equals_group"]


def test_cross_polytope():
    report = mk.cross_polytope_check()
    assert all(report.values())


def test_collinearity_guard():
    labeling = point_labels()
    pts = []
    for label in (0, 1, 2):
        z1, z2 = mk.complexify(labeling.point_of[label])
        pts.append(mk.MKPoint(label=label, ambient=labeling.point_of[label],
                              z1=z1, z2=z2))
    with pytest.raises(mk.CollinearityFailure):
        mk._line_through(*pts)  # 0, 1, 2 are not collinear
