"""Incidence structures: Wythoff construction, quotients, colourful
polytopes, classification, coverings."""

import itertools

import pytest

from polytope_forge.cubefamily import (
    build_atlas,
    build_cube,
    build_hemi,
    build_map,
    build_roli,
    group_cube,
    group_cover,
    group_rotation_sigma,
)
from polytope_forge.groupcore import ConcreteGroup
from polytope_forge.polycore import (
    Classification,
    ColoredGraph,
    ImproperColouring,
    NotAPolytope,
    NotCentral,
    NotACovering,
    RankedIncidenceStructure,
    central_quotient,
    classify,
    colourful_polytope,
    coset_face_action,
    coset_geometry,
    polytope_from_reflections,
    verify_covering,
)


@pytest.fixture(scope="module")
def atlas():
    return build_atlas()


# -- Wythoff construction ------------------------------------------------------


def test_cube_f_vector():
    assert build_cube().structure.f_vector == (16, 32, 24, 8)


def test_cube_flag_count_against_chain_oracle():
    # oracle: count (vertex, edge, square, cube-facet) chains directly from
    # the sign-vector combinatorics, never touching the structure
    count = 0
    verts = list(itertools.product((1, -1), repeat=4))
    for v in verts:
        for e_axis in range(4):  # edge direction
            for s_axis in range(4):  # second free direction of the square
                if s_axis == e_axis:
                    continue
                for c_axis in range(4):  # third free direction of the facet
                    if c_axis in (e_axis, s_axis):
                        continue
                    count += 1
    assert count == 384
    assert len(build_cube().structure.flags()) == 384


def test_segment_from_single_reflection(atlas):
    g = ConcreteGroup.generate({"r": atlas.rho0})
    struct = polytope_from_reflections(g)
    assert struct.rank == 1
    assert struct.f_vector == (2,)
    assert len(struct.flags()) == 2


def test_cover_f_vector_against_coset_count_oracle(atlas):
    t = group_cover()
    taus = t.generator_list()
    expected = []
    for j in range(4):
        rest = [g for i, g in enumerate(taus) if i != j]
        expected.append(len(t) // len(ConcreteGroup.generate(rest)))
    assert expected == [32, 64, 24, 8]
    struct = polytope_from_reflections(t)
    assert struct.f_vector == tuple(expected)


def test_coset_geometry_map_f_vector_oracle(atlas):
    # stabilizer orders 3, 2, 8 force 48/3, 48/2, 48/8 faces
    bundle = build_map()
    assert bundle.structure_cosets.f_vector == (48 // 3, 48 // 2, 48 // 8)


def test_coset_geometry_agrees_with_reflection_construction():
    g = group_cube()
    gens = g.generator_list()
    subgroups = [g.subgroup([x for i, x in enumerate(gens) if i != j])
                 for j in range(4)]
    direct = coset_geometry(g, subgroups)
    wythoff = polytope_from_reflections(g)
    assert direct.faces_by_rank == wythoff.faces_by_rank
    assert all(direct.incident(a, b) == wythoff.incident(a, b)
               for a in direct.all_refs() for b in direct.all_refs()
               if a[0] != b[0])


def test_roli_coset_geometry_f_vector():
    assert build_roli().structure.f_vector == (16, 32, 12, 4)


def test_degenerate_coset_geometry_rejected(atlas):
    g = ConcreteGroup.generate({"a": atlas.rho0, "b": atlas.rho1})
    sub = g.subgroup([atlas.rho0])
    with pytest.raises(NotAPolytope):
        coset_geometry(g, [sub, sub])


# -- flags, classification -----------------------------------------------------


def test_flag_graph_edges_carry_ranks():
    struct = build_cube().structure
    graph = struct.flag_graph()
    assert graph.number_of_nodes() == 384
    ranks = {data["rank"] for _, _, data in graph.edges(data=True)}
    assert ranks == {0, 1, 2, 3}
    # every flag has exactly one neighbour per rank
    assert all(deg == 4 for _, deg in graph.degree())


def test_flag_membership_checks():
    struct = build_cube().structure
    flag = struct.flags()[0]
    refs = [(r, i) for r, i in enumerate(flag)]
    assert struct.is_flag(refs)
    off_edge = next(v for v in struct.refs(0) if not struct.incident(v, refs[1]))
    assert not struct.is_flag([off_edge] + refs[1:])
    assert not struct.is_flag(refs[:3])


def test_reflection_construction_rejects_bad_generators(atlas):
    from polytope_forge.polycore import ConditionFailed
    # reordering breaks the linear-diagram commutation
    bad = ConcreteGroup.generate(
        {"a": atlas.rho0, "b": atlas.rho2, "c": atlas.rho1})
    with pytest.raises(ConditionFailed):
        polytope_from_reflections(bad)
    # non-involutory generators are rejected outright
    with pytest.raises(ConditionFailed):
        polytope_from_reflections(ConcreteGroup.generate({"p": atlas.pi}))


def test_classification_regular_chiral_other(atlas):
    cube = build_cube().structure
    maps = [coset_face_action(cube, g) for g in group_cube().generator_list()]
    assert classify(cube, maps).kind is Classification.REGULAR

    roli = build_roli().structure
    rmaps = [coset_face_action(roli, g)
             for g in group_rotation_sigma().generator_list()]
    res = classify(roli, rmaps)
    assert res.kind is Classification.CHIRAL
    assert res.orbit_count == 2 and res.adjacent_pairs_split

    # a single reflection generates far too little: neither regular nor chiral
    tiny = classify(cube, [coset_face_action(cube, atlas.rho0)])
    assert tiny.kind is Classification.OTHER


def test_schlafli_types():
    assert build_cube().structure.schlafli_type() == (4, 3, 3)
    assert build_map().structure.schlafli_type() == (8, 3)
    assert build_roli().structure.schlafli_type() == (8, 3, 3)


# -- central quotient ----------------------------------------------------------


def test_hemi_quotient(atlas):
    hemi = build_hemi()
    assert hemi.structure.f_vector == (8, 16, 12, 4)
    assert hemi.quotient_group_order == 192
    assert hemi.generator_product_order == 4


def test_quotient_by_identity_is_isomorphic(atlas):
    cube = build_cube().structure
    same = central_quotient(cube, group_cube().identity)
    assert same.f_vector == cube.f_vector
    assert same.isomorphic_to(cube)


def test_quotient_by_noncentral_element_rejected(atlas):
    with pytest.raises(NotCentral):
        central_quotient(build_cube().structure, atlas.rho0)


def test_quotient_by_face_fixing_involution_rejected(atlas):
    # sign flips of the first two coordinates commute; the first one fixes
    # its own edge-coset in the resulting digon
    from polytope_forge.polycore import NotFree
    flip1 = atlas.rho0
    flip2 = atlas.rho0.conjugate(atlas.rho1)
    digon = polytope_from_reflections(
        ConcreteGroup.generate({"a": flip1, "b": flip2}))
    assert digon.f_vector == (2, 2)
    with pytest.raises(NotFree):
        central_quotient(digon, flip1)


def test_structure_json_dump():
    struct = build_map().structure
    data = struct.to_json_dict(classification="regular")
    assert data["schema"] == "polytope-forge/1"
    assert data["f_vector"] == [16, 24, 6]
    assert data["type_vector"] == [8, 3]
    assert data["classification"] == "regular"
    assert len(data["faces"]["0"]) == 16
    assert all(len(entry) == 4 for entry in data["incidence"])


def test_regular_flag_counts_match_group_orders():
    # simply transitive actions: flag count equals the group order
    assert len(build_cube().structure.flags()) == 384
    bundle = build_map()
    assert len(bundle.structure.flags()) == 96 == bundle.full_automorphism_order


# -- colourful polytopes ---------------------------------------------------------


def test_colourful_cube_is_the_cube():
    cube = build_cube()
    assert cube.colourful.isomorphic_to(cube.structure)


def test_colourful_k44_is_the_hemi_cube():
    hemi = build_hemi()
    assert hemi.colourful.isomorphic_to(hemi.structure)


def test_colourful_single_edge_is_a_segment():
    cg = ColoredGraph(vertices=("a", "b"),
                      edge_colors={frozenset({"a", "b"}): 1}, d=1)
    seg = colourful_polytope(cg)
    assert seg.f_vector == (2,)


def test_colourful_output_is_simple():
    # a simple d-polytope: every vertex lies on exactly d facets
    struct = build_cube().colourful
    d = struct.rank
    for vref in struct.refs(0):
        assert len(struct.incident_at_rank(vref, d - 1)) == d


def test_improper_colourings_rejected():
    with pytest.raises(ImproperColouring):
        ColoredGraph(vertices=("a", "b", "c", "d"),
                     edge_colors={frozenset({"a", "b"}): 1,
                                  frozenset({"b", "c"}): 1,
                                  frozenset({"c", "d"}): 1,
                                  frozenset({"a", "d"}): 1}, d=1)
    # properly coloured but disconnected
    cg = ColoredGraph(vertices=("a", "b", "c", "d"),
                      edge_colors={frozenset({"a", "b"}): 1,
                                   frozenset({"c", "d"}): 1}, d=1)
    with pytest.raises(ImproperColouring):
        colourful_polytope(cg)


# -- coverings -------------------------------------------------------------------


def test_identity_covering():
    struct = build_cube().structure
    ident = {ref: ref for ref in struct.all_refs()}
    report = verify_covering(struct, struct, ident)
    assert report.uniform_fiber_size() == 1
    assert report.is_k_covering


def test_rank_breaking_map_rejected():
    struct = build_cube().structure
    bad = {ref: ref for ref in struct.all_refs()}
    bad[(0, 0)] = (1, 0)
    with pytest.raises(NotACovering):
        verify_covering(struct, struct, bad)


def test_non_surjective_map_rejected():
    struct = build_cube().structure
    bad = {ref: ref for ref in struct.all_refs()}
    bad[(0, 0)] = (0, 1)
    with pytest.raises(NotACovering):
        verify_covering(struct, struct, bad)


# -- polytope axioms on a hand-built poset ---------------------------------------


def test_validate_polytope_diamond_failure():
    # a triangle with one edge removed: the diamond condition fails
    faces = [["a", "b", "c"], ["ab", "bc"]]
    pairs = [((0, "a"), (1, "ab")), ((0, "b"), (1, "ab")),
             ((0, "b"), (1, "bc")), ((0, "c"), (1, "bc"))]
    struct = RankedIncidenceStructure(2, faces, pairs)
    with pytest.raises(NotAPolytope):
        struct.validate_polytope()


def test_validate_polytope_accepts_polygon():
    n = 5
    faces = [[f"v{i}" for i in range(n)], [f"e{i}" for i in range(n)]]
    pairs = []
    for i in range(n):
        pairs.append(((0, f"v{i}"), (1, f"e{i}")))
        pairs.append(((0, f"v{(i + 1) % n}"), (1, f"e{i}")))
    struct = RankedIncidenceStructure(2, faces, pairs)
    struct.validate_polytope()
    assert struct.schlafli_type() == (5,)
    assert len(struct.flags()) == 2 * n
