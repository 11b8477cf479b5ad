"""The concrete objects: atlas identities, Petrie machinery, the trivalent
map, the chiral polytope, its mirror, and the cover in E^8."""

import math

import networkx as nx
import numpy as np
import pytest

from polytope_forge.cubefamily import (
    CONFIGURATION_LINES,
    PetriePolygon,
    gp83_graph,
    build_atlas,
    build_cover,
    build_enantiomorph,
    build_map,
    build_roli,
    companion,
    group_cube,
    group_map_rotation,
    group_rotation,
    binary_tetrahedral_check,
    octagon_label_sets,
    petrie_polygons,
    petrie_polygons_brute_force,
    point_labels,
)
from polytope_forge.groupcore import setwise_stabilizer
from polytope_forge.polycore import Classification
from polytope_forge.signedperm import SignedPerm, block_pair


@pytest.fixture(scope="module")
def atlas():
    return build_atlas()


# -- atlas -----------------------------------------------------------------------


def test_atlas_key_displays(atlas):
    assert atlas.mu0 == SignedPerm.parse("(-1,1,1,1)·(2,4)")
    assert atlas.mu1 == SignedPerm.parse("(1,1,1,1)·(1,4)(2,3)")
    assert atlas.sigma2_bar == SignedPerm.parse("(-1,-1,1,1)·(1,3,2)")
    assert atlas.kappa2 == SignedPerm.parse("(1,1,1,1,-1,-1,1,1)·(1,2,4)(5,7,6)")
    assert atlas.tau0 == SignedPerm.from_cycles(8, [(1, 5), (2, 6), (3, 7), (4, 8)])
    assert atlas.gamma2 == SignedPerm.parse("(-1,1,-1,1)·(1,2,3)")


def test_zeta_is_the_fourth_power_of_the_petrie_symmetry(atlas):
    assert (atlas.rho0 * atlas.rho1 * atlas.rho2 * atlas.rho3) ** 4 == atlas.zeta
    assert atlas.zeta.act((1, -1, 1, 1)) == (-1, 1, -1, -1)


def test_tau_generators_recover_block_rotations(atlas):
    assert atlas.tau0 * atlas.tau1 == atlas.kappa1
    assert atlas.tau1 * atlas.tau2 == atlas.kappa2
    assert atlas.tau2 * atlas.tau3 == atlas.kappa3


def test_tau0_conjugates_each_rotation_to_its_twin(atlas):
    for kap, s, sb in ((atlas.kappa1, atlas.sigma1, atlas.sigma1_bar),
                       (atlas.kappa2, atlas.sigma2, atlas.sigma2_bar),
                       (atlas.kappa3, atlas.sigma3, atlas.sigma3_bar)):
        assert kap.conjugate(atlas.tau0) == block_pair(sb, s)


# -- Petrie polygons ---------------------------------------------------------------


def test_base_octagon_cycle(atlas):
    seq = [atlas.v]
    for _ in range(7):
        seq.append(atlas.pi.act(seq[-1]))
    assert seq[1:5] == [(1, 1, 1, -1), (1, 1, -1, -1), (1, -1, -1, -1),
                        (-1, -1, -1, -1)]
    assert PetriePolygon(tuple(seq)) == atlas.base_octagon


def test_brute_force_enumeration_equals_orbit():
    orbit = petrie_polygons()
    brute = petrie_polygons_brute_force()
    assert len(orbit) == 24
    assert tuple(p.vertices for p in orbit) == tuple(p.vertices for p in brute)


def test_chiral_class_split_and_determinants():
    polys = petrie_polygons()
    split = {"R": 0, "L": 0}
    for p in polys:
        split[p.chiral_class] += 1
        assert p.det4() == {"R": 8, "L": -8}[p.chiral_class]
    assert split == {"R": 12, "L": 12}


def test_reflection_swaps_chiral_classes(atlas):
    assert atlas.base_octagon.chiral_class == "R"
    assert atlas.base_octagon.transformed(atlas.rho0).chiral_class == "L"


def test_octagram_class_via_rotation(atlas):
    # mu2 is a rotation carrying the octagon to the octagram, so both share
    # one class; the determinant check must agree
    assert atlas.mu2.determinant() == 1
    assert atlas.base_octagon.transformed(atlas.mu2) == atlas.base_octagram
    assert atlas.base_octagram.chiral_class == "R"


def test_companion_pairing(atlas):
    assert companion(atlas.base_octagon) == atlas.base_octagram
    for p in petrie_polygons():
        assert companion(companion(p)) == p


def test_companion_commutes_with_rotations(atlas):
    polys = petrie_polygons()
    rot = group_rotation()
    class_r = [p for p in polys if p.chiral_class == "R"]
    for p in class_r:
        for g in rot.generator_list():
            assert companion(p).transformed(g) == companion(p.transformed(g))


def test_every_polygon_has_stabilizer_sixteen():
    full = group_cube()
    rot = group_rotation()
    for p in petrie_polygons():
        assert len(setwise_stabilizer(full, p.vertex_set())) == 16
        assert len(setwise_stabilizer(rot, p.vertex_set())) == 16


def test_colour_sequences_through_base_vertex_split_by_parity(atlas):
    def parity(seq):
        window = seq[:4]
        assert sorted(window) == [1, 2, 3, 4]
        inversions = sum(1 for i in range(4) for j in range(i + 1, 4)
                         if window[i] > window[j])
        return inversions % 2

    v = atlas.v
    parities = {"R": set(), "L": set()}
    for p in petrie_polygons():
        if v not in p.vertices:
            continue
        idx = p.vertices.index(v)
        seq = p.colors[idx:] + p.colors[:idx]
        parities[p.chiral_class].add(parity(seq))
        rev = tuple(reversed(p.colors[:idx] + p.colors[idx:]))
        parities[p.chiral_class].add(parity(rev))
    # one class runs through even orderings, the other through odd ones
    assert parities["R"] and parities["L"]
    assert parities["R"].isdisjoint(parities["L"])


def test_petrie_symmetry_rotates_invariant_planes_by_45_and_135_degrees(atlas):
    mat = np.array(atlas.pi.matrix(), dtype=float)
    s = 1 / math.sqrt(2)
    planes = [
        (np.array([s, 0.5, 0.0, -0.5]), np.array([0.0, 0.5, s, 0.5])),
        (np.array([s, -0.5, 0.0, 0.5]), np.array([0.0, 0.5, -s, 0.5])),
    ]
    angles = []
    for e1, e2 in planes:
        img = e1 @ mat
        # the basis is orthonormal; the plane is invariant
        assert abs(e1 @ e2) < 1e-12
        resid = img - (img @ e1) * e1 - (img @ e2) * e2
        assert np.linalg.norm(resid) < 1e-9
        angles.append(math.degrees(math.acos(max(-1.0, min(1.0, img @ e1)))))
    assert abs(angles[0] - 45.0) < 1e-9
    assert abs(angles[1] - 135.0) < 1e-9


# -- the trivalent map --------------------------------------------------------------


def test_map_battery(atlas):
    bundle = build_map()
    assert bundle.structure.f_vector == (16, 24, 6)
    assert len(bundle.edges) == 24
    assert len(bundle.octagons) == 6
    assert atlas.base_octagon in bundle.octagons
    assert atlas.base_octagram in bundle.octagons
    for e in bundle.edges:
        assert sum(1 for o in bundle.octagons if e in o.edge_set()) == 2


def test_map_octagon_alternate_labels():
    expected = {frozenset(s) for s in ((0, 2, 4, 6), (1, 3, 5, 7), (0, 5, 4, 1),
                                       (1, 2, 5, 6), (2, 3, 6, 7), (0, 7, 4, 3))}
    assert octagon_label_sets() == expected


def test_levi_graph_is_generalized_petersen_with_96_automorphisms():
    bundle = build_map()
    levi = nx.Graph(list(bundle.edges))
    assert nx.vf2pp_is_isomorphic(levi, gp83_graph())
    assert bundle.levi_automorphism_count == 96


def test_map_is_abstractly_regular_but_geometrically_chiral():
    bundle = build_map()
    assert bundle.rotation_classification is Classification.CHIRAL
    assert bundle.full_classification is Classification.REGULAR
    assert bundle.full_automorphism_order == 96
    assert bundle.regularity_hom.is_involutory()
    assert not bundle.mu0_preserves_edges
    assert bundle.edge_stabilizer_in_full_group == group_map_rotation().element_set


def test_geometric_chirality_report():
    from polytope_forge.cubefamily import geometric_chirality_report
    report = geometric_chirality_report()
    assert report["stabilizer_order"] == 48
    assert report["stabilizer_is_rotational"]
    assert report["identity_preserves_edges"]
    assert report["non_rotations_scanned"] == 192
    assert not report["non_rotation_preserves_edges"]
    assert not report["mu0_preserves_edges"]
    assert not report["mu0_preserves_deleted_matching"]


def test_deleted_edges_form_a_perfect_matching(atlas):
    bundle = build_map()
    assert len(bundle.deleted_edges) == 8
    covered = [p for e in bundle.deleted_edges for p in e]
    assert len(covered) == len(set(covered)) == 16
    moved = {tuple(sorted(atlas.mu0.act(p) for p in e))
             for e in bundle.deleted_edges}
    assert moved != bundle.deleted_edges


def test_label_solve_is_unique_and_pins_the_lines(atlas):
    lab = point_labels()
    assert lab.valid_count == 1
    # every line vertex of the trivalent graph sees one of the eight triples
    bundle = build_map()
    adjacency = {}
    for a, b in bundle.edges:
        adjacency.setdefault(a, set()).add(b)
        adjacency.setdefault(b, set()).add(a)
    even = [p for p in adjacency if sum(1 for x in p if x < 0) % 2 == 0]
    triples = {frozenset(lab.label_of[q] for q in adjacency[u]) for u in even}
    assert triples == set(CONFIGURATION_LINES)
    # the north-west line vertex carries the triple 013
    assert frozenset(lab.label_of[q] for q in adjacency[(-1, -1, 1, 1)]) \
        == frozenset({0, 1, 3})
    # label 1 sits next to the base vertex
    assert 1 in {lab.label_of[q] for q in adjacency[atlas.v]}


# -- the chiral polytope -------------------------------------------------------------


def test_roli_battery(atlas):
    bundle = build_roli()
    assert bundle.stabilizer_orders == (12, 6, 16, 48)
    assert bundle.structure.f_vector == (16, 32, 12, 4)
    assert bundle.type_vector == (8, 3, 3)
    assert bundle.classification is Classification.CHIRAL
    assert bundle.flag_count == 384  # two orbits of |rotation group| flags
    assert bundle.witness_holds


def test_roli_two_faces_are_the_right_handed_polygons():
    bundle = build_roli()
    struct = bundle.structure
    polys = {p.vertices: p for p in petrie_polygons()}
    for ref in struct.refs(2):
        assert polys[struct.realization[ref]].chiral_class == "R"


def test_roli_facets_share_all_vertices():
    struct = build_roli().structure
    for facet in struct.refs(3):
        assert len(struct.incident_at_rank(facet, 0)) == 16


def test_each_polygon_lies_on_two_map_copies():
    struct = build_roli().structure
    for ref in struct.refs(2):
        assert len(struct.incident_at_rank(ref, 3)) == 2


def test_roli_vertex_sections_are_tetrahedra():
    struct = build_roli().structure
    v = struct.refs(0)[0]
    section = struct.between(v, None)
    counts = [sum(1 for ref in section if ref[0] == r) for r in (1, 2, 3)]
    assert counts == [4, 6, 4]


# -- the mirror twin -----------------------------------------------------------------


def test_enantiomorph_battery(atlas):
    bundle = build_enantiomorph()
    assert bundle.structure.f_vector == (16, 32, 12, 4)
    assert bundle.stabilizer_orders == (12, 6, 16, 48)
    assert bundle.two_faces_class == "L"
    assert bundle.sigma_bar_generate_rotation_group
    assert bundle.mirror_iso_by_rho0


def test_enantiomorph_two_faces_are_left_handed():
    struct = build_enantiomorph().structure
    for ref in struct.refs(2):
        assert PetriePolygon(struct.realization[ref]).chiral_class == "L"


def test_any_reflection_induces_the_poset_isomorphism(atlas):
    # the mirror map works with rho1 just as well as with rho0
    right = build_roli().structure
    left = build_enantiomorph().structure
    actions = {
        0: lambda obj, g: g.act(obj),
        1: lambda obj, g: tuple(sorted(g.act(p) for p in obj)),
        2: lambda obj, g: PetriePolygon(tuple(g.act(p) for p in obj)).vertices,
        3: lambda obj, g: tuple(sorted(tuple(sorted(g.act(p) for p in e))
                                       for e in obj)),
    }
    lookup = {}
    for r in range(4):
        for ref in left.refs(r):
            lookup[(r, left.realization[ref])] = ref
    mapping = {}
    for r in range(4):
        for ref in right.refs(r):
            mapping[ref] = lookup[(r, actions[r](right.realization[ref], atlas.rho1))]
    for a in right.all_refs():
        for b in right.all_refs():
            if a[0] < b[0]:
                assert right.incident(a, b) == left.incident(mapping[a], mapping[b])


# -- the cover -----------------------------------------------------------------------


def test_cover_battery(atlas):
    bundle = build_cover()
    assert bundle.string_ok and bundle.intersection_ok
    assert bundle.structure.f_vector == (32, 64, 24, 8)
    assert bundle.type_vector == (8, 3, 3)
    assert bundle.classification is Classification.REGULAR
    assert bundle.flag_count == 768
    assert bundle.injective_on_tetrahedral


def test_cover_centre_words(atlas):
    bundle = build_cover()
    ident4 = SignedPerm.identity(4)
    assert bundle.centre_plus == {
        SignedPerm.identity(8),
        block_pair(atlas.zeta, ident4),
        block_pair(ident4, atlas.zeta),
        block_pair(atlas.zeta, atlas.zeta),
    }
    assert bundle.centre_word_identities
    assert bundle.kernel_right == {SignedPerm.identity(8),
                                   block_pair(ident4, atlas.zeta)}
    assert bundle.kernel_left == {SignedPerm.identity(8),
                                  block_pair(atlas.zeta, ident4)}
    assert bundle.kernel_cube_rotation == {SignedPerm.identity(8),
                                           block_pair(atlas.zeta, atlas.zeta)}


def test_cover_base_vertex(atlas):
    struct = build_cover().structure
    points = {struct.realization[ref] for ref in struct.refs(0)}
    assert atlas.v + atlas.v_bar in points
    assert len(points) == 32


def test_coverings_are_two_to_one_three_coverings():
    bundle = build_cover()
    for report in (bundle.covering_right, bundle.covering_left):
        assert report.uniform_fiber_size() == 2
        assert report.isomorphic_on_facets
        assert report.isomorphic_on_vertex_figures


def test_cover_projects_onto_the_cube_with_mixed_fibers():
    bundle = build_cover()
    counts = [row[0] for row in bundle.covering_cube.preimage_counts]
    assert counts == [2, 2, 1, 1]
    assert all(len(set(row)) == 1 for row in bundle.covering_cube.preimage_counts)
    assert not bundle.covering_cube.is_k_covering


def test_roli_flag_count_against_chain_oracle():
    # independent chain count over the realized faces
    bundle = build_roli()
    struct = bundle.structure
    verts = [struct.realization[ref] for ref in struct.refs(0)]
    edges = [struct.realization[ref] for ref in struct.refs(1)]
    octs = [struct.realization[ref] for ref in struct.refs(2)]
    facets = [set(struct.realization[ref]) for ref in struct.refs(3)]
    count = 0
    for e in edges:
        for v in e:
            for o in octs:
                o_edges = PetriePolygon(o).edge_set()
                if e not in o_edges:
                    continue
                for m in facets:
                    if o_edges <= m:
                        count += 1
    assert count == 384 == len(struct.flags())


def test_binary_tetrahedral_subgroup(atlas):
    report = binary_tetrahedral_check()
    assert report["identities_hold"]
    assert report["order"] == 24
    assert report["normal_in_map_rotation_group"]
    assert report["rotation_centre_generated_by_sigma1_fourth"]
    # the defining identities, spelled out
    s1, s2 = atlas.sigma1, atlas.sigma2
    a = s1.inverse() * s2 * s1.inverse()
    b = s2 * s1 ** 4
    assert a ** 3 == atlas.zeta and b ** 3 == atlas.zeta
    assert (a * b) ** 2 == atlas.zeta
