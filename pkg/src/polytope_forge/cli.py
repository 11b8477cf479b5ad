"""Command-line front end: build the objects, run the verification battery,
emit JSON certificates and SVG projections.

Floating point lives only here (projection rendering and its two 1e-9
checks); everything upstream is exact.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from dataclasses import dataclass, field

import networkx as nx

from . import cubefamily as cf
from . import mkconfig as mk
from .groupcore import CapExceeded, Homomorphism, enumerate_cosets, eval_word
from .polycore import Classification
from .signedperm import SignedPerm

__all__ = [
    "Claim", "Report", "ProjectionSpec", "CliConfig",
    "run_claims", "all_claim_ids", "render_projection",
    "coxeter_projection_spec", "plane_projection_spec", "main",
]

SCHEMA = "polytope-forge/1"
TOL = 1e-9


@dataclass(frozen=True)
class Claim:
    claim_id: str
    criterion: int
    expected: str
    computed: str
    passed: bool
    note: str = ""

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return (f"{mark} [{self.criterion}] {self.claim_id}: "
                f"expected {self.expected}, computed {self.computed}"
                + (f" ({self.note})" if self.note else ""))

    def to_json_dict(self) -> dict:
        return {"id": self.claim_id, "criterion": self.criterion,
                "expected": self.expected, "computed": self.computed,
                "passed": self.passed, "note": self.note}


@dataclass
class Report:
    object_name: str
    claims: list[Claim] = field(default_factory=list)
    elapsed_seconds: float = 0.0

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.claims)

    def to_json_dict(self, include_timing: bool = False) -> dict:
        data = {
            "schema": SCHEMA,
            "object": self.object_name,
            "claims": [c.to_json_dict() for c in self.claims],
            "all_passed": self.all_passed,
        }
        if include_timing:
            data["timing_seconds"] = round(self.elapsed_seconds, 3)
        return data


@dataclass(frozen=True)
class CliConfig:
    cap: int = 10**6
    seed_labels: str = "lex"


def _claim(claim_id: str, criterion: int, expected, computed, note: str = "") -> Claim:
    return Claim(claim_id=claim_id, criterion=criterion,
                 expected=str(expected), computed=str(computed),
                 passed=str(expected) == str(computed), note=note)


def _bool_claim(claim_id: str, criterion: int, ok: bool, note: str = "") -> Claim:
    return Claim(claim_id=claim_id, criterion=criterion, expected="True",
                 computed=str(bool(ok)), passed=bool(ok), note=note)


# ---------------------------------------------------------------------------
# the battery
# ---------------------------------------------------------------------------

def _claims_orders(cfg: CliConfig) -> list[Claim]:
    full_pres = enumerate_cosets(cf.presentation_map_full(), (), cap=cfg.cap)
    return [
        _claim("orders.cube-full", 1, 384, len(cf.group_cube())),
        _claim("orders.cube-rotation", 1, 192, len(cf.group_rotation())),
        _claim("orders.map-rotation", 1, 48, len(cf.group_map_rotation())),
        _claim("orders.map-full", 1, 96, full_pres.index,
               note="trivial-subgroup enumeration of the reflection presentation"),
        _claim("orders.cover-rotation", 1, 384, len(cf.group_cover_rotation())),
        _claim("orders.cover-full", 1, 768, len(cf.group_cover())),
        _claim("orders.unitary-triangle", 1, 24, len(cf.group_unitary())),
    ]


def _claims_cosets(cfg: CliConfig) -> list[Claim]:
    out = []
    t1 = enumerate_cosets(cf.presentation_map_rotation(), [(1,)], cap=cfg.cap)
    out.append(_claim("cosets.map-rotation-over-s1", 2, 6, t1.index))

    t2 = enumerate_cosets(cf.presentation_roli(with_chirality_breaker=False),
                          [(1,), (2,)], cap=cfg.cap)
    out.append(_claim("cosets.chiral-partial-over-s1-s2", 2, 8, t2.index,
                      note="bounds the partially presented group by 8*48=384"))

    t3 = enumerate_cosets(cf.presentation_roli(), (), cap=cfg.cap)
    atlas = cf.build_atlas()
    assignment = [atlas.sigma1, atlas.sigma2, atlas.sigma3]
    ident = SignedPerm.identity(4)
    images = {eval_word(assignment, w, ident) for w in t3.representative_words()}
    match = (t3.index == 192 and len(images) == 192
             and images == cf.group_rotation().element_set)
    out.append(_bool_claim("cosets.chiral-full-matches-rotation-group", 2, match,
                           note=f"index {t3.index}, distinct images {len(images)}"))

    t4 = enumerate_cosets(cf.presentation_unitary_triangle(), (), cap=cfg.cap)
    out.append(_claim("cosets.unitary-triangle-order", 2, 24, t4.index))
    return out


def _claims_petrie(cfg: CliConfig) -> list[Claim]:
    orbit = cf.petrie_polygons()
    brute = cf.petrie_polygons_brute_force()
    same = tuple(p.vertices for p in orbit) == tuple(p.vertices for p in brute)
    split = {"R": 0, "L": 0}
    dets_ok = True
    for p in orbit:
        split[p.chiral_class] += 1
        if p.det4() != {"R": 8, "L": -8}[p.chiral_class]:
            dets_ok = False
    k_full = cf.group_petrie_stabilizer()
    atlas = cf.build_atlas()
    from .groupcore import setwise_stabilizer
    k_rot = setwise_stabilizer(cf.group_rotation(), atlas.base_octagon.vertex_set())
    return [
        _bool_claim("petrie.brute-force-equals-orbit", 3, same,
                    note="byte-identical canonical forms"),
        _claim("petrie.count", 3, 24, len(orbit)),
        _claim("petrie.class-split", 3, "12R/12L", f"{split['R']}R/{split['L']}L"),
        _bool_claim("petrie.window-determinants", 3, dets_ok,
                    note="+8 on class R, -8 on class L"),
        _claim("petrie.stabilizer-orders", 3, "16/16", f"{len(k_full)}/{len(k_rot)}",
               note="base octagon stabilizer in the full and rotation groups"),
    ]


def _claims_map(cfg: CliConfig) -> list[Claim]:
    bundle = cf.build_map()
    labels = cf.octagon_label_sets()
    expected_labels = frozenset(
        frozenset(s) for s in ((0, 2, 4, 6), (1, 3, 5, 7), (0, 5, 4, 1),
                               (1, 2, 5, 6), (2, 3, 6, 7), (0, 7, 4, 3)))
    gp_iso = nx.vf2pp_is_isomorphic(nx.Graph(list(bundle.edges)), cf.gp83_graph())
    hom = bundle.regularity_hom
    return [
        _claim("map.f-vector", 4, (16, 24, 6), bundle.structure.f_vector),
        _bool_claim("map.octagon-alternate-labels", 4, labels == expected_labels,
                    note="0246 1357 0541 1256 2367 0743"),
        _bool_claim("map.skeleton-generalized-petersen", 4, gp_iso),
        _claim("map.levi-automorphisms", 4, 96, bundle.levi_automorphism_count),
        _bool_claim("map.regularity-automorphism", 4,
                    isinstance(hom, Homomorphism) and hom.is_involutory(),
                    note="s1 -> s1^-1, s2 -> s1^2 s2 extends involutorily"),
        _bool_claim("map.geometric-chirality", 4,
                    (not bundle.mu0_preserves_edges
                     and bundle.edge_stabilizer_in_full_group
                     == cf.group_map_rotation().element_set),
                    note="no orientation-reversing symmetry keeps the edge set"),
    ]


def _claims_roli(cfg: CliConfig) -> list[Claim]:
    bundle = cf.build_roli()
    return [
        _claim("roli.f-vector", 5, (16, 32, 12, 4), bundle.structure.f_vector),
        _claim("roli.stabilizer-orders", 5, (12, 6, 16, 48), bundle.stabilizer_orders),
        _bool_claim("roli.classification-chiral", 5,
                    bundle.classification is Classification.CHIRAL
                    and bundle.orbit_count == 2,
                    note=f"{bundle.orbit_count} flag orbits, adjacent flags split"),
        _bool_claim("roli.chirality-witness", 5, bundle.witness_holds,
                    note="(s1 s3)^4 is central and nontrivial, (s1^-1 s3)^4 = 1"),
        _claim("roli.vertex-figure-type", 5, (3, 3), bundle.type_vector[1:]),
    ]


def _claims_cover(cfg: CliConfig) -> list[Claim]:
    bundle = cf.build_cover()
    right, left = bundle.covering_right, bundle.covering_left
    return [
        _bool_claim("cover.string-c-group", 6,
                    bundle.string_ok and bundle.intersection_ok
                    and len(cf.group_cover()) == 768),
        _bool_claim("cover.regular-type-833", 6,
                    bundle.classification is Classification.REGULAR
                    and bundle.type_vector == (8, 3, 3)
                    and bundle.flag_count == 768,
                    note="768 = 2 * 384 flags"),
        _bool_claim("cover.two-to-one-three-coverings", 6,
                    right.uniform_fiber_size() == 2 and right.is_k_covering
                    and left.uniform_fiber_size() == 2 and left.is_k_covering),
        _bool_claim("cover.quotient-criterion", 6, bundle.injective_on_tetrahedral,
                    note="reflection images are injective on the vertex subgroup"),
        _bool_claim("cover.centre", 6,
                    len(bundle.centre_plus) == 4 and bundle.centre_word_identities,
                    note="(z,1), (1,z), (z,z) as words in the block generators"),
    ]


def _claims_mk(cfg: CliConfig) -> list[Claim]:
    config = mk.build_configuration(policy=cfg.seed_labels)
    j = mk.build_J()
    a1, b1, a2, b2 = mk.build_L()
    identity = tuple(
        tuple(mk.QF(1 if r == c else 0) for c in range(4)) for r in range(4))
    minus_identity = tuple(
        tuple(mk.QF(-1 if r == c else 0) for c in range(4)) for r in range(4))
    j_ok = (mk.mat_mul(j, j) == minus_identity
            and mk.mat_mul(j, mk.mat_transpose(j)) == identity
            and mk.row_times_matrix(a1, j) == b1
            and mk.row_times_matrix(a2, j) == b2
            and mk.dot(a1, a1) == mk.dot(b1, b1)
            and mk.dot(a1, b1) == mk.ZERO)
    table_cmp = mk.compare_with_table(config)
    g = mk.group_333()
    bt = cf.binary_tetrahedral_check()
    incidence_ok = (config.incidence_row_sums() == (3,) * 8
                    and config.incidence_col_sums() == (3,) * 8)
    return [
        _bool_claim("mk.complex-structure", 7, j_ok,
                    note="J^2 = -I, J orthogonal, a1 J = b1, a2 J = b2, "
                         "|a1| = |b1|, a1 . b1 = 0"),
        _bool_claim("mk.incidence-8-8-3", 7, incidence_ok,
                    note="8 points, 8 lines, 3 per row and column, exact"),
        _bool_claim("mk.line-167-equation", 7, mk.line_matches_paper(config),
                    note="r(1-i) z1 + 2 z2 = 2r(1+i), satisfied by exactly 1,6,7"),
        _bool_claim("mk.coordinate-table", 7, table_cmp["matches"],
                    note=("literal match" if table_cmp["literal"]
                          else f"up to relabeling {table_cmp['relabeling']}")),
        _bool_claim("mk.unitary-triangle-group", 7,
                    g["relators_hold"] and g["braid_relation"]
                    and g["group_order"] == 24 and g["centralizer_equals_group"]
                    and g["presentation_index"] == 24,
                    note="order 24, centralizer of J, presentation index 24"),
        _bool_claim("mk.binary-tetrahedral", 7,
                    bt["identities_hold"] and bt["order"] == 24
                    and bt["normal_in_map_rotation_group"],
                    note="a^3 = b^3 = (ab)^2 = central involution; order 24; normal"),
    ]


def _claims_colourful(cfg: CliConfig) -> list[Claim]:
    cube = cf.build_cube()
    hemi = cf.build_hemi()
    return [
        _bool_claim("colourful.cube-skeleton", 8,
                    cube.colourful.isomorphic_to(cube.structure)),
        _bool_claim("colourful.k44-hemi", 8,
                    hemi.colourful.isomorphic_to(hemi.structure)
                    and hemi.generator_product_order == 4,
                    note="generator product has order 4 in the quotient"),
    ]


def _claims_projection(cfg: CliConfig) -> list[Claim]:
    lengths = projected_edge_lengths(coxeter_projection_spec())
    iso_ok = (len(lengths) == 32
              and max(lengths) - min(lengths) <= TOL)
    fit = plane_positions_fit()
    return [
        _bool_claim("projection.isometric", 9, iso_ok,
                    note=f"32 projected edges, spread {max(lengths) - min(lengths):.2e}"),
        _bool_claim("projection.plane-positions", 9, fit <= TOL,
                    note=f"similarity fit residual {fit:.2e}"),
    ]


_CLAIM_GROUPS = {
    "orders": _claims_orders,
    "cosets": _claims_cosets,
    "petrie": _claims_petrie,
    "map": _claims_map,
    "roli": _claims_roli,
    "cover": _claims_cover,
    "mk": _claims_mk,
    "colourful": _claims_colourful,
    "projection": _claims_projection,
}


def run_claims(cfg: CliConfig | None = None, only: set[str] | None = None) -> Report:
    cfg = cfg or CliConfig()
    start = time.perf_counter()
    if only is None:
        groups = list(_CLAIM_GROUPS.values())
    else:
        prefixes = {claim_id.split(".", 1)[0] for claim_id in only}
        unknown_prefix = prefixes - set(_CLAIM_GROUPS)
        if unknown_prefix:
            raise KeyError(f"unknown claim ids: {sorted(only)}")
        groups = [_CLAIM_GROUPS[p] for p in _CLAIM_GROUPS if p in prefixes]
    claims: list[Claim] = []
    for group in groups:
        claims.extend(group(cfg))
    ids = [c.claim_id for c in claims]
    assert len(ids) == len(set(ids)), "claim ids must be unique"
    if only is not None:
        unknown = only - set(ids)
        if unknown:
            raise KeyError(f"unknown claim ids: {sorted(unknown)}")
        claims = [c for c in claims if c.claim_id in only]
    report = Report(object_name="verification-battery", claims=claims)
    report.elapsed_seconds = time.perf_counter() - start
    return report


def all_claim_ids() -> list[str]:
    return [c.claim_id for c in run_claims().claims]


# ---------------------------------------------------------------------------
# projections
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ProjectionSpec:
    name: str
    basis: tuple[tuple[float, float, float, float], tuple[float, float, float, float]]
    scale: float = 100.0
    colors: tuple[int, ...] = (1, 2, 3, 4)
    labelled_points_only: bool = False

    def validate(self) -> None:
        if self.scale == 0:
            raise ValueError("zero scale")
        g00 = sum(x * x for x in self.basis[0])
        g11 = sum(x * x for x in self.basis[1])
        g01 = sum(x * y for x, y in zip(self.basis[0], self.basis[1]))
        if abs(g00 * g11 - g01 * g01) < 1e-12:
            raise ValueError("degenerate projection basis")

    def project(self, point) -> tuple[float, float]:
        return (sum(float(x) * b for x, b in zip(point, self.basis[0])),
                sum(float(x) * b for x, b in zip(point, self.basis[1])))


def coxeter_projection_spec(scale: float = 100.0,
                            colors: tuple[int, ...] = (1, 2, 3, 4)) -> ProjectionSpec:
    """The most symmetric plane: the 16 vertices land on a regular octagon
    and octagram and all projected edges share one length."""
    s = 1 / math.sqrt(2)
    return ProjectionSpec(name="coxeter",
                          basis=((s, 0.5, 0.0, -0.5), (0.0, 0.5, s, 0.5)),
                          scale=scale, colors=colors)


def plane_projection_spec(scale: float = 100.0) -> ProjectionSpec:
    """The plane spanned by the first two rows of the adapted basis; the
    eight labelled vertices form two concentric squares."""
    a1, b1, _, _ = mk.build_L()
    to_floats = lambda row: tuple(float(x) for x in row)
    return ProjectionSpec(name="plane", basis=(to_floats(a1), to_floats(b1)),
                          scale=scale, labelled_points_only=True)


def projected_edge_lengths(spec: ProjectionSpec) -> list[float]:
    cube = cf.build_cube()
    out = []
    for ref in cube.structure.refs(1):
        a, b = cube.structure.realization[ref]
        xa, ya = spec.project(a)
        xb, yb = spec.project(b)
        out.append(math.hypot(xa - xb, ya - yb))
    return out


def plane_positions_fit() -> float:
    """Residual of the best similarity mapping the expected two-square
    layout onto the projected labelled vertices."""
    spec = plane_projection_spec()
    labeling = cf.point_labels()
    r = math.sqrt(3) - 1
    expected = {0: complex(r, 0), 1: complex(-1, 1), 2: complex(0, r),
                3: complex(-1, -1), 4: complex(-r, 0), 5: complex(1, -1),
                6: complex(0, -r), 7: complex(1, 1)}
    projected = {}
    for label in range(8):
        x, y = spec.project(labeling.point_of[label])
        projected[label] = complex(x, y)
    num = sum(projected[k] * expected[k].conjugate() for k in range(8))
    den = sum(abs(expected[k]) ** 2 for k in range(8))
    w = num / den
    return max(abs(projected[k] - w * expected[k]) for k in range(8))


_EDGE_COLOR_NAMES = {1: "#000000", 2: "#cc0000", 3: "#2222cc", 4: "#009900"}


def render_projection(spec: ProjectionSpec) -> str:
    """Deterministic SVG text for a projection; output depends only on the
    spec (identical strings across runs)."""
    spec.validate()
    cube = cf.build_cube()
    s = spec.scale

    def fmt(x: float) -> str:
        value = x * s
        if abs(value) < 5e-7:
            value = 0.0
        return f"{value:.6f}"

    lines = []
    half = 2.6 * s
    lines.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{-half:.1f} {-half:.1f} {2 * half:.1f} {2 * half:.1f}">')
    lines.append(f'<!-- projection preset: {spec.name} -->')

    if not spec.labelled_points_only:
        for ref in cube.structure.refs(1):
            a, b = cube.structure.realization[ref]
            color_idx = cf._edge_direction(a, b)
            if color_idx not in spec.colors:
                continue
            xa, ya = spec.project(a)
            xb, yb = spec.project(b)
            lines.append(
                f'<line x1="{fmt(xa)}" y1="{fmt(ya)}" x2="{fmt(xb)}" y2="{fmt(yb)}" '
                f'stroke="{_EDGE_COLOR_NAMES[color_idx]}" stroke-width="2"/>')
        for ref in cube.structure.refs(0):
            x, y = spec.project(cube.structure.realization[ref])
            lines.append(f'<circle cx="{fmt(x)}" cy="{fmt(y)}" r="5" fill="#333333"/>')
    else:
        labeling = cf.point_labels()
        config = mk.build_configuration()
        for line_obj in config.lines:
            pts = [spec.project(labeling.point_of[k]) for k in line_obj.points]
            path = " ".join(f"{fmt(x)},{fmt(y)}" for x, y in pts)
            lines.append(
                f'<polygon points="{path}" fill="none" stroke="#bbbbbb" '
                f'stroke-width="1"/>')
        for label in range(8):
            x, y = spec.project(labeling.point_of[label])
            lines.append(f'<circle cx="{fmt(x)}" cy="{fmt(y)}" r="6" fill="#333333"/>')
            lines.append(
                f'<text x="{fmt(x)}" y="{fmt(y)}" dx="9" dy="-9" '
                f'font-size="18">{label}</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# command-line interface
# ---------------------------------------------------------------------------

_BUILD_TARGETS = ("cube", "hemi", "map", "roli", "enantiomorph", "cover", "mk")


def _build_certificate(target: str, cfg: CliConfig) -> dict:
    if target == "cube":
        return cf.build_cube().certificate()
    if target == "hemi":
        return cf.build_hemi().certificate()
    if target == "map":
        return cf.build_map().certificate()
    if target == "roli":
        return cf.build_roli().certificate()
    if target == "enantiomorph":
        return cf.build_enantiomorph().certificate()
    if target == "cover":
        return cf.build_cover().certificate()
    if target == "mk":
        config = mk.build_configuration(policy=cfg.seed_labels)
        data = config.to_json_dict()
        table_cmp = mk.compare_with_table(config)
        g = mk.group_333()
        data["table_match"] = {"matches": table_cmp["matches"],
                               "literal": table_cmp["literal"],
                               "relabeling": (list(table_cmp["relabeling"])
                                              if table_cmp["relabeling"] else None)}
        data["unitary_group"] = {k: v for k, v in g.items() if k != "group"}
        return data
    raise ValueError(f"unknown build target {target!r}")


def _emit(data: dict, fmt: str, out: str | None) -> None:
    if fmt == "json":
        text = json.dumps(data, indent=2, sort_keys=True) + "\n"
    else:
        text = "".join(f"{k}: {v}\n" for k, v in sorted(data.items()))
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def main(argv: list[str] | None = None) -> int:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--out", default=None, help="write output to a file")
    common.add_argument("--cap", type=int, default=10**6,
                        help="cap for closures and coset enumeration")
    common.add_argument("--seed-labels", choices=("lex", "table"), default="lex",
                        help="label-assignment policy for the configuration")

    parser = argparse.ArgumentParser(
        prog="polytope-forge",
        description="exact workbench for the chiral {8,3,3} polytope on the "
                    "4-cube, its regular cover, and the Moebius-Kantor "
                    "configuration")
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", parents=[common],
                             help="build one object, emit its certificate")
    p_build.add_argument("target", choices=_BUILD_TARGETS)

    p_verify = sub.add_parser("verify", parents=[common],
                              help="run the verification battery")
    p_verify.add_argument("claims", nargs="*",
                          help="claim ids to run (default: --all)")
    p_verify.add_argument("--all", action="store_true", dest="run_all")
    p_verify.add_argument("--list", action="store_true", dest="list_ids",
                          help="list claim ids and exit")

    p_project = sub.add_parser("project", parents=[common],
                               help="render an SVG projection")
    p_project.add_argument("--preset", choices=("coxeter", "plane"),
                           default="coxeter")
    p_project.add_argument("--scale", type=float, default=100.0)
    p_project.add_argument("--colors", default="1,2,3,4",
                           help="edge direction classes to draw")

    args = parser.parse_args(argv)
    cfg = CliConfig(cap=args.cap, seed_labels=args.seed_labels)

    try:
        if args.command == "build":
            data = _build_certificate(args.target, cfg)
            _emit(data, args.format, args.out)
            return 0

        if args.command == "verify":
            if args.list_ids:
                for claim_id in all_claim_ids():
                    print(claim_id)
                return 0
            if not args.run_all and not args.claims:
                parser.error("verify needs claim ids or --all")
            only = None if args.run_all or not args.claims else set(args.claims)
            report = run_claims(cfg, only=only)
            if args.format == "json":
                _emit(report.to_json_dict(), "json", args.out)
            else:
                body = "".join(c.line() + "\n" for c in report.claims)
                body += (f"{'all claims pass' if report.all_passed else 'FAILURES'}"
                         f" in {report.elapsed_seconds:.1f}s\n")
                if args.out:
                    with open(args.out, "w", encoding="utf-8") as handle:
                        handle.write(body)
                else:
                    sys.stdout.write(body)
            if not report.all_passed:
                first = next(c for c in report.claims if not c.passed)
                print(f"first failing claim: {first.claim_id}", file=sys.stderr)
                return 1
            return 0

        if args.command == "project":
            colors = tuple(int(tok) for tok in args.colors.split(",") if tok)
            if args.preset == "coxeter":
                spec = coxeter_projection_spec(scale=args.scale, colors=colors)
            else:
                spec = plane_projection_spec(scale=args.scale)
            svg = render_projection(spec)
            if args.out:
                with open(args.out, "w", encoding="utf-8") as handle:
                    handle.write(svg)
            else:
                sys.stdout.write(svg)
            return 0
    except (CapExceeded, ValueError, KeyError, AssertionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
