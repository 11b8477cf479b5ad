"""Ranked incidence structures: coset geometries, flags and flag graphs,
regular/chiral classification, central quotients, the colourful-polytope
construction from an edge-coloured graph, and covering verification.

Face identity is (rank, canonical key), never a vertex set: distinct faces
of the structures built here can share all their vertices.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Hashable, Iterable, Mapping, Sequence

import networkx as nx

from .groupcore import ConcreteGroup, QuotientElem

__all__ = [
    "NotAPolytope",
    "ConditionFailed",
    "NotEquivelar",
    "NotCentral",
    "NotFree",
    "ImproperColouring",
    "NotACovering",
    "FaceRef",
    "RankedIncidenceStructure",
    "Classification",
    "ClassifyResult",
    "classify",
    "polytope_from_reflections",
    "coset_geometry",
    "central_quotient",
    "ColoredGraph",
    "colourful_polytope",
    "CoveringReport",
    "verify_covering",
    "coset_face_action",
    "FacePerm",
]

FaceRef = tuple[int, int]  # (rank, index within rank)


class NotAPolytope(Exception):
    def __init__(self, axiom: str, witness=None):
        self.axiom = axiom
        self.witness = witness
        super().__init__(f"{axiom}" + (f": {witness!r}" if witness is not None else ""))


class ConditionFailed(Exception):
    pass


class NotEquivelar(Exception):
    pass


class NotCentral(Exception):
    pass


class NotFree(Exception):
    pass


class ImproperColouring(Exception):
    pass


class NotACovering(Exception):
    def __init__(self, reason: str, witness=None):
        self.reason = reason
        self.witness = witness
        super().__init__(f"{reason}" + (f": {witness!r}" if witness is not None else ""))


class RankedIncidenceStructure:
    """Faces organized by rank with a symmetric incidence relation between
    distinct ranks.  Formal least and greatest faces are implicit."""

    def __init__(self, rank: int, faces_by_rank: Sequence[Sequence[Hashable]],
                 incident_pairs: Iterable[tuple[tuple[int, Hashable], tuple[int, Hashable]]]):
        if len(faces_by_rank) != rank:
            raise ValueError("need one face list per rank 0..rank-1")
        self.rank = rank
        self.faces_by_rank: tuple[tuple, ...] = tuple(
            tuple(sorted(keys)) for keys in faces_by_rank)
        self._index: dict[tuple[int, Hashable], int] = {}
        for r, keys in enumerate(self.faces_by_rank):
            if len(set(keys)) != len(keys):
                raise ValueError(f"duplicate face keys at rank {r}")
            for i, k in enumerate(keys):
                self._index[(r, k)] = i
        self._inc: dict[FaceRef, set[FaceRef]] = {
            (r, i): set() for r in range(rank) for i in range(len(self.faces_by_rank[r]))}
        for (r1, k1), (r2, k2) in incident_pairs:
            if r1 == r2:
                raise ValueError("incidence requires distinct ranks")
            a = (r1, self._index[(r1, k1)])
            b = (r2, self._index[(r2, k2)])
            self._inc[a].add(b)
            self._inc[b].add(a)
        self._flags: tuple[tuple[int, ...], ...] | None = None
        self._flag_adj: dict = {}
        # optional metadata attached by builders
        self.group: ConcreteGroup | None = None
        self.subgroups: tuple | None = None
        self.realization: dict[FaceRef, object] | None = None

    # -- face bookkeeping ----------------------------------------------------

    @property
    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(keys) for keys in self.faces_by_rank)

    def key(self, ref: FaceRef):
        return self.faces_by_rank[ref[0]][ref[1]]

    def ref(self, rank: int, key) -> FaceRef:
        return (rank, self._index[(rank, key)])

    def refs(self, rank: int) -> list[FaceRef]:
        return [(rank, i) for i in range(len(self.faces_by_rank[rank]))]

    def all_refs(self) -> list[FaceRef]:
        return [ref for r in range(self.rank) for ref in self.refs(r)]

    def incident(self, a: FaceRef, b: FaceRef) -> bool:
        return b in self._inc[a]

    def incident_at_rank(self, ref: FaceRef, rank: int) -> list[FaceRef]:
        return sorted(x for x in self._inc[ref] if x[0] == rank)

    def between(self, lo: FaceRef | None, hi: FaceRef | None) -> list[FaceRef]:
        """Faces strictly between lo and hi (None = formal bottom / top)."""
        lo_rank = -1 if lo is None else lo[0]
        hi_rank = self.rank if hi is None else hi[0]
        out = []
        for r in range(lo_rank + 1, hi_rank):
            for ref in self.refs(r):
                if lo is not None and not self.incident(lo, ref):
                    continue
                if hi is not None and not self.incident(hi, ref):
                    continue
                out.append(ref)
        return out

    # -- flags ----------------------------------------------------------------

    def flags(self) -> tuple[tuple[int, ...], ...]:
        """All maximal chains hitting every rank, as index tuples."""
        if self._flags is None:
            out = []
            n = self.rank

            def extend(chain: list[FaceRef]):
                r = len(chain)
                if r == n:
                    out.append(tuple(i for (_, i) in chain))
                    return
                if r == 0:
                    candidates = self.refs(0)
                else:
                    candidates = [x for x in self._inc[chain[-1]] if x[0] == r]
                for cand in candidates:
                    if all(self.incident(cand, prev) for prev in chain[:-1]):
                        extend(chain + [cand])

            extend([])
            self._flags = tuple(sorted(out))
        return self._flags

    def is_flag(self, refs: Sequence[FaceRef]) -> bool:
        """One face per rank 0..n-1, mutually incident."""
        if [r for r, _ in refs] != list(range(self.rank)):
            return False
        return all(self.incident(a, b)
                   for a, b in itertools.combinations(refs, 2))

    def flag_adjacent(self, flag: tuple[int, ...], j: int) -> list[tuple[int, ...]]:
        """Flags differing from `flag` exactly in the rank-j face."""
        key = (flag, j)
        cached = self._flag_adj.get(key)
        if cached is not None:
            return cached
        refs = [(r, i) for r, i in enumerate(flag)]
        others = [ref for r, ref in enumerate(refs) if r != j]
        anchors = [ref for ref in others if abs(ref[0] - j) == 1]
        if anchors:
            candidates = set(self.incident_at_rank(anchors[0], j))
            for anchor in anchors[1:]:
                candidates &= set(self.incident_at_rank(anchor, j))
        else:
            candidates = set(self.refs(j))
        out = []
        for cand in sorted(candidates):
            if cand[1] == flag[j]:
                continue
            if all(self.incident(cand, other) for other in others):
                out.append(flag[:j] + (cand[1],) + flag[j + 1:])
        self._flag_adj[key] = out
        return out

    def flag_graph(self) -> nx.Graph:
        """Graph on flags; edges carry the rank at which the flags differ."""
        graph = nx.Graph()
        flag_list = self.flags()
        pos = {f: i for i, f in enumerate(flag_list)}
        graph.add_nodes_from(range(len(flag_list)))
        for f in flag_list:
            for j in range(self.rank):
                for g in self.flag_adjacent(f, j):
                    graph.add_edge(pos[f], pos[g], rank=j)
        return graph

    # -- polytope verification -------------------------------------------------

    def validate_polytope(self) -> None:
        """Raise NotAPolytope unless the diamond condition, full chains and
        strong connectivity all hold."""
        n = self.rank
        if any(count == 0 for count in self.f_vector):
            raise NotAPolytope("empty rank", self.f_vector)

        # diamond: every section of rank 1 has exactly two proper faces
        for r in range(-1, n - 1):
            los = [None] if r == -1 else self.refs(r)
            for lo in los:
                his = [None] if r + 2 == n else self.refs(r + 2)
                for hi in his:
                    if lo is not None and hi is not None and not self.incident(lo, hi):
                        continue
                    mid = self.between(lo, hi)
                    if len(mid) != 2:
                        raise NotAPolytope("diamond condition", (lo, hi, mid))

        # every chain extends to a flag through every rank
        flag_sets = [frozenset(zip(range(n), f)) for f in self.flags()]
        containing: dict[FaceRef, set[int]] = {ref: set() for ref in self.all_refs()}
        for idx, fs in enumerate(flag_sets):
            for ref in fs:
                containing[ref].add(idx)

        def chain_in_flag(chain: list[FaceRef]) -> bool:
            live = None
            for ref in chain:
                live = containing[ref] if live is None else live & containing[ref]
                if not live:
                    return False
            return True

        def walk(chain: list[FaceRef], next_rank: int):
            if chain and not chain_in_flag(chain):
                raise NotAPolytope("chain not contained in any flag", chain)
            for r in range(next_rank, n):
                for cand in self.refs(r):
                    if all(self.incident(cand, prev) for prev in chain):
                        walk(chain + [cand], r + 1)

        walk([], 0)

        # strong connectivity: every section of rank >= 2 is connected
        for lo_rank in range(-1, n - 2):
            los = [None] if lo_rank == -1 else self.refs(lo_rank)
            for hi_rank in range(lo_rank + 3, n + 1):
                his = [None] if hi_rank == n else self.refs(hi_rank)
                for lo in los:
                    for hi in his:
                        if (lo is not None and hi is not None
                                and not self.incident(lo, hi)):
                            continue
                        mid = self.between(lo, hi)
                        graph = nx.Graph()
                        graph.add_nodes_from(mid)
                        for a, b in itertools.combinations(mid, 2):
                            if a[0] != b[0] and self.incident(a, b):
                                graph.add_edge(a, b)
                        if mid and not nx.is_connected(graph):
                            raise NotAPolytope("section not connected", (lo, hi))

        if not nx.is_connected(self.flag_graph()):
            raise NotAPolytope("flag graph not connected")

    def schlafli_type(self) -> tuple[int, ...]:
        """The type vector {p_1, ..., p_{n-1}}; raises NotEquivelar."""
        n = self.rank
        out = []
        for j in range(1, n):
            values = set()
            los = [None] if j - 2 < 0 else self.refs(j - 2)
            his = [None] if j + 1 >= n else self.refs(j + 1)
            for lo in los:
                for hi in his:
                    if lo is not None and hi is not None and not self.incident(lo, hi):
                        continue
                    count = sum(1 for ref in self.between(lo, hi) if ref[0] == j - 1)
                    values.add(count)
            if len(values) != 1:
                raise NotEquivelar(f"rank {j} sections disagree: {sorted(values)}")
            out.append(values.pop())
        return tuple(out)

    # -- comparisons / export ----------------------------------------------------

    def nx_incidence_graph(self) -> nx.Graph:
        graph = nx.Graph()
        for ref in self.all_refs():
            graph.add_node(ref, rank=ref[0])
        for ref in self.all_refs():
            for other in self._inc[ref]:
                graph.add_edge(ref, other)
        return graph

    def isomorphic_to(self, other: "RankedIncidenceStructure") -> bool:
        if self.rank != other.rank or self.f_vector != other.f_vector:
            return False
        return nx.vf2pp_is_isomorphic(self.nx_incidence_graph(),
                                      other.nx_incidence_graph(),
                                      node_label="rank")

    def to_json_dict(self, classification: str | None = None) -> dict:
        data = {
            "schema": "polytope-forge/1",
            "rank": self.rank,
            "f_vector": list(self.f_vector),
            "faces": {str(r): [str(k) for k in keys]
                      for r, keys in enumerate(self.faces_by_rank)},
            "incidence": sorted(
                [[a[0], a[1], b[0], b[1]] for a in self.all_refs()
                 for b in self._inc[a] if a < b]),
        }
        try:
            data["type_vector"] = list(self.schlafli_type())
        except NotEquivelar:
            data["type_vector"] = None
        if classification is not None:
            data["classification"] = classification
        return data


# -- classification ----------------------------------------------------------


class Classification(Enum):
    REGULAR = "regular"
    CHIRAL = "chiral"
    OTHER = "other"


@dataclass(frozen=True)
class ClassifyResult:
    kind: Classification
    orbit_count: int
    flag_count: int
    adjacent_pairs_split: bool


def _check_face_map(p: RankedIncidenceStructure, fm: Mapping[FaceRef, FaceRef]) -> None:
    for r in range(p.rank):
        refs = p.refs(r)
        images = {fm[ref] for ref in refs}
        if images != set(refs):
            raise ValueError(f"face map is not a bijection at rank {r}")
    for ref in p.all_refs():
        for other in p._inc[ref]:
            if not p.incident(fm[ref], fm[other]):
                raise ValueError(f"face map breaks incidence at {(ref, other)}")


def classify(p: RankedIncidenceStructure,
             face_maps: Sequence[Mapping[FaceRef, FaceRef]]) -> ClassifyResult:
    """Flag-orbit classification under a group given by face bijections.

    Regular: one orbit.  Chiral: two orbits and every pair of adjacent flags
    is split across them.  Anything else: Other.
    """
    for fm in face_maps:
        _check_face_map(p, fm)
    flag_list = p.flags()
    pos = {f: i for i, f in enumerate(flag_list)}

    def apply(fm, flag):
        return tuple(fm[(r, i)][1] for r, i in enumerate(flag))

    orbit_of = [-1] * len(flag_list)
    orbits = 0
    for start in range(len(flag_list)):
        if orbit_of[start] != -1:
            continue
        orbit_of[start] = orbits
        queue = deque([start])
        while queue:
            i = queue.popleft()
            for fm in face_maps:
                j = pos[apply(fm, flag_list[i])]
                if orbit_of[j] == -1:
                    orbit_of[j] = orbits
                    queue.append(j)
        orbits += 1

    split = True
    for i, f in enumerate(flag_list):
        for j in range(p.rank):
            for g in p.flag_adjacent(f, j):
                if orbit_of[pos[g]] == orbit_of[i]:
                    split = False
    if orbits == 1:
        kind = Classification.REGULAR
    elif orbits == 2 and split:
        kind = Classification.CHIRAL
    else:
        kind = Classification.OTHER
    return ClassifyResult(kind=kind, orbit_count=orbits,
                          flag_count=len(flag_list), adjacent_pairs_split=split)


# -- coset geometries -----------------------------------------------------------


def _coset_decomposition(group: ConcreteGroup, sub: ConcreteGroup):
    """Canonical representative (minimum) per right coset, plus the map
    element -> canonical representative of its coset."""
    canon: dict = {}
    reps = []
    for g in group.elements:
        if g in canon:
            continue
        members = sorted(s * g for s in sub.elements)
        rep = members[0]
        reps.append(rep)
        for m in members:
            canon[m] = rep
    return sorted(reps), canon


def coset_geometry(group: ConcreteGroup, subgroups: Sequence[ConcreteGroup],
                   validate: bool = True) -> RankedIncidenceStructure:
    """Faces of rank j are right cosets of subgroups[j]; two faces are
    incident when the cosets intersect.  Raises NotAPolytope when asked to
    validate and an axiom fails."""
    for sub in subgroups:
        if not group.is_subgroup(sub):
            raise ValueError("rank subgroup escapes the group")
    rank = len(subgroups)
    decomps = [_coset_decomposition(group, sub) for sub in subgroups]
    faces_by_rank = [reps for reps, _ in decomps]

    products: dict[tuple[int, int], frozenset] = {}
    for j in range(rank):
        for k in range(j + 1, rank):
            products[(j, k)] = frozenset(
                a * b for a in subgroups[k].elements for b in subgroups[j].elements)

    pairs = []
    for j in range(rank):
        for k in range(j + 1, rank):
            prod = products[(j, k)]
            for alpha in faces_by_rank[j]:
                alpha_inv = alpha.inverse()
                for beta in faces_by_rank[k]:
                    if beta * alpha_inv in prod:
                        pairs.append(((j, alpha), (k, beta)))

    struct = RankedIncidenceStructure(rank, faces_by_rank, pairs)
    struct.group = group
    struct.subgroups = tuple(subgroups)
    struct.coset_canon = tuple(canon for _, canon in decomps)
    if validate:
        struct.validate_polytope()
    return struct


def coset_face_action(struct: RankedIncidenceStructure, element) -> dict[FaceRef, FaceRef]:
    """The face permutation induced by right multiplication on cosets."""
    if getattr(struct, "coset_canon", None) is None:
        raise ValueError("structure carries no coset decomposition")
    fm = {}
    for r in range(struct.rank):
        canon = struct.coset_canon[r]
        for ref in struct.refs(r):
            rep = struct.key(ref)
            fm[ref] = struct.ref(r, canon[rep * element])
    return fm


def polytope_from_reflections(group: ConcreteGroup) -> RankedIncidenceStructure:
    """Wythoff-style coset geometry from ordered involutory generators:
    rank-j faces are cosets of the subgroup omitting generator j."""
    gens = group.generator_list()
    for g in gens:
        if not g.is_involution():
            raise ConditionFailed("generators must be involutions")
    from .groupcore import string_condition, intersection_condition
    if not string_condition(gens):
        raise ConditionFailed("string condition fails")
    if not intersection_condition(gens):
        raise ConditionFailed("intersection condition fails")
    subgroups = []
    for j in range(len(gens)):
        rest = [g for i, g in enumerate(gens) if i != j]
        if rest:
            subgroups.append(group.subgroup(rest))
        else:
            subgroups.append(ConcreteGroup([group.identity],
                                           {"e": group.identity}, group.identity))
    return coset_geometry(group, subgroups)


# -- central quotients ------------------------------------------------------------


def central_quotient(p: RankedIncidenceStructure, z,
                     face_map: Mapping[FaceRef, FaceRef] | None = None
                     ) -> RankedIncidenceStructure:
    """Quotient by a central involution acting freely on faces.

    `z` is an element of p.group (the trivial quotient by the identity is
    allowed and returns an isomorphic structure)."""
    if p.group is None:
        raise ValueError("structure carries no group")
    if z not in p.group:
        raise NotCentral("element outside the group")
    if any(z * g != g * z for g in p.group.generator_list()):
        raise NotCentral("element is not central")
    identity = p.group.identity
    if z != identity and z * z != identity:
        raise NotCentral("element is not an involution")
    if face_map is None:
        face_map = coset_face_action(p, z)

    if z != identity:
        for ref in p.all_refs():
            if face_map[ref] == ref:
                raise NotFree(f"face {ref} fixed by the centre")

    faces_by_rank = []
    orbit_key = {}
    for r in range(p.rank):
        keys = []
        for ref in p.refs(r):
            mate = face_map[ref]
            key = min(p.key(ref), p.key(mate))
            orbit_key[ref] = key
            if ref <= mate:
                keys.append(key)
        faces_by_rank.append(keys)

    pairs = set()
    for a in p.all_refs():
        for b in p._inc[a]:
            pairs.add(((a[0], orbit_key[a]), (b[0], orbit_key[b])))

    struct = RankedIncidenceStructure(p.rank, faces_by_rank, pairs)
    quotient_gens = {name: QuotientElem(g, z)
                     for name, g in p.group.generators.items()}
    struct.group = ConcreteGroup.generate(quotient_gens, cap=len(p.group) + 1)
    struct.validate_polytope()
    return struct


# -- colourful polytopes ----------------------------------------------------------


@dataclass(frozen=True)
class ColoredGraph:
    """A properly edge-coloured d-valent graph: every colour class is a
    perfect matching."""

    vertices: tuple
    edge_colors: Mapping[frozenset, int]
    d: int

    def __post_init__(self):
        seen_at: dict = {v: set() for v in self.vertices}
        for edge, color in self.edge_colors.items():
            if len(edge) != 2 or not edge <= set(self.vertices):
                raise ImproperColouring(f"bad edge {edge}")
            if not 1 <= color <= self.d:
                raise ImproperColouring(f"colour {color} outside 1..{self.d}")
            for v in edge:
                if color in seen_at[v]:
                    raise ImproperColouring(f"colour {color} repeated at {v}")
                seen_at[v].add(color)
        for v, colors in seen_at.items():
            if len(colors) != self.d:
                raise ImproperColouring(f"vertex {v} misses a colour class")

    def neighbors(self, v, colors: frozenset):
        for edge, color in self.edge_colors.items():
            if color in colors and v in edge:
                (w,) = edge - {v}
                yield w

    def component(self, v, colors: frozenset) -> tuple:
        seen = {v}
        queue = deque([v])
        while queue:
            u = queue.popleft()
            for w in self.neighbors(u, colors):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return tuple(sorted(seen))


def colourful_polytope(cg: ColoredGraph) -> RankedIncidenceStructure:
    """The simple d-polytope whose j-faces are (colour set of size j,
    connected component); its 1-skeleton is the graph itself."""
    all_colors = frozenset(range(1, cg.d + 1))
    if cg.component(cg.vertices[0], all_colors) != tuple(sorted(cg.vertices)):
        raise ImproperColouring("graph is not connected")

    faces_by_rank: list[list] = []
    comp_of: list[dict] = []
    for j in range(cg.d):
        keys = []
        lookup = {}
        for colors in itertools.combinations(sorted(all_colors), j):
            cset = frozenset(colors)
            remaining = set(cg.vertices)
            while remaining:
                v = min(remaining)
                comp = cg.component(v, cset)
                remaining -= set(comp)
                key = (tuple(sorted(cset)), comp)
                keys.append(key)
                for u in comp:
                    lookup[(cset, u)] = key
        faces_by_rank.append(keys)
        comp_of.append(lookup)

    colors_sorted = sorted(all_colors)
    pairs = []
    for j in range(cg.d):
        for key in faces_by_rank[j]:
            cset, comp = set(key[0]), key[1]
            for k in range(j + 1, cg.d):
                for dcolors in itertools.combinations(colors_sorted, k):
                    if cset <= set(dcolors):
                        dkey = comp_of[k][(frozenset(dcolors), comp[0])]
                        pairs.append(((j, key), (k, dkey)))

    struct = RankedIncidenceStructure(cg.d, faces_by_rank, pairs)
    struct.validate_polytope()

    # the 1-skeleton must reproduce the input graph (for d = 1 the single
    # edge is the maximal face and there is nothing to compare)
    if cg.d >= 2:
        skeleton = set()
        for key in faces_by_rank[1]:
            comp = key[1]
            assert len(comp) == 2
            skeleton.add(frozenset(comp))
        if skeleton != set(map(frozenset, cg.edge_colors)):
            raise ImproperColouring("1-skeleton mismatch")
    return struct


# -- coverings ---------------------------------------------------------------------


class FacePerm:
    """A rank-preserving face bijection of a fixed structure, usable as a
    group element (closure, homomorphic images, relator checks)."""

    __slots__ = ("images",)

    def __init__(self, images: tuple[tuple[int, ...], ...]):
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):  # pragma: no cover - guard
        raise AttributeError("FacePerm is immutable")

    @classmethod
    def from_mapping(cls, struct: RankedIncidenceStructure,
                     mapping: Mapping[FaceRef, FaceRef]) -> "FacePerm":
        images = tuple(
            tuple(mapping[(r, i)][1] for i in range(len(struct.faces_by_rank[r])))
            for r in range(struct.rank))
        return cls(images)

    def as_mapping(self) -> dict[FaceRef, FaceRef]:
        return {(r, i): (r, img) for r, row in enumerate(self.images)
                for i, img in enumerate(row)}

    def __mul__(self, other: "FacePerm") -> "FacePerm":
        return FacePerm(tuple(
            tuple(orow[i] for i in srow)
            for srow, orow in zip(self.images, other.images)))

    def inverse(self) -> "FacePerm":
        rows = []
        for row in self.images:
            inv = [0] * len(row)
            for i, img in enumerate(row):
                inv[img] = i
            rows.append(tuple(inv))
        return FacePerm(tuple(rows))

    def __eq__(self, other) -> bool:
        return isinstance(other, FacePerm) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __lt__(self, other: "FacePerm") -> bool:
        return self.images < other.images

    def __repr__(self) -> str:
        return f"FacePerm({self.images!r})"


@dataclass(frozen=True)
class CoveringReport:
    rank_preserving: bool
    surjective: bool
    adjacency_preserving: bool
    preimage_counts: tuple[tuple[int, ...], ...]
    isomorphic_on_facets: bool
    isomorphic_on_vertex_figures: bool

    @property
    def is_k_covering(self) -> bool:
        """Acts isomorphically on facets and vertex-figures."""
        return self.isomorphic_on_facets and self.isomorphic_on_vertex_figures

    def uniform_fiber_size(self) -> int | None:
        sizes = {c for rank in self.preimage_counts for c in rank}
        return sizes.pop() if len(sizes) == 1 else None


def _section_isomorphic(cover, base, fm, cover_anchor, base_anchor, side: str) -> bool:
    if side == "down":
        cover_sec = cover.between(None, cover_anchor) + [cover_anchor]
        base_sec = base.between(None, base_anchor) + [base_anchor]
    else:
        cover_sec = cover.between(cover_anchor, None) + [cover_anchor]
        base_sec = base.between(base_anchor, None) + [base_anchor]
    image = [fm[ref] for ref in cover_sec]
    if len(set(image)) != len(cover_sec) or set(image) != set(base_sec):
        return False
    for a, b in itertools.combinations(range(len(cover_sec)), 2):
        ca, cb = cover_sec[a], cover_sec[b]
        if ca[0] == cb[0]:
            continue
        if cover.incident(ca, cb) != base.incident(image[a], image[b]):
            return False
    return True


def verify_covering(cover: RankedIncidenceStructure, base: RankedIncidenceStructure,
                    face_map: Mapping[FaceRef, FaceRef]) -> CoveringReport:
    """Check a rank- and adjacency-preserving surjection of proper faces and
    report preimage counts plus whether the map is isomorphic on facets and
    vertex-figures."""
    if cover.rank != base.rank:
        raise NotACovering("rank mismatch")
    for ref in cover.all_refs():
        if ref not in face_map:
            raise NotACovering("face map misses a proper face", ref)
        if face_map[ref][0] != ref[0]:
            raise NotACovering("face map changes rank", ref)

    counts = []
    for r in range(base.rank):
        per_face = {ref: 0 for ref in base.refs(r)}
        for ref in cover.refs(r):
            per_face[face_map[ref]] += 1
        if any(c == 0 for c in per_face.values()):
            missing = next(ref for ref, c in per_face.items() if c == 0)
            raise NotACovering("not surjective", missing)
        counts.append(tuple(per_face[ref] for ref in base.refs(r)))

    for a in cover.all_refs():
        for b in cover._inc[a]:
            if not base.incident(face_map[a], face_map[b]):
                raise NotACovering("adjacency broken", (a, b))

    facets_ok = all(
        _section_isomorphic(cover, base, face_map, f, face_map[f], "down")
        for f in cover.refs(cover.rank - 1))
    vertices_ok = all(
        _section_isomorphic(cover, base, face_map, v, face_map[v], "up")
        for v in cover.refs(0))

    return CoveringReport(
        rank_preserving=True,
        surjective=True,
        adjacency_preserving=True,
        preimage_counts=tuple(counts),
        isomorphic_on_facets=facets_ok,
        isomorphic_on_vertex_figures=vertices_ok,
    )
