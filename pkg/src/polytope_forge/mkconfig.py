"""The Moebius-Kantor configuration 8_3, realized exactly.

The ambient space is E^4 with a complex structure J (an orthogonal matrix
with J^2 = -I); scalar multiplication (a+ib)u = au + b(uJ) turns E^4 into
C^2.  All arithmetic happens in the 4-dimensional Q-algebra
Q(sqrt(3), i) = {a + b*sqrt(3) + c*i + d*i*sqrt(3)}; there is no floating
point and no epsilon anywhere in this module.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cubefamily import (
    CONFIGURATION_LINES,
    Labeling,
    build_atlas,
    group_cube,
    group_unitary,
    point_labels,
    presentation_unitary_triangle,
)
from .groupcore import enumerate_cosets, verify_relators

__all__ = [
    "QF",
    "build_J",
    "build_L",
    "complexify",
    "apply_complex",
    "MKPoint",
    "MKLine",
    "Configuration",
    "build_configuration",
    "table_coordinates",
    "table_labeling",
    "configuration_relabelings",
    "group_333",
    "cross_polytope_check",
    "CollinearityFailure",
]


class CollinearityFailure(Exception):
    pass


class QF:
    """An element a + b*sqrt(3) + c*i + d*i*sqrt(3) with rational parts."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a=0, b=0, c=0, d=0):
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))
        object.__setattr__(self, "c", Fraction(c))
        object.__setattr__(self, "d", Fraction(d))

    def __setattr__(self, name, value):  # pragma: no cover - guard
        raise AttributeError("QF is immutable")

    # constructors
    @classmethod
    def sqrt3(cls) -> "QF":
        return cls(0, 1)

    @classmethod
    def i(cls) -> "QF":
        return cls(0, 0, 1)

    @classmethod
    def r(cls) -> "QF":
        """sqrt(3) - 1, the inner-square radius."""
        return cls(-1, 1)

    @staticmethod
    def _coerce(x) -> "QF":
        if isinstance(x, QF):
            return x
        if isinstance(x, (int, Fraction)):
            return QF(x)
        return NotImplemented

    # ring operations
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QF(self.a + other.a, self.b + other.b,
                  self.c + other.c, self.d + other.d)

    __radd__ = __add__

    def __neg__(self):
        return QF(-self.a, -self.b, -self.c, -self.d)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self.a, self.b, self.c, self.d
        e, f, g, h = other.a, other.b, other.c, other.d
        return QF(
            a * e + 3 * b * f - c * g - 3 * d * h,
            a * f + b * e - c * h - d * g,
            a * g + c * e + 3 * (b * h + d * f),
            a * h + d * e + b * g + c * f,
        )

    __rmul__ = __mul__

    def conj_i(self) -> "QF":
        """The automorphism i -> -i."""
        return QF(self.a, self.b, -self.c, -self.d)

    def conj_sqrt3(self) -> "QF":
        """The automorphism sqrt(3) -> -sqrt(3)."""
        return QF(self.a, -self.b, self.c, -self.d)

    def norm(self) -> Fraction:
        """Product over all four conjugates; lands in Q."""
        n1 = self * self.conj_i()
        full = n1 * n1.conj_sqrt3()
        assert full.b == full.c == full.d == 0
        return full.a

    def inverse(self) -> "QF":
        n1 = self * self.conj_i()
        n = (n1 * n1.conj_sqrt3()).a
        if n == 0:
            raise ZeroDivisionError("QF division by zero")
        return self.conj_i() * n1.conj_sqrt3() * QF(Fraction(1, 1) / n)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def is_zero(self) -> bool:
        return self.a == self.b == self.c == self.d == 0

    def is_rational(self) -> bool:
        return self.b == self.c == self.d == 0

    def is_real(self) -> bool:
        return self.c == self.d == 0

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self.a, self.b, self.c, self.d) == (other.a, other.b, other.c, other.d)

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.c, self.d))

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c, self.d)

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * 3 ** 0.5

    def to_complex(self) -> complex:
        root = 3 ** 0.5
        return complex(float(self.a) + float(self.b) * root,
                       float(self.c) + float(self.d) * root)

    def __repr__(self) -> str:
        return f"QF({self.a}, {self.b}, {self.c}, {self.d})"


ZERO = QF(0)
ONE = QF(1)

Vec4 = tuple[QF, QF, QF, QF]
Mat4 = tuple[Vec4, Vec4, Vec4, Vec4]


def vec(*entries) -> tuple[QF, ...]:
    return tuple(QF._coerce(x) for x in entries)


def dot(u: Vec4, v: Vec4) -> QF:
    total = ZERO
    for x, y in zip(u, v):
        total = total + x * y
    return total


def vec_add(u, v):
    return tuple(x + y for x, y in zip(u, v))


def scalar_mul(s: QF, u):
    return tuple(s * x for x in u)


def row_times_matrix(u, m: Mat4):
    return tuple(
        sum((u[i] * m[i][j] for i in range(4)), ZERO) for j in range(4))


def mat_mul(p: Mat4, q: Mat4) -> Mat4:
    return tuple(row_times_matrix(row, q) for row in p)


def mat_transpose(m: Mat4) -> Mat4:
    return tuple(tuple(m[i][j] for i in range(4)) for j in range(4))


_IDENTITY4: Mat4 = tuple(
    tuple(ONE if i == j else ZERO for j in range(4)) for i in range(4))


@lru_cache(maxsize=None)
def build_J() -> Mat4:
    """The complex structure: orthogonal, J^2 = -I, entries 0 or +-1/sqrt(3)."""
    s = QF.sqrt3().inverse()
    z = ZERO
    rows = (
        (z, s, -s, -s),
        (-s, z, -s, s),
        (s, s, z, s),
        (s, -s, -s, z),
    )
    assert mat_mul(rows, rows) == tuple(
        tuple(-x for x in row) for row in _IDENTITY4)
    assert mat_mul(rows, mat_transpose(rows)) == _IDENTITY4
    return rows


@lru_cache(maxsize=None)
def build_L() -> Mat4:
    """Rows a1, b1, a2, b2: an orthogonal basis adapted to J; the first two
    rows span the projection plane, the last two its orthogonal complement."""
    f = QF.sqrt3() / 6  # 1/(2*sqrt(3))
    t = QF(2) + QF.sqrt3()
    s3 = QF.sqrt3()
    rows = (
        scalar_mul(f, (s3, QF(-1), QF(1), -t)),
        scalar_mul(f, (QF(-1), t, s3, QF(-1))),
        scalar_mul(f, (QF(-1), -s3, t, QF(1))),
        scalar_mul(f, (t, QF(1), QF(1), s3)),
    )
    a1, b1, a2, b2 = rows
    assert dot(a1, a1) == dot(b1, b1) and dot(a1, b1) == ZERO
    assert dot(a2, a2) == dot(b2, b2) and dot(a2, b2) == ZERO
    for x in (a1, b1):
        for y in (a2, b2):
            assert dot(x, y) == ZERO
    j = build_J()
    assert row_times_matrix(a1, j) == b1
    assert row_times_matrix(a2, j) == b2
    return rows


def lift(point) -> tuple[QF, ...]:
    return tuple(QF(x) for x in point)


def apply_complex(z: QF, u) -> tuple[QF, ...]:
    """(x + iy) u = x*u + y*(uJ), with x, y in Q(sqrt(3))."""
    x = QF(z.a, z.b)
    y = QF(z.c, z.d)
    return vec_add(scalar_mul(x, u), scalar_mul(y, row_times_matrix(u, build_J())))


def complexify(point) -> tuple[QF, QF]:
    """Coordinates (z1, z2) of a vector in the C-basis a1, a2."""
    u = tuple(x if isinstance(x, QF) else QF(x) for x in point)
    a1, b1, a2, b2 = build_L()
    x1 = dot(u, a1) / dot(a1, a1)
    y1 = dot(u, b1) / dot(b1, b1)
    x2 = dot(u, a2) / dot(a2, a2)
    y2 = dot(u, b2) / dot(b2, b2)
    for part in (x1, y1, x2, y2):
        assert part.is_real()
    z1 = QF(x1.a, x1.b, y1.a, y1.b)
    z2 = QF(x2.a, x2.b, y2.a, y2.b)
    recon = vec_add(apply_complex(z1, a1), apply_complex(z2, a2))
    assert recon == u
    return z1, z2


# ---------------------------------------------------------------------------
# the configuration
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MKPoint:
    label: int
    ambient: tuple[int, ...]
    z1: QF
    z2: QF


@dataclass(frozen=True)
class MKLine:
    coeff_z1: QF
    coeff_z2: QF
    rhs: QF
    points: tuple[int, int, int]

    def contains(self, p: MKPoint) -> bool:
        return (self.coeff_z1 * p.z1 + self.coeff_z2 * p.z2 - self.rhs).is_zero()


@dataclass(frozen=True)
class Configuration:
    points: tuple[MKPoint, ...]
    lines: tuple[MKLine, ...]
    incidence: tuple[tuple[int, ...], ...]
    labeling: Labeling

    def incidence_row_sums(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self.incidence)

    def incidence_col_sums(self) -> tuple[int, ...]:
        return tuple(sum(row[j] for row in self.incidence) for j in range(8))

    def to_json_dict(self) -> dict:
        def qf(x: QF):
            return [str(t) for t in x.as_tuple()]

        return {
            "schema": "polytope-forge/1",
            "object": "moebius-kantor",
            "points": [{"label": p.label, "ambient": list(p.ambient),
                        "z1": qf(p.z1), "z2": qf(p.z2)} for p in self.points],
            "lines": [{"points": list(ln.points), "coeff_z1": qf(ln.coeff_z1),
                       "coeff_z2": qf(ln.coeff_z2), "rhs": qf(ln.rhs)}
                      for ln in self.lines],
            "incidence": [list(row) for row in self.incidence],
        }


def _line_through(p: MKPoint, q: MKPoint, s: MKPoint) -> MKLine:
    dz1 = q.z1 - p.z1
    dz2 = q.z2 - p.z2
    ez1 = s.z1 - p.z1
    ez2 = s.z2 - p.z2
    if not (dz1 * ez2 - dz2 * ez1).is_zero():
        raise CollinearityFailure(f"points {p.label},{q.label},{s.label} not collinear")
    coeff_z1, coeff_z2 = dz2, -dz1
    rhs = coeff_z1 * p.z1 + coeff_z2 * p.z2
    return MKLine(coeff_z1=coeff_z1, coeff_z2=coeff_z2, rhs=rhs,
                  points=tuple(sorted((p.label, q.label, s.label))))


@lru_cache(maxsize=None)
def table_coordinates() -> dict[int, tuple[QF, QF]]:
    """The published complex coordinates, r = sqrt(3) - 1.  The final row is
    labelled 0 in print but is forced to be point 7 by central symmetry."""
    r = QF.r()
    i = QF.i()
    return {
        0: (r, ONE - i),
        1: (-ONE + i, r),
        2: (r * i, -ONE - i),
        3: (-ONE - i, -(r * i)),
        4: (-r, -ONE + i),
        5: (ONE - i, -r),
        6: (-(r * i), ONE + i),
        7: (ONE + i, r * i),
    }


@lru_cache(maxsize=None)
def table_labeling() -> Labeling:
    """Decode the coordinate table back to ambient vertices: an alternative
    label-assignment policy."""
    a1, b1, a2, b2 = build_L()
    point_of = []
    for label in range(8):
        z1, z2 = table_coordinates()[label]
        ambient = vec_add(apply_complex(z1, a1), apply_complex(z2, a2))
        ints = []
        for x in ambient:
            assert x.is_rational() and x.a.denominator == 1
            ints.append(int(x.a))
        assert set(ints) <= {1, -1}
        point_of.append(tuple(ints))
    label_of = {p: lab for lab, p in enumerate(point_of)}
    assert len(label_of) == 8
    return Labeling(point_of=tuple(point_of), label_of=label_of, valid_count=1)


@lru_cache(maxsize=None)
def configuration_relabelings() -> tuple[tuple[int, ...], ...]:
    """All permutations of the labels 0..7 mapping the line system onto
    itself (the incidence-preserving relabelings)."""
    lines = set(CONFIGURATION_LINES)
    out = []
    for perm in itertools.permutations(range(8)):
        if {frozenset(perm[i] for i in line) for line in lines} == lines:
            out.append(perm)
    return tuple(out)


@lru_cache(maxsize=None)
def build_configuration(policy: str = "lex") -> Configuration:
    """Points, lines and the 8x8 incidence matrix of the configuration.

    `policy` picks the label assignment: "lex" solves the constraints on
    the trivalent graph, "table" decodes the published coordinates."""
    if policy == "lex":
        labeling = point_labels()
    elif policy == "table":
        labeling = table_labeling()
    else:
        raise ValueError(f"unknown labeling policy {policy!r}")

    points = []
    for label in range(8):
        ambient = labeling.point_of[label]
        z1, z2 = complexify(ambient)
        points.append(MKPoint(label=label, ambient=ambient, z1=z1, z2=z2))

    lines = []
    for triple in CONFIGURATION_LINES:
        a, b, c = sorted(triple)
        line = _line_through(points[a], points[b], points[c])
        on_line = [p.label for p in points if line.contains(p)]
        if on_line != sorted(triple):
            raise CollinearityFailure(
                f"line {sorted(triple)} passes through {on_line}")
        lines.append(line)
    lines.sort(key=lambda ln: ln.points)

    incidence = tuple(
        tuple(1 if p in ln.points else 0 for p in range(8)) for ln in lines)
    config = Configuration(points=tuple(points), lines=tuple(lines),
                           incidence=incidence, labeling=labeling)
    assert config.incidence_row_sums() == (3,) * 8
    assert config.incidence_col_sums() == (3,) * 8
    _check_mutually_inscribed(config)
    return config


def _check_mutually_inscribed(config: Configuration) -> None:
    """The quadrangles 0246 and 1357 inscribe each other; the same holds for
    the other two companion pairings."""
    line_sets = {frozenset(ln.points) for ln in config.lines}
    pairings = (((0, 2, 4, 6), (1, 3, 5, 7)),
                ((0, 5, 4, 1), (2, 3, 6, 7)),
                ((1, 2, 5, 6), (0, 7, 4, 3)))
    for quad_a, quad_b in pairings:
        for quad, other in ((quad_a, quad_b), (quad_b, quad_a)):
            for k in range(4):
                edge = {quad[k], quad[(k + 1) % 4]}
                matches = [ln for ln in line_sets if edge <= ln]
                assert len(matches) == 1
                (third,) = matches[0] - edge
                assert third in other


def paper_line_coefficients() -> tuple[QF, QF, QF]:
    """The displayed equation of the line through points 1, 6, 7:
    r(1-i) z1 + 2 z2 = 2r(1+i)."""
    r = QF.r()
    i = QF.i()
    return (r * (ONE - i), QF(2), QF(2) * r * (ONE + i))


def line_matches_paper(config: Configuration) -> bool:
    """Is the computed line through 1, 6, 7 proportional to the displayed
    equation (and satisfied by exactly those three points)?"""
    target = next(ln for ln in config.lines if ln.points == (1, 6, 7))
    pa, pb, pc = paper_line_coefficients()
    triples = ((target.coeff_z1, pa), (target.coeff_z2, pb), (target.rhs, pc))
    for (x1, y1), (x2, y2) in itertools.combinations(triples, 2):
        if not (x1 * y2 - y1 * x2).is_zero():
            return False
    for label in range(8):
        point = config.points[label]
        satisfied = (pa * point.z1 + pb * point.z2 - pc).is_zero()
        if satisfied != (label in (1, 6, 7)):
            return False
    return True


def compare_with_table(config: Configuration) -> dict:
    """Match the computed coordinates against the published table, allowing
    an incidence-preserving relabeling; report which one was needed."""
    table = table_coordinates()
    mine = {p.label: (p.z1, p.z2) for p in config.points}
    if all(mine[k] == table[k] for k in range(8)):
        return {"matches": True, "relabeling": tuple(range(8)), "literal": True}
    for perm in configuration_relabelings():
        if all(mine[perm[k]] == table[k] for k in range(8)):
            return {"matches": True, "relabeling": perm, "literal": False}
    return {"matches": False, "relabeling": None, "literal": False}


def central_symmetry_pairs(config: Configuration) -> bool:
    """Label k+4 carries the antipode of label k, with negated coordinates."""
    for k in range(4):
        p, q = config.points[k], config.points[k + 4]
        if q.ambient != tuple(-x for x in p.ambient):
            return False
        if q.z1 != -p.z1 or q.z2 != -p.z2:
            return False
    return True


def plane_shadow_positions(config: Configuration) -> set:
    """Projections to z2 = 0, as exact (real, imaginary) pairs."""
    return {(QF(p.z1.a, p.z1.b), QF(p.z1.c, p.z1.d)) for p in config.points}


def expected_shadow_positions() -> set:
    r = QF.r()
    out = set()
    for s in (1, -1):
        out.add((QF(s) * r, ZERO))
        out.add((ZERO, QF(s) * r))
        for t in (1, -1):
            out.add((QF(s), QF(t)))
    return out


# ---------------------------------------------------------------------------
# the unitary triangle group and the centralizer of J
# ---------------------------------------------------------------------------

def _matrix_of(g) -> Mat4:
    return tuple(tuple(QF(x) for x in row) for row in g.matrix())


@lru_cache(maxsize=None)
def group_333() -> dict:
    """The symmetry group of the complex polygon spanned by the eight
    points: generated by two period-3 elements satisfying the braid
    relation, of order 24, and equal to the centralizer of J in the full
    cube group."""
    atlas = build_atlas()
    g1, g2 = atlas.gamma1, atlas.gamma2
    ident = atlas.rho0 * atlas.rho0
    braid = g1 * g2 * g1 == g2 * g1 * g2
    group = group_unitary()

    j = build_J()
    centralizer = [g for g in group_cube()
                   if mat_mul(_matrix_of(g), j) == mat_mul(j, _matrix_of(g))]

    pres = presentation_unitary_triangle()
    table = enumerate_cosets(pres, subgroup_words=(), cap=10_000)

    return {
        "gamma1_order_3": g1 ** 3 == ident,
        "gamma2_order_3": g2 ** 3 == ident,
        "braid_relation": braid,
        "relators_hold": verify_relators([g1, g2], pres),
        "group_order": len(group),
        "centralizer_order": len(centralizer),
        "centralizer_equals_group": frozenset(centralizer) == group.element_set,
        "presentation_index": table.index,
        "group": group,
    }


def cross_polytope_check() -> dict:
    """The eight labelled vertices are pairwise opposite or orthogonal, and
    are exactly the odd-parity vertices of the ambient 4-cube."""
    labeling = point_labels()
    pts = [labeling.point_of[k] for k in range(8)]
    ok_angles = True
    for p, q in itertools.combinations(pts, 2):
        prod = sum(x * y for x, y in zip(p, q))
        if prod not in (0, -4):
            ok_angles = False
    odd = {p for p in itertools.product((1, -1), repeat=4)
           if sum(1 for x in p if x < 0) % 2 == 1}
    return {
        "pairwise_opposite_or_orthogonal": ok_angles,
        "exactly_odd_parity_vertices": set(pts) == odd,
        "point_0_opposite_4": pts[0] == tuple(-x for x in pts[4]),
        "point_0_orthogonal_1": sum(x * y for x, y in zip(pts[0], pts[1])) == 0,
    }
