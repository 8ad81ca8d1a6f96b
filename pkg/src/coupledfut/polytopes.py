"""Moment-polytope oracle, independent of the localization engine.

A parametric polytope is cut out by integer facet normals with polynomial
offsets: P(c) = { y : <normal_i, y> <= offset_i(c) }.  Realizing it at a
rational parameter value enumerates vertices exactly (square subsystems of
active facets), and volumes and first moments come from a recursive star
triangulation over the face lattice.  Curves in the parameter are recovered
by exact interpolation at sample values, with held-out verification points,
so a chamber crossing inside the interval is detected rather than silently
averaged over.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import GeometryError, UsageError, ValidationError
from .rationals import (ParamPoly, RationalFunction, interpolate, rat,
                        rat_text)

Vector = tuple[Fraction, ...]


# ---------------------------------------------------------------------------
# exact linear algebra over Fraction


def _det(rows: list[list[Fraction]]) -> Fraction:
    n = len(rows)
    m = [row[:] for row in rows]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col] == 0:
                continue
            f = m[r][col] * inv
            for cc in range(col, n):
                m[r][cc] -= f * m[col][cc]
    return det


def _rank(rows: list[list[Fraction]]) -> int:
    if not rows:
        return 0
    m = [row[:] for row in rows]
    n_rows, n_cols = len(m), len(m[0])
    rank = 0
    row = 0
    for col in range(n_cols):
        pivot = next((r for r in range(row, n_rows) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        inv = 1 / m[row][col]
        for r in range(n_rows):
            if r != row and m[r][col] != 0:
                f = m[r][col] * inv
                for cc in range(col, n_cols):
                    m[r][cc] -= f * m[row][cc]
        rank += 1
        row += 1
        if row == n_rows:
            break
    return rank


def _solve_square(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Solve A x = b exactly; None when A is singular."""
    n = len(rows)
    m = [rows[i][:] + [rhs[i]] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return None
        m[col], m[pivot] = m[pivot], m[col]
        inv = 1 / m[col][col]
        for cc in range(col, n + 1):
            m[col][cc] *= inv
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                for cc in range(col, n + 1):
                    m[r][cc] -= f * m[col][cc]
    return [m[r][n] for r in range(n)]


def _affine_rank(points: list[Vector]) -> int:
    """Dimension of the affine hull (0 for a single point)."""
    if len(points) <= 1:
        return 0
    base = points[0]
    rows = [[x - b for x, b in zip(p, base)] for p in points[1:]]
    return _rank(rows)


# ---------------------------------------------------------------------------
# parametric and realized polytopes


@dataclass(frozen=True)
class Facet:
    normal: tuple[int, ...]
    offset: ParamPoly


@dataclass(frozen=True)
class ParamPolytope:
    """Intersection of half-spaces <normal_i, y> <= offset_i(parameter)."""

    param: str
    ambient: int
    facets: tuple[Facet, ...]

    @staticmethod
    def create(param: str, ambient: int,
               facets: list[tuple[tuple[int, ...], ParamPoly]]) -> "ParamPolytope":
        if ambient < 1:
            raise ValidationError("ambient dimension must be positive")
        if len(facets) < ambient + 1:
            raise ValidationError(
                "%d facets cannot bound a %d-dimensional polytope"
                % (len(facets), ambient))
        built = []
        for normal, offset in facets:
            normal = tuple(int(x) for x in normal)
            if len(normal) != ambient:
                raise ValidationError("normal %r has wrong length" % (normal,))
            if all(x == 0 for x in normal):
                raise ValidationError("zero facet normal")
            if offset.param != param:
                raise ValidationError("offset parameter mismatch")
            built.append(Facet(normal, offset))
        return ParamPolytope(param, ambient, tuple(built))


@dataclass(frozen=True)
class RealizedPolytope:
    """Vertex description of one realization, with facet incidence."""

    ambient: int
    value: Fraction
    vertices: tuple[Vector, ...]
    incidence: tuple[frozenset[int], ...]
    supported: tuple[bool, ...]

    def is_simple(self) -> bool:
        return all(len(inc) == self.ambient for inc in self.incidence)

    def is_full_dimensional(self) -> bool:
        return _affine_rank(list(self.vertices)) == self.ambient

    def signature(self) -> frozenset[frozenset[int]]:
        """Vertex-facet incidence pattern, independent of vertex order."""
        return frozenset(self.incidence)


def realize(pp: ParamPolytope, value: int | str | Fraction) -> RealizedPolytope:
    """Enumerate the vertices at one parameter value.

    Raises GeometryError when the realization is empty or unbounded.
    Redundant facets are tolerated and reported through the supported flags.
    """
    value = rat(value)
    n = pp.ambient
    normals = [[Fraction(x) for x in f.normal] for f in pp.facets]
    offsets = [f.offset.eval(value) for f in pp.facets]

    if _rank(normals) < n:
        raise GeometryError(
            "normals span a proper subspace; the polytope is unbounded")
    for subset in itertools.combinations(range(len(normals)), n - 1):
        rows = [normals[i] for i in subset]
        if n > 1 and _rank(rows) != n - 1:
            continue
        ray = _kernel_direction(rows, n)
        if ray is None:
            continue
        for direction in (ray, [-x for x in ray]):
            if all(_dot(normals[i], direction) <= 0 for i in range(len(normals))):
                raise GeometryError("unbounded: recession ray %s" % (direction,))

    vertices: list[Vector] = []
    for subset in itertools.combinations(range(len(normals)), n):
        rows = [normals[i] for i in subset]
        rhs = [offsets[i] for i in subset]
        sol = _solve_square(rows, rhs)
        if sol is None:
            continue
        if all(_dot(normals[i], sol) <= offsets[i] for i in range(len(normals))):
            v = tuple(sol)
            if v not in vertices:
                vertices.append(v)
    if not vertices:
        raise GeometryError("empty realization at %s = %s"
                            % (pp.param, rat_text(value)))
    vertices.sort()
    incidence = tuple(
        frozenset(i for i in range(len(normals))
                  if _dot(normals[i], list(v)) == offsets[i])
        for v in vertices)
    supported = []
    for i in range(len(normals)):
        face = [list(v) for v, inc in zip(vertices, incidence) if i in inc]
        supported.append(bool(face) and _affine_rank(
            [tuple(p) for p in face]) == n - 1)
    return RealizedPolytope(n, value, tuple(vertices), incidence,
                            tuple(supported))


def _kernel_direction(rows: list[list[Fraction]], n: int) -> list[Fraction] | None:
    """A nonzero vector orthogonal to n-1 independent rows."""
    for drop in range(n):
        cols = [c for c in range(n) if c != drop]
        sq = [[row[c] for c in cols] for row in rows]
        if n > 1 and _rank(sq) != n - 1:
            continue
        rhs = [-row[drop] for row in rows]
        sol = _solve_square(sq, rhs) if n > 1 else []
        if sol is None:
            continue
        out = [Fraction(0)] * n
        out[drop] = Fraction(1)
        for c, val in zip(cols, sol):
            out[c] = val
        return out
    return None


def _dot(a: list[Fraction], b: list[Fraction]) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


# ---------------------------------------------------------------------------
# volume and first moments by recursive star triangulation


def _face_simplices(vertices: list[Vector], active: frozenset[int],
                    incidence: dict[Vector, frozenset[int]],
                    facet_count: int, dim: int) -> list[list[Vector]]:
    """Triangulate one face of dimension dim into dim-simplices."""
    if dim == 0:
        return [[vertices[0]]]
    anchor = min(vertices)
    simplices: list[list[Vector]] = []
    seen: set[frozenset[Vector]] = set()
    for g in range(facet_count):
        if g in active:
            continue
        sub = [v for v in vertices if g in incidence[v]]
        if not sub or anchor in sub:
            continue
        key = frozenset(sub)
        if key in seen:
            continue
        seen.add(key)
        if _affine_rank(sub) != dim - 1:
            continue
        for s in _face_simplices(sub, active | {g}, incidence,
                                 facet_count, dim - 1):
            simplices.append([anchor] + s)
    return simplices


def triangulate(rp: RealizedPolytope,
                apex: Vector | None = None) -> list[list[Vector]]:
    """Star triangulation into full-dimensional simplices.

    The default apex is the barycenter of the vertex set; any other point,
    in particular any vertex, yields the same volume and moments.
    """
    n = rp.ambient
    if apex is None:
        k = len(rp.vertices)
        apex = tuple(sum(v[i] for v in rp.vertices) / k for i in range(n))
    incidence = {v: inc for v, inc in zip(rp.vertices, rp.incidence)}
    facet_count = max((max(inc) for inc in rp.incidence if inc), default=-1) + 1
    simplices: list[list[Vector]] = []
    for f in range(facet_count):
        face = [v for v in rp.vertices if f in incidence[v]]
        if not face or _affine_rank(face) != n - 1:
            continue
        if apex in face:
            continue
        for s in _face_simplices(face, frozenset([f]), incidence,
                                 facet_count, n - 1):
            simplices.append([apex] + s)
    return simplices


def _simplex_volume(simplex: list[Vector]) -> Fraction:
    n = len(simplex) - 1
    base = simplex[0]
    rows = [[x - b for x, b in zip(v, base)] for v in simplex[1:]]
    det = _det(rows)
    fact = 1
    for i in range(2, n + 1):
        fact *= i
    return abs(det) / fact


def volume(rp: RealizedPolytope, apex: Vector | None = None) -> Fraction:
    """Exact Euclidean volume."""
    if _affine_rank(list(rp.vertices)) < rp.ambient:
        return Fraction(0)
    return sum((_simplex_volume(s) for s in triangulate(rp, apex)), Fraction(0))


def linear_moment(rp: RealizedPolytope, xi: tuple[int, ...],
                  apex: Vector | None = None) -> Fraction:
    """Integral of the linear functional <y, xi> over the polytope."""
    if len(xi) != rp.ambient:
        raise UsageError("direction has wrong length")
    if _affine_rank(list(rp.vertices)) < rp.ambient:
        return Fraction(0)
    total = Fraction(0)
    for s in triangulate(rp, apex):
        vol = _simplex_volume(s)
        if vol == 0:
            continue
        centroid = [sum(v[i] for v in s) / len(s) for i in range(rp.ambient)]
        total += vol * _dot(centroid, [Fraction(x) for x in xi])
    return total


# ---------------------------------------------------------------------------
# parameter curves by interpolation with held-out verification


def _sample_values(interval: tuple[Fraction, Fraction], count: int) -> list[Fraction]:
    lo, hi = interval
    return [lo + Fraction(j, count + 1) * (hi - lo) for j in range(1, count + 1)]


def _curve(pp: ParamPolytope, interval: tuple[Fraction, Fraction],
           degree: int, measure) -> ParamPoly:
    values = _sample_values(interval, degree + 3)
    data = [(x, measure(realize(pp, x))) for x in values]
    poly = interpolate(pp.param, data[:degree + 1])
    for x, y in data[degree + 1:]:
        if poly.eval(x) != y:
            raise GeometryError(
                "measurements on the interval do not lie on one polynomial; "
                "the combinatorial type changes inside it")
    return poly


def volume_curve(pp: ParamPolytope,
                 interval: tuple[Fraction, Fraction]) -> ParamPoly:
    """Euclidean volume as a polynomial in the parameter over the interval."""
    return _curve(pp, interval, pp.ambient, volume)


def moment_curve(pp: ParamPolytope, xi: tuple[int, ...],
                 interval: tuple[Fraction, Fraction]) -> ParamPoly:
    """First moment along xi as a polynomial in the parameter."""
    return _curve(pp, interval, pp.ambient + 1,
                  lambda rp: linear_moment(rp, xi))


@dataclass(frozen=True)
class ToricModel:
    """Moment polytopes of the bundles, a direction, and the ambient polytope."""

    param: str
    ambient: int
    direction: tuple[int, ...]
    polytopes: tuple[ParamPolytope, ...]
    anticanonical: ParamPolytope | None


def fut_toric(model: ToricModel, interval: tuple[Fraction, Fraction],
              direction: tuple[int, ...] | None = None) -> RationalFunction:
    """Sum over bundles of the barycenter coordinate along the direction."""
    xi = direction if direction is not None else model.direction
    if len(xi) != model.ambient:
        raise UsageError("direction has wrong length")
    total = RationalFunction.const(model.param, 0)
    for pp in model.polytopes:
        vol = volume_curve(pp, interval)
        if vol.is_zero():
            raise GeometryError("polytope with zero volume on the interval")
        mom = moment_curve(pp, xi, interval)
        total = total + (RationalFunction.from_poly(mom)
                         / RationalFunction.from_poly(vol))
    return total


def fut_toric_at(polytopes, xi: tuple[int, ...],
                 x: int | str | Fraction) -> Fraction:
    """The invariant at one parameter value, from freshly realized polytopes.

    Unlike the curve version this never interpolates: each polytope is
    realized at x and measured directly, so the value is an oracle for a
    single parameter value.
    """
    x = rat(x)
    total = Fraction(0)
    for pp in polytopes:
        rp = realize(pp, x)
        vol = volume(rp)
        if vol == 0:
            raise GeometryError("degenerate realization at %s" % rat_text(x))
        total += linear_moment(rp, xi) / vol
    return total


@dataclass(frozen=True)
class MinkowskiReport:
    status: str  # "pass" | "fail" | "inconclusive"
    messages: tuple[str, ...]


def minkowski_check(model: ToricModel,
                    interval: tuple[Fraction, Fraction]) -> MinkowskiReport:
    """Certify that the bundle polytopes tile the ambient one additively.

    When all polytopes share the same normals and the same vertex-facet
    incidence pattern at the interval midpoint (strong isomorphism), their
    Minkowski sum adds offsets facetwise; the check then compares offset
    polynomials exactly.  Outside that regime the fast path does not apply
    and the verdict is inconclusive rather than a guess.
    """
    if model.anticanonical is None:
        return MinkowskiReport("inconclusive",
                               ("no ambient polytope to compare against",))
    mid = (interval[0] + interval[1]) / 2
    target = model.anticanonical
    maps = []
    for pp in model.polytopes:
        mapping = _match_normals(pp, target)
        if mapping is None:
            return MinkowskiReport(
                "inconclusive",
                ("facet normals do not correspond one to one",))
        maps.append(mapping)
    realized = [realize(pp, mid) for pp in model.polytopes]
    realized_target = realize(target, mid)
    for rp in realized + [realized_target]:
        if not rp.is_simple() or not rp.is_full_dimensional():
            return MinkowskiReport(
                "inconclusive",
                ("a realization at the midpoint is not simple and "
                 "full-dimensional",))
    target_sig = realized_target.signature()
    for rp, mapping in zip(realized, maps):
        sig = frozenset(frozenset(mapping[i] for i in inc)
                        for inc in rp.incidence)
        if sig != target_sig:
            return MinkowskiReport(
                "inconclusive",
                ("incidence patterns differ; polytopes are not strongly "
                 "isomorphic",))
    for j, tf in enumerate(target.facets):
        total = ParamPoly.zero(model.param)
        for pp, mapping in zip(model.polytopes, maps):
            for i, f in enumerate(pp.facets):
                if mapping[i] == j:
                    total = total + f.offset
        if total != tf.offset:
            return MinkowskiReport(
                "fail",
                ("offsets along normal %s add to %s, expected %s"
                 % (tf.normal, total.text(), tf.offset.text()),))
    return MinkowskiReport("pass", ())


def _match_normals(pp: ParamPolytope, target: ParamPolytope) -> dict[int, int] | None:
    if len(pp.facets) != len(target.facets):
        return None
    tnormals = [f.normal for f in target.facets]
    if len(set(tnormals)) != len(tnormals):
        return None
    mapping = {}
    for i, f in enumerate(pp.facets):
        if f.normal not in tnormals:
            return None
        mapping[i] = tnormals.index(f.normal)
    if len(set(mapping.values())) != len(mapping):
        return None
    return mapping
