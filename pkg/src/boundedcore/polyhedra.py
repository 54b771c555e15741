"""Exact H-to-V conversion for small rational polyhedra, plus hull membership.

This module is the ground truth the structure-aware algorithms are checked
against, so it trades speed for being unconditionally correct:

* all arithmetic is exact (integers internally, `Fraction` at the surface);
* the cone engine is a double-description sweep that carries the lineality
  space explicitly, so cones containing lines come out right;
* output is canonical: lineality bases are in integer reduced row-echelon
  form with positive pivots, rays and vertices are reduced modulo the
  lineality (their lineality-pivot coordinates are zero), rays are primitive
  integer vectors, and all lists are sorted.  Identical polyhedra therefore
  serialize identically.

The sweep state is a pair ``(lin, rays)`` generating the cone cut out by the
rows processed so far: ``span(lin) + cone(rays)``.  Inserting a halfspace
``a·x >= 0`` takes one of two forms.  If some lineality vector leaves the
hyperplane, the lineality shrinks by one dimension and the leaving vector
(signed into the halfspace) joins the rays; every other generator is combined
with it to land on the hyperplane.  Otherwise the classical step applies:
rays on the wrong side are dropped and adjacent (+,-) pairs contribute their
combination on the hyperplane.  Adjacency is decided combinatorially from the
sets of already-processed rows tight at each ray.  Equality rows are two
opposite halfspaces.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatch, DocumentError
from .vectors import (
    Vector,
    dot,
    format_rational,
    integerized,
    parse_rational,
    primitive,
    vec,
)

IntVec = tuple[int, ...]


@dataclass(frozen=True)
class HPolyhedron:
    """``{x : A x >= b, E x = d}`` with exact rational rows."""

    dim: int
    inequalities: tuple[tuple[Vector, Fraction], ...]
    equalities: tuple[tuple[Vector, Fraction], ...] = ()

    def __post_init__(self):
        for coeffs, _ in self.inequalities + self.equalities:
            if len(coeffs) != self.dim:
                raise DimensionMismatch(f"row {coeffs} is not {self.dim}-dimensional")

    @classmethod
    def from_rows(cls, dim, inequalities, equalities=()) -> "HPolyhedron":
        ineq = tuple((vec(a), Fraction(b)) for a, b in inequalities)
        eq = tuple((vec(a), Fraction(b)) for a, b in equalities)
        return cls(dim, ineq, eq)

    def recession(self) -> "HPolyhedron":
        'same rows with every bound set to zero'
        zero = Fraction(0)
        return HPolyhedron(
            self.dim,
            tuple((a, zero) for a, _ in self.inequalities),
            tuple((a, zero) for a, _ in self.equalities),
        )

    def contains_point(self, x: Sequence) -> bool:
        p = vec(x)
        if len(p) != self.dim:
            raise DimensionMismatch(f"point {x} is not {self.dim}-dimensional")
        return all(dot(a, p) >= b for a, b in self.inequalities) and all(
            dot(a, p) == b for a, b in self.equalities
        )

    def admits_direction(self, d: Sequence) -> bool:
        'does the recession cone contain this direction?'
        r = vec(d)
        if len(r) != self.dim:
            raise DimensionMismatch(f"direction {d} is not {self.dim}-dimensional")
        return all(dot(a, r) >= 0 for a, _ in self.inequalities) and all(
            dot(a, r) == 0 for a, _ in self.equalities
        )


@dataclass(frozen=True)
class VRepresentation:
    """``conv(vertices) + cone(extremal_rays) + span(lineality)``.

    ``empty`` is the emptiness signal: an empty polyhedron reports empty
    generator lists and the flag, never an exception.
    """

    dim: int
    vertices: tuple[Vector, ...]
    extremal_rays: tuple[Vector, ...]
    lineality: tuple[Vector, ...]
    empty: bool = False

    @property
    def is_origin_only(self) -> bool:
        return (
            not self.empty
            and not self.extremal_rays
            and not self.lineality
            and self.vertices == (tuple(Fraction(0) for _ in range(self.dim)),)
        )

    def to_document(self) -> dict:
        render = lambda vs: [[format_rational(c) for c in v] for v in vs]
        return {
            "empty": self.empty,
            "vertices": render(self.vertices),
            "extremal_rays": render(self.extremal_rays),
            "lineality": render(self.lineality),
        }


def _row_echelon(rows: list[IntVec], dim: int) -> list[IntVec]:
    """Integer reduced row-echelon basis of the span of ``rows``.

    Pivot entries are positive, pivot columns are zero in every other row,
    rows are primitive and ordered by pivot column.  This form is unique for
    a given subspace, which makes basis comparison a plain equality test.
    """
    work = [[Fraction(c) for c in r] for r in rows if any(r)]
    basis: list[list[Fraction]] = []
    pivots: list[int] = []
    for row in work:
        for b, p in zip(basis, pivots):
            if row[p]:
                f = row[p] / b[p]
                row = [c - f * d for c, d in zip(row, b)]
        pivot = next((j for j in range(dim) if row[j]), None)
        if pivot is None:
            continue
        for b, p in zip(basis, pivots):
            if b[pivot]:
                f = b[pivot] / row[pivot]
                for j in range(dim):
                    b[j] -= f * row[j]
        basis.append(list(row))
        pivots.append(pivot)
    paired = sorted(zip(pivots, basis))
    out = []
    for p, b in paired:
        v = integerized(b)
        if v[p] < 0:
            v = tuple(-c for c in v)
        out.append(v)
    return out


def _reduce_int_mod(basis: list[IntVec], v: IntVec) -> IntVec:
    """Zero out the basis pivot coordinates of ``v`` (positive rescaling allowed)."""
    out = list(v)
    for b in basis:
        p = next(j for j, c in enumerate(b) if c)
        if out[p]:
            lead = b[p]
            out = [lead * c - out[p] * d for c, d in zip(out, b)]
    return primitive(out)


def _reduce_frac_mod(basis: list[IntVec], v: Sequence[Fraction]) -> Vector:
    out = [Fraction(c) for c in v]
    for b in basis:
        p = next(j for j, c in enumerate(b) if c)
        if out[p]:
            f = out[p] / b[p]
            out = [c - f * d for c, d in zip(out, b)]
    return tuple(out)


class _Sweep:
    """Double-description state: lineality basis, rays, tight-row bitmasks."""

    def __init__(self, dim: int):
        self.dim = dim
        self.lin: list[IntVec] = [
            tuple(1 if j == i else 0 for j in range(dim)) for i in range(dim)
        ]
        self.rays: list[IntVec] = []
        self.tight: list[int] = []
        self.rows: list[IntVec] = []

    def _tight_mask(self, r: IntVec) -> int:
        m = 0
        for idx, row in enumerate(self.rows):
            if dot(row, r) == 0:
                m |= 1 << idx
        return m

    def add_halfspace(self, a: IntVec) -> None:
        cut = next((k for k, l in enumerate(self.lin) if dot(a, l)), None)
        if cut is not None:
            l0 = self.lin.pop(cut)
            alpha = dot(a, l0)
            if alpha < 0:
                l0 = tuple(-c for c in l0)
                alpha = -alpha
            self.lin = _row_echelon(
                [primitive([alpha * c - dot(a, l) * d for c, d in zip(l, l0)]) for l in self.lin],
                self.dim,
            )
            new_rays = []
            for r in self.rays:
                s = dot(a, r)
                new_rays.append(r if s == 0 else primitive([alpha * c - s * d for c, d in zip(r, l0)]))
            # projections keep their tight rows: l0 is orthogonal to every processed row
            self.rays = new_rays
            self.tight = [m | 1 << len(self.rows) for m in self.tight]
            self.rays.append(l0)
            self.tight.append((1 << len(self.rows)) - 1)
            self.rows.append(a)
            return

        here = 1 << len(self.rows)
        self.rows.append(a)
        keep: list[IntVec] = []
        keep_tight: list[int] = []
        plus: list[tuple[IntVec, int, int]] = []
        minus: list[tuple[IntVec, int, int]] = []
        for r, t in zip(self.rays, self.tight):
            s = dot(a, r)
            if s == 0:
                keep.append(r)
                keep_tight.append(t | here)
            elif s > 0:
                keep.append(r)
                keep_tight.append(t)
                plus.append((r, t, s))
            else:
                minus.append((r, t, s))
        all_tight = self.tight
        for rp, tp, sp in plus:
            for rm, tm, sm in minus:
                common = tp & tm
                adjacent = True
                for other, to in zip(self.rays, all_tight):
                    if other is rp or other is rm:
                        continue
                    if to & common == common:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                combo = primitive([sp * cm - sm * cp for cp, cm in zip(rp, rm)])
                keep.append(combo)
                keep_tight.append(self._tight_mask(combo))
        self.rays = keep
        self.tight = keep_tight


def _dd_cone(dim: int, eq_rows: list[IntVec], ineq_rows: list[IntVec]):
    """Lineality basis and extremal rays of ``{x : eq·x = 0, ineq·x >= 0}``.

    Rays come back reduced modulo the lineality and primitive, so each
    extremal ray class has exactly one possible representation.
    """
    sweep = _Sweep(dim)
    for a in eq_rows:
        if not any(a):
            continue
        sweep.add_halfspace(a)
        sweep.add_halfspace(tuple(-c for c in a))
    for a in ineq_rows:
        if not any(a):
            continue
        sweep.add_halfspace(a)
    lin = _row_echelon(sweep.lin, dim)
    rays = sorted({_reduce_int_mod(lin, r) for r in sweep.rays})
    return lin, rays


def dd_generators(poly: HPolyhedron) -> VRepresentation:
    """Exact V-representation of an H-polyhedron.

    Pure cones (all bounds zero) are converted directly and report the origin
    as their single vertex.  Anything else is homogenized with an extra
    nonnegative coordinate and split back by its value.
    """
    n = poly.dim
    zero = Fraction(0)
    if all(b == 0 for _, b in poly.inequalities) and all(b == 0 for _, b in poly.equalities):
        eq_rows = [integerized(a) for a, _ in poly.equalities]
        ineq_rows = [integerized(a) for a, _ in poly.inequalities]
        lin, rays = _dd_cone(n, eq_rows, ineq_rows)
        return VRepresentation(
            dim=n,
            vertices=(tuple(zero for _ in range(n)),),
            extremal_rays=tuple(vec(r) for r in rays),
            lineality=tuple(vec(l) for l in lin),
        )

    eq_rows = [integerized(tuple(a) + (-b,)) for a, b in poly.equalities]
    ineq_rows = [tuple([0] * n + [1])]
    ineq_rows += [integerized(tuple(a) + (-b,)) for a, b in poly.inequalities]
    lin, rays = _dd_cone(n + 1, eq_rows, ineq_rows)
    assert all(l[n] == 0 for l in lin), "lineality must stay in the t = 0 slice"
    vertices = []
    directions = []
    for r in rays:
        t = r[n]
        assert t >= 0
        if t > 0:
            vertices.append(tuple(Fraction(c, t) for c in r[:n]))
        else:
            directions.append(vec(r[:n]))
    if not vertices:
        return VRepresentation(dim=n, vertices=(), extremal_rays=(), lineality=(), empty=True)
    return VRepresentation(
        dim=n,
        vertices=tuple(sorted(vertices)),
        extremal_rays=tuple(sorted(directions)),
        lineality=tuple(vec(l[:n]) for l in lin),
    )


def is_bounded(poly: HPolyhedron) -> bool:
    """True exactly when the recession cone collapses to the origin."""
    rec = dd_generators(poly.recession())
    return not rec.extremal_rays and not rec.lineality


def hull_membership(point: Sequence, gens: VRepresentation) -> bool:
    """Exact test of ``point ∈ conv(vertices) + cone(rays) + span(lineality)``.

    Solved as a rational linear feasibility problem (phase-1 simplex with
    Bland's rule), independent of the double-description route.
    """
    p = vec(point)
    if len(p) != gens.dim:
        raise DimensionMismatch(f"point has dimension {len(p)}, generators {gens.dim}")
    for group in (gens.vertices, gens.extremal_rays, gens.lineality):
        for g in group:
            if len(g) != gens.dim:
                raise DimensionMismatch(f"generator {g} is not {gens.dim}-dimensional")
    if gens.empty or not gens.vertices:
        return False
    columns: list[Vector] = []
    columns.extend(gens.vertices)
    columns.extend(gens.extremal_rays)
    for l in gens.lineality:
        columns.append(l)
        columns.append(tuple(-c for c in l))
    rows = []
    rhs = []
    for i in range(gens.dim):
        rows.append([c[i] for c in columns])
        rhs.append(p[i])
    convex_row = [Fraction(1)] * len(gens.vertices)
    convex_row += [Fraction(0)] * (len(columns) - len(gens.vertices))
    rows.append(convex_row)
    rhs.append(Fraction(1))
    return _feasible_nonnegative(rows, rhs)


def _feasible_nonnegative(rows: list[list[Fraction]], rhs: list[Fraction]) -> bool:
    """Does ``A z = b`` admit ``z >= 0``?  Phase-1 simplex, exact arithmetic."""
    m = len(rows)
    cols = len(rows[0]) if rows else 0
    tab = []
    for row, b in zip(rows, rhs):
        if b < 0:
            tab.append([-c for c in row] + [Fraction(0)] * m + [-b])
        else:
            tab.append(list(row) + [Fraction(0)] * m + [b])
    for i in range(m):
        tab[i][cols + i] = Fraction(1)
    width = cols + m + 1
    obj = [Fraction(0)] * width
    for i in range(m):
        for j in range(cols):
            obj[j] -= tab[i][j]
        obj[width - 1] -= tab[i][width - 1]
    basis = [cols + i for i in range(m)]
    while True:
        enter = next((j for j in range(width - 1) if obj[j] < 0), None)
        if enter is None:
            break
        pivot_row = None
        best = None
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = tab[i][width - 1] / tab[i][enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[pivot_row]):
                    best = ratio
                    pivot_row = i
        assert pivot_row is not None, "phase-1 objective is bounded below"
        piv = tab[pivot_row][enter]
        tab[pivot_row] = [c / piv for c in tab[pivot_row]]
        for i in range(m):
            if i != pivot_row and tab[i][enter]:
                f = tab[i][enter]
                tab[i] = [c - f * d for c, d in zip(tab[i], tab[pivot_row])]
        if obj[enter]:
            f = obj[enter]
            obj = [c - f * d for c, d in zip(obj, tab[pivot_row])]
        basis[pivot_row] = enter
    return obj[width - 1] == 0


def parse_vector(values) -> Vector:
    """Vector from a list of ints / ``p/q`` strings (document form)."""
    if not isinstance(values, list):
        raise DocumentError(f"expected a list of rationals, got {values!r}")
    return tuple(parse_rational(v) for v in values)
