"""Rational polyhedral cones held in both generator and constraint form.

Every :class:`Cone` is canonical: rays are primitive integer vectors taken
modulo the lineality space and sorted, the lineality space and the linear
span are stored as scaled RREF bases, and facet normals are primitive and
orthogonal to the span equations.  Two cones are therefore equal exactly when
their dataclass fields are equal.

Conversion between the two representations is the incremental double
description method; two rays are adjacent when the constraints tight at both
have rank ``d - l - 2`` (``l`` the lineality dimension).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import DegenerateInput, DimensionMismatch, UnsupportedInput
from .exact import (
    IntVector,
    canonical_basis,
    dot,
    nullspace,
    primitive,
    project_out,
    rank,
    sign_normalize,
)


@dataclass(frozen=True)
class Cone:
    ambient_dim: int
    rays: tuple[IntVector, ...]
    lineality_basis: tuple[IntVector, ...]
    facet_normals: tuple[IntVector, ...]
    span_equations: tuple[IntVector, ...]
    dim: int

    @property
    def is_pointed(self) -> bool:
        return not self.lineality_basis

    @property
    def key(self):
        return (self.dim, self.rays, self.lineality_basis)

    def __repr__(self):
        rays = ", ".join("(" + ",".join(map(str, r)) + ")" for r in self.rays)
        return f"Cone(dim={self.dim}, rays=[{rays}])"


def _check_lengths(ambient_dim: int, vectors: Iterable[Sequence]) -> list[tuple]:
    out = []
    for v in vectors:
        v = tuple(v)
        if len(v) != ambient_dim:
            raise DimensionMismatch(
                f"vector of length {len(v)} in ambient dimension {ambient_dim}")
        out.append(v)
    return out


def _double_description(d: int, inequalities: Sequence[IntVector],
                        equations: Sequence[IntVector]):
    """Generators ``(rays, lines)`` of ``{x : A x >= 0, E x = 0}``.

    The returned rays are extreme modulo the lines but not canonicalized.
    """
    eq_rows = [e for e in equations if any(e)]
    eq_rank = rank(eq_rows)
    lines = nullspace(eq_rows, d)
    rays: list[IntVector] = []
    masks: list[int] = []
    processed: list[IntVector] = []
    rank_cache: dict[int, int] = {}

    def tight_rank(mask: int) -> int:
        r = rank_cache.get(mask)
        if r is None:
            rows = list(eq_rows)
            i, m = 0, mask
            while m:
                if m & 1:
                    rows.append(processed[i])
                m >>= 1
                i += 1
            r = rank(rows)
            rank_cache[mask] = r
        return r

    for a in inequalities:
        if not any(a):
            continue
        idx = len(processed)
        bit = 1 << idx
        line_vals = [dot(a, l) for l in lines]
        pivot = next((i for i, v in enumerate(line_vals) if v), None)
        if pivot is not None:
            l = lines[pivot]
            al = line_vals[pivot]
            if al < 0:
                l = tuple(-x for x in l)
                al = -al
            new_lines = []
            for j, l2 in enumerate(lines):
                if j == pivot:
                    continue
                v = line_vals[j]
                new_lines.append(l2 if v == 0 else primitive(
                    [al * x - v * y for x, y in zip(l2, l)]))
            new_rays = []
            for r in rays:
                v = dot(a, r)
                new_rays.append(r if v == 0 else primitive(
                    [al * x - v * y for x, y in zip(r, l)]))
            masks = [m | bit for m in masks]
            rays = new_rays + [l]
            masks.append((1 << idx) - 1)
            lines = new_lines
            processed.append(a)
            rank_cache.clear()
            continue

        vals = [dot(a, r) for r in rays]
        pos = [i for i, v in enumerate(vals) if v > 0]
        neg = [i for i, v in enumerate(vals) if v < 0]
        processed.append(a)
        if not neg:
            masks = [m | bit if vals[i] == 0 else m for i, m in enumerate(masks)]
            continue
        target = d - len(lines) - 2
        new_rays, new_masks = [], []
        for i, v in enumerate(vals):
            if v >= 0:
                new_rays.append(rays[i])
                new_masks.append(masks[i] | bit if v == 0 else masks[i])
        for p in pos:
            for q in neg:
                common = masks[p] & masks[q]
                if bin(common).count("1") + eq_rank < target:
                    continue
                if tight_rank(common) != target:
                    continue
                vp, vq = vals[p], vals[q]
                new_rays.append(primitive(
                    [vp * x - vq * y for x, y in zip(rays[q], rays[p])]))
                new_masks.append(common | bit)
        rays, masks = new_rays, new_masks
    return rays, lines


def _canonical_generators(d: int, rays, lines):
    lineality = canonical_basis(lines, d) if lines else ()
    out = set()
    for r in rays:
        if lineality:
            r = primitive(project_out(r, lineality))
        else:
            r = primitive(r)
        if any(r):
            out.add(r)
    return tuple(sorted(out)), tuple(lineality)


def _canonical_constraints(d: int, normals, eq_lines):
    equations = canonical_basis(eq_lines, d) if eq_lines else ()
    out = set()
    for h in normals:
        h = primitive(project_out(h, equations)) if equations else primitive(h)
        if any(h):
            out.add(h)
    return tuple(sorted(out)), tuple(equations)


def _assemble(d, rays, lines, facet_rays, facet_lines) -> Cone:
    rays, lineality = _canonical_generators(d, rays, lines)
    facets, equations = _canonical_constraints(d, facet_rays, facet_lines)
    return Cone(d, rays, lineality, facets, equations, d - len(equations))


def cone_from_rays(ambient_dim: int, generators: Iterable[Sequence[int]],
                   lineality: Iterable[Sequence[int]] = ()) -> Cone:
    """Cone of nonnegative combinations of ``generators`` (plus a linear part)."""
    gens = [primitive(g) for g in _check_lengths(ambient_dim, generators)]
    gens = sorted({g for g in gens if any(g)})
    lines = [tuple(l) for l in _check_lengths(ambient_dim, lineality) if any(l)]
    f_rays, f_lines = _double_description(ambient_dim, gens, lines)
    h = _canonical_constraints(ambient_dim, f_rays, f_lines)
    rays, lines = _double_description(ambient_dim, h[0], h[1])
    return _assemble(ambient_dim, rays, lines, h[0], h[1])


def cone_from_constraints(ambient_dim: int, inequalities: Iterable[Sequence[int]],
                          equations: Iterable[Sequence[int]] = ()) -> Cone:
    """Cone ``{x : ineq . x >= 0, eq . x = 0}`` with redundancy removed."""
    ineqs = sorted({primitive(a) for a in _check_lengths(ambient_dim, inequalities)})
    eqs = [primitive(e) for e in _check_lengths(ambient_dim, equations)]
    rays, lines = _double_description(ambient_dim, [a for a in ineqs if any(a)], eqs)
    v = _canonical_generators(ambient_dim, rays, lines)
    f_rays, f_lines = _double_description(ambient_dim, v[0], v[1])
    return _assemble(ambient_dim, v[0], v[1], f_rays, f_lines)


def zero_cone(ambient_dim: int) -> Cone:
    return cone_from_rays(ambient_dim, [])


def cone_dim(c: Cone) -> int:
    return c.dim


def _as_point(c: Cone, p: Sequence) -> tuple:
    p = tuple(p)
    if len(p) != c.ambient_dim:
        raise DimensionMismatch(
            f"point of length {len(p)} in ambient dimension {c.ambient_dim}")
    return p


def contains(c: Cone, p: Sequence) -> bool:
    p = _as_point(c, p)
    return (all(dot(e, p) == 0 for e in c.span_equations)
            and all(dot(h, p) >= 0 for h in c.facet_normals))


def in_relative_interior(c: Cone, p: Sequence) -> bool:
    p = _as_point(c, p)
    return (all(dot(e, p) == 0 for e in c.span_equations)
            and all(dot(h, p) > 0 for h in c.facet_normals))


def relint_point(c: Cone) -> tuple[Fraction, ...]:
    """Sum of the canonical rays; lies in the relative interior of ``c``."""
    if c.dim == 0:
        raise DegenerateInput("the zero cone has no relative interior point besides 0")
    return tuple(Fraction(sum(r[i] for r in c.rays)) for i in range(c.ambient_dim))


def intersect(c1: Cone, c2: Cone) -> Cone:
    if c1.ambient_dim != c2.ambient_dim:
        raise DimensionMismatch("cones live in different ambient spaces")
    if c1 == c2:
        return c1
    return cone_from_constraints(c1.ambient_dim,
                                 c1.facet_normals + c2.facet_normals,
                                 c1.span_equations + c2.span_equations)


def cones_equal(c1: Cone, c2: Cone) -> bool:
    return c1 == c2


def _zero_sets(c: Cone) -> list[frozenset[int]]:
    return [frozenset(i for i, r in enumerate(c.rays) if dot(h, r) == 0)
            for h in c.facet_normals]


def face_ray_sets(c: Cone) -> set[frozenset[int]]:
    """Ray-index sets of all faces of a pointed cone (including ``c`` and 0)."""
    if not c.is_pointed:
        raise UnsupportedInput("faces() requires a pointed cone")
    found = {frozenset(range(len(c.rays)))}
    stack = list(found)
    zs = _zero_sets(c)
    while stack:
        f = stack.pop()
        for z in zs:
            g = f & z
            if g not in found:
                found.add(g)
                stack.append(g)
    return found


def faces(c: Cone) -> set[Cone]:
    """All faces of a pointed cone, each canonical."""
    return {cone_from_rays(c.ambient_dim, [c.rays[i] for i in sorted(s)])
            for s in face_ray_sets(c)}


def cut_halfspace(c: Cone, normal: Sequence[int]) -> Cone:
    """``c ∩ {normal . x >= 0}`` for a pointed cone by a single DD step.

    The facets of the result are selected from the facets of ``c`` and the
    new constraint, so no full conversion is needed.
    """
    if not c.is_pointed:
        raise UnsupportedInput("cut_halfspace requires a pointed cone")
    normal = tuple(normal)
    vals = [dot(normal, r) for r in c.rays]
    if all(v >= 0 for v in vals):
        return c
    d = c.ambient_dim
    tight = [frozenset(j for j, h in enumerate(c.facet_normals) if dot(h, r) == 0)
             for r in c.rays]
    target = c.dim - 2
    eqs = list(c.span_equations)
    new_rays = {r for r, v in zip(c.rays, vals) if v >= 0}
    for p, vp in enumerate(vals):
        if vp <= 0:
            continue
        for q, vq in enumerate(vals):
            if vq >= 0:
                continue
            common = tight[p] & tight[q]
            if len(common) < target:
                continue
            rows = eqs + [c.facet_normals[j] for j in common]
            if rank(rows) != d - 2:
                continue
            new_rays.add(primitive([vp * x - vq * y for x, y in zip(c.rays[q], c.rays[p])]))
    rays = tuple(sorted(new_rays))
    if not rays:
        return zero_cone(d)
    cand = set(c.facet_normals)
    h = primitive(project_out(normal, c.span_equations)) if c.span_equations else primitive(normal)
    cand.add(h)
    dim = rank(rays)
    if dim != c.dim:
        return cone_from_rays(d, rays)
    facets = tuple(sorted(f for f in cand
                          if rank([r for r in rays if dot(f, r) == 0]) == dim - 1))
    return Cone(d, rays, (), facets, c.span_equations, dim)


@dataclass(frozen=True)
class Hyperplane:
    """Linear hyperplane ``normal . x = 0`` tagged with the family it came from.

    ``I`` and ``J`` are 1-based index sets (into the x- and y-blocks for the
    SL families); ``k`` is only used by ``SL_f5``.
    """

    normal: IntVector
    family: str
    I: tuple[int, ...] = ()
    J: tuple[int, ...] = ()
    k: Optional[int] = None

    def __post_init__(self):
        if not any(self.normal):
            raise DegenerateInput("hyperplane normal must be nonzero")

    def value(self, p: Sequence):
        return dot(self.normal, p)

    def describe(self) -> str:
        bits = [self.family]
        if self.I:
            bits.append("I=" + "{" + ",".join(map(str, self.I)) + "}")
        if self.J:
            bits.append("J=" + "{" + ",".join(map(str, self.J)) + "}")
        if self.k is not None:
            bits.append(f"k={self.k}")
        return " ".join(bits)


def canonical_hyperplane_normal(normal: Sequence) -> IntVector:
    return sign_normalize(primitive(normal))


def equation_cone(ambient_dim: int, normal: Sequence[int]) -> Cone:
    """The hyperplane ``normal . x = 0`` as a (non-pointed) cone."""
    return cone_from_constraints(ambient_dim, [], [normal])
