"""Cutting a pointed cone by a central hyperplane arrangement.

Chambers are found by a depth-first walk over sign vectors: at each
hyperplane the current cone is split by one double-description step, and a
branch is dropped as soon as it would fall below the dimension of the base.
The fan is the face closure of the chambers.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .errors import DegenerateInput, NotInSupport, UnsupportedInput
from .exact import dot, primitive, project_out, sign_normalize
from .geometry import (
    Cone,
    Hyperplane,
    cone_from_rays,
    cut_halfspace,
    face_ray_sets,
    in_relative_interior,
    intersect,
    relint_point,
)


@dataclass(frozen=True)
class Fan:
    ambient_dim: int
    cones: tuple[Cone, ...]
    hyperplanes: tuple[Hyperplane, ...] = ()
    base: Optional[Cone] = None

    @property
    def max_dim(self) -> int:
        return max((c.dim for c in self.cones), default=0)

    def maximal_cones(self) -> list[Cone]:
        return [c for c in self.cones if c.dim == self.max_dim]


@dataclass(frozen=True)
class ClassHistogram:
    counts: dict[int, int]
    total: int

    def line(self) -> str:
        parts = ", ".join(f"dim {d}: {self.counts[d]}" for d in sorted(self.counts, reverse=True))
        return f"classes: total {self.total} ({parts})"


def _sort_key(c: Cone):
    return (c.dim, c.rays, c.lineality_basis)


def make_fan(ambient_dim: int, cones, hyperplanes=(), base=None) -> Fan:
    unique = {c.key: c for c in cones}
    return Fan(ambient_dim, tuple(sorted(unique.values(), key=_sort_key)),
               tuple(hyperplanes), base)


def reduce_hyperplanes(base: Cone, hyperplanes: Sequence[Hyperplane]):
    """Deduplicate hyperplanes as they act on ``span(base)``.

    Returns sorted pairs ``(projected normal, representative)``.  Normals are
    projected orthogonally onto the span and sign-normalized; hyperplanes
    containing the whole span are dropped.  The representative of a class is
    its member with the smallest own normal.
    """
    groups: dict[tuple, Hyperplane] = {}
    for h in hyperplanes:
        if len(h.normal) != base.ambient_dim:
            raise DegenerateInput("hyperplane and base cone dimensions differ")
        p = sign_normalize(primitive(project_out(h.normal, base.span_equations)))
        if not any(p):
            continue
        cur = groups.get(p)
        if cur is None or _hp_order(h) < _hp_order(cur):
            groups[p] = h
    return sorted(groups.items())


def _hp_order(h: Hyperplane):
    return (h.normal, h.family, h.I, h.J, h.k if h.k is not None else -1)


def _walk(cone: Cone, normals, start: int, signs: tuple, out: list):
    for i in range(start, len(normals)):
        h = normals[i]
        vals = [dot(h, r) for r in cone.rays]
        has_pos = any(v > 0 for v in vals)
        has_neg = any(v < 0 for v in vals)
        if has_pos and has_neg:
            _walk(cut_halfspace(cone, h), normals, i + 1, signs + (1,), out)
            neg = tuple(-x for x in h)
            _walk(cut_halfspace(cone, neg), normals, i + 1, signs + (-1,), out)
            return
        signs = signs + ((1,) if has_pos else (-1,))
    out.append((cone, signs))


def _split_frontier(base: Cone, normals, want: int):
    """Breadth-first expansion into at least ``want`` independent subtrees."""
    frontier = [(base, 0, ())]
    while len(frontier) < want:
        nxt, grew = [], False
        for cone, i, signs in frontier:
            while i < len(normals):
                h = normals[i]
                vals = [dot(h, r) for r in cone.rays]
                if any(v > 0 for v in vals) and any(v < 0 for v in vals):
                    break
                signs = signs + ((1,) if any(v > 0 for v in vals) else (-1,))
                i += 1
            if i == len(normals):
                nxt.append((cone, i, signs))
                continue
            h = normals[i]
            neg = tuple(-x for x in h)
            nxt.append((cut_halfspace(cone, h), i + 1, signs + (1,)))
            nxt.append((cut_halfspace(cone, neg), i + 1, signs + (-1,)))
            grew = True
        frontier = nxt
        if not grew:
            break
    return frontier


def chambers(base: Cone, hyperplanes: Sequence[Hyperplane], threads: int = 1):
    """Maximal cones of the arrangement restricted to ``base``.

    Returns ``(reduced hyperplane list, [(chamber, sign vector), ...])`` with
    chambers in sign-vector order (``+`` before ``-``).
    """
    if base.dim < 1:
        raise DegenerateInput("cannot cut the zero cone")
    if not base.is_pointed:
        raise UnsupportedInput("base cone must be pointed")
    reduced = reduce_hyperplanes(base, hyperplanes)
    normals = [p for p, _ in reduced]
    out: list = []
    if threads <= 1:
        _walk(base, normals, 0, (), out)
    else:
        frontier = _split_frontier(base, normals, 4 * threads)

        def run(task):
            cone, i, signs = task
            res: list = []
            _walk(cone, normals, i, signs, res)
            return res

        with ThreadPoolExecutor(max_workers=threads) as pool:
            for res in pool.map(run, frontier):
                out.extend(res)
    out.sort(key=lambda cs: tuple(-s for s in cs[1]))
    return reduced, out


def fan_from_maximal(ambient_dim: int, maximal: Sequence[Cone], hyperplanes=(), base=None) -> Fan:
    """Face closure of a list of pointed cones."""
    by_rays: dict[tuple, Cone] = {}
    for c in maximal:
        for s in face_ray_sets(c):
            rays = tuple(c.rays[i] for i in sorted(s))
            if rays not in by_rays:
                by_rays[rays] = c if len(s) == len(c.rays) else cone_from_rays(ambient_dim, rays)
    return make_fan(ambient_dim, by_rays.values(), hyperplanes, base)


def cut_cone(base: Cone, hyperplanes: Sequence[Hyperplane], threads: int = 1) -> Fan:
    reduced, found = chambers(base, hyperplanes, threads)
    return fan_from_maximal(base.ambient_dim, [c for c, _ in found],
                            [h for _, h in reduced], base)


def sign_vector(hyperplanes: Sequence[Hyperplane], p: Sequence) -> tuple[int, ...]:
    out = []
    for h in hyperplanes:
        v = dot(h.normal, p)
        out.append((v > 0) - (v < 0))
    return tuple(out)


def class_histogram(f: Fan) -> ClassHistogram:
    counts: dict[int, int] = {}
    for c in f.cones:
        if c.dim >= 1:
            counts[c.dim] = counts.get(c.dim, 0) + 1
    return ClassHistogram(dict(sorted(counts.items())), sum(counts.values()))


def _face_keys(c: Cone) -> set[tuple]:
    return {tuple(c.rays[i] for i in sorted(s)) for s in face_ray_sets(c)}


def _meet(a: Cone, b: Cone) -> Cone:
    if a.span_equations != b.span_equations:
        return intersect(a, b)
    c = a
    for h in b.facet_normals:
        c = cut_halfspace(c, h)
        if c.dim == 0:
            break
    return c


def _separated_common_face(a: Cone, b: Cone, members, face_keys, extra) -> bool:
    """Whether ``a ∩ b`` is a face of both.

    While some hyperplane is >= 0 on ``a`` and <= 0 on ``b`` and nonzero on
    one of them, replace both cones by the faces it cuts out; the
    intersection is unchanged.  Fall back to an explicit intersection.
    """
    while a.rays != b.rays:
        step = None
        for h in a.facet_normals + tuple(tuple(-x for x in g) for g in b.facet_normals) + extra:
            va = [dot(h, r) for r in a.rays]
            vb = [dot(h, r) for r in b.rays]
            if min(va, default=0) >= 0 and max(vb, default=0) <= 0 and (any(va) or any(vb)):
                step = (tuple(r for r, v in zip(a.rays, va) if v == 0),
                        tuple(r for r, v in zip(b.rays, vb) if v == 0))
                break
        if step is None:
            m = _meet(a, b)
            return m.rays in face_keys[a.rays] and m.rays in face_keys[b.rays]
        a, b = members[step[0]], members[step[1]]
    return True


def fan_is_valid(f: Fan) -> bool:
    """Check both fan axioms plus canonical, pairwise distinct members.

    Only pointed members are supported; a non-pointed member makes the
    check fail.
    """
    if any(not c.is_pointed or c.ambient_dim != f.ambient_dim for c in f.cones):
        return False
    if len({c.key for c in f.cones}) != len(f.cones):
        return False
    for c in f.cones:
        if cone_from_rays(f.ambient_dim, c.rays) != c:
            return False
    members = {c.rays: c for c in f.cones}
    face_keys = {}
    for c in f.cones:
        keys = _face_keys(c)
        if not keys <= members.keys():
            return False
        face_keys[c.rays] = keys
    # Axiom 2 on inclusion-maximal members implies it for all members.
    contained = set()
    for c in f.cones:
        contained |= face_keys[c.rays] - {c.rays}
    maximal = [c for c in f.cones if c.rays not in contained]
    extra = tuple(h.normal for h in f.hyperplanes)
    extra = extra + tuple(tuple(-x for x in h) for h in extra)
    for i, a in enumerate(maximal):
        for b in maximal[i + 1:]:
            if not _separated_common_face(a, b, members, face_keys, extra):
                return False
    return True


def locate(f: Fan, a: Sequence) -> Cone:
    """The member whose relative interior contains ``a``."""
    a = tuple(Fraction(x) for x in a)
    if len(a) != f.ambient_dim:
        raise NotInSupport(f"point of length {len(a)} in ambient dimension {f.ambient_dim}")
    for c in f.cones:
        if in_relative_interior(c, a):
            return c
    raise NotInSupport("point is outside the support of the fan")
