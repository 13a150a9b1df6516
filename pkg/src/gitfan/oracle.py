"""Independent check of a fan through orbit cones.

Invariants are evaluated exactly at explicit configurations, orbit cones
are spanned by the degrees of the non-vanishing generators, and the
GIT-cone of a point is the intersection of the orbit cones containing it.
A fan passes when every member equals the GIT-cone of its relative
interior points.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .actions import SO, ActionSpec, DegreeVector, WitnessPoint, degrees, so_degrees, sl_degrees
from .arrangement import Fan
from .configs import PointConfig
from .errors import DimensionMismatch, InsufficientWitnessSet
from .exact import ONE, ZERO, GaussRat, I
from .geometry import Cone, cone_from_constraints, cone_from_rays, contains, relint_point


def bilinear(u, v) -> GaussRat:
    """Symmetric form ``sum_c u[c] v[c]`` (no conjugation)."""
    acc = ZERO
    for a, b in zip(u, v):
        acc = acc + a * b
    return acc


def determinant(rows: Sequence[Sequence[GaussRat]]) -> GaussRat:
    m = [list(r) for r in rows]
    n = len(m)
    det = ONE
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c]), None)
        if p is None:
            return ZERO
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        piv = m[c][c]
        det = det * piv
        inv = piv.inverse()
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return det


def eval_so_invariants(p: PointConfig) -> dict[DegreeVector, GaussRat]:
    if p.covectors:
        raise DimensionMismatch("SO configurations carry no covectors")
    out = {}
    for d in so_degrees(p.m1):
        i, j = d.indices
        out[d] = bilinear(p.vectors[i - 1], p.vectors[j - 1])
    return out


def eval_sl_invariants(p: PointConfig) -> dict[DegreeVector, GaussRat]:
    out = {}
    for d in sl_degrees(p.n, p.m1, p.m2):
        if d.kind == "det-v":
            out[d] = determinant([p.vectors[i - 1] for i in d.indices])
        elif d.kind == "det-l":
            out[d] = determinant([p.covectors[j - 1] for j in d.indices])
        else:
            i, j = d.indices
            out[d] = bilinear(p.covectors[j - 1], p.vectors[i - 1])
    return out


def eval_invariants(spec: ActionSpec, p: PointConfig) -> dict[DegreeVector, GaussRat]:
    if p.n != spec.n or p.m1 != spec.m1 or p.m2 != spec.m2:
        raise DimensionMismatch("configuration does not match the action")
    if spec.group == SO:
        return eval_so_invariants(p)
    return eval_sl_invariants(p)


def nonvanishing(spec: ActionSpec, p: PointConfig) -> frozenset[tuple[int, ...]]:
    return frozenset(d.degree for d, val in eval_invariants(spec, p).items() if val)


def orbit_cone(spec: ActionSpec, p: PointConfig) -> Cone:
    """Cone spanned by the degrees of the generators not vanishing at ``p``."""
    return cone_from_rays(spec.ambient_dim, sorted(nonvanishing(spec, p)))


def git_cone(a: Sequence, orbit_cones: Iterable[Cone]) -> Cone:
    """Intersection of the listed cones that contain ``a``."""
    hit = [c for c in orbit_cones if contains(c, a)]
    if not hit:
        raise InsufficientWitnessSet(a)
    if len(hit) == 1:
        return hit[0]
    ineqs, eqs = [], []
    for c in hit:
        ineqs.extend(c.facet_normals)
        eqs.extend(c.span_equations)
    return cone_from_constraints(hit[0].ambient_dim, ineqs, eqs)


@dataclass(frozen=True)
class SOGraph:
    """Gram-pattern graph: edge ``{i, j}`` iff ``(v_i, v_j) != 0``, loop at
    ``i`` iff ``(v_i, v_i) != 0``.  Vertices are 0-based."""

    m: int
    loops: frozenset[int]
    edges: frozenset[tuple[int, int]]

    def components(self) -> list[tuple[frozenset[int], str]]:
        """Connected components with type ``"A"`` (loop or odd cycle) or ``"B"``."""
        adj = {i: set() for i in range(self.m)}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        colour: dict[int, int] = {}
        out = []
        for s in range(self.m):
            if s in colour:
                continue
            colour[s] = 0
            comp, stack, bipartite = {s}, [s], True
            while stack:
                u = stack.pop()
                for w in adj[u]:
                    if w not in colour:
                        colour[w] = 1 - colour[u]
                        comp.add(w)
                        stack.append(w)
                    elif colour[w] == colour[u]:
                        bipartite = False
            kind = "B" if bipartite and not (comp & self.loops) else "A"
            out.append((frozenset(comp), kind))
        return out


def so_graph(p: PointConfig) -> SOGraph:
    vals = eval_so_invariants(p)
    loops, edges = set(), set()
    for d, v in vals.items():
        if not v:
            continue
        i, j = d.indices
        if i == j:
            loops.add(i - 1)
        else:
            edges.add((i - 1, j - 1))
    return SOGraph(p.m1, frozenset(loops), frozenset(edges))


def so_stabilizer_dim(p: PointConfig) -> int:
    """Dimension of the torus stabilizer of ``pi(v)``: one free parameter per
    type-B component (an isolated loopless vertex counts as type B)."""
    return sum(1 for _, kind in so_graph(p).components() if kind == "B")


_GAUSS_INTS = [GaussRat(a, b) for a in range(-2, 3) for b in range(-2, 3)]


def _random_vector(rng: random.Random, n: int, group: str) -> tuple[GaussRat, ...]:
    kinds = ["zero", "basis", "sum", "sparse", "dense"]
    if group == SO:
        kinds.append("isotropic")
    kind = rng.choice(kinds)
    v = [ZERO] * n
    if kind == "basis":
        v[rng.randrange(n)] = ONE
    elif kind == "sum":
        for c in rng.sample(range(n), rng.randint(1, n)):
            v[c] = ONE
    elif kind == "isotropic":
        a, b = rng.sample(range(n), 2)
        v[a] = ONE
        v[b] = I if rng.random() < 0.5 else -I
    elif kind == "sparse":
        for c in range(n):
            if rng.random() < 0.5:
                v[c] = rng.choice(_GAUSS_INTS)
    elif kind == "dense":
        v = [rng.choice(_GAUSS_INTS) for _ in range(n)]
    return tuple(v)


def random_config(spec: ActionSpec, rng: random.Random) -> PointConfig:
    """A configuration with deliberate coincidences.

    A small palette of vectors (zero, basis vectors, 0/1 sums, isotropic
    vectors for SO, random Gaussian integers in ``{a+bi : |a|,|b| <= 2}``)
    is drawn first and the slots are filled from it, so repeated and
    degenerate vectors occur often.
    """
    n = spec.n

    def fill(count):
        if count == 0:
            return ()
        palette = [_random_vector(rng, n, spec.group) for _ in range(rng.randint(1, count))]
        return tuple(rng.choice(palette) for _ in range(count))

    return PointConfig(n, fill(spec.m1), fill(spec.m2))


def random_configs(spec: ActionSpec, count: int, seed: int) -> list[PointConfig]:
    rng = random.Random(seed)
    return [random_config(spec, rng) for _ in range(count)]


@dataclass(frozen=True)
class FaceResult:
    face: Cone
    point: tuple
    status: str  # pass | coarser | mismatch | unstable | insufficient
    tau: Optional[Cone] = None
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status == "pass"


@dataclass(frozen=True)
class VerificationReport:
    spec: ActionSpec
    results: tuple[FaceResult, ...]
    orbit_cones: tuple[Cone, ...]
    witness_count: int
    random_count: int = 0
    seed: Optional[int] = None

    @property
    def passed(self) -> bool:
        return bool(self.results) and all(r.passed for r in self.results)

    def failures(self) -> list[FaceResult]:
        return [r for r in self.results if not r.passed]


def _second_point(face: Cone) -> tuple:
    # weights 1, 2, 3, ... on the rays: another relative interior point
    return tuple(sum((k + 1) * r[i] for k, r in enumerate(face.rays))
                 for i in range(face.ambient_dim))


def distinct_orbit_cones(spec: ActionSpec, configs: Iterable[PointConfig]) -> list[Cone]:
    seen: dict[frozenset, Cone] = {}
    for p in configs:
        key = nonvanishing(spec, p)
        if key not in seen:
            seen[key] = cone_from_rays(spec.ambient_dim, sorted(key))
    return sorted(seen.values(), key=lambda c: (c.dim, c.rays))


def verify_fan(spec: ActionSpec, fan: Fan, witnesses: Sequence[WitnessPoint],
               extra_configs: Sequence[PointConfig] = (), seed: Optional[int] = None
               ) -> VerificationReport:
    """Compare every fan member of positive dimension with the GIT-cone of
    its relative interior points, computed from the witness orbit cones."""
    configs = [w.config for w in witnesses] + list(extra_configs)
    cones = distinct_orbit_cones(spec, configs)
    results = []
    for face in fan.cones:
        if face.dim == 0:
            continue
        a = relint_point(face)
        try:
            tau = git_cone(a, cones)
        except InsufficientWitnessSet as exc:
            results.append(FaceResult(face, a, "insufficient", None, str(exc)))
            continue
        b = _second_point(face)
        same = all(contains(c, a) == contains(c, b) for c in cones)
        if tau == face and same:
            status, detail = "pass", ""
        elif not same:
            status, detail = "unstable", "two relative interior points lie in different orbit cones"
        elif all(contains(tau, r) for r in face.rays):
            status, detail = "coarser", f"GIT-cone has dim {tau.dim}, face has dim {face.dim}"
        else:
            status, detail = "mismatch", "an orbit cone cuts through the face"
        results.append(FaceResult(face, a, status, tau, detail))
    return VerificationReport(spec, tuple(results), tuple(cones), len(witnesses),
                              len(extra_configs), seed)
