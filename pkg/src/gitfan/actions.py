"""The diagonal SO(V) and SL(V) actions: invariant degrees, weight cones,
wall hyperplanes, and explicit witness configurations.

Coordinates of Q^m are ``x_1..x_{m1}`` followed by ``y_1..y_{m2}``.  Index
sets in labels and provenance are 1-based.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Optional

from .arrangement import Fan, cut_cone
from .errors import InvalidSpec
from .exact import ONE, ZERO, GaussRat, I
from .geometry import Cone, Hyperplane, canonical_hyperplane_normal, cone_from_constraints
from .configs import PointConfig

SO = "SO"
SL = "SL"


@dataclass(frozen=True)
class ActionSpec:
    group: str
    n: int
    m1: int
    m2: int = 0

    def __post_init__(self):
        group = self.group.upper()
        object.__setattr__(self, "group", group)
        if group not in (SO, SL):
            raise InvalidSpec(f"unknown group {self.group!r}")
        if self.m1 < 0 or self.m2 < 0 or self.m1 + self.m2 < 1:
            raise InvalidSpec("need m1, m2 >= 0 and m1 + m2 >= 1")
        if group == SO:
            if self.n < 3:
                raise InvalidSpec("SO(V) requires dim V >= 3")
            if self.m2 != 0:
                raise InvalidSpec("SO(V): V* is identified with V, so m2 must be 0")
        elif self.n < 2:
            raise InvalidSpec("SL(V) requires dim V >= 2")

    @classmethod
    def so(cls, n: int, m: int) -> "ActionSpec":
        return cls(SO, n, m, 0)

    @classmethod
    def sl(cls, n: int, m1: int, m2: int) -> "ActionSpec":
        return cls(SL, n, m1, m2)

    @property
    def ambient_dim(self) -> int:
        return self.m1 + self.m2

    @property
    def regime(self) -> str:
        """``"SO"``, ``"SL-cut"`` (m1 >= n or m2 >= n) or ``"SL-balanced"``."""
        if self.group == SO:
            return "SO"
        if self.m1 >= self.n or self.m2 >= self.n:
            return "SL-cut"
        return "SL-balanced"


@dataclass(frozen=True)
class DegreeVector:
    """Multidegree of one generating invariant.

    ``kind`` is ``ii`` or ``ij`` for SO; ``det-v``, ``det-l`` or ``pair`` for
    SL.  ``indices`` are 1-based (for ``pair``: vector index, covector index).
    """

    degree: tuple[int, ...]
    kind: str
    indices: tuple[int, ...]

    @property
    def label(self) -> str:
        return f"{self.kind}{self.indices}"


def _unit(m: int, *positions, value: int = 1) -> tuple[int, ...]:
    v = [0] * m
    for p in positions:
        v[p] += value
    return tuple(v)


def so_degrees(m: int) -> list[DegreeVector]:
    out = []
    for i in range(m):
        out.append(DegreeVector(_unit(m, i, value=2), "ii", (i + 1, i + 1)))
    for i, j in combinations(range(m), 2):
        out.append(DegreeVector(_unit(m, i, j), "ij", (i + 1, j + 1)))
    return out


def sl_degrees(n: int, m1: int, m2: int) -> list[DegreeVector]:
    m = m1 + m2
    out = []
    for s in combinations(range(m1), n):
        out.append(DegreeVector(_unit(m, *s), "det-v", tuple(i + 1 for i in s)))
    for s in combinations(range(m2), n):
        out.append(DegreeVector(_unit(m, *(m1 + j for j in s)), "det-l", tuple(j + 1 for j in s)))
    for i in range(m1):
        for j in range(m2):
            out.append(DegreeVector(_unit(m, i, m1 + j), "pair", (i + 1, j + 1)))
    return out


def degrees(spec: ActionSpec) -> list[DegreeVector]:
    if spec.group == SO:
        return so_degrees(spec.m1)
    return sl_degrees(spec.n, spec.m1, spec.m2)


def _subsets(m: int):
    for r in range(m + 1):
        yield from combinations(range(1, m + 1), r)


def so_hyperplanes(m: int) -> list[Hyperplane]:
    """One hyperplane ``sum_I x = sum_J x`` per unordered pair of disjoint
    nonempty index sets.  The set holding the smallest index is stored as I.
    """
    out = []
    for labels in product((0, 1, 2), repeat=m):
        if 1 not in labels or 2 not in labels:
            continue
        if labels[next(i for i, l in enumerate(labels) if l)] != 1:
            continue
        normal = tuple({0: 0, 1: 1, 2: -1}[l] for l in labels)
        I_ = tuple(i + 1 for i, l in enumerate(labels) if l == 1)
        J_ = tuple(i + 1 for i, l in enumerate(labels) if l == 2)
        out.append(Hyperplane(normal, "SO_f1", I_, J_))
    return sorted(out, key=lambda h: h.normal, reverse=True)


def so_weight_cone(m: int) -> Cone:
    return cone_from_constraints(m, [_unit(m, i) for i in range(m)], [])


def _f5_normal(n: int, m1: int, m2: int, k: int, I_, J_) -> tuple[int, ...]:
    xs = [(n - k) if i in I_ else -k for i in range(1, m1 + 1)]
    ys = [-(n - k) if j in J_ else k for j in range(1, m2 + 1)]
    return tuple(xs + ys)


def _f5_admissible(n, m1, m2, k, I_, J_) -> bool:
    return k <= len(I_) <= m1 - n + k or k <= len(J_) <= m2 - n + k


def _complement(s, m):
    return tuple(i for i in range(1, m + 1) if i not in s)


def sl_hyperplanes(n: int, m1: int, m2: int) -> list[Hyperplane]:
    """Wall hyperplanes for SL(V), deduplicated by canonical normal.

    The family depends on the regime: with m1 >= n or m2 >= n the
    ``SL_f4``/``SL_f5`` walls, otherwise the ``SL_f7`` walls.
    """
    found: dict[tuple, Hyperplane] = {}

    def add(h: Hyperplane):
        key = h.normal
        if key not in found or _prov(h) < _prov(found[key]):
            found[key] = h

    if m1 >= n or m2 >= n:
        if m1 and m2:
            add(Hyperplane(tuple([1] * m1 + [-1] * m2), "SL_f4"))
        for k0 in range(1, n):
            for I0 in _subsets(m1):
                for J0 in _subsets(m2):
                    if not _f5_admissible(n, m1, m2, k0, I0, J0):
                        continue
                    k, I_, J_ = k0, I0, J0
                    normal = _f5_normal(n, m1, m2, k, I_, J_)
                    canon = canonical_hyperplane_normal(normal)
                    if next(x for x in normal if x) < 0:
                        # the same wall written with k -> n-k and both complements
                        k, I_, J_ = n - k, _complement(I_, m1), _complement(J_, m2)
                    normal = canon
                    add(Hyperplane(normal, "SL_f5", I_, J_, k))
    else:
        for I_ in _subsets(m1):
            if not I_ or len(I_) == m1:
                continue
            for J_ in _subsets(m2):
                if not J_ or len(J_) == m2:
                    continue
                normal = tuple([1 if i in I_ else 0 for i in range(1, m1 + 1)]
                               + [-1 if j in J_ else 0 for j in range(1, m2 + 1)])
                add(Hyperplane(normal, "SL_f7", I_, J_))
    return sorted(found.values(), key=lambda h: h.normal, reverse=True)


def _prov(h: Hyperplane):
    return (h.family, h.k if h.k is not None else 0, h.I, h.J)


def sl_weight_cone(n: int, m1: int, m2: int) -> Cone:
    """Closed-form weight cone for SL(V).

    Balanced regime (m1, m2 < n): the orthant slice ``sum x = sum y``.
    Otherwise coordinate nonnegativity plus, for every ``1 <= k <= n-1``,
    ``(n-k)(sum y - sum_I x) + k sum_{i not in I} x >= 0`` over ``|I| = k``
    and the mirrored inequality over ``|J| = k``.
    """
    m = m1 + m2
    ineqs = [_unit(m, i) for i in range(m)]
    if m1 < n and m2 < n:
        return cone_from_constraints(m, ineqs, [tuple([1] * m1 + [-1] * m2)])
    for k in range(1, n):
        for I_ in combinations(range(m1), k):
            ineqs.append(tuple([-(n - k) if i in I_ else k for i in range(m1)] + [n - k] * m2))
        for J_ in combinations(range(m2), k):
            ineqs.append(tuple([n - k] * m1 + [-(n - k) if j in J_ else k for j in range(m2)]))
    return cone_from_constraints(m, ineqs, [])


def weight_cone(spec: ActionSpec) -> Cone:
    if spec.group == SO:
        return so_weight_cone(spec.m1)
    return sl_weight_cone(spec.n, spec.m1, spec.m2)


def hyperplanes(spec: ActionSpec) -> list[Hyperplane]:
    if spec.group == SO:
        return so_hyperplanes(spec.m1)
    return sl_hyperplanes(spec.n, spec.m1, spec.m2)


@dataclass(frozen=True)
class WitnessPoint:
    """A configuration together with what it is meant to realize.

    ``role`` is ``"wall"`` (orbit cone = weight cone ∩ provenance),
    ``"positive"`` / ``"negative"`` (the closed side where the normal is
    >= 0 / <= 0), ``"zero"`` (slot ``slot`` set to 0 in the generic
    configuration) or ``"generic"`` (the whole weight cone).
    """

    config: PointConfig
    provenance: Optional[Hyperplane] = None
    role: str = "wall"
    slot: Optional[int] = None

    @property
    def tag(self) -> str:
        if self.role == "generic":
            return "generic"
        if self.role == "zero":
            return f"zero slot {self.slot}"
        base = self.provenance.describe()
        return base if self.role == "wall" else f"{base} ({self.role} side)"


def _basis(n: int, c: int) -> tuple[GaussRat, ...]:
    return tuple(ONE if i == c else ZERO for i in range(n))


def _vsum(n: int, cs) -> tuple[GaussRat, ...]:
    cs = set(cs)
    return tuple(ONE if i in cs else ZERO for i in range(n))


def so_generic_config(n: int, m: int) -> PointConfig:
    # v_i = e1 + i*e2: Gram entries 1 + i*j are all nonzero
    vecs = tuple(tuple([ONE, GaussRat(i)] + [ZERO] * (n - 2)) for i in range(1, m + 1))
    return PointConfig(n, vecs, ())


def so_witnesses(m: int, n: int = 3) -> list[WitnessPoint]:
    iso = tuple([ONE, I] + [ZERO] * (n - 2))
    iso_bar = tuple([ONE, -I] + [ZERO] * (n - 2))
    e3 = _basis(n, 2)
    out = []
    for h in so_hyperplanes(m):
        vecs = tuple(iso if k in h.I else iso_bar if k in h.J else e3
                     for k in range(1, m + 1))
        out.append(WitnessPoint(PointConfig(n, vecs, ()), h))
    out.append(WitnessPoint(so_generic_config(n, m), None, "generic"))
    return out


def sl_generic_config(n: int, m1: int, m2: int) -> PointConfig:
    # moment-curve points: every n of them are independent, pairings are positive
    vecs = tuple(tuple(GaussRat(t ** c) for c in range(n)) for t in range(1, m1 + 1))
    covs = tuple(tuple(GaussRat(s ** c) for c in range(n)) for s in range(1, m2 + 1))
    return PointConfig(n, vecs, covs)


def _f5_config(n, m1, m2, k, I_, J_, cross: bool = False) -> PointConfig:
    """Block witness for ``(k, I, J)`` with ``k <= |I| <= m1 - n + k``.

    Vectors indexed by I run through e_1..e_k (the last repeated), the others
    through e_{k+1}..e_n; covectors are e^1+..+e^k on J and e^{k+1}+..+e^n off J.
    """
    inside = list(I_)
    outside = [i for i in range(1, m1 + 1) if i not in I_]
    vecs: list = [None] * m1
    for pos, i in enumerate(inside):
        vecs[i - 1] = _basis(n, min(pos, k - 1))
    for pos, i in enumerate(outside):
        vecs[i - 1] = _basis(n, min(k + pos, n - 1))
    first = _vsum(n, range(k))
    second = _vsum(n, range(k, n))
    if cross:
        # covectors off J also pair with the first block: adds the pairings
        # (i in I, j not in J), all on the positive side of the wall
        second = _vsum(n, range(n))
    covs = tuple(first if j in J_ else second for j in range(1, m2 + 1))
    return PointConfig(n, tuple(vecs), covs)


def _moment(n: int, t: int, coords) -> tuple[GaussRat, ...]:
    return tuple(GaussRat(t ** c) if c in coords else ZERO for c in range(n))


def _block_config(n, m1, m2, k, I_, J_, side: int = 0) -> PointConfig:
    """Generic configuration adapted to ``V = U + W`` with ``U = span(e_1..e_k)``.

    ``side == 0``: I-vectors generic in U, the others generic in W;
    J-covectors vanish on W, the others on U.  Then a generator survives
    exactly when its degree lies on the (f5) hyperplane of ``(k, I, J)``.
    ``side == 1`` makes the I-vectors and the covectors off J generic in the
    whole space, which switches on the generators of the positive side.
    """
    U, W, everything = range(k), range(k, n), range(n)
    vecs = tuple(_moment(n, i + 1, (everything if side else U) if i in I_ else W)
                 for i in range(1, m1 + 1))
    covs = tuple(_moment(n, j + 1, U if j in J_ else (everything if side else W))
                 for j in range(1, m2 + 1))
    return PointConfig(n, vecs, covs)


def sl_witnesses(n: int, m1: int, m2: int) -> list[WitnessPoint]:
    out = []
    for h in sl_hyperplanes(n, m1, m2):
        if h.family == "SL_f4":
            cfg = PointConfig(n, tuple(_basis(n, 0) for _ in range(m1)),
                              tuple(_basis(n, 0) for _ in range(m2)))
        elif h.family == "SL_f5":
            if h.k <= len(h.I) <= m1 - n + h.k:
                cfg = _f5_config(n, m1, m2, h.k, h.I, h.J)
            else:
                # roles of V and V* exchanged
                dual = _f5_config(n, m2, m1, h.k, h.J, h.I)
                cfg = PointConfig(n, dual.covectors, dual.vectors)
        else:
            cfg = PointConfig(
                n,
                tuple(_basis(n, 0) if i in h.I else _basis(n, 1) for i in range(1, m1 + 1)),
                tuple(_basis(n, 0) if j in h.J else _basis(n, 1) for j in range(1, m2 + 1)))
        out.append(WitnessPoint(cfg, h))
    out.append(WitnessPoint(sl_generic_config(n, m1, m2), None, "generic"))
    return out


def witnesses(spec: ActionSpec) -> list[WitnessPoint]:
    """Witnesses from the wall constructions plus the generic one."""
    if spec.group == SO:
        return so_witnesses(spec.m1, spec.n)
    return sl_witnesses(spec.n, spec.m1, spec.m2)


def _zero_slot_witnesses(generic: PointConfig) -> list[WitnessPoint]:
    out = []
    zero = tuple(ZERO for _ in range(generic.n))
    for s in range(generic.m1 + generic.m2):
        vecs, covs = list(generic.vectors), list(generic.covectors)
        if s < generic.m1:
            vecs[s] = zero
        else:
            covs[s - generic.m1] = zero
        out.append(WitnessPoint(PointConfig(generic.n, tuple(vecs), tuple(covs)), None, "zero", s + 1))
    return out


def so_completion_witnesses(m: int, n: int = 3) -> list[WitnessPoint]:
    """Configurations realizing both closed sides of every wall and every
    coordinate face of the orthant.

    For the side ``sum_I x >= sum_J x``: the I-vectors are the anisotropic
    ``e1 + c e2`` (distinct ``c``), the J-vectors the isotropic ``e1 - i e2``
    and the rest ``e3``.
    """
    iso = {1: tuple([ONE, I] + [ZERO] * (n - 2)), -1: tuple([ONE, -I] + [ZERO] * (n - 2))}
    e3 = _basis(n, 2)
    out = []
    for h in so_hyperplanes(m):
        for role, big, small, iso_sign in (("positive", h.I, h.J, -1), ("negative", h.J, h.I, 1)):
            vecs = tuple(tuple([ONE, GaussRat(k + 1)] + [ZERO] * (n - 2)) if k in big
                         else iso[iso_sign] if k in small else e3
                         for k in range(1, m + 1))
            out.append(WitnessPoint(PointConfig(n, vecs, ()), h, role))
    out.extend(_zero_slot_witnesses(so_generic_config(n, m)))
    return out


def sl_completion_witnesses(n: int, m1: int, m2: int) -> list[WitnessPoint]:
    """Side witnesses for every wall plus zero-slot witnesses.

    ``SL_f7`` side ``sum_I x >= sum_J y``: I-vectors ``e1``, others ``e2``;
    J-covectors ``e^1``, others ``e^1 + e^2``.  ``SL_f4`` side
    ``sum x >= sum y``: generic vectors, every covector ``e^1`` (and the
    mirror).  ``SL_f5``: the block witness with the cross pairings
    ``(i in I, j not in J)`` switched on; the other side is the same
    construction for ``(n-k, complement I, complement J)``.  Each ``SL_f5``
    wall also gets the three block witnesses of :func:`_block_config`, which
    cover walls where the cross-pairing construction falls short.
    """
    out = []
    generic = sl_generic_config(n, m1, m2)
    e = [_basis(n, c) for c in range(n)]
    for h in sl_hyperplanes(n, m1, m2):
        if h.family == "SL_f7":
            for role, I_, J_ in (("positive", h.I, h.J),
                                 ("negative", _complement(h.I, m1), _complement(h.J, m2))):
                cfg = PointConfig(
                    n,
                    tuple(e[0] if i in I_ else e[1] for i in range(1, m1 + 1)),
                    tuple(e[0] if j in J_ else _vsum(n, (0, 1)) for j in range(1, m2 + 1)))
                out.append(WitnessPoint(cfg, h, role))
        elif h.family == "SL_f4":
            out.append(WitnessPoint(PointConfig(n, generic.vectors, tuple(e[0] for _ in range(m2))),
                                    h, "positive"))
            out.append(WitnessPoint(PointConfig(n, tuple(e[0] for _ in range(m1)), generic.covectors),
                                    h, "negative"))
        else:
            for role, k, I_, J_ in (("positive", h.k, h.I, h.J),
                                    ("negative", n - h.k, _complement(h.I, m1), _complement(h.J, m2))):
                if k <= len(I_) <= m1 - n + k:
                    cfg = _f5_config(n, m1, m2, k, I_, J_, cross=True)
                else:
                    # dual construction: the cross pairings come from I-vectors
                    dual = _f5_config(n, m2, m1, k, J_, I_)
                    covs, vecs = dual.vectors, list(dual.covectors)
                    for i in I_:
                        vecs[i - 1] = _vsum(n, range(n))
                    cfg = PointConfig(n, tuple(vecs), covs)
                out.append(WitnessPoint(cfg, h, role))
            out.append(WitnessPoint(_block_config(n, m1, m2, h.k, h.I, h.J), h, "wall"))
            out.append(WitnessPoint(_block_config(n, m1, m2, h.k, h.I, h.J, 1), h, "positive"))
            out.append(WitnessPoint(_block_config(n, m1, m2, n - h.k, _complement(h.I, m1),
                                                  _complement(h.J, m2), 1), h, "negative"))
    out.extend(_zero_slot_witnesses(generic))
    return out


def completion_witnesses(spec: ActionSpec) -> list[WitnessPoint]:
    if spec.group == SO:
        return so_completion_witnesses(spec.m1, spec.n)
    return sl_completion_witnesses(spec.n, spec.m1, spec.m2)


def git_fan(spec: ActionSpec, threads: int = 1) -> Fan:
    return cut_cone(weight_cone(spec), hyperplanes(spec), threads=threads)
