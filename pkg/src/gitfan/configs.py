"""Point configurations ``v = (v_1..v_{m1}, l_1..l_{m2})`` over Q(i)."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch
from .exact import GaussRat

Vec = tuple  # tuple[GaussRat, ...]


@dataclass(frozen=True)
class PointConfig:
    """Vectors ``v_i`` in V and covectors ``l_j`` in V*, each of length ``n``.

    A covector acts by ``l(v) = sum_c l[c] * v[c]``.
    """

    n: int
    vectors: tuple[Vec, ...]
    covectors: tuple[Vec, ...] = ()

    def __post_init__(self):
        vecs = tuple(tuple(GaussRat.of(x) for x in v) for v in self.vectors)
        covs = tuple(tuple(GaussRat.of(x) for x in l) for l in self.covectors)
        for v in vecs + covs:
            if len(v) != self.n:
                raise DimensionMismatch(f"coordinate vector of length {len(v)}, expected {self.n}")
        object.__setattr__(self, "vectors", vecs)
        object.__setattr__(self, "covectors", covs)

    @property
    def m1(self) -> int:
        return len(self.vectors)

    @property
    def m2(self) -> int:
        return len(self.covectors)

    def describe(self) -> str:
        def fmt(v):
            return "(" + ",".join(str(x) for x in v) + ")"
        parts = [fmt(v) for v in self.vectors]
        if self.covectors:
            parts.append("|")
            parts.extend(fmt(l) for l in self.covectors)
        return " ".join(parts)
