"""Machine-readable fan export.

The JSON layout has four top-level keys: ``spec``, ``hyperplanes``,
``cones`` and ``histogram``.  Integers inside vectors are written as
decimal strings so that any consumer reads them exactly.  Cones appear in
the fan's canonical order, and maximal cones carry their sign vector
against the hyperplane list.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Optional

from .actions import ActionSpec
from .arrangement import Fan, class_histogram, make_fan, sign_vector
from .errors import GitFanError
from .geometry import Cone, Hyperplane, cone_from_rays, relint_point


class DocumentError(GitFanError, ValueError):
    pass


def _vec_out(v) -> list[str]:
    return [str(int(x)) for x in v]


def _vec_in(v) -> tuple[int, ...]:
    if not isinstance(v, list) or not all(isinstance(x, str) for x in v):
        raise DocumentError("vectors must be arrays of decimal strings")
    return tuple(int(x) for x in v)


@dataclass(frozen=True)
class FanDocument:
    spec: ActionSpec
    fan: Fan

    def to_dict(self) -> dict:
        f = self.fan
        hist = class_histogram(f)
        maximal = {c.key for c in f.maximal_cones()} if f.max_dim > 0 else set()
        cones = []
        for c in f.cones:
            entry = {
                "dim": c.dim,
                "rays": [_vec_out(r) for r in c.rays],
                "facet_normals": [_vec_out(h) for h in c.facet_normals],
                "span_equations": [_vec_out(e) for e in c.span_equations],
            }
            if c.key in maximal:
                entry["sign_vector"] = list(sign_vector(f.hyperplanes, relint_point(c)))
            cones.append(entry)
        return {
            "spec": {"group": self.spec.group, "n": self.spec.n,
                     "m1": self.spec.m1, "m2": self.spec.m2},
            "hyperplanes": [
                {"normal": _vec_out(h.normal), "family": h.family,
                 "I": list(h.I), "J": list(h.J), "k": h.k}
                for h in f.hyperplanes
            ],
            "cones": cones,
            "histogram": {
                "total": hist.total,
                "by_dim": {str(d): hist.counts[d] for d in sorted(hist.counts, reverse=True)},
            },
        }

    def dumps(self) -> str:
        text = json.dumps(self.to_dict(), indent=2)
        return _SCALAR_ARRAY.sub(_one_line, text) + "\n"


# arrays whose items are all scalars go on one line
_SCALAR_ARRAY = re.compile(r"\[\s*([^\[\]{}]*?)\s*\]")


def _one_line(m: re.Match) -> str:
    items = [x.strip() for x in m.group(1).split(",") if x.strip()]
    return "[" + ", ".join(items) + "]"


def loads(text: str) -> FanDocument:
    """Parse a document and rebuild every cone canonically from its rays.

    Raises :class:`DocumentError` if a stored H-representation or the
    histogram disagrees with the recomputed one.
    """
    try:
        data = json.loads(text)
        s = data["spec"]
        spec = ActionSpec(s["group"], s["n"], s["m1"], s["m2"])
        hps = tuple(Hyperplane(_vec_in(h["normal"]), h["family"], tuple(h["I"]),
                               tuple(h["J"]), h["k"]) for h in data["hyperplanes"])
        cones = []
        for entry in data["cones"]:
            c = cone_from_rays(spec.ambient_dim, [_vec_in(r) for r in entry["rays"]])
            stored = (entry["dim"], tuple(_vec_in(h) for h in entry["facet_normals"]),
                      tuple(_vec_in(e) for e in entry["span_equations"]))
            if stored != (c.dim, c.facet_normals, c.span_equations):
                raise DocumentError(f"cone with rays {entry['rays']} is not canonical")
            cones.append(c)
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise DocumentError(f"malformed fan document: {exc}") from exc
    fan = make_fan(spec.ambient_dim, cones, hps, _support(cones))
    doc = FanDocument(spec, fan)
    if doc.to_dict()["histogram"] != data["histogram"]:
        raise DocumentError("histogram does not match the cone list")
    return doc


def _support(cones: list[Cone]) -> Optional[Cone]:
    top = max(cones, key=lambda c: c.dim, default=None)
    if top is None:
        return None
    rays = {r for c in cones for r in c.rays}
    return cone_from_rays(top.ambient_dim, sorted(rays))
