"""Filtered simplicial complexes, levelwise homology, and barcodes.

The pipeline is deliberately the long way round: homology of each
filtration level, induced maps between levels, the graded presentation of
that persistence module, homogeneous reduction, and finally the barcode
``(n, k - 1)`` of each summand ``Σ^n K[T]/(T^k)``.  A bar ``(n, p)`` is
born at stage ``n``, is alive for stages ``n..n+p``, and dies at stage
``n + p + 1`` when ``p`` is finite.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import linalg
from .errors import InputError
from .field import FieldSpec
from .graded_poly import INF, GradedSignature
from .presentation import PersistenceModule, decompose, presentation_from_persistence


class FilteredComplex:
    """Simplices with natural entry times, closed under taking faces."""

    def __init__(self, simplices):
        times = {}
        for item in simplices:
            vertices, time = item
            if isinstance(time, bool) or not isinstance(time, int):
                raise InputError(
                    f"entry time {time!r} is not a natural number; only ℕ-indexed filtrations are supported"
                )
            if time < 0:
                raise InputError(f"negative entry time {time}")
            verts = tuple(sorted(vertices))
            if not verts:
                raise InputError("empty simplex")
            if len(set(verts)) != len(verts):
                raise InputError(f"repeated vertex in simplex {list(vertices)}")
            if verts in times:
                raise InputError(f"duplicate simplex {list(verts)}")
            times[verts] = time
        for verts, time in times.items():
            if len(verts) < 2:
                continue
            for face in combinations(verts, len(verts) - 1):
                if face not in times:
                    raise InputError(f"face {list(face)} of {list(verts)} is missing")
                if times[face] > time:
                    raise InputError(f"face {list(face)} enters after {list(verts)}")
        self.times = times

    @property
    def max_time(self) -> int:
        return max(self.times.values(), default=0)

    def simplices(self, q):
        """``q``-simplices in lexicographic vertex order."""
        return sorted(s for s in self.times if len(s) == q + 1)

    def count(self, q, level):
        return sum(1 for s, t in self.times.items() if len(s) == q + 1 and t <= level)

    @property
    def dimension(self):
        return max((len(s) - 1 for s in self.times), default=-1)

    def to_json(self):
        return {
            "simplices": [
                {"vertices": list(s), "time": t}
                for s, t in sorted(self.times.items(), key=lambda st: (st[1], len(st[0]), st[0]))
            ]
        }

    @classmethod
    def from_json(cls, obj) -> FilteredComplex:
        if not isinstance(obj, dict) or not isinstance(obj.get("simplices"), list):
            raise InputError("filtration JSON needs a 'simplices' list")
        items = []
        for s in obj["simplices"]:
            if not isinstance(s, dict) or "vertices" not in s or "time" not in s:
                raise InputError(f"simplex entry must have 'vertices' and 'time': {s!r}")
            if not isinstance(s["vertices"], list):
                raise InputError(f"'vertices' must be a list: {s!r}")
            items.append((s["vertices"], s["time"]))
        return cls(items)


def _boundary_columns(C: FilteredComplex, q: int, field: FieldSpec):
    """Boundary vectors of the ``q``-simplices in ``(q-1)``-chain coordinates."""
    faces = {s: i for i, s in enumerate(C.simplices(q - 1))} if q > 0 else {}
    one, minus = field.one, -field.one
    cols = []
    for s in C.simplices(q):
        v = [field.zero] * len(faces)
        if q > 0:
            for i in range(len(s)):
                v[faces[s[:i] + s[i + 1:]]] = minus if i % 2 else one
        cols.append(v)
    return cols


def _level_homology(C, q, n, field, dq, dq1):
    """Boundary basis and homology representatives at level ``n``."""
    simp_q = C.simplices(q)
    size = len(simp_q)
    present = [i for i, s in enumerate(simp_q) if C.times[s] <= n]
    if q == 0:
        cycles = []
        for i in present:
            v = [field.zero] * size
            v[i] = field.one
            cycles.append(v)
    else:
        nrows = len(C.simplices(q - 1))
        restricted = [[dq[i][r] for i in present] for r in range(nrows)]
        cycles = []
        for w in linalg.nullspace(restricted, len(present), field):
            v = [field.zero] * size
            for i, x in zip(present, w):
                v[i] = x
            cycles.append(v)
    simp_q1 = C.simplices(q + 1)
    boundaries = [dq1[i] for i, s in enumerate(simp_q1) if C.times[s] <= n]
    bbasis = linalg.independent_subset(boundaries, size)
    chosen = linalg.independent_subset(bbasis + cycles, size)
    return bbasis, chosen[len(bbasis):]


def homology_persistence_module(C: FilteredComplex, q: int, field: FieldSpec) -> PersistenceModule:
    """``H_q`` of every filtration level with the maps induced by inclusion."""
    if q < 0:
        raise InputError("homology degree must be a natural number")
    dq = _boundary_columns(C, q, field)
    dq1 = _boundary_columns(C, q + 1, field)
    levels = [_level_homology(C, q, n, field, dq, dq1) for n in range(C.max_time + 1)]
    dims = [len(reps) for _, reps in levels]
    maps = []
    for n in range(C.max_time):
        bnext, rnext = levels[n + 1]
        _, reps = levels[n]
        f = linalg.zeros(field, len(rnext), len(reps))
        for i, z in enumerate(reps):
            coords = linalg.solve(bnext + rnext, z, field)
            for j, x in enumerate(coords[len(bnext):]):
                f[j][i] = x
        maps.append(f)
    return PersistenceModule(field, dims, maps)


def betti_numbers(C: FilteredComplex, q: int, field: FieldSpec):
    """``dim H_q`` at each level from ranks of boundary maps, without any bases."""
    dq = _boundary_columns(C, q, field)
    dq1 = _boundary_columns(C, q + 1, field)
    simp_q, simp_q1 = C.simplices(q), C.simplices(q + 1)
    out = []
    for n in range(C.max_time + 1):
        cols_q = [dq[i] for i, s in enumerate(simp_q) if C.times[s] <= n]
        cols_q1 = [dq1[i] for i, s in enumerate(simp_q1) if C.times[s] <= n]
        rank_q = linalg.rank(cols_q, len(C.simplices(q - 1))) if q > 0 else 0
        rank_q1 = linalg.rank(cols_q1, len(simp_q))
        out.append(len(cols_q) - rank_q - rank_q1)
    return out


@dataclass(frozen=True)
class Barcode:
    """Multiset of ``(birth, persistence)`` bars, sorted with infinite bars last per birth."""

    bars: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "bars", tuple(sorted(self.bars)))

    @classmethod
    def from_signature(cls, sig: GradedSignature) -> Barcode:
        return cls(tuple((n, INF if k == INF else k - 1) for n, k in sig))

    def __len__(self):
        return len(self.bars)

    def __add__(self, other):
        return Barcode(self.bars + other.bars)

    def alive(self, stage: int) -> int:
        return sum(1 for b, p in self.bars if b <= stage <= b + p)

    @staticmethod
    def death(bar):
        b, p = bar
        return None if p == INF else b + p + 1

    def to_json(self):
        return {"bars": [{"birth": b, "persistence": "inf" if p == INF else p} for b, p in self.bars]}

    @classmethod
    def from_json(cls, obj) -> Barcode:
        return cls(tuple((b["birth"], INF if b["persistence"] == "inf" else b["persistence"]) for b in obj["bars"]))

    def render_ascii(self, horizon: int | None = None) -> str:
        """One line per bar: ``#`` alive, ``x`` at the death stage, ``>`` for an infinite bar."""
        if horizon is None:
            ends = [self.death(bar) or bar[0] for bar in self.bars]
            horizon = max(ends, default=0) + 1
        lines = []
        for bar in self.bars:
            b, p = bar
            death = self.death(bar)
            cells = []
            for t in range(horizon):
                if b <= t and (death is None or t < death):
                    cells.append("#")
                elif t == death:
                    cells.append("x")
                else:
                    cells.append("-")
            tail = ">" if death is None else "|"
            label = f"birth={b} persistence={'inf' if p == INF else p}"
            label += "" if death is None else f" death={death}"
            lines.append(f"[{''.join(cells)}{tail} {label}")
        return "\n".join(lines)

    def render_svg(self, unit=20, height=12) -> str:
        horizon = max((self.death(bar) or bar[0] + 1 for bar in self.bars), default=0) + 1
        width = horizon * unit + 2 * unit
        total = (len(self.bars) + 1) * (height + 4) + unit
        parts = [
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{total}" '
            f'viewBox="0 0 {width} {total}">'
        ]
        for i, bar in enumerate(self.bars):
            b, _ = bar
            death = self.death(bar)
            end = horizon if death is None else death
            y = unit // 2 + i * (height + 4)
            fill = "#1f77b4" if death is None else "#555555"
            parts.append(
                f'<rect x="{unit + b * unit}" y="{y}" width="{(end - b) * unit}" height="{height}" fill="{fill}"/>'
            )
        for t in range(horizon + 1):
            x = unit + t * unit
            parts.append(f'<text x="{x}" y="{total - 4}" font-size="9" text-anchor="middle">{t}</text>')
        parts.append("</svg>")
        return "\n".join(parts) + "\n"


def barcode_from_signature(sig: GradedSignature) -> Barcode:
    return Barcode.from_signature(sig)


def barcode_of_module(P: PersistenceModule) -> Barcode:
    return barcode_from_signature(decompose(presentation_from_persistence(P)))


def persistent_homology(C: FilteredComplex, q: int, field: FieldSpec) -> Barcode:
    return barcode_of_module(homology_persistence_module(C, q, field))
