"""Exhaustive enumeration of small annular wirings up to drawing symmetry."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from pathlib import Path

from . import wiring as wir
from .arrangement import CROSS, TOUCH, cell_stats
from .errors import DomainError


@dataclass(frozen=True)
class Constraints:
    digon_free: bool = False
    allow_touch: bool = True
    allow_n5: bool = False
    time_budget: float | None = None    # seconds, only consulted for n = 5


@dataclass
class Extremal:
    n: int
    orbits: int = 0
    max_touchings: int = -1
    max_p2_combined: int = -1
    min_triangles_digonfree: int | None = None
    witnesses: dict[str, str] = field(default_factory=dict)

    def rows(self) -> list[tuple[str, object]]:
        return [("n", self.n), ("wiring_orbits", self.orbits),
                ("max_touchings", self.max_touchings),
                ("max_p2_combined", self.max_p2_combined),
                ("min_triangles_digonfree",
                 "none" if self.min_triangles_digonfree is None else self.min_triangles_digonfree)] + \
            [(f"witness_{k}", v) for k, v in sorted(self.witnesses.items())]


def _words(n: int, allow_touch: bool, deadline: float | None):
    pairs = {}
    pos = list(range(n))
    word: list[tuple[int, str]] = []
    need = n * (n - 1) // 2

    def rec(done: int):
        if deadline is not None and time.monotonic() > deadline:
            raise DomainError("enumeration time budget exhausted")
        if done == need:
            if pos == list(range(n)):
                yield tuple(word)
            return
        for s in range(n - 1):
            key = (min(pos[s], pos[s + 1]), max(pos[s], pos[s + 1]))
            t, c = pairs.get(key, (0, 0))
            if t == 0 and c < 2:
                pairs[key] = (0, c + 1)
                pos[s], pos[s + 1] = pos[s + 1], pos[s]
                word.append((s, CROSS))
                yield from rec(done + (c == 1))
                word.pop()
                pos[s], pos[s + 1] = pos[s + 1], pos[s]
                pairs[key] = (t, c)
            if allow_touch and t == 0 and c == 0:
                pairs[key] = (1, 0)
                word.append((s, TOUCH))
                yield from rec(done + 1)
                word.pop()
                pairs[key] = (t, c)

    yield from rec(0)


def enumerate_annular(n: int, constraints: Constraints = Constraints()) -> list[wir.AnnularWiring]:
    """One wiring per symmetry orbit, sorted by canonical key."""
    if not 2 <= n <= 5 or (n == 5 and not constraints.allow_n5):
        raise DomainError(f"enumeration supports 2 <= n <= 4 (n = 5 behind a flag), got {n}")
    deadline = None
    if n == 5 and constraints.time_budget is not None:
        deadline = time.monotonic() + constraints.time_budget
    seen: dict[str, wir.AnnularWiring] = {}
    for word in _words(n, constraints.allow_touch, deadline):
        w = wir.AnnularWiring(n, word)
        key = wir.canonical_key(w)
        if key in seen:
            continue
        if constraints.digon_free and cell_stats(wir.to_arrangement(w)).digons:
            seen[key] = None
            continue
        seen[key] = w
    return [w for _, w in sorted(seen.items()) if w is not None]


def extremal_stats(n: int, constraints: Constraints = Constraints(), wirings=None) -> Extremal:
    wirings = enumerate_annular(n, constraints) if wirings is None else wirings
    ex = Extremal(n)
    for w in wirings:
        st = cell_stats(wir.to_arrangement(w))
        key = wir.canonical_key(w)
        ex.orbits += 1
        if st.touchings > ex.max_touchings:
            ex.max_touchings = st.touchings
            ex.witnesses["max_touchings"] = key
        if st.p2_combined > ex.max_p2_combined:
            ex.max_p2_combined = st.p2_combined
            ex.witnesses["max_p2_combined"] = key
        if st.p2_combined == 0 and (ex.min_triangles_digonfree is None
                                    or st.triangles < ex.min_triangles_digonfree):
            ex.min_triangles_digonfree = st.triangles
            ex.witnesses["min_triangles_digonfree"] = key
    return ex


def write_orbits(wirings, out: Path) -> None:
    """One ``.wir`` per orbit plus ``stats.tsv``."""
    out.mkdir(parents=True, exist_ok=True)
    rows = ["file\tkey\tfaces\ttouchings\tdigons\ttriangles\tp2_combined"]
    for i, w in enumerate(wirings):
        name = f"orbit_{i:04d}.wir"
        (out / name).write_text(wir.dumps(w))
        st = cell_stats(wir.to_arrangement(w))
        rows.append(f"{name}\t{wir.canonical_key(w)}\t{st.face_count}\t{st.touchings}\t"
                    f"{st.digons}\t{st.triangles}\t{st.p2_combined}")
    (out / "stats.tsv").write_text("\n".join(rows) + "\n")
