"""Wiring diagrams: cylindrical arrangements as adjacent swap/touch words.

Wires are horizontal strands at vertical positions ``0`` (top) to ``n-1``
(bottom).  An event ``(slot, kind)`` acts on the wires currently at
positions ``slot`` and ``slot + 1``: a ``cross`` swaps them, a ``touch``
leaves them in place.  In an annular wiring the left and right ends are
identified, so every wire closes up into a pseudocircle wrapping once
around the cylinder.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from itertools import combinations

from .arrangement import (CROSS, TOUCH, Arrangement, Curves, ValidationReport,
                          from_curves)
from .errors import DomainError, MalformedInput, PreconditionError

Event = tuple[int, str]


@dataclass(frozen=True)
class AnnularWiring:
    n: int
    events: tuple[Event, ...]

    annular = True

    def __post_init__(self) -> None:
        _check_events(self.n, self.events)


@dataclass(frozen=True)
class LinearWiring:
    n: int
    events: tuple[Event, ...]
    open_strip: bool = False

    annular = False

    def __post_init__(self) -> None:
        _check_events(self.n, self.events)


Wiring = AnnularWiring | LinearWiring


def _check_events(n: int, events) -> None:
    if n < 1:
        raise MalformedInput("a wiring needs at least one wire")
    for slot, kind in events:
        if kind not in (CROSS, TOUCH):
            raise MalformedInput(f"unknown event kind {kind!r}")
        if not 0 <= slot <= n - 2:
            raise MalformedInput(f"slot {slot} out of range for {n} wires")


def annular(n: int, word, kinds=None) -> AnnularWiring:
    """Shorthand: ``annular(3, [0, 1, 0, 0, 1, 0])`` builds an all-cross word."""
    kinds = kinds or [CROSS] * len(word)
    return AnnularWiring(n, tuple(zip(word, kinds)))


def simulate(w: Wiring):
    """Yield ``(index, slot, kind, upper_wire, lower_wire)`` per event."""
    pos = list(range(w.n))
    for k, (s, kind) in enumerate(w.events):
        upper, lower = pos[s], pos[s + 1]
        yield k, s, kind, upper, lower
        if kind == CROSS:
            pos[s], pos[s + 1] = lower, upper


def final_order(w: Wiring) -> list[int]:
    pos = list(range(w.n))
    for _, s, kind, upper, lower in simulate(w):
        if kind == CROSS:
            pos[s], pos[s + 1] = lower, upper
    return pos


def pair_counts(w: Wiring) -> dict[tuple[int, int], Counter]:
    counts: dict[tuple[int, int], Counter] = {p: Counter() for p in combinations(range(w.n), 2)}
    for _, _, kind, upper, lower in simulate(w):
        counts[(min(upper, lower), max(upper, lower))][kind] += 1
    return counts


def validate_wiring(w: Wiring) -> ValidationReport:
    bad = []
    if w.annular and final_order(w) != list(range(w.n)):
        bad.append(f"closure: cross swaps compose to {final_order(w)}, not the identity")
    for (i, j), cnt in pair_counts(w).items():
        t, c = cnt[TOUCH], cnt[CROSS]
        if (t, c) in ((1, 0), (0, 2)):
            continue
        if not w.annular and (t, c) == (0, 1) and w.open_strip:
            continue
        bad.append(f"pair: wires {i},{j} have {t} touch and {c} cross events")
    return ValidationReport(not bad, tuple(bad))


def to_arrangement(w: Wiring) -> Arrangement:
    """Combinatorial map of the wiring drawn on a cylinder.

    A linear wiring whose wires leave in their entry order is closed up the
    same way as an annular one.
    """
    if not w.annular:
        if w.open_strip or final_order(w) != list(range(w.n)):
            raise PreconditionError("only linear wirings with identity exit order close up")
    rep = validate_wiring(w)
    if not rep.ok:
        raise PreconditionError("invalid wiring: " + "; ".join(rep.violations[:3]))
    seqs: list[list] = [[] for _ in range(w.n)]
    rots = {}
    for k, s, kind, upper, lower in simulate(w):
        seqs[upper].append(k)
        seqs[lower].append(k)
        rots[k] = local_rotation(kind, upper, lower)
    return from_curves(Curves(seqs, rots))


def local_rotation(kind: str, upper: int, lower: int):
    """Ccw half-edge labels of an event, wires running left to right."""
    if kind == CROSS:
        return ((lower, 1), (upper, -1), (lower, -1), (upper, 1))
    return ((upper, 1), (upper, -1), (lower, -1), (lower, 1))


def wiring_of(a: Arrangement) -> tuple[AnnularWiring, tuple[int, ...]]:
    """Sweep a cylindrical arrangement into an annular wiring.

    Returns the wiring and, per wire, the circle it came from.  Circles are
    oriented with the first separated cell on their left; the sweep starts
    on a shortest dual path between the two separated cells.
    """
    from .arrangement import is_cylindrical, side_vectors

    pair = is_cylindrical(a)
    if pair is None:
        raise PreconditionError("arrangement is not cylindrical")
    top, bottom = pair
    bits = [sv.bits for sv in side_vectors(a)]

    def forward(d: int) -> int:
        c = a.dart_circle[d]
        return d if bits[a.dart_face[d]][c] == bits[bottom][c] else a.dart_reversal[d]

    prev: dict[int, tuple[int, int]] = {top: (-1, -1)}
    queue = deque([top])
    while queue:
        f = queue.popleft()
        for d in a.faces[f]:
            g = a.dart_face[a.dart_reversal[d]]
            if g not in prev:
                prev[g] = (f, d)
                queue.append(g)
    cut0 = []
    f = bottom
    while f != top:
        f, d = prev[f]
        cut0.append(forward(d))
    cut0.reverse()
    if sorted(a.dart_circle[d] for d in cut0) != list(range(a.n)):
        raise PreconditionError("no meridian crosses every circle exactly once")

    head = lambda d: a.dart_vertex[a.dart_reversal[d]]  # noqa: E731
    cut = list(cut0)
    events = []
    done: set[int] = set()
    for _ in range(a.num_vertices):
        s = next((s for s in range(a.n - 1)
                  if head(cut[s]) == head(cut[s + 1]) and head(cut[s]) not in done), None)
        if s is None:
            raise PreconditionError("sweep got stuck; the arrangement has no wiring")
        kind = a.vertex_kind[head(cut[s])]
        done.add(head(cut[s]))
        up, low = a.continue_on_circle(cut[s]), a.continue_on_circle(cut[s + 1])
        cut[s], cut[s + 1] = (low, up) if kind == CROSS else (up, low)
        events.append((s, kind))
    if cut != cut0:
        raise PreconditionError("sweep did not return to its starting meridian")
    return AnnularWiring(a.n, tuple(events)), tuple(a.dart_circle[d] for d in cut0)


def cut(w: AnnularWiring, offset: int) -> LinearWiring:
    """Open the cylinder along the meridian just before event ``offset``.

    Wires of the result are the wires in top-to-bottom order at that meridian.
    """
    if not w.annular:
        raise DomainError("cut expects an annular wiring")
    if not 0 <= offset < max(len(w.events), 1):
        raise DomainError(f"offset {offset} out of range")
    return LinearWiring(w.n, w.events[offset:] + w.events[:offset])


def pair_multiset(w: Wiring) -> Counter:
    """Multiset of per-pair intersection patterns, independent of wire labels."""
    return Counter((c[TOUCH], c[CROSS]) for c in pair_counts(w).values())


def _symmetric_words(w: AnnularWiring):
    ev = list(w.events)
    L = len(ev)
    for reflect in (False, True):
        base = [(w.n - 2 - s if reflect else s, k) for s, k in ev]
        for seq in (base, base[::-1]):
            for r in range(max(L, 1)):
                yield tuple(seq[r:] + seq[:r])


def _encode(n: int, word) -> str:
    return f"{n}:" + " ".join(("x" if k == CROSS else "t") + str(s) for s, k in word)


def canonical_key(w: AnnularWiring) -> str:
    """Least word over rotations, top-bottom reflection and reversal."""
    best = min(tuple((s, 0 if k == CROSS else 1) for s, k in word) for word in _symmetric_words(w))
    return _encode(w.n, [(s, CROSS if k == 0 else TOUCH) for s, k in best])


# ---------------------------------------------------------------------------
# cells read directly off the word (an oracle independent of the map)


@dataclass(frozen=True)
class WiringCell:
    slot: int           # -1 top cell, n-1 bottom cell, else between positions slot, slot+1
    start: int | None   # bounding event index at this slot (None for top/bottom)
    end: int | None
    corners: tuple[int, ...]   # event indices on the boundary

    def crossings(self, w: Wiring) -> int:
        return sum(1 for e in self.corners if w.events[e][1] == CROSS)


def wiring_cells(w: AnnularWiring) -> list[WiringCell]:
    """All cells of an annular wiring, computed from the event word."""
    L = len(w.events)
    by_slot: dict[int, list[int]] = {}
    for k, (s, _) in enumerate(w.events):
        by_slot.setdefault(s, []).append(k)
    cells = [WiringCell(-1, None, None, tuple(by_slot.get(0, []))),
             WiringCell(w.n - 1, None, None, tuple(by_slot.get(w.n - 2, [])))]
    if w.n == 1:
        return cells[:1]
    for p in range(w.n - 1):
        own = by_slot.get(p, [])
        if not own:
            raise PreconditionError(f"slot {p} has no events; cells are not disks")
        for i, a in enumerate(own):
            b = own[(i + 1) % len(own)]
            k = (a + 1) % L
            side = []
            while k != b:
                if w.events[k][0] in (p - 1, p + 1):
                    side.append(k)
                k = (k + 1) % L
            cells.append(WiringCell(p, a, b, (a, *side, b)))
    return cells


# ---------------------------------------------------------------------------
# .wir text format


def dumps(w: Wiring) -> str:
    lines = [f"wiring {w.n} {'annular' if w.annular else 'linear'}"]
    lines += [f"{kind} {slot}" for slot, kind in w.events]
    return "\n".join(lines) + "\n"


def loads(text: str) -> Wiring:
    records = [ln.split("#", 1)[0].split() for ln in text.splitlines()]
    records = [r for r in records if r]
    if not records or records[0][0] != "wiring" or len(records[0]) != 3:
        raise MalformedInput("missing 'wiring <n> <annular|linear>' header")
    try:
        n = int(records[0][1])
        events = []
        for rec in records[1:]:
            if len(rec) != 2 or rec[0] not in (CROSS, TOUCH):
                raise MalformedInput(f"bad event record {' '.join(rec)!r}")
            events.append((int(rec[1]), rec[0]))
    except ValueError as exc:
        raise MalformedInput(f"non-integer field: {exc}") from None
    if records[0][2] == "annular":
        return AnnularWiring(n, tuple(events))
    if records[0][2] == "linear":
        return LinearWiring(n, tuple(events))
    raise MalformedInput(f"unknown wiring type {records[0][2]!r}")
