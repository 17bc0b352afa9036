"""Arrangements of pairwise intersecting pseudocircles as combinatorial maps.

An arrangement lives on the sphere.  It is stored as a set of darts (an arc
between two consecutive vertices of a pseudocircle, with a direction) plus,
for every vertex, the counterclockwise cyclic order of the four darts that
leave it.  ``reversal`` is the edge involution; ``vertex_rotation`` encodes
the rotation system.  Faces are the orbits of ``d -> rot_next(reversal(d))``;
with counterclockwise rotations the face of a dart lies to its right.

Besides the dart form there is a *curve* form (see :class:`Curves`): each
pseudocircle as a cyclic vertex sequence plus, per vertex, the ccw order of
labels ``(circle, +1 | -1)`` naming the outgoing half-edges.  Constructions
edit curves and convert back with :func:`from_curves`.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Hashable, Iterable, Mapping, Sequence

from .errors import MalformedInput, PreconditionError

CROSS = "cross"
TOUCH = "touch"

Label = tuple[int, int]


@dataclass(frozen=True)
class Dart:
    id: int
    circle: int
    reversal: int
    vertex: int


@dataclass(frozen=True)
class Vertex:
    id: int
    kind: str
    rotation: tuple[int, ...]


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class CellStats:
    """Face census.

    ``by_crossings`` counts cells by the number of crossing corners only.
    ``digons`` and ``triangles`` count cells whose corners are exactly two
    (three) crossings, so a cell that also passes a touching is neither.
    """

    face_count: int
    by_walk_length: dict[int, int]
    by_crossings: dict[int, int]
    digons: int
    triangles: int
    touchings: int
    p2_combined: int

    def p(self, k: int) -> int:
        return self.by_crossings.get(k, 0)


@dataclass(frozen=True)
class SideVector:
    face: int
    bits: tuple[int, ...]


@dataclass(frozen=True, eq=False)
class Arrangement:
    """Immutable combinatorial map of an arrangement on the sphere.

    Darts and vertices are densely numbered from 0.  ``vertex_kind`` is
    stored explicitly (as in the ``.arr`` format) and checked against the
    label pattern of the rotation by :func:`validate`.
    """

    n: int
    dart_circle: tuple[int, ...]
    dart_reversal: tuple[int, ...]
    vertex_kind: tuple[str, ...]
    vertex_rotation: tuple[tuple[int, ...], ...]
    dart_vertex: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        nd = len(self.dart_circle)
        if self.n < 0:
            raise MalformedInput("negative circle count")
        if len(self.dart_reversal) != nd:
            raise MalformedInput("dart tables differ in length")
        if len(self.vertex_kind) != len(self.vertex_rotation):
            raise MalformedInput("vertex tables differ in length")
        for d, (c, r) in enumerate(zip(self.dart_circle, self.dart_reversal)):
            if not 0 <= c < self.n:
                raise MalformedInput(f"dart {d} has circle {c} out of range")
            if not 0 <= r < nd:
                raise MalformedInput(f"dart {d} has reversal {r} out of range")
        where = [-1] * nd
        for v, rot in enumerate(self.vertex_rotation):
            if self.vertex_kind[v] not in (CROSS, TOUCH):
                raise MalformedInput(f"vertex {v} has unknown kind {self.vertex_kind[v]!r}")
            for d in rot:
                if not 0 <= d < nd:
                    raise MalformedInput(f"vertex {v} lists dart {d} out of range")
                if where[d] == -1:
                    where[d] = v
                else:
                    where[d] = -2
        object.__setattr__(self, "dart_vertex", tuple(where))

    # -- plain views ---------------------------------------------------
    @property
    def num_darts(self) -> int:
        return len(self.dart_circle)

    @property
    def num_vertices(self) -> int:
        return len(self.vertex_rotation)

    @property
    def num_edges(self) -> int:
        return len(self.dart_circle) // 2

    @property
    def darts(self) -> list[Dart]:
        return [Dart(d, c, r, v) for d, (c, r, v) in
                enumerate(zip(self.dart_circle, self.dart_reversal, self.dart_vertex))]

    @property
    def vertices(self) -> list[Vertex]:
        return [Vertex(v, k, rot) for v, (k, rot) in
                enumerate(zip(self.vertex_kind, self.vertex_rotation))]

    def touching_vertices(self) -> list[int]:
        return [v for v, k in enumerate(self.vertex_kind) if k == TOUCH]

    def vertex_circles(self, v: int) -> tuple[int, int]:
        cs = sorted({self.dart_circle[d] for d in self.vertex_rotation[v]})
        return cs[0], cs[-1]

    # -- permutations --------------------------------------------------
    @cached_property
    def rot_next(self) -> tuple[int, ...]:
        nxt = [0] * self.num_darts
        for rot in self.vertex_rotation:
            for i, d in enumerate(rot):
                nxt[d] = rot[(i + 1) % len(rot)]
        return tuple(nxt)

    @cached_property
    def rot_prev(self) -> tuple[int, ...]:
        prv = [0] * self.num_darts
        for d, e in enumerate(self.rot_next):
            prv[e] = d
        return tuple(prv)

    def face_next(self, d: int) -> int:
        return self.rot_next[self.dart_reversal[d]]

    def continue_on_circle(self, d: int) -> int:
        """Dart leaving the head of ``d`` on the same circle."""
        r = self.dart_reversal[d]
        v = self.dart_vertex[r]
        c = self.dart_circle[d]
        for e in self.vertex_rotation[v]:
            if e != r and self.dart_circle[e] == c:
                return e
        raise PreconditionError(f"circle {c} does not continue through vertex {v}")

    @cached_property
    def report(self) -> ValidationReport:
        return _validate(self)

    def require_valid(self) -> None:
        if not self.report.ok:
            raise PreconditionError("invalid arrangement: " + "; ".join(self.report.violations[:3]))

    # -- derived structure (cached) --------------------------------------
    @cached_property
    def faces(self) -> tuple[tuple[int, ...], ...]:
        self.require_valid()
        seen = [False] * self.num_darts
        out = []
        for d0 in range(self.num_darts):
            if seen[d0]:
                continue
            walk = []
            d = d0
            while not seen[d]:
                seen[d] = True
                walk.append(d)
                d = self.face_next(d)
            out.append(tuple(walk))
        return tuple(out)

    @cached_property
    def dart_face(self) -> tuple[int, ...]:
        df = [0] * self.num_darts
        for f, walk in enumerate(self.faces):
            for d in walk:
                df[d] = f
        return tuple(df)

    def face_crossings(self, f: int) -> int:
        return sum(1 for d in self.faces[f] if self.vertex_kind[self.dart_vertex[d]] == CROSS)


# ---------------------------------------------------------------------------
# validation


def _validate(a: Arrangement) -> ValidationReport:
    bad: list[str] = []
    nd = a.num_darts
    if nd % 2:
        bad.append(f"involution: odd number of darts ({nd})")
    for d in range(nd):
        r = a.dart_reversal[d]
        if r == d or a.dart_reversal[r] != d:
            bad.append(f"involution: dart {d} reversal {r} is not a fixed-point-free involution")
        elif a.dart_circle[r] != a.dart_circle[d]:
            bad.append(f"involution: darts {d},{r} lie on different circles")
        if a.dart_vertex[d] == -1:
            bad.append(f"incidence: dart {d} appears in no rotation")
        elif a.dart_vertex[d] == -2:
            bad.append(f"incidence: dart {d} appears in several rotations")
    if bad:
        return ValidationReport(False, tuple(bad))

    for v, rot in enumerate(a.vertex_rotation):
        labels = [a.dart_circle[d] for d in rot]
        if len(rot) != 4:
            bad.append(f"degree: vertex {v} has {len(rot)} darts")
            continue
        distinct = sorted(set(labels))
        if len(distinct) != 2 or Counter(labels)[distinct[0]] != 2:
            bad.append(f"simplicity: vertex {v} has circle labels {labels}")
            continue
        alternating = labels[0] == labels[2]
        kind = CROSS if alternating else TOUCH
        if kind != a.vertex_kind[v]:
            bad.append(f"kind: vertex {v} declared {a.vertex_kind[v]} but labels read {labels}")
    if bad:
        return ValidationReport(False, tuple(bad))

    for c in range(a.n):
        mine = [d for d in range(nd) if a.dart_circle[d] == c]
        if not mine:
            if a.n > 1:
                bad.append(f"curve: circle {c} has no darts")
            continue
        d0 = min(mine)
        seen = set()
        d = d0
        while d not in seen:
            seen.add(d)
            d = a.continue_on_circle(d)
        if d != d0:
            bad.append(f"curve: circle {c} walk from dart {d0} does not close")
        covered = seen | {a.dart_reversal[x] for x in seen}
        if len(covered) != len(mine) or len(seen) * 2 != len(mine):
            bad.append(f"curve: circle {c} splits into several closed curves")

    pair_kinds: dict[tuple[int, int], Counter] = {}
    for v in range(a.num_vertices):
        pair = a.vertex_circles(v)
        pair_kinds.setdefault(pair, Counter())[a.vertex_kind[v]] += 1
    for i, j in combinations(range(a.n), 2):
        got = pair_kinds.get((i, j), Counter())
        if not (got == Counter({CROSS: 2}) or got == Counter({TOUCH: 1})):
            bad.append(f"pairwise: circles {i},{j} meet in {dict(got)}")
    if bad:
        return ValidationReport(False, tuple(bad))

    if a.n >= 2:
        seen = [False] * nd
        nfaces = 0
        for d0 in range(nd):
            if seen[d0]:
                continue
            nfaces += 1
            d = d0
            while not seen[d]:
                seen[d] = True
                d = a.face_next(d)
        euler = a.num_vertices - a.num_edges + nfaces
        if euler != 2:
            bad.append(f"euler: V-E+F = {euler}, not a sphere embedding")
    return ValidationReport(not bad, tuple(bad))


def validate(a: Arrangement) -> ValidationReport:
    return a.report


# ---------------------------------------------------------------------------
# faces and statistics


def faces(a: Arrangement) -> list[tuple[int, ...]]:
    """Face walks as tuples of corner darts, each starting at its smallest dart."""
    return list(a.faces)


def cell_stats(a: Arrangement) -> CellStats:
    walk: Counter = Counter()
    cross: Counter = Counter()
    pure: Counter = Counter()
    for f, w in enumerate(a.faces):
        k = a.face_crossings(f)
        walk[len(w)] += 1
        cross[k] += 1
        if k == len(w):
            pure[k] += 1
    t = len(a.touching_vertices())
    return CellStats(
        face_count=len(a.faces),
        by_walk_length=dict(sorted(walk.items())),
        by_crossings=dict(sorted(cross.items())),
        digons=pure[2],
        triangles=pure[3],
        touchings=t,
        p2_combined=pure[2] + t,
    )


def side_vectors(a: Arrangement, order: str = "bfs") -> list[SideVector]:
    """Side of every circle for every face, relative to the reference face.

    The reference face is the one containing dart 0.  ``order`` selects the
    dual-graph traversal ("bfs" or "dfs"); the result does not depend on it.
    """
    a.require_valid()
    nf = len(a.faces)
    bits: list[list[int] | None] = [None] * nf
    start = a.dart_face[0] if a.num_darts else 0
    if nf == 0:
        return []
    bits[start] = [0] * a.n
    frontier = deque([start])
    while frontier:
        f = frontier.popleft() if order == "bfs" else frontier.pop()
        for d in a.faces[f]:
            g = a.dart_face[a.dart_reversal[d]]
            if bits[g] is None:
                b = list(bits[f])
                b[a.dart_circle[d]] ^= 1
                bits[g] = b
                frontier.append(g)
    return [SideVector(f, tuple(b)) for f, b in enumerate(bits)]


def is_cylindrical(a: Arrangement) -> tuple[int, int] | None:
    vecs = side_vectors(a)
    index = {}
    for sv in vecs:
        index.setdefault(sv.bits, sv.face)
    for sv in vecs:
        comp = tuple(1 - b for b in sv.bits)
        if comp in index:
            return sv.face, index[comp]
    return None


def circle_darts(a: Arrangement, c: int) -> list[int]:
    """Darts of circle ``c`` in walk order, oriented by its smallest dart."""
    mine = [d for d in range(a.num_darts) if a.dart_circle[d] == c]
    if not mine:
        return []
    d0 = min(mine)
    out = [d0]
    d = a.continue_on_circle(d0)
    while d != d0:
        out.append(d)
        d = a.continue_on_circle(d)
    return out


def circle_walk(a: Arrangement, c: int) -> list[tuple[int, int, str]]:
    if not 0 <= c < a.n:
        raise PreconditionError(f"circle {c} out of range")
    a.require_valid()
    out = []
    for d in circle_darts(a, c):
        v = a.dart_vertex[d]
        i, j = a.vertex_circles(v)
        out.append((v, j if i == c else i, a.vertex_kind[v]))
    return out


# ---------------------------------------------------------------------------
# curve form


@dataclass
class Curves:
    """Mutable curve form used while editing an arrangement.

    ``sequences[c]`` is the cyclic vertex sequence of circle ``c`` in its
    forward direction.  ``rotations[x]`` is the ccw order of the four
    outgoing half-edge labels ``(circle, +1)`` (forward) / ``(circle, -1)``.
    """

    sequences: list[list[Hashable]]
    rotations: dict[Hashable, tuple[Label, ...]]

    @property
    def n(self) -> int:
        return len(self.sequences)

    def copy(self) -> "Curves":
        return Curves([list(s) for s in self.sequences], dict(self.rotations))


def from_curves(curves: Curves) -> Arrangement:
    seqs = curves.sequences
    order: dict[Hashable, int] = {}
    for seq in seqs:
        for x in seq:
            order.setdefault(x, len(order))
    extra = set(curves.rotations) - set(order)
    if extra:
        raise MalformedInput(f"rotations given for unused vertices {sorted(map(str, extra))[:3]}")
    out_dart: dict[tuple[Hashable, Label], int] = {}
    circle: list[int] = []
    reversal: list[int] = []
    for c, seq in enumerate(seqs):
        if len(set(seq)) != len(seq):
            raise MalformedInput(f"circle {c} passes a vertex twice")
        m = len(seq)
        for k in range(m):
            x, y = seq[k], seq[(k + 1) % m]
            fwd, bwd = len(circle), len(circle) + 1
            circle += [c, c]
            reversal += [bwd, fwd]
            out_dart[(x, (c, 1))] = fwd
            out_dart[(y, (c, -1))] = bwd
    rotations = [None] * len(order)
    kinds = [None] * len(order)
    for x, v in order.items():
        labels = curves.rotations.get(x)
        if labels is None or len(labels) != 4:
            raise MalformedInput(f"vertex {x!r} lacks a 4-label rotation")
        try:
            rotations[v] = tuple(out_dart[(x, lab)] for lab in labels)
        except KeyError as exc:
            raise MalformedInput(f"vertex {x!r}: label {exc} does not match the curves") from None
        cs = [lab[0] for lab in labels]
        kinds[v] = CROSS if cs[0] == cs[2] else TOUCH
    return Arrangement(len(seqs), tuple(circle), tuple(reversal), tuple(kinds), tuple(rotations))


def to_curves(a: Arrangement) -> Curves:
    """Curve form with vertex keys equal to vertex ids."""
    a.require_valid()
    seqs: list[list[Hashable]] = []
    label: dict[int, Label] = {}
    for c in range(a.n):
        walk = circle_darts(a, c)
        seqs.append([a.dart_vertex[d] for d in walk])
        for d in walk:
            label[d] = (c, 1)
            label[a.dart_reversal[d]] = (c, -1)
    rotations = {v: tuple(label[d] for d in rot) for v, rot in enumerate(a.vertex_rotation)}
    return Curves(seqs, rotations)


def rotation_from_angles(angles: Mapping[Label, float]) -> tuple[Label, ...]:
    """Counterclockwise label order from directions given as angles (degrees)."""
    items = sorted(angles.items(), key=lambda kv: kv[1] % 360.0)
    return tuple(lab for lab, _ in items)


def left_labels(rot: Sequence[Label], c: int) -> tuple[Label, ...]:
    """Labels strictly ccw-between ``(c,+1)`` and ``(c,-1)``: the left side of ``c``."""
    i = rot.index((c, 1))
    out = []
    k = (i + 1) % 4
    while rot[k] != (c, -1):
        out.append(rot[k])
        k = (k + 1) % 4
    return tuple(out)


# ---------------------------------------------------------------------------
# .arr text format


def dumps(a: Arrangement) -> str:
    lines = [f"arrangement {a.n} {a.num_vertices} {a.num_darts}"]
    for v, (k, rot) in enumerate(zip(a.vertex_kind, a.vertex_rotation)):
        kind = "cross" if k == CROSS else "touch"
        lines.append(f"vertex {v} {kind} " + " ".join(map(str, rot)))
    for d, (c, r) in enumerate(zip(a.dart_circle, a.dart_reversal)):
        lines.append(f"dart {d} {c} {r}")
    return "\n".join(lines) + "\n"


def loads(text: str) -> Arrangement:
    records = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            records.append(line.split())
    if not records or records[0][0] != "arrangement" or len(records[0]) != 4:
        raise MalformedInput("missing 'arrangement <n> <V> <D>' header")
    try:
        n, nv, nd = (int(t) for t in records[0][1:])
        verts: dict[int, tuple[str, tuple[int, ...]]] = {}
        darts: dict[int, tuple[int, int]] = {}
        for rec in records[1:]:
            if rec[0] == "vertex" and len(rec) == 7:
                vid = int(rec[1])
                if rec[2] not in ("cross", "touch"):
                    raise MalformedInput(f"bad vertex kind {rec[2]!r}")
                if vid in verts:
                    raise MalformedInput(f"duplicate vertex {vid}")
                verts[vid] = (rec[2], tuple(int(t) for t in rec[3:]))
            elif rec[0] == "dart" and len(rec) == 4:
                did = int(rec[1])
                if did in darts:
                    raise MalformedInput(f"duplicate dart {did}")
                darts[did] = (int(rec[2]), int(rec[3]))
            else:
                raise MalformedInput(f"unrecognised record {' '.join(rec)!r}")
    except ValueError as exc:
        raise MalformedInput(f"non-integer field: {exc}") from None
    if sorted(verts) != list(range(nv)):
        raise MalformedInput(f"vertex ids are not dense 0..{nv - 1}")
    if sorted(darts) != list(range(nd)):
        raise MalformedInput(f"dart ids are not dense 0..{nd - 1}")
    for d, (_, r) in darts.items():
        if not 0 <= r < nd or darts[r][1] != d or r == d:
            raise MalformedInput(f"dart {d}: reversal {r} is not an involution partner")
    return Arrangement(
        n,
        tuple(darts[d][0] for d in range(nd)),
        tuple(darts[d][1] for d in range(nd)),
        tuple(CROSS if verts[v][0] == "cross" else TOUCH for v in range(nv)),
        tuple(verts[v][1] for v in range(nv)),
    )


def isomorphism_invariant(a: Arrangement) -> tuple:
    """Cheap invariant used to compare constructions: (n, V, p_k vector, walk lengths)."""
    s = cell_stats(a)
    return (a.n, a.num_vertices, tuple(sorted(s.by_crossings.items())),
            tuple(sorted(s.by_walk_length.items())), s.touchings)


def relabel_circles(curves: Curves, keep: Iterable[int]) -> Curves:
    """Drop circles not in ``keep`` (and their vertices), renumbering the rest."""
    keep = list(keep)
    new_index = {c: i for i, c in enumerate(keep)}
    alive = set()
    for x, rot in curves.rotations.items():
        if all(lab[0] in new_index for lab in rot):
            alive.add(x)
    seqs = [[x for x in curves.sequences[c] if x in alive] for c in keep]
    rots = {x: tuple((new_index[c], s) for c, s in rot)
            for x, rot in curves.rotations.items() if x in alive}
    return Curves(seqs, rots)
