"""Touching graphs and checks of structural claims on concrete arrangements."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import networkx as nx

from .arrangement import (CROSS, TOUCH, Arrangement, cell_stats, circle_darts,
                          circle_walk, is_cylindrical, side_vectors)
from .errors import DomainError

# ---------------------------------------------------------------------------
# touching graph


@dataclass(frozen=True)
class TouchingGraph:
    n: int
    edges: tuple[tuple[int, int], ...]            # sorted pairs, sorted list
    order: tuple[tuple[int, ...], ...]           # per circle: partners along its walk

    def neighbours(self, i: int) -> set[int]:
        return set(self.order[i])

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g


@dataclass(frozen=True)
class GraphChecks:
    bipartite: bool
    planar: bool
    triangles: tuple[tuple[int, int, int], ...]


def touching_graph(a: Arrangement) -> TouchingGraph:
    a.require_valid()
    edges = sorted(a.vertex_circles(x) for x in a.touching_vertices())
    order = tuple(tuple(o for _, o, k in circle_walk(a, c) if k == TOUCH) for c in range(a.n))
    return TouchingGraph(a.n, tuple(edges), order)


def graph_triangles(g: TouchingGraph) -> tuple[tuple[int, int, int], ...]:
    adj = [g.neighbours(i) for i in range(g.n)]
    out = []
    for i, j in g.edges:
        for k in sorted(adj[i] & adj[j]):
            if k > j:
                out.append((i, j, k))
    return tuple(sorted(out))


def graph_checks(g: TouchingGraph) -> GraphChecks:
    nxg = g.to_networkx()
    planar, _ = nx.check_planarity(nxg)
    return GraphChecks(nx.is_bipartite(nxg), planar, graph_triangles(g))


# ---------------------------------------------------------------------------
# alternation property


@dataclass(frozen=True)
class AlternationWitness:
    """Four triangles along ``circle`` alternating between its two sides.

    ``edges`` are the indices (along :func:`circle_darts`) of the circle
    edges the triangles rest on; ``sides`` are side-vector bits.
    """

    circle: int
    triangles: tuple[int, int, int, int]
    sides: tuple[int, int, int, int]
    edges: tuple[int, int, int, int]


def incident_triangles(a: Arrangement, c: int) -> list[tuple[int, int, int]]:
    """``(edge index, side, face)`` of each triangle with an edge on ``c``, in walk order."""
    pure3 = {f for f, w in enumerate(a.faces) if len(w) == 3 and a.face_crossings(f) == 3}
    bits = side_vectors(a)
    out = []
    for j, d in enumerate(circle_darts(a, c)):
        for e in (a.dart_reversal[d], d):  # left of the walk first
            f = a.dart_face[e]
            if f in pure3:
                out.append((j, bits[f].bits[c], f))
    return out


def alternation_witnesses(a: Arrangement, c: int):
    """All witnesses on ``c``, lexicographic in walk position."""
    a.require_valid()
    if not 0 <= c < a.n:
        raise DomainError(f"circle {c} out of range")
    tri = incident_triangles(a, c)
    for idx in combinations(range(len(tri)), 4):
        picked = [tri[i] for i in idx]
        edges = [t[0] for t in picked]
        sides = [t[1] for t in picked]
        if len(set(edges)) < 4:
            continue
        if sides[0] == sides[2] != sides[1] == sides[3]:
            yield AlternationWitness(c, tuple(t[2] for t in picked), tuple(sides), tuple(edges))


def alternation_witness(a: Arrangement, c: int) -> AlternationWitness | None:
    return next(alternation_witnesses(a, c), None)


def check_witness(a: Arrangement, w: AlternationWitness) -> None:
    """Raise :class:`DomainError` unless ``w`` is a witness in ``a``."""
    if not 0 <= w.circle < a.n:
        raise DomainError(f"circle {w.circle} out of range")
    tri = {(f, e): s for e, s, f in incident_triangles(a, w.circle)}
    got = []
    for f in w.triangles:
        hits = [(e, s) for (g, e), s in tri.items() if g == f]
        if not hits:
            raise DomainError(f"face {f} is not a triangle on circle {w.circle}")
        got.append(hits[0])
    edges = [e for e, _ in got]
    sides = [s for _, s in got]
    k = edges.index(min(edges))
    if len(set(edges)) < 4 or edges[k:] + edges[:k] != sorted(edges):
        raise DomainError("witness triangles are not on four edges in cyclic order")
    if not sides[0] == sides[2] != sides[1] == sides[3]:
        raise DomainError("witness triangles do not alternate sides")
    if tuple(w.sides) != tuple(sides):
        raise DomainError(f"witness sides {tuple(w.sides)} disagree with the arrangement {tuple(sides)}")


# ---------------------------------------------------------------------------
# pc-arcs of a pairwise touching triple

GREEK = ("α", "β", "γ")


@dataclass(frozen=True)
class ArcType:
    """Piece of ``circle`` inside one of the two triangle cells of the triple.

    ``cell`` is 0 for the first triangle cell and 1 for the primed one;
    ``start``/``end`` are the vertices where the piece meets the triple and
    ``interior`` the vertices strictly between them.
    """

    kind: str
    circle: int
    cell: int
    start: int
    end: int
    interior: tuple[int, ...]

    @property
    def type_class(self) -> str:
        return self.kind.replace("′", "")


def _check_triple(a: Arrangement, triple) -> tuple[int, int, int]:
    triple = tuple(triple)
    if len(triple) != 3 or len(set(triple)) != 3 or not all(0 <= c < a.n for c in triple):
        raise DomainError(f"bad triple {triple}")
    touching = {a.vertex_circles(x) for x in a.touching_vertices()}
    for p, q in combinations(sorted(triple), 2):
        if (p, q) not in touching:
            raise DomainError(f"circles {p} and {q} do not touch")
    return triple


def pc_arc_types(a: Arrangement, triple) -> dict[int, list[ArcType]]:
    """pc-arcs of every circle outside ``triple``, in walk order along each circle."""
    from .arrangement import from_curves, left_labels, relabel_circles, to_curves

    a.require_valid()
    triple = _check_triple(a, triple)
    curves = to_curves(a)
    kc = relabel_circles(curves, triple)
    k_arr = from_curves(kc)
    vid: dict = {}
    for seq in kc.sequences:
        for x in seq:
            vid.setdefault(x, len(vid))
    offset, off = [], 0
    for seq in kc.sequences:
        offset.append(off)
        off += 2 * len(seq)
    cells = [f for f, w in enumerate(k_arr.faces) if len(w) == 3]
    if len(cells) != 2:
        raise AssertionError("a touching triple should bound two triangle cells")
    name = {c: GREEK[i] for i, c in enumerate(triple)}
    local = {c: i for i, c in enumerate(triple)}

    def k_face(u: int, p: int, c: int) -> int:
        """Face of the triple containing the piece of ``c`` leaving ``u`` forwards."""
        seq = curves.sequences[p]
        i = seq.index(u)
        m = len(seq)
        kseq = kc.sequences[local[p]]
        prev = next(seq[(i - s) % m] for s in range(1, m + 1) if seq[(i - s) % m] in vid)
        e = offset[local[p]] + 2 * kseq.index(prev)       # forward dart of the triple
        left = (c, 1) in left_labels(curves.rotations[u], p)
        return k_arr.dart_face[k_arr.dart_reversal[e] if left else e]

    out: dict[int, list[ArcType]] = {}
    for c in range(a.n):
        if c in triple:
            continue
        seq = curves.sequences[c]
        hits = [t for t, u in enumerate(seq) if set(a.vertex_circles(u)) - {c} <= set(triple)]
        arcs = []
        for h, t in enumerate(hits):
            t2 = hits[(h + 1) % len(hits)]
            u, v = seq[t], seq[t2]
            (p,) = set(a.vertex_circles(u)) - {c}
            (q,) = set(a.vertex_circles(v)) - {c}
            f = k_face(u, p, c)
            if f not in cells:
                continue
            cell = cells.index(f)
            letters = "".join(sorted((name[p], name[q]), key=GREEK.index))
            kind = letters if cell == 0 else "′".join(letters) + "′"
            between = seq[t + 1:t2] if t2 > t else seq[t + 1:] + seq[:t2]
            arcs.append(ArcType(kind, c, cell, u, v, tuple(between)))
        out[c] = arcs
    return out


@dataclass(frozen=True)
class Claim1Report:
    pairs_checked: int
    same_type: tuple[tuple[ArcType, ArcType], ...]
    violations: tuple[tuple[ArcType, ArcType], ...]
    class_violations: tuple[int, ...]      # circles whose arcs miss a type class

    @property
    def ok(self) -> bool:
        return not self.violations and not self.class_violations


def claim1_check(a: Arrangement, triple) -> Claim1Report:
    """Arcs in the same triangle cell that touch or cross twice must share a type."""
    arcs = pc_arc_types(a, triple)
    flat = [x for c in sorted(arcs) for x in arcs[c]]
    checked = 0
    same, bad = [], []
    for x, y in combinations(flat, 2):
        if x.circle == y.circle or x.cell != y.cell:
            continue
        checked += 1
        common = set(x.interior) & set(y.interior)
        touch = any(a.vertex_kind[z] == TOUCH for z in common)
        if touch or len(common) >= 2:
            (same if x.kind == y.kind else bad).append((x, y))
    classes = {"αβ", "βγ", "αγ"}
    miss = tuple(c for c in sorted(arcs)
                 if sorted(x.type_class for x in arcs[c]) != sorted(classes))
    return Claim1Report(checked, tuple(same), tuple(bad), miss)


# ---------------------------------------------------------------------------
# drawing rule for touching graphs of pseudoparabolas


@dataclass(frozen=True)
class AgarwalDrawing:
    """Touching graph drawn with vertices on a vertical line, top wire first.

    ``routing[(u, v, w)]`` is ``"L"`` when edge ``uv`` passes left of ``w``.
    ``parity[(e, f)]`` is the crossing parity of independent edges.
    """

    edges: tuple[tuple[int, int], ...]
    routing: dict[tuple[int, int, int], str]
    parity: dict[tuple[tuple[int, int], tuple[int, int]], int]
    upper_class: tuple[int, ...]      # wires touched only from below
    lower_class: tuple[int, ...]      # wires touched only from above
    mixed: tuple[int, ...]            # wires touched from both sides

    @property
    def all_even(self) -> bool:
        return not any(self.parity.values())

    @property
    def bipartite(self) -> bool:
        return not self.mixed


def first_meetings(lw) -> dict[tuple[int, int], int]:
    """Index of the first event between each pair of wires."""
    from .wiring import simulate

    first: dict[tuple[int, int], int] = {}
    for k, _, _, upper, lower in simulate(lw):
        first.setdefault((min(upper, lower), max(upper, lower)), k)
    return first


def agarwal_drawing(lw) -> AgarwalDrawing:
    from .wiring import simulate, validate_wiring

    if lw.annular:
        raise DomainError("the drawing rule needs a linear wiring; cut the annular one first")
    rep = validate_wiring(lw)
    first = first_meetings(lw)
    missing = [p for p in combinations(range(lw.n), 2) if p not in first]
    if missing:
        raise DomainError(f"wires {missing[0]} never meet")
    if not rep.ok:
        raise DomainError("invalid linear wiring: " + rep.violations[0])
    edges = []
    above: dict[int, set[str]] = {w: set() for w in range(lw.n)}
    for _, _, kind, upper, lower in simulate(lw):
        if kind == TOUCH:
            edges.append((min(upper, lower), max(upper, lower)))
            above[upper].add("below")    # its partner lies below it
            above[lower].add("above")
    edges.sort()
    meet = lambda x, y: first[(min(x, y), max(x, y))]  # noqa: E731
    routing = {}
    for u, v in edges:
        for w in range(u + 1, v):
            routing[(u, v, w)] = "L" if meet(w, u) < meet(w, v) else "R"
    parity = {}
    for e, f in combinations(edges, 2):
        if set(e) & set(f):
            continue
        lo, hi = max(e[0], f[0]), min(e[1], f[1])
        if lo >= hi:
            parity[(e, f)] = 0
            continue

        def side(x, y, level):
            """Side of edge ``x`` relative to edge ``y`` at ``level``."""
            if level in y:
                return routing[(*x, level)]
            return "R" if routing[(*y, level)] == "L" else "L"

        parity[(e, f)] = int(side(e, f, lo) != side(e, f, hi))
    upper = tuple(w for w in range(lw.n) if above[w] == {"below"})
    lower = tuple(w for w in range(lw.n) if above[w] == {"above"})
    mixed = tuple(w for w in range(lw.n) if len(above[w]) == 2)
    return AgarwalDrawing(tuple(edges), routing, parity, upper, lower, mixed)


# ---------------------------------------------------------------------------
# report


def report(a: Arrangement) -> dict[str, object]:
    """Observed statistics next to the bounds they are usually compared with."""
    a.require_valid()
    st = cell_stats(a)
    g = touching_graph(a)
    gc = graph_checks(g)
    n = a.n
    floor = -(-4 * n // 3)
    out: dict[str, object] = {
        "n": n,
        "vertices": a.num_vertices,
        "edges": a.num_edges,
        "faces": st.face_count,
        "touchings": st.touchings,
        "digons": st.digons,
        "triangles": st.triangles,
    }
    for k, v in st.by_crossings.items():
        out[f"p{k}"] = v
    for k, v in st.by_walk_length.items():
        out[f"walk{k}"] = v
    out.update({
        "p2_combined": st.p2_combined,
        "bound_2n_minus_2": 2 * n - 2,
        "p2_within_bound": st.p2_combined <= 2 * n - 2,
        "tg_edges": len(g.edges),
        "tg_triangles": len(gc.triangles),
        "triangle_hypothesis": bool(gc.triangles),
        "tg_bipartite": gc.bipartite,
        "tg_planar": gc.planar,
        "digon_free": st.digons == 0 and st.touchings == 0,
        "p3_floor": floor,
        "p3_meets_floor": (st.triangles >= floor) if st.digons == st.touchings == 0 else "n/a",
        "p3_vs_n_minus_1": st.triangles - (n - 1),
        "cylindrical": is_cylindrical(a) is not None,
    })
    return out


def _fmt(v) -> str:
    return str(v).lower() if isinstance(v, bool) else str(v)


def format_report(rep: dict[str, object], fmt: str = "text") -> str:
    if fmt == "tsv":
        return "\t".join(rep) + "\n" + "\t".join(_fmt(v) for v in rep.values()) + "\n"
    return "".join(f"{k}={_fmt(v)}\n" for k, v in rep.items())
