"""Arrangement families and the local transformations that build them."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
import os
from pathlib import Path

from . import wiring as wir
from .arrangement import (CROSS, TOUCH, Arrangement, Curves, cell_stats, circle_walk,
                          from_curves, left_labels, rotation_from_angles, to_curves)
from .errors import DomainError, PreconditionError
from .geometry import arrangement_of_circles

# ---------------------------------------------------------------------------
# digons and touchings


def digon_corners(a: Arrangement, f: int) -> tuple[int, int]:
    walk = a.faces[f]
    if len(walk) != 2:
        raise DomainError(f"face {f} has {len(walk)} corners, not a digon")
    x, y = (a.dart_vertex[d] for d in walk)
    if x == y or any(a.vertex_kind[v] != CROSS for v in (x, y)):
        raise DomainError(f"face {f} is not bounded by two crossings")
    if a.vertex_circles(x) != a.vertex_circles(y):
        raise DomainError(f"face {f} corners lie on different circle pairs")
    return x, y


def find_digon(a: Arrangement, i: int, j: int) -> int | None:
    """Smallest face id of a digon between circles ``i`` and ``j``."""
    pair = (min(i, j), max(i, j))
    for f, walk in enumerate(a.faces):
        if len(walk) != 2:
            continue
        vs = [a.dart_vertex[d] for d in walk]
        if vs[0] != vs[1] and all(a.vertex_kind[v] == CROSS and a.vertex_circles(v) == pair for v in vs):
            return f
    return None


def contract_digon(a: Arrangement, f: int) -> Arrangement:
    """Shrink the digon cell ``f`` to a touching of its two circles."""
    a.require_valid()
    if not 0 <= f < len(a.faces):
        raise DomainError(f"face {f} out of range")
    digon_corners(a, f)
    d1, d2 = a.faces[f]
    # corner at x = vertex(d2) lies between reversal(d1) and d2, both heading to y
    x = a.dart_vertex[d2]
    y = a.dart_vertex[d1]
    curves = to_curves(a)
    rot = list(curves.rotations[x])
    lab1 = _label_of(a, a.dart_reversal[d1])
    lab2 = _label_of(a, d2)
    i1, i2 = rot.index(lab1), rot.index(lab2)
    rot[i1], rot[i2] = rot[i2], rot[i1]
    curves.rotations[x] = tuple(rot)
    del curves.rotations[y]
    for seq in curves.sequences:
        if y in seq:
            seq.remove(y)
    return from_curves(curves)


def _label_of(a: Arrangement, d: int) -> tuple[int, int]:
    """Label of dart ``d`` in the curve form produced by :func:`to_curves`."""
    from .arrangement import circle_darts

    c = a.dart_circle[d]
    return (c, 1) if d in set(circle_darts(a, c)) else (c, -1)


def relax_touching(a: Arrangement, x: int, side: str = "in") -> Arrangement:
    """Split touching vertex ``x`` into two crossings bounding a new digon.

    On the sphere the new digon always sits between the two wedge cells of
    the touching, so ``side`` does not change the combinatorial result; it
    is accepted for interface symmetry.
    """
    a.require_valid()
    if side not in ("in", "out"):
        raise DomainError(f"side must be 'in' or 'out', got {side!r}")
    if not 0 <= x < a.num_vertices or a.vertex_kind[x] != TOUCH:
        raise DomainError(f"vertex {x} is not a touching")
    curves = to_curves(a)
    rot = curves.rotations[x]
    k = 0 if rot[0][0] == rot[1][0] else 1
    t0, t1, t2, t3 = rot[k:] + rot[:k]
    curves.rotations[x] = (t3, t1, t2, t0)
    y = ("relaxed", x)
    curves.rotations[y] = (t0, t2, t1, t3)
    for c, s in (t3, t0):
        seq = curves.sequences[c]
        i = seq.index(x)
        seq.insert(i + 1 if s == 1 else i, y)
    return from_curves(curves)


def contract_all_digons(a: Arrangement) -> Arrangement:
    """Contract digons one at a time, always the smallest face id first."""
    while True:
        f = next((f for f, w in enumerate(a.faces) if len(w) == 2 and _is_digon(a, f)), None)
        if f is None:
            return a
        a = contract_digon(a, f)


def _is_digon(a: Arrangement, f: int) -> bool:
    try:
        digon_corners(a, f)
    except DomainError:
        return False
    return True


# ---------------------------------------------------------------------------
# wiring-based families


def krupp_wiring() -> wir.AnnularWiring:
    return wir.annular(3, [0, 1] * 3)


def krupp() -> Arrangement:
    return wir.to_arrangement(krupp_wiring())


def grunbaum_wiring(n: int) -> wir.AnnularWiring:
    """Two wires X, Y sharing the top; every other wire makes a digon with each.

    The remaining ``n - 2`` wires perform two half twists.  Before each step
    of a half twist the wire currently on top of the block makes a digon
    with whichever of X, Y sits directly above it.
    """
    if n < 4:
        raise DomainError("the digon construction needs n >= 4")
    m = n - 2
    word: list[int] = []

    def half_twist() -> None:
        for t in range(m):
            word.extend([1, 1])
            word.extend(range(2, m + 1 - t))

    half_twist()
    word.append(0)
    half_twist()
    word.append(0)
    return wir.annular(n, word)


def grunbaum_digons(n: int) -> Arrangement:
    return wir.to_arrangement(grunbaum_wiring(n))


# ---------------------------------------------------------------------------
# wheel family (built from real circles, then lenses contracted)


def wheel_circles(n: int, overlap: float = 1e-3) -> list[tuple[float, float, float]]:
    """Hub circle 0 plus ``n - 1`` equal circles tangent to it from outside.

    Rim circles whose centres are furthest apart (index step ``n/2`` modulo
    ``n - 1``) are tangent as well; all tangencies are realised as thin
    lenses of width about ``overlap``.
    """
    m = n - 1
    half = math.sin(math.pi * (n // 2 - 1) / m)
    r = half / (1 - half)
    dist = 1 + r - overlap
    out = [(0.0, 0.0, 1.0)]
    for i in range(m):
        th = 2 * math.pi * i / m
        out.append((dist * math.cos(th), dist * math.sin(th), r))
    return out


def wheel_touch_pairs(n: int) -> list[tuple[int, int]]:
    m = n - 1
    pairs = [(0, i + 1) for i in range(m)]
    pairs += sorted({tuple(sorted((i + 1, (i + n // 2) % m + 1))) for i in range(m)})
    return pairs


def wheel(n: int) -> Arrangement:
    """Hub 0 touching circles ``1..n-1``; rim circle ``w_i`` also touches ``w_{i±n/2}``."""
    if n < 6 or n % 2:
        raise DomainError("wheel needs an even n >= 6")
    a = arrangement_of_circles(wheel_circles(n))
    for i, j in wheel_touch_pairs(n):
        f = find_digon(a, i, j)
        if f is None:
            raise AssertionError(f"wheel({n}): circles {i},{j} do not bound a lens")
        a = contract_digon(a, f)
    return a


# ---------------------------------------------------------------------------
# blossom


def _side_labels(rot, c: int, east: int):
    """Labels strictly ccw between ``(c, east)`` and ``(c, -east)``: left of travel."""
    i = rot.index((c, east))
    out = []
    k = (i + 1) % 4
    while rot[k] != (c, -east):
        out.append(rot[k])
        k = (k + 1) % 4
    return out


def _swap_rotation(shallow: int, deep: int):
    """Two wires of a strip swapping; the strip chart has depth pointing up."""
    return ((shallow, 1), (deep, -1), (shallow, -1), (deep, 1))


def touching_partners(a: Arrangement, v: int) -> list[tuple[int, int]]:
    """``(vertex, circle)`` of every touching on ``v`` in walk order."""
    return [(x, o) for x, o, k in circle_walk(a, v) if k == TOUCH]


def blossom_side(a: Arrangement, v: int) -> int:
    """Direction (+1/-1) of travel along ``v`` that has all touching partners on its right.

    Raises :class:`DomainError` when ``v`` has touchings on both sides.
    """
    curves = to_curves(a)
    sides = set()
    for x, o in touching_partners(a, v):
        left = _side_labels(curves.rotations[x], v, 1)
        sides.add(1 if left and left[0][0] == o else -1)
    if len(sides) != 1:
        raise DomainError(f"circle {v} has touchings on both of its sides")
    # partners on the left of forward travel -> travel backwards
    return -sides.pop()


def blossom(a: Arrangement, v: int) -> Arrangement:
    """Relax the ``d`` touchings of ``v`` and add ``d`` new circles beside ``v``.

    The new circles run in a thin strip on the side of ``v`` away from its
    touching partners.  New circle ``n + k - 1`` touches ``v``, ``w_k`` and
    ``w_{k+1}`` (partners numbered in order along ``v``).  Inside the strip
    the new circles form a full twist: before the ``k``-th touching the top
    strand touches ``v`` and sinks to the second lowest lane, where it and
    the lowest strand both touch the sunken arc of ``w_k``.
    """
    a.require_valid()
    if not 0 <= v < a.n:
        raise DomainError(f"circle {v} out of range")
    partners = touching_partners(a, v)
    d = len(partners)
    if d < 3:
        raise DomainError(f"circle {v} has {d} touchings; blossom needs at least 3")
    east = blossom_side(a, v)
    west = -east
    curves = to_curves(a)
    n = a.n
    seq_v = curves.sequences[v] if east == 1 else curves.sequences[v][::-1]
    last_touch = max(i for i, x in enumerate(seq_v) if a.vertex_kind[x] == TOUCH)
    order = seq_v[last_touch + 1:] + seq_v[:last_touch + 1]

    new_seqs: list[list] = [[] for _ in range(d)]
    new_v: list = []
    rots = curves.rotations
    stack = list(range(d))      # lane -> new circle offset; lane 0 is next to v
    wire = lambda k: n + k      # noqa: E731
    cap = 0

    def cross_lane(s: int, key) -> None:
        shallow, deep = stack[s], stack[s + 1]
        rots[key] = _swap_rotation(wire(shallow), wire(deep))
        new_seqs[shallow].append(key)
        new_seqs[deep].append(key)
        stack[s], stack[s + 1] = deep, shallow

    for u in order:
        if a.vertex_kind[u] == CROSS:
            (lab_in,) = _side_labels(rots[u], v, east)
            c = lab_in[0]
            keys = []
            for p in range(d):
                key = ("strand", u, p)
                rots[key] = rotation_from_angles({(wire(stack[p]), 1): 0, (wire(stack[p]), -1): 180,
                                                  lab_in: 90, (c, -lab_in[1]): 270})
                new_seqs[stack[p]].append(key)
                keys.append(key)
            seq_c = curves.sequences[c]
            i = seq_c.index(u)
            if lab_in[1] == 1:
                seq_c[i + 1:i + 1] = keys
            else:
                seq_c[i:i] = keys[::-1]
            new_v.append(u)
            continue

        # touching number cap+1 with partner w
        k = cap
        cap += 1
        (w,) = {lab[0] for lab in rots[u]} - {v}
        rot_u = rots.pop(u)
        w_east = rot_u[(rot_u.index((v, west)) + 2) % 4]
        w_west = (w, -w_east[1])
        top = stack[0]
        key = ("touch-v", k)
        rots[key] = ((v, east), (wire(top), 1), (wire(top), -1), (v, west))
        new_seqs[top].append(key)
        new_v.append(key)
        for s in range(d - 2):
            cross_lane(s, ("sink", k, s))
        x1, x2 = ("leg", k, 0), ("leg", k, 1)
        rots[x1] = rotation_from_angles({(v, east): 0, w_east: 90, (v, west): 180, w_west: 270})
        rots[x2] = rotation_from_angles({(v, east): 0, w_west: 90, (v, west): 180, w_east: 270})
        new_v += [x1, x2]
        path = [x1]
        for p in range(d - 2):
            key = ("down", k, p)
            rots[key] = rotation_from_angles({(wire(stack[p]), 1): 0, w_east: 90,
                                              (wire(stack[p]), -1): 180, w_west: 270})
            new_seqs[stack[p]].append(key)
            path.append(key)
        t1 = ("cap", k, 0)
        rots[t1] = (w_east, (wire(stack[d - 2]), 1), (wire(stack[d - 2]), -1), w_west)
        new_seqs[stack[d - 2]].append(t1)
        cross_lane(d - 2, ("bottom", k))
        t2 = ("cap", k, 1)
        rots[t2] = (w_east, (wire(stack[d - 2]), 1), (wire(stack[d - 2]), -1), w_west)
        new_seqs[stack[d - 2]].append(t2)
        path += [t1, t2]
        for p in reversed(range(d - 2)):
            key = ("up", k, p)
            rots[key] = rotation_from_angles({(wire(stack[p]), 1): 0, w_west: 90,
                                              (wire(stack[p]), -1): 180, w_east: 270})
            new_seqs[stack[p]].append(key)
            path.append(key)
        path.append(x2)
        seq_w = curves.sequences[w]
        i = seq_w.index(u)
        seq_w[i:i + 1] = path if w_east[1] == 1 else path[::-1]

    if stack != list(range(d)):
        raise AssertionError("strip wiring did not close up")
    curves.sequences[v] = new_v if east == 1 else new_v[::-1]
    curves.sequences.extend(new_seqs)
    out = from_curves(curves)
    out.require_valid()
    return out


# ---------------------------------------------------------------------------
# four-circle replacement

# Swap slots applied inside each of the four witness edges, lanes numbered
# from the left side of the replaced circle (found by scripts/search_gadget.py).
GADGET: tuple[tuple[int, ...], ...] = ((0, 1, 2),) * 4


def replace_circle(a: Arrangement, w, gadget=GADGET) -> Arrangement:
    """Replace the circle of witness ``w`` by four circles in a thin annulus.

    The new circles keep the index of the old one plus ``n, n+1, n+2``.
    They cross each other only inside the four witness edges, following
    ``gadget``; everywhere else they run parallel to the removed circle.
    """
    from .analysis import alternation_witness, check_witness, incident_triangles

    a.require_valid()
    st = cell_stats(a)
    if st.touchings or st.digons:
        raise DomainError("replacement needs a digon- and touching-free arrangement")
    check_witness(a, w)
    c, n = w.circle, a.n
    edges = sorted(e for e, _, f in incident_triangles(a, c) if f in w.triangles)
    blocks = dict(zip(edges, gadget))
    curves = to_curves(a)
    seq = curves.sequences[c]
    rots = curves.rotations
    ids = [c, n, n + 1, n + 2]
    stack = list(ids)
    wires: dict[int, list] = {i: [] for i in ids}
    for j, u in enumerate(seq):
        (up,) = left_labels(rots.pop(u), c)
        o = up[0]
        keys = []
        for p in range(4):
            key = ("strand", u, p)
            rots[key] = rotation_from_angles({(stack[p], 1): 0, up: 90, (stack[p], -1): 180,
                                              (o, -up[1]): 270})
            wires[stack[p]].append(key)
            keys.append(key)
        seq_o = curves.sequences[o]
        i = seq_o.index(u)
        seq_o[i:i + 1] = keys[::-1] if up[1] == 1 else keys
        for t, s in enumerate(blocks.get(j, ())):
            key = ("swap", j, t)
            upper, lower = stack[s], stack[s + 1]
            rots[key] = wir.local_rotation(CROSS, upper, lower)
            wires[upper].append(key)
            wires[lower].append(key)
            stack[s], stack[s + 1] = lower, upper
    if stack != ids:
        raise AssertionError("gadget word does not close up")
    curves.sequences[c] = wires[c]
    curves.sequences.extend(wires[i] for i in ids[1:])
    out = from_curves(curves)
    out.require_valid()

    # self-checks on the transcribed gadget
    destroyed = {f for e, _, f in incident_triangles(a, c) if e in blocks}
    new = cell_stats(out)
    if new.digons or new.touchings or new.triangles != st.triangles - len(destroyed) + 8:
        raise AssertionError("replacement gadget produced unexpected cells")
    for i in ids:
        if alternation_witness(out, i) is None:
            raise AssertionError(f"new circle {i} lacks an alternation witness")
    return out


# ---------------------------------------------------------------------------
# inserting a circle along a dual cycle


def insert_circle(a: Arrangement, path) -> Arrangement:
    """Add circle ``n`` crossing the edge of each dart in ``path`` in turn.

    The new circle passes from the left of ``path[i]`` to its right, i.e.
    into the face of ``path[i]``, which must also be the face on the left of
    ``path[i + 1]`` (cyclically).  Faces may not repeat.
    """
    a.require_valid()
    m = len(path)
    if m == 0:
        raise DomainError("empty insertion path")
    faces = [a.dart_face[e] for e in path]
    if len(set(faces)) != m:
        raise DomainError("insertion path visits a face twice")
    for i in range(m):
        if a.dart_face[a.dart_reversal[path[(i + 1) % m]]] != faces[i]:
            raise DomainError(f"insertion path breaks after dart {path[i]}")
    curves = to_curves(a)
    new = a.n
    seq = []
    for i, e in enumerate(path):
        lab = _label_of(a, e)
        key = ("inserted", i)
        curves.rotations[key] = (lab, (new, -1), (lab[0], -lab[1]), (new, 1))
        o = lab[0]
        u = a.dart_vertex[e if lab[1] == 1 else a.dart_reversal[e]]
        s = curves.sequences[o]
        s.insert(s.index(u) + 1, key)
        seq.append(key)
    curves.sequences.append(seq)
    out = from_curves(curves)
    out.require_valid()
    return out


# ---------------------------------------------------------------------------
# triangle-minimal family

DATA_ENV = "PSEUDOCIRCLES_DATA"


def data_path(name: str) -> Path:
    """Location of a shipped resource, overridable through ``$PSEUDOCIRCLES_DATA``."""
    root = os.environ.get(DATA_ENV)
    if root:
        return Path(root) / name
    return Path(str(resources.files("pseudocircles") / "data" / name))


def base_wiring(m: int) -> wir.AnnularWiring:
    if m not in (6, 7, 8):
        raise DomainError(f"base arrangements exist for m in 6, 7, 8, not {m}")
    w = wir.loads(data_path(f"A{m}.wir").read_text())
    if not isinstance(w, wir.AnnularWiring):
        raise DomainError(f"resource A{m}.wir is not annular")
    return w


@lru_cache(maxsize=None)
def base_family(m: int) -> Arrangement:
    """Digon-free cylindrical arrangement of ``m`` circles with 8/10/11 triangles."""
    return wir.to_arrangement(base_wiring(m))


def _grow(a: Arrangement, circles) -> tuple[Arrangement, list[int]]:
    """One replacement raising the triangle count by exactly four."""
    from .analysis import alternation_witnesses, incident_triangles

    for c in circles:
        tri = incident_triangles(a, c)
        for w in alternation_witnesses(a, c):
            hit = {f for e, _, f in tri if e in w.edges}
            if len(hit) == 4:
                return replace_circle(a, w), [c, a.n, a.n + 1, a.n + 2]
    raise AssertionError("no witness destroys exactly its own four triangles")


def triangle_family(n: int) -> Arrangement:
    """Cylindrical digon-free arrangement of ``n >= 6`` circles with ceil(4n/3) triangles."""
    if n < 6:
        raise DomainError("the triangle family starts at n = 6")
    a = base_family(6 + (n - 6) % 3)
    circles = list(range(a.n))
    for _ in range((n - 6) // 3):
        a, circles = _grow(a, circles)
    return a


# ---------------------------------------------------------------------------
# triangle-free touching graphs with 2n - 2 touchings


def prop1_decomposition(n: int) -> tuple[int, int]:
    """``(n', k)`` with ``n = n' + 3k`` and ``n'`` in 11, 15, 19."""
    for base in (11, 15, 19):
        if n >= base and (n - base) % 3 == 0:
            return base, (n - base) // 3
    raise DomainError(f"n = {n} is not covered (need 11, 14, 15 or n >= 17)")


def prop1_family(n: int) -> Arrangement:
    base, k = prop1_decomposition(n)
    a = blossom(wheel((base + 1) // 2), 0)
    for _ in range(k):
        a = blossom(a, _three_touching_circle(a))
    return a


def _three_touching_circle(a: Arrangement) -> int:
    for c in range(a.n):
        if len(touching_partners(a, c)) == 3:
            try:
                blossom_side(a, c)
            except DomainError:
                continue
            return c
    raise AssertionError("no circle with three one-sided touchings")
