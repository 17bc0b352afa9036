import random

import pytest
from hypothesis import given, settings

from oracle import euler_ok, oracle_crossing_sizes, oracle_faces
from pseudocircles import arrangement as arr
from pseudocircles import constructions as con
from pseudocircles import wiring as wir
from pseudocircles.errors import MalformedInput, PreconditionError
from strategies import annular_wirings, random_annular


def two_crossing():
    return wir.to_arrangement(wir.annular(2, [0, 0]))


def two_touching():
    return wir.to_arrangement(wir.AnnularWiring(2, ((0, arr.TOUCH),)))


def test_krupp_counts(krupp):
    assert arr.validate(krupp).ok
    assert (krupp.num_vertices, krupp.num_edges, len(arr.faces(krupp))) == (6, 12, 8)
    assert all(len(f) == 3 for f in arr.faces(krupp))


def test_touching_pair_counts():
    a = two_touching()
    assert arr.validate(a).ok
    assert (a.num_vertices, a.num_edges, len(a.faces)) == (1, 2, 3)


def test_crossing_pair_faces():
    a = two_crossing()
    assert sorted(len(f) for f in a.faces) == [2, 2, 2, 2]


def test_base6_face_count():
    assert len(arr.faces(con.base_family(6))) == 32


def test_perturbed_rotation_reports_simplicity(wheel6):
    a = wheel6
    # swap one dart of vertex 0 with a dart of a vertex on other circles
    v0 = a.vertex_rotation[0]
    circles0 = set(a.vertex_circles(0))
    v1 = next(v for v in range(a.num_vertices) if not set(a.vertex_circles(v)) & circles0)
    r0, r1 = list(v0), list(a.vertex_rotation[v1])
    r0[0], r1[0] = r1[0], r0[0]
    rots = list(a.vertex_rotation)
    rots[0], rots[v1] = tuple(r0), tuple(r1)
    bad = arr.Arrangement(a.n, a.dart_circle, a.dart_reversal, a.vertex_kind, tuple(rots))
    rep = arr.validate(bad)
    assert not rep.ok
    assert any(v.startswith("simplicity") for v in rep.violations)


def test_out_of_range_index_is_malformed():
    with pytest.raises(MalformedInput):
        arr.Arrangement(1, (0, 0), (1, 7), (arr.CROSS,), ((0, 1, 0, 1),))


def test_faces_of_invalid_raise(wheel6):
    kinds = list(wheel6.vertex_kind)
    kinds[0] = arr.TOUCH if kinds[0] == arr.CROSS else arr.CROSS
    bad = arr.Arrangement(wheel6.n, wheel6.dart_circle, wheel6.dart_reversal,
                          tuple(kinds), wheel6.vertex_rotation)
    assert not arr.validate(bad).ok
    with pytest.raises(PreconditionError):
        arr.faces(bad)


def test_pair_rule_violation():
    # three wires where pair (0,2) never meets
    w = wir.annular(3, [0, 0, 1, 1])
    with pytest.raises(PreconditionError):
        wir.to_arrangement(w)


def test_cell_stats_examples(wheel6):
    s = arr.cell_stats(con.base_family(6))
    assert (s.triangles, s.digons, s.touchings) == (8, 0, 0)
    assert arr.cell_stats(con.grunbaum_digons(4)).digons == 6
    s = arr.cell_stats(wheel6)
    assert (s.touchings, s.p2_combined) == (10, 10)


def test_side_vectors_two_crossing():
    vecs = arr.side_vectors(two_crossing())
    assert sorted(v.bits for v in vecs) == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_krupp_single_antipode(krupp):
    vecs = arr.side_vectors(krupp)
    ref = next(v.bits for v in vecs if v.face == krupp.dart_face[0])
    comp = tuple(1 - b for b in ref)
    assert sum(v.bits == comp for v in vecs) == 1


def _adjacency_ok(a):
    vecs = {v.face: v.bits for v in arr.side_vectors(a)}
    for d in range(a.num_darts):
        f, g = a.dart_face[d], a.dart_face[a.dart_reversal[d]]
        diff = [i for i in range(a.n) if vecs[f][i] != vecs[g][i]]
        if diff != [a.dart_circle[d]]:
            return False
    return True


def test_side_vector_adjacency_and_order_independence(krupp, wheel6):
    for a in (krupp, wheel6, con.base_family(8)):
        assert _adjacency_ok(a)
        assert arr.side_vectors(a, "bfs") == arr.side_vectors(a, "dfs")


def test_cylindrical_examples(krupp):
    assert arr.is_cylindrical(con.base_family(6)) is not None
    assert arr.is_cylindrical(krupp) is not None


def test_circle_walk_examples(krupp, wheel6):
    assert arr.circle_walk(two_touching(), 0) == [(0, 1, arr.TOUCH)]
    for c in range(3):
        walk = arr.circle_walk(krupp, c)
        assert len(walk) == 4 and all(k == arr.CROSS for _, _, k in walk)
        others = sorted(o for _, o, _ in walk)
        assert others == sorted([o for o in range(3) if o != c] * 2)
    hub = arr.circle_walk(wheel6, 0)
    assert sorted(o for _, o, k in hub if k == arr.TOUCH) == [1, 2, 3, 4, 5]
    assert all(k == arr.TOUCH for _, _, k in hub)


def test_circle_walk_out_of_range(krupp):
    with pytest.raises(PreconditionError):
        arr.circle_walk(krupp, 3)


def test_arr_round_trip(wheel6):
    text = arr.dumps(wheel6)
    b = arr.loads(text)
    assert arr.dumps(b) == text
    assert arr.isomorphism_invariant(b) == arr.isomorphism_invariant(wheel6)


@pytest.mark.parametrize("text", [
    "",
    "arrangement 2 1\n",
    "arrangement 2 1 4\nvertex 0 touch 0 1 2 3\ndart 0 0 1\ndart 1 0 0\n",
    "arrangement 2 1 4\nvertex 0 bend 0 1 2 3\n",
    "arrangement 2 1 4\nvertex 0 touch 0 1 2 x\n",
    "arrangement 1 0 2\ndart 0 0 0\ndart 1 0 1\n",
])
def test_loads_rejects_malformed(text):
    with pytest.raises(MalformedInput):
        arr.loads(text)


def test_loads_ignores_comments_and_blank_lines():
    a = two_touching()
    text = "# header comment\n\n" + arr.dumps(a).replace("\n", "  # c\n", 1)
    assert arr.dumps(arr.loads(text)) == arr.dumps(a)


def _check_structure(a):
    assert arr.validate(a).ok
    s = arr.cell_stats(a)
    assert euler_ok(a)
    assert sum(k * c for k, c in s.by_walk_length.items()) == 4 * a.num_vertices
    assert sum(s.by_walk_length.values()) == s.face_count
    assert s.face_count == a.n * (a.n - 1) - s.touchings + 2
    assert oracle_faces(a) == sorted(len(f) for f in a.faces)
    assert oracle_crossing_sizes(a) == sorted(a.face_crossings(f) for f in range(len(a.faces)))


@given(annular_wirings(min_n=2, max_n=6))
def test_structural_invariants_random(w):
    a = wir.to_arrangement(w)
    _check_structure(a)
    assert arr.is_cylindrical(a) is not None
    assert _adjacency_ok(a)


def test_structural_invariants_families(wheel6):
    for a in (wheel6, con.grunbaum_digons(6), con.triangle_family(9), con.blossom(wheel6, 0)):
        _check_structure(a)


def test_curves_round_trip_preserves_stats():
    a = wir.to_arrangement(random_annular(5, random.Random(3), 0.5))
    b = arr.from_curves(arr.to_curves(a))
    assert arr.isomorphism_invariant(a) == arr.isomorphism_invariant(b)


def test_arrangement_is_immutable():
    # immutable: attribute assignment must fail
    a = two_touching()
    with pytest.raises(Exception):
        a.n = 5
