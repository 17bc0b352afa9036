import random
from collections import Counter

import pytest
from hypothesis import given

from pseudocircles import arrangement as arr
from pseudocircles import constructions as con
from pseudocircles import wiring as wir
from pseudocircles.errors import DomainError, MalformedInput, PreconditionError
from strategies import annular_wirings, random_annular

TWIST = [0, 1, 0, 0, 1, 0]


def test_full_twist_valid():
    assert wir.validate_wiring(wir.annular(3, TWIST)).ok


def test_single_touch_valid():
    assert wir.validate_wiring(wir.AnnularWiring(2, ((0, arr.TOUCH),))).ok


def test_single_cross_annular_invalid():
    rep = wir.validate_wiring(wir.annular(2, [0]))
    assert not rep.ok
    assert any("closure" in v for v in rep.violations)


def test_pair_violation_names_pair():
    rep = wir.validate_wiring(wir.annular(3, [0, 0, 0, 0, 1, 1]))
    assert any("wires 0,1" in v for v in rep.violations)


def test_linear_open_strip():
    lw = wir.LinearWiring(2, ((0, arr.CROSS),))
    assert not wir.validate_wiring(lw).ok
    assert wir.validate_wiring(wir.LinearWiring(2, ((0, arr.CROSS),), open_strip=True)).ok


def test_bad_slot_is_malformed():
    with pytest.raises(MalformedInput):
        wir.annular(3, [2])


def test_full_twist_stats():
    a = wir.to_arrangement(wir.annular(3, TWIST))
    s = arr.cell_stats(a)
    assert s.face_count == 8
    # slot-0 events 2,3 and 5,0 bound digons, the bottom cell meets only events 1,4
    assert (s.digons, s.triangles, s.by_walk_length[4]) == (3, 2, 3)


def test_krupp_word_all_triangles():
    s = arr.cell_stats(wir.to_arrangement(con.krupp_wiring()))
    assert (s.face_count, s.triangles) == (8, 8)


def test_two_wires_two_crossings():
    assert len(wir.to_arrangement(wir.annular(2, [0, 0])).faces) == 4


def test_to_arrangement_rejects_invalid():
    with pytest.raises(PreconditionError):
        wir.to_arrangement(wir.annular(2, [0]))


def test_cut_full_twist():
    lw = wir.cut(wir.annular(3, TWIST), 0)
    assert not lw.annular
    assert all(c[arr.CROSS] == 2 for c in wir.pair_counts(lw).values())


def test_cut_offset_errors():
    with pytest.raises(DomainError):
        wir.cut(wir.annular(3, TWIST), 6)
    with pytest.raises(DomainError):
        wir.cut(wir.cut(wir.annular(3, TWIST), 0), 0)


@given(annular_wirings(min_n=2, max_n=6))
def test_cut_preserves_pair_multiset(w):
    for off in range(len(w.events)):
        assert wir.pair_multiset(wir.cut(w, off)) == wir.pair_multiset(w)


def test_canonical_key_symmetries():
    w = wir.annular(3, TWIST)
    refl = wir.annular(3, [1 - s for s in TWIST])
    rot = wir.annular(3, TWIST[2:] + TWIST[:2])
    assert wir.canonical_key(w) == wir.canonical_key(refl) == wir.canonical_key(rot)


def test_canonical_key_distinguishes_touch():
    w = wir.annular(3, TWIST)
    # the digon at events 2,3 contracted: event 2 becomes a touch, event 3 is dropped
    touched = wir.annular(3, [0, 1, 0, 1, 0], [arr.CROSS, arr.CROSS, arr.TOUCH, arr.CROSS, arr.CROSS])
    assert wir.validate_wiring(touched).ok
    assert wir.canonical_key(w) != wir.canonical_key(touched)


def _symmetries(w):
    ev = list(w.events)
    out = []
    for reflect in (False, True):
        base = [(w.n - 2 - s if reflect else s, k) for s, k in ev]
        for seq in (base, base[::-1]):
            r = random.Random(len(seq)).randrange(len(seq))
            out.append(wir.AnnularWiring(w.n, tuple(seq[r:] + seq[:r])))
    return out


@given(annular_wirings(min_n=2, max_n=5))
def test_stats_invariant_under_symmetry(w):
    base = arr.isomorphism_invariant(wir.to_arrangement(w))
    for v in _symmetries(w):
        assert wir.validate_wiring(v).ok
        assert wir.canonical_key(v) == wir.canonical_key(w)
        assert arr.isomorphism_invariant(wir.to_arrangement(v)) == base


@given(annular_wirings(min_n=2, max_n=6))
def test_to_arrangement_valid_and_cylindrical(w):
    a = wir.to_arrangement(w)
    assert arr.validate(a).ok
    assert arr.is_cylindrical(a) is not None
    assert a.num_vertices == len(w.events)
    assert Counter(a.vertex_kind) == Counter(k for _, k in w.events)


@given(annular_wirings(min_n=2, max_n=6))
def test_wiring_cells_match_map(w):
    a = wir.to_arrangement(w)
    cells = wir.wiring_cells(w)
    assert sorted(len(c.corners) for c in cells) == sorted(len(f) for f in a.faces)
    assert sorted(c.crossings(w) for c in cells) == \
        sorted(a.face_crossings(f) for f in range(len(a.faces)))


@given(annular_wirings(min_n=2, max_n=6))
def test_wiring_of_round_trip(w):
    a = wir.to_arrangement(w)
    w2, wires = wir.wiring_of(a)
    assert wir.validate_wiring(w2).ok
    assert sorted(wires) == list(range(w.n))
    assert arr.isomorphism_invariant(wir.to_arrangement(w2)) == arr.isomorphism_invariant(a)


def test_wiring_of_requires_cylindrical(wheel6):
    with pytest.raises(PreconditionError):
        wir.wiring_of(wheel6)


def test_wir_round_trip():
    w = random_annular(5, random.Random(7), 0.5)
    text = wir.dumps(w)
    assert wir.loads(text) == w
    lw = wir.cut(w, 3)
    assert wir.loads(wir.dumps(lw)) == lw


@pytest.mark.parametrize("text", [
    "", "wiring 3\n", "wiring 3 annular\nswap 0\n", "wiring 3 annular\ncross x\n",
    "wiring 3 spiral\ncross 0\n", "wiring 3 annular\ncross 5\n",
])
def test_wir_loads_malformed(text):
    with pytest.raises(MalformedInput):
        wir.loads(text)


def test_base_wirings_are_shipped_and_valid():
    for m, t in ((6, 8), (7, 10), (8, 11)):
        w = con.base_wiring(m)
        assert wir.validate_wiring(w).ok
        assert arr.cell_stats(wir.to_arrangement(w)).triangles == t
