"""Search for the digon-free cylindrical base arrangements A7 and A8.

A new circle is threaded into a digon-free base along a closed path in the
dual graph that visits distinct faces and crosses every old circle exactly
twice.  A visited face with ``k`` corners whose entry and exit edges are
``g`` steps apart splits into parts with ``g + 2`` and ``k - g + 2`` corners,
so no digon appears and the triangle count of the result is tracked
incrementally during a depth-first search.

    python scripts/search_base_family.py            # A7 from A6, then A8 from A7
    python scripts/search_base_family.py --write    # also store the .wir resources
"""

from __future__ import annotations

import argparse
from pathlib import Path

from pseudocircles import wiring as wir
from pseudocircles.analysis import alternation_witness
from pseudocircles.arrangement import Arrangement, cell_stats, is_cylindrical
from pseudocircles.constructions import insert_circle, krupp, replace_circle

DATA = Path(__file__).resolve().parents[1] / "src" / "pseudocircles" / "data"


def dual_cycles(a: Arrangement, slack: int):
    """Insertion paths whose triangle change is at most ``slack``."""
    faces = a.faces
    where = {d: (f, i) for f, w in enumerate(faces) for i, d in enumerate(w)}
    tri = [len(w) == 3 and a.face_crossings(f) == 3 for f, w in enumerate(faces)]
    m = 2 * a.n

    def split(f, i, j):
        k = len(faces[f])
        g = (j - i) % k
        return (g == 1) + (k - g == 1) - tri[f]

    for e1 in range(a.num_darts):
        last = a.dart_face[a.dart_reversal[e1]]
        f1, i1 = where[e1]
        count = [0] * a.n
        count[a.dart_circle[e1]] = 1
        path = [e1]
        seen = {f1, last}

        def rec(f, i, delta):
            if delta - (m - len(path)) > slack:
                return
            for j, r in enumerate(faces[f]):
                if j == i:
                    continue
                e = a.dart_reversal[r]
                c = a.dart_circle[e]
                if count[c] == 2:
                    continue
                g, gi = where[e]
                d = delta + split(f, i, j)
                if len(path) + 1 == m:
                    if g == last:
                        d += split(g, gi, where[a.dart_reversal[e1]][1])
                        if d <= slack:
                            yield path + [e], d
                    continue
                if g in seen:
                    continue
                count[c] += 1
                seen.add(g)
                path.append(e)
                yield from rec(g, gi, d)
                path.pop()
                seen.discard(g)
                count[c] -= 1

        if f1 != last:
            yield from rec(f1, i1, 0)


def extend(a: Arrangement, target: int) -> Arrangement:
    base = cell_stats(a).triangles
    for path, delta in dual_cycles(a, target - base):
        b = insert_circle(a, path)
        st = cell_stats(b)
        if st.triangles != base + delta:
            raise AssertionError("incremental triangle count disagrees with the census")
        if st.triangles == target and is_cylindrical(b) and all(
                alternation_witness(b, c) for c in range(b.n)):
            return b
    raise SystemExit(f"no extension with {target} triangles")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--write", action="store_true", help="write A6/A7/A8 .wir files")
    args = ap.parse_args()
    k = krupp()
    a6 = replace_circle(k, alternation_witness(k, 0))
    a7 = extend(a6, 10)
    a8 = extend(a7, 11)
    for name, arr in (("A6", a6), ("A7", a7), ("A8", a8)):
        w, _ = wir.wiring_of(arr)
        text = wir.dumps(w)
        print(f"# {name}: n={arr.n} triangles={cell_stats(arr).triangles}\n{text}", end="")
        if args.write:
            (DATA / f"{name}.wir").write_text(text)


if __name__ == "__main__":
    main()
