"""Search for the four-circle replacement gadget.

A circle C is replaced by four wires running in a thin annulus around it.
The wires cross each other only inside four chosen edges of C (the witness
edges); every other circle still crosses the annulus as a straight strand.
This script enumerates 4-wire annular words with each pair crossing twice,
splits them over four edges, and keeps splits whose cells inside the
annulus contain exactly 8 triangles and no digons, with both boundary
slots used in every edge (so triangles of C on either side are destroyed).

The first hit is printed; it is the table hardcoded in
``pseudocircles.constructions.GADGET``.

    python scripts/search_gadget.py [--all]
"""

from __future__ import annotations

import argparse
from itertools import combinations

N = 4


def words():
    """All 12-letter swap words on 4 wires, every pair swapping exactly twice."""
    out = []

    def rec(word, pos, counts):
        if len(word) == 12:
            if pos == list(range(N)):
                out.append(tuple(word))
            return
        for s in range(N - 1):
            pair = frozenset((pos[s], pos[s + 1]))
            if counts.get(pair, 0) >= 2:
                continue
            counts[pair] = counts.get(pair, 0) + 1
            pos[s], pos[s + 1] = pos[s + 1], pos[s]
            word.append(s)
            rec(word, pos, counts)
            word.pop()
            pos[s], pos[s + 1] = pos[s + 1], pos[s]
            counts[pair] -= 1

    rec([], list(range(N)), {})
    return out


def interval_cells(block):
    """Corner counts of the cells between wires inside one walled edge."""
    sizes = []
    for p in range(N - 1):
        own = [i for i, s in enumerate(block) if s == p]
        adj = lambda a, b: sum(1 for s in block[a + 1:b] if s in (p - 1, p + 1))  # noqa: E731
        if not own:
            sizes.append(4 + adj(-1, len(block)))
            continue
        sizes.append(3 + adj(-1, own[0]))
        sizes += [2 + adj(a, b) for a, b in zip(own, own[1:])]
        sizes.append(3 + adj(own[-1], len(block)))
    return sizes


def good(blocks):
    if any(0 not in b or N - 2 not in b for b in blocks):
        return False
    sizes = [k for b in blocks for k in interval_cells(b)]
    return 2 not in sizes and sizes.count(3) == 8


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--all", action="store_true", help="print every hit")
    args = ap.parse_args()
    hits = 0
    for w in words():
        for cuts in combinations(range(1, 12), 3):
            b = (0, *cuts, 12)
            blocks = [w[b[i]:b[i + 1]] for i in range(4)]
            if good(blocks):
                hits += 1
                print(" | ".join(" ".join(map(str, blk)) for blk in blocks))
                if not args.all:
                    return
    print(f"{hits} hits")


if __name__ == "__main__":
    main()
