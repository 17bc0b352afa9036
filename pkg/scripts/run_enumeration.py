"""Enumerate small annular wirings and write orbits plus extremal tables.

    python scripts/run_enumeration.py --out runs/enum [--n 2 3 4] [--n5-budget 600]
"""

from __future__ import annotations

import argparse
import logging
import time
from pathlib import Path

from pseudocircles import enumeration as en

log = logging.getLogger("run_enumeration")


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--out", type=Path, required=True)
    p.add_argument("--n", type=int, nargs="+", default=[2, 3, 4])
    p.add_argument("--n5-budget", type=float, default=None,
                   help="seconds; enables n = 5 when given")
    args = p.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(message)s")

    ns = list(args.n) + ([5] if args.n5_budget and 5 not in args.n else [])
    rows = ["n\tconstraints\tkey\tvalue"]
    for n in ns:
        for name, c in (("touch", en.Constraints()),
                        ("no_touch", en.Constraints(allow_touch=False)),
                        ("digon_free", en.Constraints(digon_free=True, allow_touch=False))):
            c = en.Constraints(c.digon_free, c.allow_touch, allow_n5=n == 5, time_budget=args.n5_budget)
            t0 = time.monotonic()
            ws = en.enumerate_annular(n, c)
            en.write_orbits(ws, args.out / f"n{n}_{name}")
            ex = en.extremal_stats(n, c, ws)
            rows += [f"{n}\t{name}\t{k}\t{v}" for k, v in ex.rows()]
            log.info("n=%d %-10s orbits=%d (%.1fs)", n, name, ex.orbits, time.monotonic() - t0)
    (args.out / "extremal.tsv").write_text("\n".join(rows) + "\n")


if __name__ == "__main__":
    main()
