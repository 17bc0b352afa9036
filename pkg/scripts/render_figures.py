"""Render the shipped base arrangements and the Krupp wiring as shaded SVGs.

    python scripts/render_figures.py --out figures/
"""

import argparse
from pathlib import Path

from pseudocircles import constructions as con
from pseudocircles.render import RenderOptions, render_svg


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--out", type=Path, required=True)
    args = p.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    opts = RenderOptions(shade=True)
    items = {"krupp": con.krupp_wiring(), "grunbaum6": con.grunbaum_wiring(6)}
    items.update({f"A{m}": con.base_wiring(m) for m in (6, 7, 8)})
    for name, w in items.items():
        (args.out / f"{name}.svg").write_text(render_svg(w, opts))
        print(f"{name}.svg")


if __name__ == "__main__":
    main()
