"""Command line interface: ``pseudocircles <command> ...``.

Arrangements travel between commands as ``.arr`` text on stdin/stdout.
Exit codes: 0 success, 1 domain or input error, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import analysis as an
from . import arrangement as arr
from . import constructions as con
from . import enumeration as en
from . import wiring as wir
from .errors import DomainError, PseudocircleError
from .render import RenderOptions, render_svg

FAMILIES = ("krupp", "grunbaum-digons", "wheel", "base", "triangle-family", "prop1-family")


def _read(path: str | None) -> str:
    if path in (None, "-"):
        return sys.stdin.read()
    return Path(path).read_text()


def _load(path: str | None):
    """Either an Arrangement or an annular/linear wiring, by header."""
    text = _read(path)
    first = next((ln.split("#", 1)[0].split() for ln in text.splitlines()
                  if ln.split("#", 1)[0].strip()), [""])
    if first[0] == "wiring":
        return wir.loads(text)
    return arr.loads(text)


def _arrangement(obj) -> arr.Arrangement:
    return obj if isinstance(obj, arr.Arrangement) else wir.to_arrangement(obj)


def _wiring(obj):
    if isinstance(obj, arr.Arrangement):
        return wir.wiring_of(obj)[0]
    return obj


def _emit(obj, out: str | None) -> None:
    """Write ``obj`` to ``out`` (format by extension) or as ``.arr`` to stdout."""
    if out and out.endswith(".wir"):
        Path(out).write_text(wir.dumps(_wiring(obj)))
        return
    text = arr.dumps(_arrangement(obj))
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise DomainError(f"expected comma-separated integers, got {text!r}") from None


def cmd_build(args) -> None:
    fam, n = args.family, args.n
    if fam == "krupp":
        obj = con.krupp_wiring()
    elif n is None:
        raise DomainError(f"family {fam} needs --n")
    elif fam == "grunbaum-digons":
        obj = con.grunbaum_wiring(n)
    elif fam == "wheel":
        obj = con.wheel(n)
    elif fam == "base":
        obj = con.base_wiring(n)
    elif fam == "triangle-family":
        obj = con.triangle_family(n)
    else:
        obj = con.prop1_family(n)
    _emit(obj, args.out)


def cmd_stats(args) -> None:
    a = _arrangement(_load(args.file))
    sys.stdout.write(an.format_report(an.report(a), args.format))


def cmd_validate(args) -> int:
    obj = _load(args.file)
    if not isinstance(obj, arr.Arrangement):
        rep = wir.validate_wiring(obj)
        if rep.ok:
            rep = arr.validate(wir.to_arrangement(obj))
    else:
        rep = arr.validate(obj)
    for v in rep.violations:
        print(v, file=sys.stderr)
    print("valid" if rep.ok else "invalid")
    return 0 if rep.ok else 1


def cmd_contract(args) -> None:
    _emit(con.contract_digon(_arrangement(_load(args.file)), args.face), args.out)


def cmd_relax(args) -> None:
    _emit(con.relax_touching(_arrangement(_load(args.file)), args.touch, args.side), args.out)


def cmd_blossom(args) -> None:
    _emit(con.blossom(_arrangement(_load(args.file)), args.circle), args.out)


def cmd_replace(args) -> None:
    a = _arrangement(_load(args.file))
    if args.witness:
        faces = _ints(args.witness)
        if len(faces) != 4:
            raise DomainError("--witness needs four face ids")
        tri = {f: (e, s) for e, s, f in an.incident_triangles(a, args.circle)}
        if not all(f in tri for f in faces):
            raise DomainError("witness faces must be triangles on the circle")
        w = an.AlternationWitness(args.circle, tuple(faces), tuple(tri[f][1] for f in faces),
                                  tuple(tri[f][0] for f in faces))
    else:
        w = an.alternation_witness(a, args.circle)
        if w is None:
            raise DomainError(f"circle {args.circle} has no alternation witness")
    _emit(con.replace_circle(a, w), args.out)


def cmd_touching_graph(args) -> None:
    g = an.touching_graph(_arrangement(_load(args.file)))
    print(f"vertices={g.n}")
    print(f"edges={len(g.edges)}")
    for i, j in g.edges:
        print(f"edge {i} {j}")
    if args.check:
        checks = an.graph_checks(g)
        for name in args.check.split(","):
            name = name.strip()
            if name == "planar":
                print(f"planar={str(checks.planar).lower()}")
            elif name == "bipartite":
                print(f"bipartite={str(checks.bipartite).lower()}")
            elif name == "triangles":
                print(f"triangles={len(checks.triangles)}")
                for t in checks.triangles:
                    print("triangle " + " ".join(map(str, t)))
            else:
                raise DomainError(f"unknown check {name!r}")


def cmd_claims(args) -> None:
    obj = _load(args.file)
    if args.agarwal:
        w = _wiring(obj)
        lw = wir.cut(w, args.cut) if w.annular else w
        d = an.agarwal_drawing(lw)
        odd = sorted(k for k, v in d.parity.items() if v)
        print(f"edges={len(d.edges)}")
        print(f"independent_pairs={len(d.parity)}")
        print(f"odd_pairs={len(odd)}")
        print(f"all_even={str(d.all_even).lower()}")
        print(f"bipartite={str(d.bipartite).lower()}")
        for e, f in odd:
            print(f"odd {e[0]}-{e[1]} {f[0]}-{f[1]}")
        return
    if not args.triple:
        raise DomainError("claims needs --triple i,j,k or --agarwal")
    a = _arrangement(obj)
    rep = an.claim1_check(a, _ints(args.triple))
    arcs = an.pc_arc_types(a, _ints(args.triple))
    for c in sorted(arcs):
        print(f"arcs {c} " + " ".join(x.kind for x in arcs[c]))
    print(f"pairs_checked={rep.pairs_checked}")
    print(f"same_type_pairs={len(rep.same_type)}")
    print(f"violations={len(rep.violations)}")
    print(f"class_violations={len(rep.class_violations)}")
    print(f"ok={str(rep.ok).lower()}")


def cmd_enumerate(args) -> None:
    c = en.Constraints(digon_free=args.digon_free, allow_touch=args.allow_touch,
                       allow_n5=args.allow_n5, time_budget=args.time_budget)
    ws = en.enumerate_annular(args.n, c)
    if args.out:
        en.write_orbits(ws, Path(args.out))
    for k, v in en.extremal_stats(args.n, c, ws).rows():
        print(f"{k}={v}")


def cmd_render(args) -> None:
    svg = render_svg(_wiring(_load(args.file)), RenderOptions(shade=args.shade_triangles))
    if args.out:
        Path(args.out).write_text(svg)
    else:
        sys.stdout.write(svg)


def cmd_convert(args) -> None:
    _emit(_load(args.file), args.out)


def parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pseudocircles", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, file=True, out=False):
        sp = sub.add_parser(name)
        if file:
            sp.add_argument("file", nargs="?", help="input .arr/.wir (default: stdin)")
        if out:
            sp.add_argument("--out", help="output path; .wir or .arr by extension")
        sp.set_defaults(fn=fn)
        return sp

    sp = add("build", cmd_build, file=False, out=True)
    sp.add_argument("family", choices=FAMILIES)
    sp.add_argument("--n", type=int)
    sp = add("stats", cmd_stats)
    sp.add_argument("--format", choices=("text", "tsv"), default="text")
    add("validate", cmd_validate)
    add("contract", cmd_contract, out=True).add_argument("--face", type=int, required=True)
    sp = add("relax", cmd_relax, out=True)
    sp.add_argument("--touch", type=int, required=True)
    sp.add_argument("--side", choices=("in", "out"), default="in")
    add("blossom", cmd_blossom, out=True).add_argument("--circle", type=int, required=True)
    sp = add("replace", cmd_replace, out=True)
    sp.add_argument("--circle", type=int, required=True)
    sp.add_argument("--witness", help="four triangle face ids t1,t2,t3,t4")
    add("touching-graph", cmd_touching_graph).add_argument("--check")
    sp = add("claims", cmd_claims)
    sp.add_argument("--triple")
    sp.add_argument("--agarwal", action="store_true")
    sp.add_argument("--cut", type=int, default=0)
    sp = add("enumerate", cmd_enumerate, file=False)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--digon-free", action="store_true")
    sp.add_argument("--allow-touch", action="store_true")
    sp.add_argument("--allow-n5", action="store_true")
    sp.add_argument("--time-budget", type=float)
    sp.add_argument("--out")
    sp = add("render", cmd_render, out=True)
    sp.add_argument("--shade-triangles", action="store_true")
    add("convert", cmd_convert, out=True)
    return p


def run(argv=None) -> int:
    args = parser().parse_args(argv)
    try:
        code = args.fn(args)
    except PseudocircleError as exc:
        print(f"error: {exc.code}: {exc.detail}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: io: {exc}", file=sys.stderr)
        return 1
    return code or 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
