"""Command line interface.

    normalgallery check  <gallery> [--sites ...] [--oracle-fallback] [--svg out.svg]
    normalgallery render <gallery> <gallery|views|decomposition|sinks|witness> [...]
    normalgallery suffice <gallery>
    normalgallery fixtures

<gallery> is either a built-in fixture name or a path to a gallery file.
Exit codes: 0 normal, 1 not normal, 2 error or inconclusive.
"""

from __future__ import annotations

import argparse
import random
import sys
from fractions import Fraction
from pathlib import Path
from typing import List, Optional

from . import fixtures as fixture_lib
from .decomposition import GuardSiteSet, build_decomposition, dual_graph_and_sinks
from .galleryfile import GalleryFile, GalleryFormatError, parse_gallery
from .geometry import Point, frac
from .normality import (NORMAL, NOT_NORMAL, check_normal_wrt, minimal_witness,
                        sufficient_conditions)
from .polygon import PolygonError
from .svgrender import render_decomposition, render_gallery, render_view
from .visibility import visibility_polygon


def _fmt(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def _fmt_point(p: Point) -> str:
    return f"{_fmt(p.x)},{_fmt(p.y)}"


def _load(arg: str, seed: Optional[int] = None) -> GalleryFile:
    if arg in fixture_lib.FIXTURES:
        fx = fixture_lib.get(arg)
        return GalleryFile(fx.polygon, dict(fx.sites))
    generated = _generate(arg, seed)
    if generated is not None:
        return generated
    path = Path(arg)
    if not path.exists():
        raise GalleryFormatError(f"no fixture, generator or file named {arg!r}")
    return parse_gallery(path.read_text(encoding="utf-8"))


def _generate(arg: str, seed: Optional[int]) -> Optional[GalleryFile]:
    """Generator names: random-simple[-N], random-star[-N],
    random-lowreflex[-N], spiral-T."""
    parts = arg.split("-")
    rng = random.Random(seed if seed is not None else 0)
    if parts[0] == "spiral" and len(parts) == 2 and parts[1].isdigit():
        return GalleryFile(fixture_lib.spiral_gallery(int(parts[1])), {})
    if parts[0] != "random" or len(parts) not in (2, 3):
        return None
    n = int(parts[2]) if len(parts) == 3 and parts[2].isdigit() else rng.randint(6, 12)
    kind = parts[1]
    if kind == "simple":
        poly = fixture_lib.random_simple_polygon(rng, n)
    elif kind == "star":
        poly = fixture_lib.random_star_polygon(rng, n)
    elif kind == "lowreflex":
        poly = fixture_lib.random_low_reflex_polygon(rng, n)
    else:
        return None
    return GalleryFile(poly, {})


def _select_sites(gallery: GalleryFile, selector: str) -> GuardSiteSet:
    poly = gallery.polygon
    if selector == "corners":
        return GuardSiteSet.from_corners(poly)
    if selector == "all":
        return GuardSiteSet.build(poly, list(gallery.sites.items()))
    chosen = []
    for name in selector.split(","):
        name = name.strip()
        if name not in gallery.sites:
            raise GalleryFormatError(f"unknown site {name!r}")
        chosen.append((name, gallery.sites[name]))
    return GuardSiteSet.build(poly, chosen)


def _site_point(gallery: GalleryFile, selector: str) -> Point:
    if selector in gallery.sites:
        return gallery.sites[selector]
    try:
        x, y = selector.split(",")
        return Point(frac(x.strip()), frac(y.strip()))
    except (ValueError, TypeError):
        raise GalleryFormatError(f"--site expects a site name or x,y; got {selector!r}")


def cmd_check(args) -> int:
    gallery = _load(args.gallery, args.seed)
    sites = _select_sites(gallery, args.sites)
    report = check_normal_wrt(gallery.polygon, sites,
                              oracle_fallback=args.oracle_fallback,
                              grid_k=args.grid)
    if report.verdict == NORMAL:
        print(f"{args.gallery}: NORMAL with respect to {len(sites)} site(s)")
    elif report.verdict == NOT_NORMAL:
        witness = minimal_witness(gallery.polygon, sites, report) or report.witness
        print(f"{args.gallery}: NOT NORMAL")
        print(f"  witness sites: {', '.join(witness.names)}")
        print(f"  uncovered point: ({_fmt_point(witness.uncovered_point)})")
        report.witness = witness
    else:
        print(f"{args.gallery}: inconclusive (degenerate input)")
        for note in report.notes:
            print(f"  {note}")
    print(f"verdict={report.verdict}")
    print(f"regions={report.regions}")
    print(f"sinks={report.sinks}")
    print(f"sinks_checked={report.checked}")
    if report.witness is not None:
        print(f"witness={','.join(report.witness.names)}")
        print(f"uncovered={_fmt_point(report.witness.uncovered_point)}")
        print(f"witness_on_walls={'yes' if report.witness.all_on_boundary else 'no'}")
    for note in report.notes:
        print(f"note={note}")
    if args.svg and report.decomposition is not None:
        dual = report.dual
        svg = render_decomposition(report.decomposition,
                                   sinks=dual.sinks if dual else None,
                                   witness=report)
        Path(args.svg).write_text(svg, encoding="utf-8")
        print(f"svg={args.svg}")
    if report.verdict == NORMAL:
        return 0
    if report.verdict == NOT_NORMAL:
        return 1
    return 2


def cmd_render(args) -> int:
    gallery = _load(args.gallery, args.seed)
    poly = gallery.polygon
    what = args.what
    if what == "gallery":
        sites = _select_sites(gallery, args.sites) if gallery.sites else None
        svg = render_gallery(poly, sites)
    elif what == "views":
        if not args.site:
            print("render views needs --site", file=sys.stderr)
            return 2
        view = visibility_polygon(poly, _site_point(gallery, args.site))
        svg = render_view(poly, view)
    elif what in ("decomposition", "sinks", "witness"):
        sites = _select_sites(gallery, args.sites)
        if what == "witness":
            report = check_normal_wrt(poly, sites, oracle_fallback=args.oracle_fallback)
            if report.verdict != NOT_NORMAL or report.decomposition is None:
                print("no witness to draw: verdict is " + report.verdict, file=sys.stderr)
                return 2
            svg = render_decomposition(report.decomposition, sinks=report.dual.sinks,
                                       witness=report)
        else:
            dec = build_decomposition(poly, sites)
            dual = dual_graph_and_sinks(dec)
            svg = render_decomposition(dec, sinks=dual.sinks if what == "sinks" else None)
    else:  # pragma: no cover - argparse restricts choices
        return 2
    out = args.svg or f"{Path(args.gallery).stem}_{what}.svg"
    Path(out).write_text(svg, encoding="utf-8")
    print(f"svg={out}")
    return 0


def cmd_suffice(args) -> int:
    gallery = _load(args.gallery, args.seed)
    flags = sufficient_conditions(gallery.polygon)
    for key in ("reflex_le_2", "star", "convex_cover", "implies_normal"):
        print(f"{key}={'yes' if flags[key] else 'no'}")
    if flags["implies_normal"]:
        print(f"{args.gallery}: NORMAL (unconditionally, by a sufficient condition)")
    else:
        print(f"{args.gallery}: inconclusive by the sufficient tests")
    return 0


def cmd_fixtures(_args) -> int:
    for name in sorted(fixture_lib.FIXTURES):
        fx = fixture_lib.get(name)
        print(f"{name}: {fx.polygon.n} corners, sites: {', '.join(fx.sites) or '-'}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="normalgallery",
        description="Decide whether guards covering a gallery's walls "
                    "necessarily cover its interior.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="decide normality w.r.t. a site set")
    p_check.add_argument("gallery")
    p_check.add_argument("--sites", default="all",
                         help="corners | all | comma-separated site names")
    p_check.add_argument("--oracle-fallback", action="store_true",
                         help="fall back to brute force on degenerate input")
    p_check.add_argument("--grid", type=int, default=48,
                         help="grid resolution for the brute-force fallback")
    p_check.add_argument("--seed", type=int,
                         help="seed for generated galleries (random-*, spiral-T)")
    p_check.add_argument("--svg", help="write a decomposition drawing")
    p_check.set_defaults(func=cmd_check)

    p_render = sub.add_parser("render", help="draw a gallery or decomposition")
    p_render.add_argument("gallery")
    p_render.add_argument("what", choices=["gallery", "views", "decomposition",
                                           "sinks", "witness"])
    p_render.add_argument("--sites", default="all")
    p_render.add_argument("--site", help="site name or x,y for views")
    p_render.add_argument("--oracle-fallback", action="store_true")
    p_render.add_argument("--seed", type=int)
    p_render.add_argument("--svg", help="output path")
    p_render.set_defaults(func=cmd_render)

    p_suffice = sub.add_parser("suffice", help="run the sufficient conditions")
    p_suffice.add_argument("gallery")
    p_suffice.add_argument("--seed", type=int)
    p_suffice.set_defaults(func=cmd_suffice)

    p_fixtures = sub.add_parser("fixtures", help="list built-in galleries")
    p_fixtures.set_defaults(func=cmd_fixtures)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GalleryFormatError, PolygonError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:  # pragma: no cover - console script shim
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
