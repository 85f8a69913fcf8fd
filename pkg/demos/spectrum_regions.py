#!/usr/bin/env python3
"""Scan a rational grid, draw the chosen spectrum, and report components.

The map marks spectrum points with '#'. Every other point belongs to a
connected component of the complement; those are drawn with the component
id (mod 10). The report below the map lists each component with its
constant index.

Example:
    python3 demos/spectrum_regions.py
    python3 demos/spectrum_regions.py --name right_right_left --set pbw
"""
import argparse
import sys

from fredprofile import (
    CATALOG,
    GridSpec,
    SPECTRUM_NAMES,
    by_name,
    component_index_report,
    parse_rational,
    scan,
    spectrum_membership,
)
from fredprofile.spectra import grouped_cells


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--name", default="right_shift", choices=[e.name for e in CATALOG])
    ap.add_argument(
        "--grid",
        default="-2,2,-2,2,21,21",
        metavar="RE0,RE1,IM0,IM1,NR,NI",
    )
    ap.add_argument("--set", dest="set_name", default="pbf", choices=SPECTRUM_NAMES)
    args = ap.parse_args()

    entry = by_name(args.name)
    if entry.power != 1:
        print("grid scans use the operator itself, not a power", file=sys.stderr)
        return 1
    parts = args.grid.split(",")
    grid = GridSpec(*(parse_rational(t) for t in parts[:4]), int(parts[4]), int(parts[5]))

    s = scan(entry.expr, grid)
    mask = [not spectrum_membership(rec, args.set_name) for rec in s.records]
    keys = [rec.summary.index.to_str() for rec in s.records]
    comps = grouped_cells(mask, keys, grid.re_steps, grid.im_steps)
    owner = {}
    for cid, cells in enumerate(comps):
        for c in cells:
            owner[c] = cid

    print(f"operator {entry.name}, spectrum sigma_{args.set_name}, "
          f"{grid.re_steps}x{grid.im_steps} points on "
          f"[{grid.re_min},{grid.re_max}]x[{grid.im_min},{grid.im_max}]")
    print()
    # top row = largest imaginary part
    for i in reversed(range(grid.im_steps)):
        cells = []
        for j in range(grid.re_steps):
            n = i * grid.re_steps + j
            cells.append(str(owner[n] % 10) if mask[n] else "#")
        print("   " + " ".join(cells))
    print()
    rep = component_index_report(s, args.set_name)
    in_spectrum = sum(1 for m in mask if not m)
    print(f"{in_spectrum} of {len(mask)} points lie in sigma_{args.set_name}")
    for c in rep.components:
        print(f"  component {c.id}: index {c.index}, {c.point_count} points, "
              f"first at ({c.first_point[0]}, {c.first_point[1]})")
    return 0


if __name__ == "__main__":
    sys.exit(main())
