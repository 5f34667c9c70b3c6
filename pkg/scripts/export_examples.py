"""Write position, frame and Smarandache tables for the five worked examples.

Usage: python3 scripts/export_examples.py [OUTDIR] [--nodes N]
"""

import argparse
from pathlib import Path

import numpy as np

from pgcurve.curves import frenet_frame
from pgcurve.fixtures import EXAMPLES
from pgcurve.io import to_csv
from pgcurve.smarandache import SmarandacheKind, smarandache_point

FRAME_COLS = ["s", "x", "y", "z", "kappa", "tau", "e1x", "e1y", "e1z", "e2x", "e2y", "e2z",
              "e3x", "e3y", "e3z", "epsilon"]


def export(outdir: Path, nodes: int) -> list[Path]:
    outdir.mkdir(parents=True, exist_ok=True)
    written = []
    for fx in EXAMPLES.values():
        grid = np.linspace(*fx.interval, nodes)
        frames = [frenet_frame(fx.curve, u) for u in grid]
        rows = [[u, *fx.curve.position(u), f.kappa, f.tau, *f.e1, *f.e2, *f.e3, f.epsilon]
                for u, f in zip(grid, frames)]
        path = outdir / f"example{fx.id}_frenet.csv"
        path.write_text(to_csv(FRAME_COLS, rows))
        written.append(path)
        for kind in SmarandacheKind:
            rows = [[u, *smarandache_point(f, kind)] for u, f in zip(grid, frames)]
            path = outdir / f"example{fx.id}_{kind.value}.csv"
            path.write_text(to_csv(["s", "x", "y", "z"], rows))
            written.append(path)
    return written


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("outdir", nargs="?", default="example_tables", type=Path)
    ap.add_argument("--nodes", type=int, default=201)
    args = ap.parse_args()
    for path in export(args.outdir, args.nodes):
        print(path)


if __name__ == "__main__":
    main()
