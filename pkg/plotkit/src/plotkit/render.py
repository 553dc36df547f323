"""Render exposure-lab CSV tables into figure-style images.

Three kinds of input are understood, all read-only:

* scan CSVs (two coordinate columns, then exposure,renyi,valid) become
  filled contour maps of the exposure, optionally overlaid with isocurves
  contoured from the entropy column — no physics is recomputed here;
* isocurve CSVs (delta,alpha2,exposure,renyi) become exposure-vs-delta
  line plots along the constant-entropy curve;
* time-series CSVs (t, then one column per curve) become line plots with
  the column names as legend entries.

Exposure maps with negative regions use a diverging color map centered at
zero.  The CLI is `render --kind contour|isocurve-slice|timeseries --in
data.csv --out image.png [--isocurves]`; exits 0 on success, 1 on schema
mismatches or unreadable input.
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np
from matplotlib.colors import TwoSlopeNorm


class SchemaError(Exception):
    """Input CSV does not match the expected table layout."""


@dataclass(frozen=True)
class PlotSpec:
    input_csv: str
    kind: str  # contour | timeseries | isocurve-slice
    overlay_isocurves: bool = False
    output_image: str = "out.png"


def read_table(path: str) -> tuple[list[str], list[list]]:
    """Header and rows; numeric cells become floats, empty cells None."""
    try:
        with open(path, newline="") as fh:
            reader = csv.reader(fh)
            try:
                header = next(reader)
            except StopIteration:
                raise SchemaError(f"{path}: empty file") from None
            rows = []
            for raw in reader:
                if not raw:
                    continue
                if len(raw) != len(header):
                    raise SchemaError(f"{path}: ragged row {raw!r}")
                parsed = []
                for cell in raw:
                    if cell == "":
                        parsed.append(None)
                    elif cell in ("true", "false"):
                        parsed.append(cell == "true")
                    else:
                        try:
                            parsed.append(float(cell))
                        except ValueError:
                            raise SchemaError(
                                f"{path}: non-numeric cell {cell!r}"
                            ) from None
                rows.append(parsed)
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from exc
    return header, rows


def _pivot(xs, ys, values):
    """Row-major scattered grid samples -> (x_axis, y_axis, value grid)."""
    x_axis = np.unique(xs)
    y_axis = np.unique(ys)
    grid = np.full((y_axis.size, x_axis.size), np.nan)
    xi = np.searchsorted(x_axis, xs)
    yi = np.searchsorted(y_axis, ys)
    for i, j, v in zip(yi, xi, values):
        grid[i, j] = np.nan if v is None else v
    return x_axis, y_axis, grid


def render_scan(spec: PlotSpec) -> dict:
    """Contour map of a scan CSV; returns a small summary of what was drawn."""
    header, rows = read_table(spec.input_csv)
    if len(header) != 5 or header[2:] != ["exposure", "renyi", "valid"]:
        raise SchemaError(
            f"{spec.input_csv}: expected <x>,<y>,exposure,renyi,valid, got {header}"
        )
    if not rows:
        raise SchemaError(f"{spec.input_csv}: no data rows")
    xs = np.array([r[0] for r in rows], dtype=float)
    ys = np.array([r[1] for r in rows], dtype=float)
    x_axis, y_axis, expo = _pivot(xs, ys, [r[2] for r in rows])
    _, _, entr = _pivot(xs, ys, [r[3] for r in rows])

    finite = expo[np.isfinite(expo)]
    if finite.size == 0:
        raise SchemaError(f"{spec.input_csv}: no valid grid points")
    scale = max(float(np.abs(finite).max()), 1e-30)
    diverging = bool(finite.min() < -1e-9 * scale and finite.max() > 0.0)

    fig, ax = plt.subplots(figsize=(6.0, 4.8))
    if diverging:
        bound = max(abs(finite.min()), abs(finite.max()))
        norm = TwoSlopeNorm(vmin=-bound, vcenter=0.0, vmax=bound)
        filled = ax.contourf(x_axis, y_axis, expo, levels=31, cmap="RdBu_r", norm=norm)
    else:
        filled = ax.contourf(x_axis, y_axis, expo, levels=31, cmap="viridis")
    fig.colorbar(filled, ax=ax, label="exposure")
    if spec.overlay_isocurves:
        iso = ax.contour(
            x_axis, y_axis, entr, levels=8, colors="black", linewidths=0.8
        )
        ax.clabel(iso, fontsize=7, fmt="%.2f")
    ax.set_xlabel(header[0])
    ax.set_ylabel(header[1])
    fig.tight_layout()
    fig.savefig(spec.output_image, dpi=150)
    plt.close(fig)
    return {
        "image": spec.output_image,
        "points": len(rows),
        "diverging": diverging,
        "isocurves": spec.overlay_isocurves,
    }


def render_isocurve_slice(spec: PlotSpec) -> dict:
    """Exposure along a constant-entropy curve, as a function of delta."""
    header, rows = read_table(spec.input_csv)
    if header != ["delta", "alpha2", "exposure", "renyi"]:
        raise SchemaError(
            f"{spec.input_csv}: expected delta,alpha2,exposure,renyi, got {header}"
        )
    if not rows:
        raise SchemaError(f"{spec.input_csv}: no data rows")
    deltas = [r[0] for r in rows]
    expo = [r[2] for r in rows]
    level = rows[0][3]
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    ax.plot(deltas, expo, lw=1.5)
    ax.set_xlabel("delta")
    ax.set_ylabel("exposure")
    ax.set_title(f"exposure along H = {level:.4f}")
    fig.tight_layout()
    fig.savefig(spec.output_image, dpi=150)
    plt.close(fig)
    return {"image": spec.output_image, "points": len(rows)}


def render_timeseries(spec: PlotSpec) -> dict:
    """One line per value column against the leading t column."""
    header, rows = read_table(spec.input_csv)
    if len(header) < 2 or header[0] != "t":
        raise SchemaError(
            f"{spec.input_csv}: expected a leading t column, got {header}"
        )
    if not rows:
        raise SchemaError(f"{spec.input_csv}: no data rows")
    t = [r[0] for r in rows]
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    n_series = 0
    for k, name in enumerate(header[1:], start=1):
        ys = [r[k] for r in rows]
        if any(v is None for v in ys):
            continue
        ax.plot(t, ys, lw=1.2, label=name)
        n_series += 1
    if n_series == 0:
        raise SchemaError(f"{spec.input_csv}: no plottable value columns")
    ax.set_xlabel("t")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(spec.output_image, dpi=150)
    plt.close(fig)
    return {"image": spec.output_image, "points": len(rows), "series": n_series}


KINDS = {
    "contour": render_scan,
    "isocurve-slice": render_isocurve_slice,
    "timeseries": render_timeseries,
}


def run(argv) -> int:
    parser = argparse.ArgumentParser(prog="render", description=__doc__)
    parser.add_argument("--kind", choices=sorted(KINDS), required=True)
    parser.add_argument("--in", dest="input_csv", required=True)
    parser.add_argument("--out", dest="output_image", required=True)
    parser.add_argument("--isocurves", action="store_true")
    try:
        args = parser.parse_args(argv)
    except SystemExit:
        return 1
    spec = PlotSpec(
        input_csv=args.input_csv,
        kind=args.kind,
        overlay_isocurves=args.isocurves,
        output_image=args.output_image,
    )
    try:
        summary = KINDS[args.kind](spec)
    except SchemaError as exc:
        print(f"render: {exc}", file=sys.stderr)
        return 1
    print(f"render: {args.kind} -> {summary['image']}")
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
