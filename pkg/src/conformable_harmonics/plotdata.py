"""Sampled |Y|^2 grids for surface and polar figures, with CSV/JSON writers."""
from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import numpy as np

from .alpha_calculus import as_alpha
from .harmonics import AngularPoint, density, make_harmonic, theta_max

__all__ = [
    "PlotGrid",
    "DEFAULT_GRID",
    "make_plot_grid",
    "write_csv",
    "write_json",
    "read_json",
    "output_name",
]

DEFAULT_GRID = (121, 241)
SURFACE_COLUMNS = ("theta", "phi", "density", "x", "y", "z")
POLAR_COLUMNS = ("theta", "density")


@dataclass(frozen=True)
class PlotGrid:
    l: int
    m: int
    alpha: Fraction
    mode: str
    grid: tuple[int, int]
    points: np.ndarray  # one row per record, columns as in ``columns``

    @property
    def columns(self) -> tuple[str, ...]:
        return SURFACE_COLUMNS if self.mode == "surface" else POLAR_COLUMNS


def make_plot_grid(l: int, m: int, alpha, mode: str = "surface", grid=DEFAULT_GRID) -> PlotGrid:
    """Sample the density of Y_l^m on a grid regular in (theta^a, phi^a).

    Spacing is uniform in the deformed angles; a grid uniform in theta itself
    would leave theta^a < 1.7 unsampled at alpha = 0.1. Surface records carry the point ``density * r_hat`` where ``r_hat`` uses
    the deformed angles (theta^a, phi^a); at alpha = 1 this is the usual
    spherical-harmonic surface. Polar mode samples theta alone at phi = 0.
    """
    alpha = as_alpha(alpha)
    Y = make_harmonic(l, m, alpha)
    n_theta, n_phi = grid
    a = float(alpha)
    theta = np.linspace(0.0, math.pi, n_theta) ** (1.0 / a)
    theta[-1] = theta_max(alpha)
    if mode == "polar":
        d = density(Y, AngularPoint(theta, np.zeros_like(theta)))
        return PlotGrid(l, m, alpha, mode, (n_theta, 1), np.column_stack([theta, d]))
    if mode != "surface":
        raise ValueError(f"unknown plot mode {mode!r}")
    phi = np.linspace(0.0, (2.0 * math.pi) ** a, n_phi) ** (1.0 / a)
    phi[-1] = 2.0 * math.pi
    T, P = np.meshgrid(theta, phi, indexing="ij")
    d = density(Y, AngularPoint(T, P))
    v, w = T**a, P**a
    x = d * np.sin(v) * np.cos(w)
    y = d * np.sin(v) * np.sin(w)
    z = d * np.cos(v)
    pts = np.column_stack([c.ravel() for c in (T, P, d, x, y, z)])
    return PlotGrid(l, m, alpha, mode, (n_theta, n_phi), pts)


def _alpha_str(alpha: Fraction) -> str:
    return f"{alpha.numerator}/{alpha.denominator}"


def output_name(g: PlotGrid, fmt: str) -> str:
    return f"Y_l{g.l}_m{g.m}_alpha_{g.alpha.numerator}-{g.alpha.denominator}_{g.mode}.{fmt}"


def write_csv(g: PlotGrid, path) -> Path:
    path = Path(path)
    with path.open("w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(g.columns)
        for row in g.points:
            w.writerow([f"{v:.12g}" for v in row])
    return path


def write_json(g: PlotGrid, path) -> Path:
    path = Path(path)
    doc = {
        "meta": {"l": g.l, "m": g.m, "alpha": _alpha_str(g.alpha), "mode": g.mode,
                 "grid": list(g.grid)},
        "points": g.points.tolist(),
    }
    path.write_text(json.dumps(doc), encoding="utf-8")
    return path


def read_json(path) -> PlotGrid:
    doc = json.loads(Path(path).read_text(encoding="utf-8"))
    meta = doc["meta"]
    return PlotGrid(meta["l"], meta["m"], Fraction(meta["alpha"]), meta["mode"],
                    tuple(meta["grid"]), np.asarray(doc["points"], dtype=float))
