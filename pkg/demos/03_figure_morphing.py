"""
|Y_2^1|^2 as alpha goes from 0.1 to 1
=====================================

Generate the surface and polar data for the density of Y_2^1 and draw the
alpha sweep. At alpha = 1 it is the familiar four-lobe density; for smaller
alpha the lobes shrink and the surface no longer closes in phi.

Needs matplotlib for the figures; the data files come from the library alone.
"""
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

from conformable_harmonics.plotdata import make_plot_grid, output_name, write_csv

out = Path(sys.argv[1] if len(sys.argv) > 1 else "figure_data")
out.mkdir(exist_ok=True)

alphas = [Fraction(k, 10) for k in range(1, 11)]
polar = {a: make_plot_grid(2, 1, a, "polar", (361, 1)) for a in alphas}
surface = {a: make_plot_grid(2, 1, a, "surface", (61, 121)) for a in alphas}
for g in list(polar.values()) + list(surface.values()):
    write_csv(g, out / output_name(g, "csv"))

for a, g in polar.items():
    print(f"alpha={str(a):>5}: peak density {g.points[:, 1].max():.6f}")
print(f"classical peak 15/(32 pi) = {15 / (32 * np.pi):.6f}")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    sys.exit(0)

fig, axes = plt.subplots(2, 5, subplot_kw={"projection": "polar"}, figsize=(15, 6))
for ax, (a, g) in zip(axes.ravel(), polar.items()):
    v = g.points[:, 0] ** float(a)
    ax.plot(v, g.points[:, 1])
    ax.plot(-v, g.points[:, 1], color="C0")
    ax.set_theta_zero_location("N")
    ax.set_title(f"alpha = {a}")
fig.tight_layout()
fig.savefig(out / "polar_sweep.png", dpi=120)

fig = plt.figure(figsize=(15, 6))
for i, (a, g) in enumerate(surface.items()):
    ax = fig.add_subplot(2, 5, i + 1, projection="3d")
    n_t, n_p = g.grid
    x, y, z = (g.points[:, k].reshape(n_t, n_p) for k in (3, 4, 5))
    ax.plot_surface(x, y, z, cmap="viridis", linewidth=0)
    ax.set_title(f"alpha = {a}")
    ax.set_axis_off()
fig.tight_layout()
fig.savefig(out / "surface_sweep.png", dpi=120)
print("figures written to", out)
