"""How each knob moves the coherence: coupling, ring gap, ring size.

Three panels over the same temperature grid.  Each family has a closed
limiting curve: gamma -> infinity leaves the magnetization tanh,
omega_a -> infinity saturates it, and growing n pushes the plateau
toward 1.  The exact curves approach those limits from below.
"""

import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from isingcoh import ModelParams, coherence, gamma_infinity_limit, omega_a_infinity_limit, sweep

OUT = pathlib.Path(__file__).resolve().parent


def main():
    grid = np.geomspace(1e-2, 1e3, 200)
    fig, axes = plt.subplots(1, 3, figsize=(12.0, 3.6), sharey=True)

    base = ModelParams(omega0=10.0, omega_a=2.0, gamma=1.0, j=4.0, n=6)
    for gamma in (1.0, 2.0, 3.0, 6.0):
        out = sweep(base, "t", grid) if gamma == base.gamma else None
        cs = ([pt.coherence for pt in out.points] if out else
              [coherence(ModelParams(10.0, 2.0, gamma, 4.0, 6), t) for t in grid])
        axes[0].semilogx(grid, cs, label=f"gamma = {gamma:g}")
    axes[0].semilogx(grid, [gamma_infinity_limit(base, t) for t in grid],
                     color="k", ls=":", label="gamma limit")
    axes[0].set_title("target-ring coupling")
    axes[0].set_ylabel("coherence")

    base = ModelParams(omega0=10.0, omega_a=1.0, gamma=3.0, j=4.0, n=7)
    for omega_a in (1.0, 2.0, 4.0, 8.0):
        cs = [coherence(ModelParams(10.0, omega_a, 3.0, 4.0, 7), t) for t in grid]
        axes[1].semilogx(grid, cs, label=f"omega_a = {omega_a:g}")
    axes[1].semilogx(grid, [omega_a_infinity_limit(base, t) for t in grid],
                     color="k", ls=":", label="omega_a limit")
    axes[1].set_title("ring-spin gap")

    for n in (2, 4, 8, 16):
        cs = [coherence(ModelParams(10.0, 2.0, 3.0, 4.0, n), t) for t in grid]
        axes[2].semilogx(grid, cs, label=f"n = {n}")
    axes[2].set_title("ring size")

    for ax in axes:
        ax.set_xlabel("temperature")
        ax.legend(frameon=False, fontsize=8)
    fig.tight_layout()
    fig.savefig(OUT / "parameter_effects.png", dpi=150)
    print(f"wrote {OUT / 'parameter_effects.png'}")

    # saturation trend with ring size at a fixed warm temperature
    trend = [coherence(ModelParams(10.0, 2.0, 3.0, 4.0, n), 2.0)
             for n in range(4, 25, 4)]
    print("coherence at t = 2 for n = 4, 8, ..., 24:")
    print("  " + ", ".join(f"{c:.4f}" for c in trend))


if __name__ == "__main__":
    main()
