"""Ground-state crossing between aligned and antialigned ring order.

Sweeping the Ising coupling at fixed omega_a locates the level crossing;
on the antialigned side of an even ring the cold target goes completely
dark, so the zero-temperature coherence jumps at the transition.  The
closed-form crossing line transition_j() is overlaid on a brute
(j, omega_a) classification grid to show they agree.
"""

import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from isingcoh import ModelParams, c0_ground, phase_classify, sweep, transition_j

OUT = pathlib.Path(__file__).resolve().parent
LABEL_COLORS = {"ferromagnetic": "tab:orange",
                "antiferromagnetic": "tab:blue",
                "critical": "k"}


def main():
    base = ModelParams(omega0=20.0, omega_a=12.0, gamma=3.0, j=0.0, n=8)
    j_pt = transition_j(base)
    print(f"crossing at j = {j_pt:.6f} for omega_a = 12, gamma = 3, n = 8")

    fig, (left, right) = plt.subplots(1, 2, figsize=(10.0, 4.0))

    # left: classification grid with the closed-form line
    j_values = np.linspace(-10.0, -0.5, 60)
    omega_a_values = np.linspace(0.5, 20.0, 60)
    for omega_a in omega_a_values:
        for j in j_values:
            p = ModelParams(20.0, float(omega_a), 3.0, float(j), 8)
            label = phase_classify(p).label.value
            left.plot(j, omega_a, ".", ms=2, color=LABEL_COLORS[label])
    line_omega_a = np.linspace(0.5, 20.0, 100)
    line_j = [transition_j(ModelParams(20.0, float(w), 3.0, 0.0, 8))
              for w in line_omega_a]
    left.plot(line_j, line_omega_a, color="k", lw=1.2, label="closed-form crossing")
    left.set_xlim(-10.0, -0.5)
    left.set_xlabel("ising coupling j")
    left.set_ylabel("ring-spin gap omega_a")
    left.set_title("ground-state phase (n = 8)")
    left.legend(frameon=False, loc="upper left")

    # right: cold coherence against j, jump at the crossing
    j_grid = np.linspace(j_pt - 2.0, j_pt + 2.0, 201)
    cold = sweep(base, "j", j_grid, temperature=1e-3)
    right.plot(j_grid, [pt.coherence for pt in cold.points],
               label="coherence at t = 1e-3")
    right.plot(j_grid, [c0_ground(ModelParams(20.0, 12.0, 3.0, float(j), 8))
                        for j in j_grid],
               ls="--", label="t = 0 closed form")
    right.axvline(j_pt, color="k", lw=0.8, ls=":")
    right.set_xlabel("ising coupling j")
    right.set_title("coherence jump at the crossing")
    right.legend(frameon=False)

    fig.tight_layout()
    fig.savefig(OUT / "phase_transition.png", dpi=150)
    print(f"wrote {OUT / 'phase_transition.png'}")

    exactly_at = ModelParams(20.0, 12.0, 3.0, j_pt, 8)
    print(f"on the line: label = {phase_classify(exactly_at).label.value}, "
          f"c0 = {c0_ground(exactly_at):.6f} (one third of the aligned value)")


if __name__ == "__main__":
    main()
