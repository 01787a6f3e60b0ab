"""Command-line interface: point evaluation, bundled datasets, verification.

Subcommands
-----------
point          evaluate coherence, phase and bounds at one parameter set
figure         emit one of the bundled preset datasets as CSV
phase-diagram  classify a (j, omega_a) grid and tabulate ground data
verify         run the brute-force oracle and property suites

CSV output is locale-independent: '.' decimal separator, '\\n' line
endings, shortest round-trip float formatting.  Every dataset carries a
run manifest (key=value lines) written next to the output file, or to
stderr when the dataset goes to stdout.  Identical invocations produce
byte-identical datasets and manifests up to the timestamp line.

Exit codes: 0 success, 1 parameter or usage validation failure, 2 a
verification check failed.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
from datetime import datetime, timezone

import numpy as np

from . import __version__, limits, observables, oracle, spectrum
from .combinatorics import degeneracy, r_hypergeometric, r_weight, valid_level_indices
from .model import ModelParams, as_temperature

ENUM_N_DEFAULT = 12
DENSE_N_DEFAULT = 6
PRESET_NOTE = "curve-family values are preset defaults, not externally specified"


def _fmt(value) -> str:
    """Shortest round-trip text for one CSV cell."""
    if isinstance(value, bool):
        return str(value)
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    return str(value)


def write_csv(stream, header: list[str], rows) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_fmt(cell) for cell in row])


def write_manifest(stream, entries: list[tuple[str, str]]) -> None:
    for key, value in entries:
        stream.write(f"{key}={value}\n")


def _manifest_header(command: str, output: str | None) -> list[tuple[str, str]]:
    return [
        ("command", command),
        ("version", __version__),
        ("timestamp", datetime.now(timezone.utc).isoformat()),
        ("output", output if output else "-"),
    ]


def t_grid(omega0: float, points: int = 200, lo: float = 1e-2, hi: float = 1e3) -> np.ndarray:
    """Default temperature grid: log-spaced, scaled to the target gap."""
    scale = omega0 / 10.0
    return np.geomspace(lo * scale, hi * scale, points)


# ---------------------------------------------------------------------------
# figure presets
# ---------------------------------------------------------------------------

def _family_rows(base: ModelParams, variable: str, values, grid,
                 extra_column=None):
    """Coherence columns for a parameter family over a temperature grid."""
    columns = []
    for value in values:
        columns.append([
            observables.coherence(_with(base, variable, value), t) for t in grid
        ])
    rows = []
    for i, t in enumerate(grid):
        row = [t] + [col[i] for col in columns]
        if extra_column is not None:
            row.append(extra_column(t))
        rows.append(row)
    return rows


def _with(base: ModelParams, variable: str, value):
    from dataclasses import replace

    if variable == "n":
        return replace(base, n=int(value))
    return replace(base, **{variable: float(value)})


def _figure_fig1(fig_id: str, points: int):
    base = ModelParams(omega0=10.0, omega_a=2.0, gamma=3.0, j=4.0, n=8)
    if fig_id == "fig1a":
        j_values = [0.0, 1.0, 4.0, 16.0, 64.0]
        grid = t_grid(base.omega0, points)
        header = ["t", "c_j0", "c_j1", "c_j4", "c_j16", "c_j64", "c_upper"]
        rows = _family_rows(base, "j", j_values, grid,
                            extra_column=lambda t: limits.upper_bound(base, t))
        manifest = [("params.omega0", "10.0"), ("params.omega_a", "2.0"),
                    ("params.gamma", "3.0"), ("params.n", "8"),
                    ("preset.j_values", ",".join(_fmt(j) for j in j_values)),
                    ("preset.note", PRESET_NOTE)]
        return header, rows, manifest, grid
    base = _with(base, "j", 250.0)
    if fig_id == "fig1b":
        grid = np.geomspace(1e-1, 1e5, points)
        header = ["t", "c", "asym_leading", "asym_two_term"]
        rows = []
        for t in grid:
            rows.append([t, observables.coherence(base, t),
                         limits.high_t_asymptotic(base, t, include_interaction_term=False).value,
                         limits.high_t_asymptotic(base, t).value])
        manifest = [("params.omega0", "10.0"), ("params.omega_a", "2.0"),
                    ("params.gamma", "3.0"), ("params.j", "250.0"),
                    ("params.n", "8"),
                    ("preset.t_range", "1e-1,1e5"), ("preset.note", PRESET_NOTE)]
        return header, rows, manifest, grid
    # fig1c
    grid = t_grid(base.omega0, points)
    header = ["t", "c", "c_upper"]
    rows = [[t, observables.coherence(base, t), limits.upper_bound(base, t)]
            for t in grid]
    manifest = [("params.omega0", "10.0"), ("params.omega_a", "2.0"),
                ("params.gamma", "3.0"), ("params.j", "250.0"), ("params.n", "8")]
    return header, rows, manifest, grid


def _figure_fig2(fig_id: str, points: int):
    if fig_id == "fig2a":
        base = ModelParams(omega0=10.0, omega_a=2.0, gamma=1.0, j=4.0, n=6)
        gammas = [1.0, 2.0, 3.0, 6.0]
        grid = t_grid(base.omega0, points)
        header = ["t", "c_gamma1", "c_gamma2", "c_gamma3", "c_gamma6", "gamma_inf"]
        rows = _family_rows(base, "gamma", gammas, grid,
                            extra_column=lambda t: limits.gamma_infinity_limit(base, t))
        manifest = [("params.omega0", "10.0"), ("params.omega_a", "2.0"),
                    ("params.j", "4.0"), ("params.n", "6"),
                    ("preset.gamma_values", ",".join(_fmt(g) for g in gammas)),
                    ("preset.note", PRESET_NOTE)]
        return header, rows, manifest, grid
    if fig_id == "fig2b":
        base = ModelParams(omega0=10.0, omega_a=1.0, gamma=3.0, j=4.0, n=7)
        omega_as = [1.0, 2.0, 4.0, 8.0]
        grid = t_grid(base.omega0, points)
        header = ["t", "c_omega_a1", "c_omega_a2", "c_omega_a4", "c_omega_a8",
                  "omega_a_inf"]
        rows = _family_rows(base, "omega_a", omega_as, grid,
                            extra_column=lambda t: limits.omega_a_infinity_limit(base, t))
        manifest = [("params.omega0", "10.0"), ("params.gamma", "3.0"),
                    ("params.j", "4.0"), ("params.n", "7"),
                    ("preset.omega_a_values", ",".join(_fmt(w) for w in omega_as)),
                    ("preset.note", PRESET_NOTE)]
        return header, rows, manifest, grid
    # fig2c
    base = ModelParams(omega0=10.0, omega_a=2.0, gamma=3.0, j=4.0, n=2)
    ns = [2, 4, 6, 8]
    grid = t_grid(base.omega0, points)
    header = ["t", "c_n2", "c_n4", "c_n6", "c_n8"]
    rows = _family_rows(base, "n", ns, grid)
    manifest = [("params.omega0", "10.0"), ("params.omega_a", "2.0"),
                ("params.gamma", "3.0"), ("params.j", "4.0"),
                ("preset.n_values", ",".join(str(n) for n in ns)),
                ("preset.note", PRESET_NOTE)]
    return header, rows, manifest, grid


def _figure_fig3(fig_id: str, points: int):
    if fig_id == "fig3a":
        base = ModelParams(omega0=20.0, omega_a=1.0, gamma=3.0, j=-1.0, n=8)
        j_values = np.linspace(-10.0, 0.0, 51)
        omega_a_values = np.linspace(0.5, 20.0, 40)
        header, rows = _phase_rows(base, j_values, omega_a_values)
        manifest = [("params.omega0", "20.0"), ("params.gamma", "3.0"),
                    ("params.n", "8"),
                    ("grid.j", "linear,-10.0,0.0,51"),
                    ("grid.omega_a", "linear,0.5,20.0,40"),
                    ("preset.note", PRESET_NOTE)]
        return header, rows, manifest, j_values
    if fig_id == "fig3b":
        base = ModelParams(omega0=20.0, omega_a=12.0, gamma=3.0, j=-4.0, n=8)
        j_pt = spectrum.transition_j(base)
        j_values = [-4.0, -6.0, j_pt, -8.0, -10.0]
        grid = t_grid(base.omega0, points)
        header = ["t", "c_jm4", "c_jm6", "c_jpt", "c_jm8", "c_jm10"]
        rows = _family_rows(base, "j", j_values, grid)
        manifest = [("params.omega0", "20.0"), ("params.omega_a", "12.0"),
                    ("params.gamma", "3.0"), ("params.n", "8"),
                    ("preset.j_values", ",".join(_fmt(j) for j in j_values)),
                    ("preset.note", PRESET_NOTE)]
        return header, rows, manifest, grid
    if fig_id == "fig3c":
        base = ModelParams(omega0=20.0, omega_a=8.0, gamma=3.0, j=-6.7, n=8)
        rise = (base.gamma * base.n) ** 2 / (
            math.hypot(base.omega0, base.gamma * base.n) + base.omega0)
        omega_a_pt = -2.0 * (base.j + rise / (2.0 * base.n))
        omega_as = [8.0, 10.0, omega_a_pt, 14.0, 16.0]
        grid = t_grid(base.omega0, points)
        header = ["t", "c_oa8", "c_oa10", "c_oapt", "c_oa14", "c_oa16"]
        rows = _family_rows(base, "omega_a", omega_as, grid)
        manifest = [("params.omega0", "20.0"), ("params.gamma", "3.0"),
                    ("params.j", "-6.7"), ("params.n", "8"),
                    ("preset.omega_a_values", ",".join(_fmt(w) for w in omega_as)),
                    ("preset.note", PRESET_NOTE)]
        return header, rows, manifest, grid
    # fig3d
    base = ModelParams(omega0=20.0, omega_a=12.0, gamma=1.0, j=-6.7, n=8)
    gammas = [1.0, 2.0, 3.0, 5.0]
    grid = t_grid(base.omega0, points)
    header = ["t", "c_gamma1", "c_gamma2", "c_gamma3", "c_gamma5"]
    rows = _family_rows(base, "gamma", gammas, grid)
    manifest = [("params.omega0", "20.0"), ("params.omega_a", "12.0"),
                ("params.j", "-6.7"), ("params.n", "8"),
                ("preset.gamma_values", ",".join(_fmt(g) for g in gammas)),
                ("preset.note", PRESET_NOTE)]
    return header, rows, manifest, grid


FIGURE_IDS = ("fig1a", "fig1b", "fig1c", "fig2a", "fig2b", "fig2c",
              "fig3a", "fig3b", "fig3c", "fig3d")


def build_figure(fig_id: str, points: int = 200):
    """(header, rows, manifest_entries) for one bundled dataset."""
    if fig_id not in FIGURE_IDS:
        raise ValueError(f"unknown figure id {fig_id!r}, expected one of {FIGURE_IDS}")
    if points < 2:
        raise ValueError("points must be >= 2")
    if fig_id.startswith("fig1"):
        header, rows, manifest, _ = _figure_fig1(fig_id, points)
    elif fig_id.startswith("fig2"):
        header, rows, manifest, _ = _figure_fig2(fig_id, points)
    else:
        header, rows, manifest, _ = _figure_fig3(fig_id, points)
    return header, rows, manifest


def _phase_rows(base: ModelParams, j_values, omega_a_values):
    from dataclasses import replace

    header = ["j", "omega_a", "label", "delta_e_min", "c0"]
    rows = []
    for j in j_values:
        for omega_a in omega_a_values:
            p = replace(base, j=float(j), omega_a=float(omega_a))
            result = spectrum.phase_classify(p)
            rows.append([float(j), float(omega_a), result.label.value,
                         result.delta_e_min, limits.c0_ground(p)])
    return header, rows


def build_phase_diagram(omega0: float, gamma: float, n: int,
                        j_values, omega_a_values):
    base = ModelParams(omega0=omega0, omega_a=float(omega_a_values[0]),
                       gamma=gamma, j=float(j_values[0]), n=n)
    return _phase_rows(base, j_values, omega_a_values)


# ---------------------------------------------------------------------------
# verification suite
# ---------------------------------------------------------------------------

def _draw_params(rng, n_max: int, allow_gamma_zero: bool = True) -> ModelParams:
    gamma = float(rng.uniform(0.0 if allow_gamma_zero else 0.3, 6.0))
    return ModelParams(
        omega0=float(rng.uniform(0.5, 20.0)),
        omega_a=float(rng.uniform(0.2, 8.0)),
        gamma=gamma,
        j=float(rng.uniform(-6.0, 6.0)),
        n=int(rng.integers(1, n_max + 1)),
    )


def _draw_t(rng) -> float:
    return float(10.0 ** rng.uniform(-1.0, 2.0))


def analytic_level_multiset(p: ModelParams) -> np.ndarray:
    """All 2^(n+1) analytic energies with multiplicity, sorted."""
    energies = []
    for twos, d in valid_level_indices(p.n):
        count = degeneracy(twos, d, p.n)
        for e in spectrum.energy_pair(p, twos, d):
            energies.append((e, count))
    flat = np.concatenate([np.full(c, e) for e, c in energies])
    return np.sort(flat)


def run_verify(max_n_enum: int = ENUM_N_DEFAULT, max_n_dense: int = DENSE_N_DEFAULT,
               cases: int = 40, seed: int = 0, report=print) -> bool:
    """Oracle-equivalence and property checks; True when everything passes."""
    if not 1 <= max_n_enum <= oracle.ENUM_CAP:
        raise ValueError(f"--max-n-enum must be in 1..{oracle.ENUM_CAP}")
    if not 1 <= max_n_dense <= oracle.DENSE_CAP:
        raise ValueError(f"--max-n-dense must be in 1..{oracle.DENSE_CAP}, cap is {oracle.DENSE_CAP}")
    if cases < 1:
        raise ValueError("--cases must be >= 1")
    rng = np.random.default_rng(seed)
    ok = True

    def check(name: str, passed: bool, detail: str = ""):
        nonlocal ok
        if passed:
            report(f"ok   {name}")
        else:
            ok = False
            report(f"FAIL {name}: {detail}")

    # exact degeneracy census
    worst = None
    for n in range(1, min(max_n_enum, 16) + 1):
        census = oracle.enum_census(n)
        table = {(twos, d): degeneracy(twos, d, n)
                 for twos, d in valid_level_indices(n)}
        if census != table or sum(table.values()) != 2 ** n:
            worst = n
            break
    check("degeneracy census vs enumeration", worst is None, f"n={worst}")

    # wall-weight cross-check
    worst = None
    for _ in range(max(200, cases * 5)):
        n = int(rng.integers(2, 31))
        twos = int(rng.integers(0, n // 2 + 1)) * 2 + (n % 2)
        if twos >= n:
            twos -= 2
        if twos < 0:
            continue
        beta_j = float(rng.uniform(-20.0, 20.0))
        direct = r_weight(twos, n, beta_j)
        series = r_hypergeometric(twos, n, beta_j)
        rel = abs(series - math.exp(direct)) / math.exp(direct)
        if rel > 1e-10:
            worst = (twos, n, beta_j, rel)
            break
    check("wall weight vs terminating series", worst is None, f"{worst}")

    # enumeration equivalence
    worst = None
    for _ in range(cases):
        p = _draw_params(rng, max_n_enum)
        t = _draw_t(rng)
        diff_c = abs(observables.coherence(p, t) - oracle.enum_coherence(p, t))
        diff_z = abs(observables.log_partition(p, t) - oracle.enum_log_partition(p, t))
        if diff_c > 1e-12 or diff_z > 1e-11:
            worst = (p, t, diff_c, diff_z)
            break
    check("closed form vs enumeration", worst is None, f"{worst}")

    # dense equivalence
    worst = None
    for _ in range(max(10, cases // 2)):
        p = _draw_params(rng, max_n_dense)
        t = _draw_t(rng)
        dense = oracle.dense_rho0(p, t)
        closed = observables.rho0(p, t)
        diffs = (abs(dense.rho_e - closed.rho_e), abs(dense.rho_g - closed.rho_g),
                 abs(dense.rho_ge - closed.rho_ge))
        w, _ = oracle.dense_spectrum(p)
        spec_diff = float(np.max(np.abs(w - analytic_level_multiset(p))))
        if max(diffs) > 1e-8 or spec_diff > 1e-9:
            worst = (p, t, diffs, spec_diff)
            break
    check("dense oracle (state and spectrum)", worst is None, f"{worst}")

    # jacobi reconstruction on a random symmetric matrix
    m = rng.standard_normal((64, 64))
    m = 0.5 * (m + m.T)
    w, v = oracle.jacobi_eigh(m)
    recon = float(np.linalg.norm(v @ np.diag(w) @ v.T - m))
    ortho = float(np.linalg.norm(v.T @ v - np.eye(64)))
    check("jacobi reconstruction/orthonormality",
          recon <= 1e-10 * np.linalg.norm(m) and ortho <= 1e-12,
          f"recon={recon}, ortho={ortho}")

    # monotonicity in j, omega_a, gamma
    worst = None
    for _ in range(cases):
        p = _draw_params(rng, 10, allow_gamma_zero=False)
        if p.n == 1:
            p = _with(p, "n", 2)
        t = float(rng.uniform(0.5, 50.0))
        c = observables.coherence(p, t)
        steps = (("j", p.j + float(rng.uniform(0.1, 2.0))),
                 ("omega_a", p.omega_a + float(rng.uniform(0.1, 2.0))),
                 ("gamma", p.gamma + float(rng.uniform(0.1, 2.0))))
        for name, value in steps:
            c_up = observables.coherence(_with(p, name, value), t)
            if not c_up > c:
                worst = (p, t, name, value, c, c_up)
                break
        if worst:
            break
    check("coherence monotone in j, omega_a, gamma", worst is None, f"{worst}")

    # bounds envelope
    worst = None
    for _ in range(cases):
        p = _draw_params(rng, max_n_enum)
        t = _draw_t(rng)
        c = observables.coherence(p, t)
        hi = limits.upper_bound(p, t)
        lo = limits.lower_bound(p, t)
        if c > hi * (1 + 1e-12) + 1e-15 or c < lo * (1 - 1e-12) - 1e-15:
            worst = (p, t, lo, c, hi)
            break
    check("bounds envelope", worst is None, f"{worst}")

    # critical classification exactly on the transition line
    worst = None
    for _ in range(cases):
        p = _draw_params(rng, max_n_enum, allow_gamma_zero=False)
        if p.n == 1:
            p = _with(p, "n", 2)
        p_line = _with(p, "j", spectrum.transition_j(p))
        result = spectrum.phase_classify(p_line)
        if result.label is not spectrum.PhaseLabel.CRITICAL:
            worst = (p_line, result)
            break
    check("critical at the transition coupling", worst is None, f"{worst}")

    return ok


# ---------------------------------------------------------------------------
# argument parsing and dispatch
# ---------------------------------------------------------------------------

def _add_model_flags(parser, with_t: bool) -> None:
    parser.add_argument("--omega0", type=float, required=True, help="target gap")
    parser.add_argument("--omega-a", type=float, required=True, dest="omega_a",
                        help="ring-spin gap")
    parser.add_argument("--gamma", type=float, required=True,
                        help="target-ring coupling (nonnegative)")
    parser.add_argument("--j", type=float, required=True, help="Ising coupling")
    parser.add_argument("--n", type=int, required=True, help="ring size")
    if with_t:
        parser.add_argument("--t", type=float, required=True,
                            help="temperature (0 allowed)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="isingcoh",
        description="Exact thermal coherence of a two-level target coupled to an Ising ring")
    sub = parser.add_subparsers(dest="command", required=True)

    point = sub.add_parser("point", help="evaluate one parameter point")
    _add_model_flags(point, with_t=True)

    figure = sub.add_parser("figure", help="emit a bundled preset dataset")
    figure.add_argument("figure_id", choices=list(FIGURE_IDS))
    figure.add_argument("--points", type=int, default=200,
                        help="temperature grid size (default 200)")
    figure.add_argument("--output", default=None, help="CSV path (default stdout)")

    phase = sub.add_parser("phase-diagram", help="classify a (j, omega_a) grid")
    phase.add_argument("--omega0", type=float, required=True)
    phase.add_argument("--gamma", type=float, required=True)
    phase.add_argument("--n", type=int, required=True)
    phase.add_argument("--j-min", type=float, required=True)
    phase.add_argument("--j-max", type=float, required=True)
    phase.add_argument("--j-points", type=int, default=41)
    phase.add_argument("--omega-a-min", type=float, required=True, dest="omega_a_min")
    phase.add_argument("--omega-a-max", type=float, required=True, dest="omega_a_max")
    phase.add_argument("--omega-a-points", type=int, default=41, dest="omega_a_points")
    phase.add_argument("--output", default=None, help="CSV path (default stdout)")

    verify = sub.add_parser("verify", help="run oracle and property checks")
    verify.add_argument("--max-n-enum", type=int, default=ENUM_N_DEFAULT)
    verify.add_argument("--max-n-dense", type=int, default=DENSE_N_DEFAULT)
    verify.add_argument("--cases", type=int, default=40)
    verify.add_argument("--seed", type=int, default=0)
    return parser


def _emit_dataset(args, command: str, header, rows, manifest_extra) -> None:
    manifest = _manifest_header(command, args.output) + manifest_extra
    if args.output:
        with open(args.output, "w", newline="") as fh:
            write_csv(fh, header, rows)
        with open(args.output + ".manifest", "w") as fh:
            write_manifest(fh, manifest)
    else:
        write_csv(sys.stdout, header, rows)
        write_manifest(sys.stderr, manifest)


def _cmd_point(args) -> int:
    p = ModelParams(omega0=args.omega0, omega_a=args.omega_a, gamma=args.gamma,
                    j=args.j, n=args.n)
    tt = as_temperature(args.t)
    result = spectrum.phase_classify(p)
    lines = [
        ("omega0", p.omega0), ("omega_a", p.omega_a), ("gamma", p.gamma),
        ("j", p.j), ("n", p.n), ("t", tt.t),
        ("coherence", observables.coherence(p, tt)),
        ("phase", result.label.value),
        ("delta_e_min", result.delta_e_min),
        ("upper_bound", limits.upper_bound(p, tt)),
        ("lower_bound", limits.lower_bound(p, tt)),
    ]
    if p.n >= 2:
        lines.append(("transition_j", spectrum.transition_j(p)))
    if not tt.is_zero:
        state = observables.rho0(p, tt)
        lines.extend((("rho_e", state.rho_e), ("rho_g", state.rho_g),
                      ("rho_ge", state.rho_ge)))
    else:
        lines.append(("c0_ground", limits.c0_ground(p)))
    for key, value in lines:
        print(f"{key}={_fmt(value)}")
    return 0


def _cmd_figure(args) -> int:
    header, rows, manifest_extra = build_figure(args.figure_id, args.points)
    manifest = [("figure_id", args.figure_id), ("points", str(args.points))]
    _emit_dataset(args, "figure", header, rows, manifest + manifest_extra)
    return 0


def _cmd_phase_diagram(args) -> int:
    if args.j_points < 1 or args.omega_a_points < 1:
        raise ValueError("grid sizes must be >= 1")
    j_values = np.linspace(args.j_min, args.j_max, args.j_points)
    omega_a_values = np.linspace(args.omega_a_min, args.omega_a_max,
                                 args.omega_a_points)
    header, rows = build_phase_diagram(args.omega0, args.gamma, args.n,
                                       j_values, omega_a_values)
    manifest = [
        ("params.omega0", _fmt(args.omega0)), ("params.gamma", _fmt(args.gamma)),
        ("params.n", str(args.n)),
        ("grid.j", f"linear,{_fmt(args.j_min)},{_fmt(args.j_max)},{args.j_points}"),
        ("grid.omega_a", f"linear,{_fmt(args.omega_a_min)},"
                         f"{_fmt(args.omega_a_max)},{args.omega_a_points}"),
    ]
    _emit_dataset(args, "phase-diagram", header, rows, manifest)
    return 0


def _cmd_verify(args) -> int:
    passed = run_verify(max_n_enum=args.max_n_enum, max_n_dense=args.max_n_dense,
                        cases=args.cases, seed=args.seed)
    print("verify: all checks passed" if passed else "verify: FAILURES above")
    return 0 if passed else 2


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; exit code 2 is reserved for
        # failed verification, so usage problems map to 1 (help stays 0)
        return 0 if exc.code == 0 else 1
    handlers = {"point": _cmd_point, "figure": _cmd_figure,
                "phase-diagram": _cmd_phase_diagram, "verify": _cmd_verify}
    try:
        return handlers[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
