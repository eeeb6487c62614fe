"""Command-line interface.

Subcommands:
  sweep    entanglement-vs-acceleration curves as CSV + JSON metadata + PNG
  check    reference-table cross-check reports (JSON + stdout summary)
  inspect  pretty-print a state, its spectrum and negativity

Exit codes: 0 success, 1 validation failure, 2 usage error. All output files
are byte-reproducible for fixed flags and seed.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .entanglement import negativity
from .fano import BASIS_23, density_to_fano, validate_state
from .families import (
    FIG3_SUBSTITUTE,
    ExampleOne,
    FamilySpec,
    OneParameter,
    TwoParameter,
    family_label,
    family_state,
)
from .linalg import BipartiteState
from .rindler import (
    BASIS_24,
    R_MAX,
    accelerate_both,
    accelerate_qubit,
    accelerate_qutrit,
)
from .crosscheck import ANCHOR_TABLES, TABLE_IDS, run_trials

MODES = ("qubit", "qutrit", "both")
MAX_GRID_ROWS = 100000


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


# ----------------------------------------------------------------------------
# presets
# ----------------------------------------------------------------------------

PRESETS: dict[str, dict] = {
    "fig1a": {
        "family": ExampleOne(1.0, 1.0),
        "allow_unphysical": True,
        "warning": "the polarized family at s3=t3=1 is not positive semidefinite; "
                   "curves are computed from the same negativity functional anyway",
    },
    "fig1b": {"family": ExampleOne(0.0, 0.0)},
    "fig2": {"family": OneParameter(0.5)},
    "fig3": {
        "family": FIG3_SUBSTITUTE,
        "substitution": "stated two-parameter configuration alpha=beta=0.5 violates "
                        "the weight constraint ((beta+gamma)/2 = -0.5 < 0); using the "
                        "grid maximizer of the r=0 negativity, (alpha,gamma) = (0,1)",
    },
}


def _family_from_args(args) -> FamilySpec:
    if args.preset:
        return PRESETS[args.preset]["family"]
    if args.family is None:
        raise SystemExit2("either a preset or --family is required")
    if args.family == "example-one":
        return ExampleOne(args.s3, args.t3)
    if args.family == "one-parameter":
        if args.p is None:
            raise SystemExit2("--family one-parameter needs --p")
        return OneParameter(args.p)
    if args.family == "two-parameter":
        if args.alpha is None or args.gamma is None:
            raise SystemExit2("--family two-parameter needs --alpha and --gamma")
        return TwoParameter(args.alpha, args.gamma)
    raise SystemExit2(f"unknown family {args.family!r}")


class SystemExit2(Exception):
    """Usage error surfaced with exit code 2."""


def _family_dict(spec: FamilySpec) -> dict:
    if isinstance(spec, ExampleOne):
        return {"kind": "example-one", "s3": spec.s3, "t3": spec.t3}
    if isinstance(spec, OneParameter):
        return {"kind": "one-parameter", "p": spec.p}
    return {"kind": "two-parameter", "alpha": spec.alpha, "gamma": spec.gamma,
            "beta": spec.beta}


# ----------------------------------------------------------------------------
# sweep
# ----------------------------------------------------------------------------


def _sweep_modes(state: BipartiteState, modes: list[str], grid: np.ndarray) -> dict[str, list[float]]:
    columns: dict[str, list[float]] = {m: [] for m in modes}
    for r in grid:
        if "qubit" in columns:
            out = accelerate_qubit(state, r, check_input=False)
            columns["qubit"].append(negativity(out, require_physical=False).negativity)
        if "qutrit" in columns:
            out = accelerate_qutrit(state, r, check_input=False)
            columns["qutrit"].append(negativity(out, require_physical=False).negativity)
        if "both" in columns:
            out = accelerate_both(state, r, r, check_input=False)
            columns["both"].append(negativity(out, require_physical=False).negativity)
    return columns


def _sweep_grid2d(state: BipartiteState, grid: np.ndarray) -> list[tuple[float, float, float]]:
    rows = []
    for rq in grid:
        for rt in grid:
            out = accelerate_both(state, rq, rt, check_input=False)
            rows.append((float(rq), float(rt),
                         negativity(out, require_physical=False).negativity))
    return rows


def _write_text(path: Path, text: str) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(text)


def _write_json(path: Path, obj) -> None:
    _write_text(path, json.dumps(obj, indent=2, sort_keys=True) + "\n")


def _render_curves_png(path: Path, grid, columns: dict[str, list[float]], title: str) -> None:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6.0, 4.0), dpi=150)
    styles = {"qubit": "-", "qutrit": "--", "both": ":"}
    for mode in MODES:
        if mode in columns:
            ax.plot(grid, columns[mode], styles[mode], label=f"{mode} accelerated")
    ax.set_xlabel("acceleration parameter r")
    ax.set_ylabel("negativity")
    ax.set_title(title)
    ax.set_xlim(0.0, R_MAX)
    ax.grid(True, alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def _render_grid2d_png(path: Path, grid, rows, title: str) -> None:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    n = len(grid)
    z = np.array([r[2] for r in rows]).reshape(n, n)
    fig, ax = plt.subplots(figsize=(5.4, 4.4), dpi=150)
    mesh = ax.pcolormesh(grid, grid, z.T, shading="auto")
    fig.colorbar(mesh, ax=ax, label="negativity (both accelerated)")
    ax.set_xlabel("qubit acceleration r_q")
    ax.set_ylabel("qutrit acceleration r_t")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def cmd_sweep(args) -> int:
    spec = _family_from_args(args)
    preset = PRESETS.get(args.preset, {}) if args.preset else {}
    allow_unphysical = bool(args.allow_unphysical or preset.get("allow_unphysical"))
    warnings: list[str] = []
    substitutions: list[str] = []
    if preset.get("warning"):
        warnings.append(preset["warning"])
    if preset.get("substitution"):
        substitutions.append(preset["substitution"])

    try:
        state = family_state(spec)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    report = validate_state(state.rho)
    if not report.is_physical and not allow_unphysical:
        print("error: initial state failed validation "
              f"(hermitian={report.hermitian}, trace deviation={report.trace_deviation:.3e}, "
              f"min eigenvalue={report.min_eigenvalue:.6e}); "
              "rerun with --allow-unphysical to proceed", file=sys.stderr)
        return 1
    if not report.is_physical:
        warnings.append(
            f"initial state is unphysical (min eigenvalue {report.min_eigenvalue:.6e}); "
            "negativity evaluated on the Hermitian unit-trace matrix as-is"
        )

    points = args.points
    if points < 2:
        raise SystemExit2("--points must be at least 2")
    if args.grid2d and points * points > MAX_GRID_ROWS:
        raise SystemExit2(f"--grid2d with --points {points} exceeds {MAX_GRID_ROWS} rows")
    if points > MAX_GRID_ROWS:
        raise SystemExit2(f"--points must be at most {MAX_GRID_ROWS}")
    grid = np.linspace(0.0, R_MAX, points)

    modes = list(dict.fromkeys(args.mode)) if args.mode else list(MODES)
    out_dir = Path(args.out)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        print(f"error: cannot create output directory {out_dir}: {exc}", file=sys.stderr)
        return 1
    name = args.name or args.preset or "sweep"
    csv_path = out_dir / f"{name}.csv"
    meta_path = out_dir / f"{name}.meta.json"
    png_path = out_dir / f"{name}.png"

    e0 = negativity(state, require_physical=False).negativity
    title = args.preset or family_label(spec)

    if args.grid2d:
        rows = _sweep_grid2d(state, grid)
        lines = ["r_q,r_t,E_both"]
        lines += [f"{_fmt(rq)},{_fmt(rt)},{_fmt(e)}" for rq, rt, e in rows]
        _write_text(csv_path, "\n".join(lines) + "\n")
        _render_grid2d_png(png_path, grid, rows, title)
        columns_meta = ["r_q", "r_t", "E_both"]
    else:
        columns = _sweep_modes(state, modes, grid)
        if report.is_physical:
            for mode, values in columns.items():
                bad = [v for v in values if not -1e-9 <= v <= 1.0 + 1e-9]
                if bad:
                    warnings.append(f"E_{mode} left [0,1] unexpectedly: {bad[:3]}")
        header = ["r"] + [f"E_{m}" for m in MODES if m in columns]
        lines = [",".join(header)]
        for i, r in enumerate(grid):
            cells = [_fmt(r)] + [_fmt(columns[m][i]) for m in MODES if m in columns]
            lines.append(",".join(cells))
        _write_text(csv_path, "\n".join(lines) + "\n")
        _render_curves_png(png_path, grid, columns, title)
        columns_meta = header

    meta = {
        "command": "sweep",
        "version": __version__,
        "preset": args.preset,
        "family": _family_dict(spec),
        "modes": modes if not args.grid2d else ["both"],
        "grid": {
            "start": 0.0,
            "end": R_MAX,
            "points": points,
            "kind": "independent-2d" if args.grid2d else "equal-r",
        },
        "columns": columns_meta,
        "negativity_convention": "trace-norm of the qubit partial transpose minus one",
        "initial_state": {
            "physical": report.is_physical,
            "trace_deviation": report.trace_deviation,
            "min_eigenvalue": report.min_eigenvalue,
            "negativity": e0,
        },
        "allow_unphysical": allow_unphysical,
        "warnings": warnings,
        "substitutions": substitutions,
        "outputs": {"csv": csv_path.name, "png": png_path.name},
    }
    _write_json(meta_path, meta)
    print(f"wrote {csv_path}")
    print(f"wrote {meta_path}")
    print(f"wrote {png_path}")
    for w in warnings:
        print(f"warning: {w}")
    return 0


# ----------------------------------------------------------------------------
# check
# ----------------------------------------------------------------------------


def cmd_check(args) -> int:
    tables = list(args.table)
    if tables == ["all"]:
        tables = list(TABLE_IDS)
    unknown = [t for t in tables if t not in TABLE_IDS]
    if unknown:
        raise SystemExit2(f"unknown table id(s): {', '.join(unknown)}; "
                          f"known: {', '.join(TABLE_IDS)} (or 'all')")
    if args.trials < 1:
        raise SystemExit2("--trials must be >= 1")
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)

    anchors_ok = True
    print(f"{'table':<11} {'trials':>6} {'elements':>8} {'flagged':>7} "
          f"{'max |diff|':>12}  status")
    for table_id in tables:
        summary = run_trials(table_id, args.trials, args.seed)
        summary["version"] = __version__
        _write_json(out_dir / f"check_{table_id}.json", summary)
        if summary["anchor"]:
            status = "anchor PASS" if summary["elements_flagged"] == 0 else "anchor FAIL"
            if summary["elements_flagged"] > 0:
                anchors_ok = False
        else:
            status = "informational"
        print(f"{table_id:<11} {summary['trials']:>6} {summary['total_elements']:>8} "
              f"{summary['elements_flagged']:>7} {summary['max_abs_diff']:>12.3e}  {status}")
    return 0 if anchors_ok else 1


# ----------------------------------------------------------------------------
# inspect
# ----------------------------------------------------------------------------


def _print_matrix(rho: np.ndarray, labels) -> None:
    width = 22
    print(" " * 5 + "".join(f"{lb:>{width}}" for lb in labels))
    for i, lb in enumerate(labels):
        cells = []
        for j in range(len(labels)):
            z = rho[i, j]
            cells.append(f"{z.real:+.4f}{z.imag:+.4f}j".rjust(width))
        print(f"{lb:<5}" + "".join(cells))


def cmd_inspect(args) -> int:
    spec = _family_from_args(args)
    try:
        state = family_state(spec)
    except ValueError as exc:
        print(f"rejected: {exc}")
        return 1
    print(f"family: {family_label(spec)}")
    if args.mode:
        if args.mode in ("qubit", "both") and args.rq is None:
            raise SystemExit2(f"--mode {args.mode} needs --rq")
        if args.mode in ("qutrit", "both") and args.rt is None:
            raise SystemExit2(f"--mode {args.mode} needs --rt")
        if args.mode == "qubit":
            state = accelerate_qubit(state, args.rq, check_input=False)
        elif args.mode == "qutrit":
            state = accelerate_qutrit(state, args.rt, check_input=False)
        else:
            state = accelerate_both(state, args.rq, args.rt, check_input=False)
        print(f"channel: {args.mode} (r_q={args.rq}, r_t={args.rt})")

    labels = BASIS_23 if state.dim_b == 3 else BASIS_24
    print(f"density matrix ({state.dim_a}x{state.dim_b} factors):")
    _print_matrix(state.rho, labels)

    report = validate_state(state.rho)
    print(f"trace deviation : {report.trace_deviation:.3e}")
    print(f"hermitian       : {report.hermitian} (defect {report.hermiticity_defect:.3e})")
    print("eigenvalues     : " + " ".join(f"{v:+.6f}" for v in report.eigenvalues))
    print(f"min eigenvalue  : {report.min_eigenvalue:+.6e}")
    print(f"physical        : {report.is_physical}")
    if state.dim_b == 3:
        params = density_to_fano(state)
        print("bloch s         : " + " ".join(f"{v:+.6f}" for v in params.s))
        print("bloch t         : " + " ".join(f"{v:+.6f}" for v in params.t))
        print("correlation c   :")
        for row in params.c:
            print("                  " + " ".join(f"{v:+.6f}" for v in row))
    result = negativity(state, require_physical=False)
    print("PT eigenvalues  : " + " ".join(f"{v:+.6f}" for v in result.eigenvalues))
    print(f"negativity      : {result.negativity:.12f}")
    return 0 if report.is_physical else 1


# ----------------------------------------------------------------------------
# parser
# ----------------------------------------------------------------------------


def _add_family_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("preset", nargs="?", choices=sorted(PRESETS), default=None,
                   help="figure preset (overrides --family)")
    p.add_argument("--family", choices=["example-one", "one-parameter", "two-parameter"])
    p.add_argument("--s3", type=float, default=0.0, help="example-one qubit polarization")
    p.add_argument("--t3", type=float, default=0.0, help="example-one qutrit polarization")
    p.add_argument("--p", type=float, default=None, help="one-parameter family weight")
    p.add_argument("--alpha", type=float, default=None, help="two-parameter family alpha")
    p.add_argument("--gamma", type=float, default=None, help="two-parameter family gamma")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rindlerqq",
        description="Qubit-qutrit entanglement under uniform acceleration",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_sweep = sub.add_parser("sweep", help="negativity-vs-acceleration curves")
    _add_family_flags(p_sweep)
    p_sweep.add_argument("--mode", action="append", choices=list(MODES),
                         help="channel(s) to sweep; repeatable; default all")
    p_sweep.add_argument("--points", type=int, default=64, help="grid points (default 64)")
    p_sweep.add_argument("--grid2d", action="store_true",
                         help="independent (r_q, r_t) grid; emits E_both only")
    p_sweep.add_argument("--allow-unphysical", action="store_true",
                         help="proceed when the initial state fails positivity")
    p_sweep.add_argument("--out", default=".", help="output directory")
    p_sweep.add_argument("--name", default=None, help="output file basename")
    p_sweep.set_defaults(func=cmd_sweep)

    p_check = sub.add_parser("check", help="cross-check the reference element tables")
    p_check.add_argument("table", nargs="+",
                         help=f"table id(s) or 'all'; known: {', '.join(TABLE_IDS)}")
    p_check.add_argument("--trials", type=int, default=100)
    p_check.add_argument("--seed", type=int, required=True,
                         help="seed for the reproducible input stream (required)")
    p_check.add_argument("--out", default=".", help="report directory")
    p_check.set_defaults(func=cmd_check)

    p_inspect = sub.add_parser("inspect", help="print a state, spectrum and negativity")
    _add_family_flags(p_inspect)
    p_inspect.add_argument("--mode", choices=list(MODES), default=None)
    p_inspect.add_argument("--rq", type=float, default=None)
    p_inspect.add_argument("--rt", type=float, default=None)
    p_inspect.set_defaults(func=cmd_inspect)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except SystemExit2 as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
