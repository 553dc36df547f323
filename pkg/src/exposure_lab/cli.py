"""Command-line surface: experiment subcommands with CSV/JSON emission.

Every subcommand writes a result table (CSV: header + rows, 17-significant-
digit floats, comma separator, LF endings; JSON: an envelope mirroring the
columns plus schema version, command echo and diagnostics) using
write-then-rename, so failed runs leave no partial files.

Randomized verification commands draw from the counter-based Philox4x32-10
generator seeded by --seed; identical (command, seed, config) produce
byte-identical output files.

Exit codes: 0 success, 1 usage error, 2 invalid state/parameters,
3 numerical or I/O failure.  EXPOSURE_LAB_THREADS optionally caps the
worker threads used by grid scans.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile

import numpy as np

from . import channels, onset, renyi, statespace
from .errors import ExposureLabError, NumericalFailure, InvalidArgumentError
from .qmat import check_density, check_hermitian, evolve, partial_trace, tensor_product
from .sampling import (
    generator,
    random_density,
    random_hermitian,
    random_pure_density,
    random_spectrum,
)

SCHEMA_VERSION = "1"

A_TEST = np.array(
    [[0.2, 0.1, 0.5], [0.1, 0.3, 0.5], [0.5, 0.5, 0.5]], dtype=complex
)


class UsageError(Exception):
    """Bad flags or flag values; exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# ---------------------------------------------------------------------------
# value formatting and file emission

def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format(float(value), ".17g")
    return str(value)


def _jsonable(value):
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return float(value)
    return str(value)


def export_records(columns, rows, fmt: str, path: str, command, diagnostics) -> None:
    """Write the result table atomically in the requested format."""
    if fmt == "csv":
        lines = [",".join(columns)]
        for row in rows:
            if len(row) != len(columns):
                raise InvalidArgumentError("rows are not homogeneous with the header")
            lines.append(",".join(_fmt(v) for v in row))
        payload = "\n".join(lines) + "\n"
    elif fmt == "json":
        envelope = {
            "schema_version": SCHEMA_VERSION,
            "command": list(command),
            "columns": list(columns),
            "rows": [[_jsonable(v) for v in row] for row in rows],
            "diagnostics": list(diagnostics),
        }
        payload = json.dumps(envelope, indent=2) + "\n"
    else:
        raise UsageError(f"unknown format {fmt!r}")

    directory = os.path.dirname(os.path.abspath(path)) or "."
    try:
        fd, tmp = tempfile.mkstemp(prefix=".exposure-lab-", dir=directory)
        try:
            with os.fdopen(fd, "w", newline="\n") as fh:
                fh.write(payload)
            os.replace(tmp, path)
        except BaseException:
            os.unlink(tmp)
            raise
    except OSError as exc:
        raise NumericalFailure(f"cannot write {path!r}: {exc}") from exc


# ---------------------------------------------------------------------------
# matrix file I/O (JSON, row-major, entries either real or [re, im] pairs)

def load_matrix(path: str) -> np.ndarray:
    with open(path) as fh:
        data = json.load(fh)
    if isinstance(data, dict):
        if "matrix" not in data:
            raise InvalidArgumentError(f"{path}: missing 'matrix' key")
        data = data["matrix"]
    if not isinstance(data, list) or not data:
        raise InvalidArgumentError(f"{path}: expected a non-empty list of rows")
    out = []
    for row in data:
        vals = []
        for entry in row:
            if isinstance(entry, (int, float)):
                vals.append(complex(entry))
            elif isinstance(entry, list) and len(entry) == 2:
                vals.append(complex(entry[0], entry[1]))
            else:
                raise InvalidArgumentError(
                    f"{path}: entries must be numbers or [re, im] pairs"
                )
        out.append(vals)
    return np.array(out, dtype=complex)


def save_matrix(m: np.ndarray, path: str) -> None:
    rows = [[[float(v.real), float(v.imag)] for v in row] for row in np.asarray(m, complex)]
    with open(path, "w", newline="\n") as fh:
        json.dump({"matrix": rows}, fh, indent=1)
        fh.write("\n")


# ---------------------------------------------------------------------------
# exact-evolution helpers for the verify commands

def _evolved_reduction(rho_a, rho_b, h, t, keep):
    rho0 = tensor_product(rho_a, rho_b)
    rho_t = evolve(rho0, h.full(), t)
    return partial_trace(rho_t, rho_a.shape[0], rho_b.shape[0], keep)


def _exact_purity(rho_a, rho_b, h, n, t, keep):
    red = _evolved_reduction(rho_a, rho_b, h, t, keep)
    return float(np.trace(np.linalg.matrix_power(red, n)).real)


def _random_general_hamiltonian(rng, da, db, max_terms=3, unit_norm=True):
    k = int(rng.integers(1, max_terms + 1))
    terms = tuple(
        (random_hermitian(rng, da, unit_norm), random_hermitian(rng, db, unit_norm))
        for _ in range(k)
    )
    return onset.GeneralHamiltonian(terms)


# ---------------------------------------------------------------------------
# verify implementations (shared with the acceptance suite)

def verify_first_derivative(trials, seed, tol_analytic=1e-12, tol_fd=1e-6, step=1e-4):
    rng = generator(seed)
    rows = []
    for trial in range(trials):
        da = int(rng.integers(2, 5))
        db = int(rng.integers(2, 5))
        n = int(rng.integers(2, 4))
        rho_a = random_density(rng, da)
        rho_b = random_density(rng, db)
        h = _random_general_hamiltonian(rng, da, db)
        rec = [trial, da, db, n]
        ok = True
        for keep in ("a", "b"):
            gdot, _ = onset.purity_derivatives_general(rho_a, rho_b, h, n, keep)
            fd = (
                _exact_purity(rho_a, rho_b, h, n, step, keep)
                - _exact_purity(rho_a, rho_b, h, n, -step, keep)
            ) / (2 * step)
            rec.extend([gdot, fd])
            ok = ok and abs(gdot) <= tol_analytic and abs(fd) <= tol_fd
        rec.append(ok)
        rows.append(rec)
    cols = ["trial", "dim_a", "dim_b", "n", "analytic_a", "fd_a", "analytic_b", "fd_b", "ok"]
    return cols, rows


def verify_free_hamiltonian(trials, seed, tol=1e-10):
    rng = generator(seed)
    rows = []
    for trial in range(trials):
        da = int(rng.integers(2, 5))
        db = int(rng.integers(2, 5))
        n = int(rng.integers(2, 4))
        rho_a = random_density(rng, da)
        rho_b = random_density(rng, db)
        h = _random_general_hamiltonian(rng, da, db)
        free = h.terms() + (
            (random_hermitian(rng, da, True), np.eye(db, dtype=complex)),
            (np.eye(da, dtype=complex), random_hermitian(rng, db, True)),
        )
        h_free = onset.GeneralHamiltonian(free)
        rec = [trial, da, db, n]
        ok = True
        for keep in ("a", "b"):
            _, base = onset.purity_derivatives_general(rho_a, rho_b, h, n, keep)
            _, augmented = onset.purity_derivatives_general(rho_a, rho_b, h_free, n, keep)
            dev = abs(augmented - base)
            rec.append(dev)
            ok = ok and dev <= tol
        rec.append(ok)
        rows.append(rec)
    cols = ["trial", "dim_a", "dim_b", "n", "delta_ddot_a", "delta_ddot_b", "ok"]
    return cols, rows


def verify_durability_positivity(trials, seed, tol=-1e-10):
    rng = generator(seed)
    rows = []
    for trial in range(trials):
        dim = int(rng.integers(2, 6))
        rho = random_density(rng, dim)
        a = random_hermitian(rng, dim)
        for n in range(1, 7):
            d = onset.durability(rho, a, float(n))
            rows.append([trial, dim, n, d, bool(d >= tol)])
    return ["trial", "dim", "n", "durability", "ok"], rows


def verify_tensor_extension(trials, seed, tol=1e-10):
    rng = generator(seed)
    rows = []
    for trial in range(trials):
        d1 = int(rng.integers(2, 4))
        d2 = int(rng.integers(2, 4))
        n = float(rng.integers(2, 5))
        rho1 = random_density(rng, d1)
        rho2 = random_density(rng, d2)
        a1 = random_hermitian(rng, d1)
        joint = onset.durability(
            tensor_product(rho1, rho2), tensor_product(a1, np.eye(d2)), n
        )
        local = onset.durability(rho1, a1, n)
        dev = abs(joint - local)
        rows.append([trial, d1, d2, int(n), dev, bool(dev <= tol)])
    return ["trial", "dim1", "dim2", "n", "deviation", "ok"], rows


def verify_complementary_symmetry(
    trials, seed, gap_tol=1e-9, rel_tol=1e-2, t_small=1e-2
):
    rng = generator(seed)
    rows = []
    t_grid = np.linspace(0.0, 0.5, 11)
    for trial in range(trials):
        da = int(rng.integers(2, 4))
        db = int(rng.integers(2, 4))
        n = 2.0
        rho_a = random_density(rng, da, mix=0.2)
        psi_b = random_pure_density(rng, db)
        h = onset.ProductHamiltonian(
            random_hermitian(rng, da, True), random_hermitian(rng, db, True)
        )
        series = channels.coherent_info_timeseries(
            rho_a, psi_b, h, n, list(t_grid) + [t_small]
        )
        gap = max(abs(p.h_a - p.h_b_anc) for p in series.points)
        i0 = series.points[0].i_direct
        exact_delta = series.points[-1].i_direct - i0
        predicted = onset.delta_coherent_info(rho_a, psi_b, h, n, t_small)
        rel = abs(exact_delta - predicted) / abs(predicted)
        rows.append(
            [trial, da, db, int(n), gap, exact_delta, predicted, rel,
             bool(gap <= gap_tol and rel <= rel_tol)]
        )
    cols = ["trial", "dim_a", "dim_b", "n", "max_entropy_gap", "delta_exact",
            "delta_predicted", "rel_err", "ok"]
    return cols, rows


VERIFY_COMMANDS = {
    "first-derivative": verify_first_derivative,
    "free-hamiltonian": verify_free_hamiltonian,
    "durability-positivity": verify_durability_positivity,
    "tensor-extension": verify_tensor_extension,
    "complementary-symmetry": verify_complementary_symmetry,
}


# ---------------------------------------------------------------------------
# subcommand handlers

def _workers_from_env() -> int:
    raw = os.environ.get("EXPOSURE_LAB_THREADS", "")
    if not raw:
        return 1
    try:
        n = int(raw)
    except ValueError as exc:
        raise UsageError(f"EXPOSURE_LAB_THREADS must be an integer, got {raw!r}") from exc
    return max(n, 1)


def _require_scan_index(n: float) -> float:
    if not n > 1 + 1e-9:
        raise UsageError(f"--n must exceed 1 for scans, got {n}")
    return float(n)


def _scan_rows(records):
    rows = []
    for rec in records:
        rows.append([*rec.coords, rec.exposure, rec.renyi, rec.valid])
    return rows


def cmd_scan_qubit(args, argv):
    n = _require_scan_index(args.n)
    axes = statespace.qubit_axes(args.grid)
    records = statespace.scan_exposure(
        "qubit", statespace.SIGMA_Z, n, axes, workers=_workers_from_env()
    )
    cols = ["delta", "alpha2", "exposure", "renyi", "valid"]
    valid = [r.exposure for r in records if r.valid]
    diags = [f"valid points: {len(valid)}/{len(records)}",
             f"min exposure: {min(valid)!r}", f"max exposure: {max(valid)!r}"]
    return cols, _scan_rows(records), diags


def cmd_scan_qutrit(args, argv):
    n = _require_scan_index(args.n)
    op = statespace.spin1_operator(args.op)
    axes = statespace.qutrit_axes(args.grid)
    records = statespace.scan_exposure(
        "qutrit", op, n, axes, a_z=args.az, workers=_workers_from_env()
    )
    cols = ["ax", "ay", "exposure", "renyi", "valid"]
    valid = [r.exposure for r in records if r.valid]
    diags = [f"operator: {args.op}", f"az slice: {args.az!r}",
             f"valid points: {len(valid)}/{len(records)}",
             f"min exposure: {min(valid)!r}", f"max exposure: {max(valid)!r}"]
    return cols, _scan_rows(records), diags


def _timeseries_rows(series):
    dim = series.points[0].spectrum_a.size
    cols = ["t", "h_a", "h_b", "h_b_anc", "h_a_anc", "i_direct", "i_complementary"]
    cols += [f"lam_a_{i}" for i in range(dim)]
    rows = []
    for p in series.points:
        rows.append(
            [p.t, p.h_a, p.h_b, p.h_b_anc, p.h_a_anc, p.i_direct, p.i_complementary]
            + [float(v) for v in p.spectrum_a]
        )
    return cols, rows


def cmd_udw_evolve(args, argv):
    p = channels.UdwQubitParams(args.delta, complex(np.sqrt(args.alpha2)))
    idx = renyi.as_index(args.n)
    t_grid = np.linspace(0.0, args.tmax, args.steps)
    series = channels.udw_entropy_timeseries(p, idx, t_grid)
    cols, rows = _timeseries_rows(series)
    label = "vn" if idx.is_von_neumann else repr(idx.n)
    return cols, rows, [f"entropy index: {label}", f"delta={args.delta!r} alpha2={args.alpha2!r}"]


def cmd_udw_verify(args, argv):
    n = _require_scan_index(args.n)
    diags = []
    rows = []
    deltas = np.linspace(0.0, 1.0, args.grid)
    worst_hdd = worst_exp = 0.0
    for d in deltas:
        for a2 in np.linspace(0.0, d - d * d, args.grid):
            p = channels.UdwQubitParams(d, complex(np.sqrt(max(a2, 0.0))))
            hdd_c, exp_c = channels.udw_closed_forms(p, n)
            rho = p.matrix()
            dur = onset.durability(rho, statespace.SIGMA_Z, n)
            hdd_g = 2.0 * n * 1.0 * dur / (n - 1.0)  # field variance is 1
            exp_g = onset.variance(rho, statespace.SIGMA_Z) - dur
            dev_h, dev_e = abs(hdd_c - hdd_g), abs(exp_c - exp_g)
            worst_hdd, worst_exp = max(worst_hdd, dev_h), max(worst_exp, dev_e)
            rows.append([d, a2, hdd_c, hdd_g, dev_h, exp_c, exp_g, dev_e,
                         bool(dev_h <= args.tol and dev_e <= args.tol)])
    diags.append(f"closed vs generic: max hdd dev {worst_hdd!r}, max exposure dev {worst_exp!r}")

    rng = generator(args.seed)
    trunc = channels.fock_truncation(args.fock_levels)
    t_grid = np.linspace(0.0, 1.0, 11)
    fock_ok = True
    for k in range(args.fock_points):
        d = float(rng.uniform(0.05, 0.95))
        a2 = float(rng.uniform(0.0, d - d * d))
        p = channels.UdwQubitParams(d, complex(np.sqrt(a2)))
        dev = 0.0
        for t in t_grid:
            rho_t = channels.fock_udw_oracle(p, trunc, float(t))
            dev = max(dev, abs(abs(rho_t[0, 1]) - np.sqrt(a2) * np.exp(-2 * t * t)))
        ok = dev <= 1e-6
        fock_ok = fock_ok and ok
        diags.append(
            f"fock[{k}] delta={d!r} alpha2={a2!r} max offdiag dev={dev!r} "
            f"{'ok' if ok else 'FAIL'}"
        )
    diags.append(f"fock oracle: {'all points ok' if fock_ok else 'FAILURES'}")
    cols = ["delta", "alpha2", "hdd_closed", "hdd_generic", "hdd_dev",
            "exp_closed", "exp_generic", "exp_dev", "ok"]
    return cols, rows, diags


def cmd_onset_report(args, argv):
    rho_a = check_density(load_matrix(args.state_a))
    rho_b = check_density(load_matrix(args.state_b))
    op_a = check_hermitian(load_matrix(args.op_a))
    op_b = check_hermitian(load_matrix(args.op_b))
    h = onset.ProductHamiltonian(op_a, op_b)
    report = onset.onset_report(rho_a, rho_b, h, args.n)
    cols = ["n", "variance_a", "variance_b", "durability_a", "exposure_a",
            "hdd_a", "delta_coefficient"]
    row = [report.n, report.variance_a, report.variance_b, report.durability_a,
           report.exposure_a, report.hdd_a, report.delta_coefficient]
    d = report.op_in_eigenbasis.shape[0]
    for i in range(d):
        for j in range(d):
            cols += [f"a_re_{i}_{j}", f"a_im_{i}_{j}"]
            row += [report.op_in_eigenbasis[i, j].real, report.op_in_eigenbasis[i, j].imag]
    diags = []
    if np.isnan(report.delta_coefficient):
        diags.append("rho_B is not pure: delta_coefficient undefined (emitted as nan)")
    return cols, [row], diags


class VerificationFailed(ExposureLabError):
    """A randomized property check found a violating instance; exit 2."""

    def __init__(self, cols, rows, diags):
        super().__init__("verification failed")
        self.cols, self.rows, self.diags = cols, rows, diags


def cmd_verify(args, argv):
    fn = VERIFY_COMMANDS[args.check]
    kwargs = {}
    if args.tol is not None:
        if args.check == "durability-positivity":
            kwargs["tol"] = -abs(args.tol)
        elif args.check in ("free-hamiltonian", "tensor-extension"):
            kwargs["tol"] = args.tol
        elif args.check == "first-derivative":
            kwargs["tol_fd"] = args.tol
        else:
            kwargs["rel_tol"] = args.tol
    cols, rows = fn(args.trials, args.seed, **kwargs)
    failures = sum(1 for r in rows if not r[-1])
    diags = [f"checks: {len(rows)}", f"failures: {failures}"]
    if failures:
        raise VerificationFailed(cols, rows, diags)
    return cols, rows, diags


def cmd_spectrum(args, argv):
    gammas = [float(x) for x in args.purities.split(",")]
    d = args.dim if args.dim else len(gammas)
    lam = renyi.spectrum_from_purities(gammas, d)
    cols = [f"lambda_{i}" for i in range(d)]
    return cols, [[float(v) for v in lam]], [f"purities: {args.purities}"]


def cmd_divergence_demo(args, argv):
    spectra = onset.qutrit_spectrum_slice(args.points)
    op = A_TEST if args.op == "atest" else None
    eps_grid = [float(x) for x in args.eps.split(",")]
    rows = [
        [pt.lambda_min, pt.eps, pt.raw, pt.regularized]
        for pt in onset.trace_term_scan(spectra, eps_grid, op)
    ]
    diags = [f"operator: {args.op}", f"eps grid: {args.eps}"]
    return ["lambda_min", "eps", "raw", "regularized"], rows, diags


def cmd_isocurve(args, argv):
    curve = statespace.entropy_isocurve_qubit(args.h2, np.linspace(0.0, 1.0, args.grid))
    rows = [[p.delta, p.alpha2, p.exposure, p.renyi] for p in curve.points]
    diags = [f"target H2: {args.h2!r}", f"points on curve: {len(rows)}"]
    diags += curve.diagnostics[:20]
    if len(curve.diagnostics) > 20:
        diags.append(f"... {len(curve.diagnostics) - 20} more omitted delta values")
    return ["delta", "alpha2", "exposure", "renyi"], rows, diags


def cmd_extremize(args, argv):
    lo, hi = statespace.extremize_exposure_on_isocurve(args.h2, n=2.0, grid_size=args.grid)
    rows = [
        ["min", lo.delta, lo.alpha2, lo.exposure, lo.renyi],
        ["max", hi.delta, hi.alpha2, hi.exposure, hi.renyi],
    ]
    return ["kind", "delta", "alpha2", "exposure", "renyi"], rows, [
        f"target H2: {args.h2!r}"
    ]


# ---------------------------------------------------------------------------
# argument parsing and dispatch

def build_parser() -> _Parser:
    parser = _Parser(prog="exposure-lab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", required=True, help="output file path")
        p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("scan-qubit", help="exposure/entropy over the (delta, |alpha|^2) plane")
    p.add_argument("--n", type=float, default=2.0)
    p.add_argument("--grid", type=int, default=101)
    common(p)
    p.set_defaults(handler=cmd_scan_qubit)

    p = sub.add_parser("scan-qutrit", help="exposure/entropy over an (a_x, a_y) slice")
    p.add_argument("--op", default="Sx^2", help="spin-1 operator expression")
    p.add_argument("--az", type=float, default=0.0)
    p.add_argument("--n", type=float, default=2.0)
    p.add_argument("--grid", type=int, default=61)
    common(p)
    p.set_defaults(handler=cmd_scan_qutrit)

    p = sub.add_parser("udw-evolve", help="exact qubit/field entropy time series")
    p.add_argument("--delta", type=float, required=True)
    p.add_argument("--alpha2", type=float, required=True)
    p.add_argument("--tmax", type=float, default=1.0)
    p.add_argument("--steps", type=int, default=101)
    p.add_argument("--n", default="vn", help="Renyi order or 'vn'")
    common(p)
    p.set_defaults(handler=cmd_udw_evolve)

    p = sub.add_parser("udw-verify", help="closed form vs generic path vs Fock oracle")
    p.add_argument("--n", type=float, default=2.0)
    p.add_argument("--grid", type=int, default=50)
    p.add_argument("--fock-points", type=int, default=20)
    p.add_argument("--fock-levels", type=int, default=40)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=1e-10)
    common(p)
    p.set_defaults(handler=cmd_udw_verify)

    p = sub.add_parser("onset-report", help="onset quantities for states/operators from files")
    p.add_argument("--state-a", required=True)
    p.add_argument("--state-b", required=True)
    p.add_argument("--op-a", required=True)
    p.add_argument("--op-b", required=True)
    p.add_argument("--n", type=float, default=2.0)
    common(p)
    p.set_defaults(handler=cmd_onset_report)

    p = sub.add_parser("verify", help="randomized property checks")
    p.add_argument("check", choices=sorted(VERIFY_COMMANDS))
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=None)
    common(p)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("spectrum", help="reconstruct a spectrum from integer purities")
    p.add_argument("--purities", required=True, help="comma-separated gamma_1..gamma_d")
    p.add_argument("--dim", type=int, default=None)
    common(p)
    p.set_defaults(handler=cmd_spectrum)

    p = sub.add_parser("divergence-demo", help="raw/regularized trace-term tables")
    p.add_argument("--eps", default="1e-2,1e-3,1e-4")
    p.add_argument("--points", type=int, default=101)
    p.add_argument("--op", choices=("ones", "atest"), default="ones")
    common(p)
    p.set_defaults(handler=cmd_divergence_demo)

    p = sub.add_parser("isocurve", help="constant-H2 curve in the (delta, |alpha|^2) plane")
    p.add_argument("--h2", type=float, required=True)
    p.add_argument("--grid", type=int, default=1001)
    common(p)
    p.set_defaults(handler=cmd_isocurve)

    p = sub.add_parser("extremize", help="exposure extrema along a constant-H2 curve")
    p.add_argument("--h2", type=float, required=True)
    p.add_argument("--grid", type=int, default=1001)
    common(p)
    p.set_defaults(handler=cmd_extremize)

    return parser


def run(argv) -> int:
    """Parse argv, dispatch, write the output file, print a one-line summary."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        try:
            cols, rows, diags = args.handler(args, argv)
            failed = None
        except VerificationFailed as exc:
            cols, rows, diags = exc.cols, exc.rows, exc.diags
            failed = exc
        export_records(cols, rows, args.format, args.out, argv, diags)
        if failed is not None:
            print(f"{args.command}: FAILED ({diags[-1]}) -> {args.out}")
            return 2
        print(f"{args.command}: {len(rows)} rows -> {args.out}")
        return 0
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except NumericalFailure as exc:
        print(f"numerical/io failure: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"io failure: {exc}", file=sys.stderr)
        return 3
    except ExposureLabError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 2
    except (ValueError, json.JSONDecodeError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
