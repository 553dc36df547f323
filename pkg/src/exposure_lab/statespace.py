"""Qubit and qutrit state families, spin-1 operators, and exposure scans.

The qubit family is parametrized by (delta, alpha) with positivity
|alpha|^2 <= delta - delta^2, equivalently by a Bloch vector via
delta = (1 + a_z)/2 and |alpha|^2 = (a_x^2 + a_y^2)/4.  The qutrit family
keeps all diagonal entries at 1/3 and purely imaginary off-diagonals
parametrized by (a_x, a_y, a_z); positivity collapses to the sphere
condition a_x^2 + a_y^2 + a_z^2 <= 4/9.

Scans tabulate the n-exposure and the order-n entropy over grids of these
families; since qubit entropies of every order are monotone in |alpha|^2 at
fixed delta, entropy isocurves can be extracted by bisection and the
exposure extremized along them.
"""

from __future__ import annotations

import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .channels import UdwQubitParams as QubitParams
from .errors import (
    InvalidArgumentError,
    InvalidOperatorError,
    InvalidStateError,
    NoSolutionError,
)
from .onset import exposure
from .qmat import check_hermitian
from .renyi import renyi_entropy

SPHERE_RADIUS_SQ = 4.0 / 9.0

S_X = np.array([[0, 0, 0], [0, 0, -1j], [0, 1j, 0]], dtype=complex)
S_Y = np.array([[0, 0, 1j], [0, 0, 0], [-1j, 0, 0]], dtype=complex)
S_Z = np.array([[0, -1j, 0], [1j, 0, 0], [0, 0, 0]], dtype=complex)

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.diag([1.0, -1.0]).astype(complex)


def qubit_state(p: QubitParams) -> np.ndarray:
    """[[delta, alpha], [alpha*, 1 - delta]] in the sigma_z eigenbasis."""
    return p.matrix()


@dataclass(frozen=True)
class QutritParams:
    """The omega = 1/3, q = 0 qutrit family; a inside the 2/3-radius sphere."""

    a: tuple[float, float, float]

    def __post_init__(self):
        ax, ay, az = self.a
        if ax * ax + ay * ay + az * az > SPHERE_RADIUS_SQ + 1e-12:
            raise InvalidStateError(
                f"|a|^2 = {ax*ax + ay*ay + az*az!r} exceeds 4/9; state not positive"
            )


def qutrit_state(p: QutritParams) -> np.ndarray:
    """Diagonal 1/3 with purely imaginary off-diagonals set by (a_x, a_y, a_z)."""
    ax, ay, az = p.a
    return np.array(
        [
            [1.0 / 3.0, -0.5j * az, -0.5j * ay],
            [0.5j * az, 1.0 / 3.0, -0.5j * ax],
            [0.5j * ay, 0.5j * ax, 1.0 / 3.0],
        ],
        dtype=complex,
    )


# ---------------------------------------------------------------------------
# spin-1 operator expressions

_TERM_RE = re.compile(r"^([+-]?\d*\.?\d*)((?:S[xyz](?:\^\d+)?)+)$")
_FACTOR_RE = re.compile(r"S([xyz])(?:\^(\d+))?")

_BASIS = {"x": S_X, "y": S_Y, "z": S_Z}


def spin1_operator(expr: str) -> np.ndarray:
    """Build a Hermitian 3x3 operator from an expression in Sx, Sy, Sz.

    Terms are separated by + or -, factors multiply by juxtaposition, and
    ^k takes integer powers: e.g. "Sz", "Sx^2", "SySz+SzSy", "0.5Sx-Sy^2".
    The assembled matrix must be Hermitian.
    """
    compact = expr.replace(" ", "").replace("*", "")
    if not compact:
        raise InvalidOperatorError("empty operator expression")
    # split into signed terms
    pieces = re.split(r"(?=[+-])", compact)
    total = np.zeros((3, 3), dtype=complex)
    for piece in pieces:
        if not piece:
            continue
        m = _TERM_RE.match(piece)
        if not m:
            raise InvalidOperatorError(f"cannot parse term {piece!r} in {expr!r}")
        coeff_s, ops = m.groups()
        if coeff_s in ("", "+"):
            coeff = 1.0
        elif coeff_s == "-":
            coeff = -1.0
        else:
            coeff = float(coeff_s)
        mat = np.eye(3, dtype=complex)
        for axis, power in _FACTOR_RE.findall(ops):
            k = int(power) if power else 1
            mat = mat @ np.linalg.matrix_power(_BASIS[axis], k)
        total = total + coeff * mat
    dev = np.abs(total - total.conj().T).max()
    if dev > 1e-12 * max(np.abs(total).max(), 1.0):
        raise InvalidOperatorError(
            f"expression {expr!r} is not Hermitian (deviation {dev:.3e})"
        )
    return total


# ---------------------------------------------------------------------------
# grid scans

@dataclass(frozen=True)
class ScanRecord:
    """One grid point: coordinates, n-exposure, order-n entropy, validity."""

    coords: tuple[float, ...]
    exposure: float | None
    renyi: float | None
    valid: bool


def qubit_axes(num: int = 101) -> tuple[np.ndarray, np.ndarray]:
    """Default (delta, |alpha|^2) axes covering the admissible region."""
    return np.linspace(0.0, 1.0, num), np.linspace(0.0, 0.25, num)


def qutrit_axes(num: int = 61) -> tuple[np.ndarray, np.ndarray]:
    """Default (a_x, a_y) axes over the positive octant of the 2/3 sphere."""
    lim = np.sqrt(SPHERE_RADIUS_SQ)
    return np.linspace(0.0, lim, num), np.linspace(0.0, lim, num)


def _qubit_point(op, n, delta, alpha2):
    if alpha2 > delta - delta * delta + 1e-12:
        return ScanRecord((delta, alpha2), None, None, False)
    rho = QubitParams(delta=delta, alpha=complex(np.sqrt(max(alpha2, 0.0)))).matrix()
    return ScanRecord(
        (delta, alpha2), exposure(rho, op, n), renyi_entropy(rho, n), True
    )


def _qutrit_point(op, n, ax, ay, az):
    if ax * ax + ay * ay + az * az > SPHERE_RADIUS_SQ + 1e-12:
        return ScanRecord((ax, ay), None, None, False)
    rho = qutrit_state(QutritParams((ax, ay, az)))
    return ScanRecord((ax, ay), exposure(rho, op, n), renyi_entropy(rho, n), True)


def scan_exposure(
    family: str,
    op,
    n: float,
    axes: tuple[np.ndarray, np.ndarray] | None = None,
    a_z: float = 0.0,
    workers: int = 1,
) -> list[ScanRecord]:
    """Exposure/entropy table over a 2-D grid of the qubit or qutrit family.

    Rows are in row-major grid order regardless of `workers`.  Points outside
    the family's positivity region are flagged invalid and carry no values.
    """
    if not n > 1 + 1e-9:
        raise InvalidArgumentError(f"scans require n > 1, got {n}")
    op = check_hermitian(op)
    fam = family.lower()
    if fam == "qubit":
        ax0, ax1 = axes if axes is not None else qubit_axes()
        tasks = [(d, a2) for d in ax0 for a2 in ax1]
        point = lambda args: _qubit_point(op, n, *args)
    elif fam == "qutrit":
        ax0, ax1 = axes if axes is not None else qutrit_axes()
        tasks = [(x, y) for x in ax0 for y in ax1]
        point = lambda args: _qutrit_point(op, n, *args, a_z)
    else:
        raise InvalidArgumentError(f"unknown family {family!r}")

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(point, tasks))
    return [point(args) for args in tasks]


# ---------------------------------------------------------------------------
# entropy isocurves and exposure extremization (qubit family)

@dataclass(frozen=True)
class IsocurvePoint:
    delta: float
    alpha2: float
    exposure: float
    renyi: float


@dataclass(frozen=True)
class IsocurveResult:
    points: list[IsocurvePoint]
    diagnostics: list[str]


def _qubit_entropy(delta: float, alpha2: float, n: float) -> float:
    disc = max(1.0 - 4.0 * (delta - delta * delta - alpha2), 0.0)
    lp = (1.0 + np.sqrt(disc)) / 2.0
    lm = 1.0 - lp
    gam = lp**n + (lm**n if lm > 0 else 0.0)
    return float(np.log(gam) / (1.0 - n))


BISECTION_TOL = 1e-12
BISECTION_MAX_ITER = 200


def entropy_isocurve_qubit(h2_target: float, delta_grid, n: float = 2.0) -> IsocurveResult:
    """Points (delta, |alpha|^2) with H_n(delta, |alpha|^2) = target.

    H_n is strictly decreasing in |alpha|^2 at fixed delta (for n = 2,
    gamma_2 = 1 - 2(delta - delta^2 - |alpha|^2)), so bisection on
    [0, delta - delta^2] either brackets a unique solution or the delta value
    is skipped and reported in the diagnostics.
    """
    if not 0.0 <= h2_target <= np.log(2.0) + 1e-12:
        raise InvalidArgumentError(
            f"target {h2_target!r} outside [0, ln 2] is unattainable for a qubit"
        )
    points = []
    diagnostics = []
    for delta in delta_grid:
        d = float(delta)
        hi = d - d * d
        f_lo = _qubit_entropy(d, 0.0, n) - h2_target
        f_hi = _qubit_entropy(d, hi, n) - h2_target  # = -target (pure endpoint)
        if f_lo < -1e-15 or f_hi > 1e-15:
            diagnostics.append(f"delta={d!r}: target not bracketed, point omitted")
            continue
        lo_a, hi_a = 0.0, hi
        if abs(f_lo) <= 1e-15:
            mid = 0.0
        else:
            mid = 0.5 * (lo_a + hi_a)
            for _ in range(BISECTION_MAX_ITER):
                mid = 0.5 * (lo_a + hi_a)
                if _qubit_entropy(d, mid, n) - h2_target > 0.0:
                    lo_a = mid
                else:
                    hi_a = mid
                if hi_a - lo_a <= BISECTION_TOL:
                    break
            mid = 0.5 * (lo_a + hi_a)
        rho = QubitParams(delta=d, alpha=complex(np.sqrt(mid))).matrix()
        points.append(
            IsocurvePoint(
                delta=d,
                alpha2=mid,
                exposure=exposure(rho, SIGMA_Z, n),
                renyi=_qubit_entropy(d, mid, n),
            )
        )
    return IsocurveResult(points=points, diagnostics=diagnostics)


def extremize_exposure_on_isocurve(
    h_n_target: float, n: float = 2.0, family: str = "qubit", grid_size: int = 1001
) -> tuple[IsocurvePoint, IsocurvePoint]:
    """(argmin, argmax) exposure records along the constant-entropy curve.

    Dense 1-D scan over a `grid_size`-point delta grid; ties break toward
    smaller delta.
    """
    if family.lower() != "qubit":
        raise InvalidArgumentError(f"only the qubit family is supported, got {family!r}")
    curve = entropy_isocurve_qubit(h_n_target, np.linspace(0.0, 1.0, grid_size), n=n)
    if not curve.points:
        raise NoSolutionError(f"no state attains entropy {h_n_target!r}")
    lo = min(curve.points, key=lambda p: (p.exposure, p.delta))
    hi = max(curve.points, key=lambda p: (p.exposure, -p.delta))
    return lo, hi
