"""
Finite-temperature Lifshitz computations for two half-spaces.

The free energy per unit area of two parallel half-spaces at separation z is
a Matsubara sum over imaginary frequencies xi_l = 2 pi kB T l / hbar (the
l = 0 term carries half weight) of a transverse-momentum integral over the
two polarization log terms ln(1 - r_TM^a r_TM^b e^{-2 q z}) and the TE
analog.  The sphere-plate force follows from the proximity force
approximation F = 2 pi R E(z).  Difference quantities for a probe facing
two plate sections are evaluated in a single pass as the log-ratio sum,
sharing q_l and the probe reflection amplitudes between the two sections.

The momentum integral is evaluated after the substitution y = 2 q z, which
maps it onto a fixed window [y_l, y_l + Y_WINDOW] with an exponentially
decaying integrand, handled by fixed-order Gauss-Legendre quadrature
(120 nodes by default; doubling the order changes results below 1e-5
relative).  At zero frequency the integral reduces to trilogarithms, which
gives the closed-form gap between the two low-frequency conductivity models.
"""

from __future__ import annotations

import math
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, NamedTuple

import numpy as np

from .constants import C, HBAR, KB
from .materials import PermittivityModel, with_dc_conductivity

__all__ = [
    "MatsubaraGrid",
    "ReflectionPair",
    "HalfspacePair",
    "ForceCurve",
    "PressureCurve",
    "SumDiagnostics",
    "TruncationError",
    "matsubara_frequency",
    "reflection_coefficients",
    "free_energy_per_area",
    "sphere_plate_force",
    "plate_plate_pressure",
    "difference_force",
    "difference_pressure",
    "difference_force_curve",
    "difference_pressure_curve",
    "polylog3",
    "zero_freq_gap_force",
    "zero_freq_gap_pressure",
    "ZETA3",
]

# Riemann zeta(3)
ZETA3 = 1.2020569031595942

# Width of the y = 2 q z integration window beyond the lower edge; the
# integrand carries e^{-y}, so the neglected tail is below 1e-25 relative.
Y_WINDOW = 62.0

DEFAULT_NODES = 120

# PFA error is bounded by z/R; warn beyond this ratio.
PFA_RATIO_LIMIT = 0.01


class TruncationError(RuntimeError):
    """Matsubara sum hit the term cap before reaching the requested tolerance."""

    def __init__(self, message: str, diagnostics: "SumDiagnostics"):
        super().__init__(message)
        self.diagnostics = diagnostics


@dataclass(frozen=True)
class MatsubaraGrid:
    """Temperature and truncation policy of the thermal sum.

    The sum stops once the latest term falls below ``rel_tol`` times the
    accumulated value, and raises :class:`TruncationError` if that has not
    happened after ``l_max_cap`` terms.
    """

    T: float
    rel_tol: float = 1e-9
    l_max_cap: int = 20000

    def __post_init__(self) -> None:
        if not self.T > 0.0:
            raise ValueError("temperature must be positive")
        if not 0.0 < self.rel_tol < 1e-3:
            raise ValueError("rel_tol must lie in (0, 1e-3)")
        if self.l_max_cap < 100:
            raise ValueError("l_max_cap must be at least 100")


class ReflectionPair(NamedTuple):
    r_tm: float
    r_te: float


@dataclass(frozen=True)
class HalfspacePair:
    """Two bounding materials plus the probe geometry.

    ``sphere_radius`` is None for plate-plate computations and the sphere
    radius in meters for sphere-plate ones.
    """

    side_a: PermittivityModel
    side_b: PermittivityModel
    sphere_radius: float | None = None

    def __post_init__(self) -> None:
        if self.sphere_radius is not None and not self.sphere_radius > 0.0:
            raise ValueError("sphere radius must be positive")


@dataclass(frozen=True)
class SumDiagnostics:
    """Truncation record of one Matsubara sum."""

    n_terms: int
    last_term_rel: float
    converged: bool


def _validated_curve(separations, values, metadata):
    separations = tuple(float(z) for z in separations)
    values = tuple(float(v) for v in values)
    if len(separations) != len(values):
        raise ValueError("separations and values differ in length")
    if any(b <= a for a, b in zip(separations, separations[1:])):
        raise ValueError("separations must be strictly increasing")
    if not all(math.isfinite(v) for v in values):
        raise ValueError("curve values must be finite")
    return separations, values, dict(metadata)


@dataclass(frozen=True)
class ForceCurve:
    """Difference force (N) on a separation grid; attractive values negative."""

    separations: tuple[float, ...]
    values: tuple[float, ...]
    metadata: dict

    def __post_init__(self) -> None:
        s, v, m = _validated_curve(self.separations, self.values, self.metadata)
        object.__setattr__(self, "separations", s)
        object.__setattr__(self, "values", v)
        object.__setattr__(self, "metadata", m)


@dataclass(frozen=True)
class PressureCurve:
    """Difference pressure (Pa) on a separation grid; attractive values negative."""

    separations: tuple[float, ...]
    values: tuple[float, ...]
    metadata: dict

    def __post_init__(self) -> None:
        s, v, m = _validated_curve(self.separations, self.values, self.metadata)
        object.__setattr__(self, "separations", s)
        object.__setattr__(self, "values", v)
        object.__setattr__(self, "metadata", m)


def matsubara_frequency(l: int, T: float) -> float:
    """xi_l = 2 pi kB T l / hbar in rad/s."""
    if l < 0:
        raise ValueError("Matsubara index must be non-negative")
    if not T > 0.0:
        raise ValueError("temperature must be positive")
    return 2.0 * math.pi * KB * T * l / HBAR


# --- reflection amplitudes ---------------------------------------------


def reflection_coefficients(
    eps: float,
    xi: float,
    k_perp: float,
    *,
    te_zero: str = "zero",
    plasma_omega_p: float | None = None,
) -> ReflectionPair:
    """TM/TE reflection amplitudes at imaginary frequency xi.

    For xi > 0 and finite eps >= 1:

        q = sqrt(k_perp^2 + xi^2/c^2),  k = sqrt(k_perp^2 + eps xi^2/c^2),
        r_TM = (eps q - k)/(eps q + k),  r_TE = (k - q)/(k + q).

    ``eps = math.inf`` is the marker for a diverging (dc conducting)
    permittivity: r_TM = 1 at any frequency.  At xi = 0 the TE amplitude of
    such a material follows ``te_zero``: 0 for the default prescription, or
    the plasma-limit value computed from ``plasma_omega_p`` (1 if no plasma
    frequency is given, i.e. the perfect-conductor limit).  Finite-eps
    materials always have r_TE = 0 at zero frequency.
    """
    if k_perp < 0.0:
        raise ValueError("k_perp must be non-negative")
    if xi < 0.0:
        raise ValueError("xi must be non-negative")
    if xi == 0.0 and k_perp == 0.0:
        raise ValueError("xi and k_perp cannot both vanish (undefined direction)")
    if not math.isinf(eps) and eps < 1.0:
        raise ValueError("eps must be >= 1 or the 'infinite' marker math.inf")
    if te_zero not in ("zero", "plasma"):
        raise ValueError("te_zero must be 'zero' or 'plasma'")

    if xi == 0.0:
        if math.isinf(eps):
            r_tm = 1.0
            if te_zero == "plasma":
                if plasma_omega_p is None:
                    r_te = 1.0
                else:
                    kappa = math.sqrt(k_perp * k_perp + (plasma_omega_p / C) ** 2)
                    r_te = (kappa - k_perp) / (kappa + k_perp)
            else:
                r_te = 0.0
        else:
            r_tm = (eps - 1.0) / (eps + 1.0)
            r_te = 0.0
        return ReflectionPair(r_tm, r_te)

    if math.isinf(eps):
        return ReflectionPair(1.0, 1.0)
    # sharing the k_perp^2 + eps (xi/c)^2 expression makes eps = 1 give
    # bitwise-equal q and k, hence exactly vanishing amplitudes
    q = math.sqrt(k_perp * k_perp + 1.0 * (xi / C) ** 2)
    k = math.sqrt(k_perp * k_perp + eps * (xi / C) ** 2)
    return ReflectionPair((eps * q - k) / (eps * q + k), (k - q) / (k + q))


def _model_reflections(model: PermittivityModel, xi: float, kp2):
    """Vectorized r_TM, r_TE of one material over transverse momenta kp2 = k_perp^2.

    q is rebuilt from kp2 with the same expression used for k, so eps = 1
    yields exactly vanishing amplitudes.
    """
    if xi == 0.0:
        q = np.sqrt(kp2)
        eps0 = model.static_permittivity()
        if math.isinf(eps0):
            r_tm = np.ones_like(q)
            if model.te_zero == "plasma":
                if model.perfect_conductor:
                    r_te = np.ones_like(q)
                elif model.drude is not None:
                    kappa = np.sqrt(kp2 + (model.drude.omega_p / C) ** 2)
                    r_te = (kappa - q) / (kappa + q)
                else:
                    # dc flag without free-carrier parameters: no plasma scale
                    r_te = np.zeros_like(q)
            else:
                r_te = np.zeros_like(q)
        else:
            r_tm = np.full_like(q, (eps0 - 1.0) / (eps0 + 1.0))
            r_te = np.zeros_like(q)
        return r_tm, r_te

    eps = model.eval(xi)
    if math.isinf(eps):
        ones = np.ones_like(kp2)
        return ones, ones
    xi_c2 = (xi / C) ** 2
    q = np.sqrt(kp2 + 1.0 * xi_c2)
    k = np.sqrt(kp2 + eps * xi_c2)
    eq = eps * q
    return (eq - k) / (eq + k), (k - q) / (k + q)


def _zero_freq_te_vanishes(model: PermittivityModel) -> bool:
    """True when the material's zero-frequency TE amplitude is identically 0."""
    if not math.isinf(model.static_permittivity()):
        return True
    return model.te_zero == "zero" or (
        not model.perfect_conductor and model.drude is None
    )


# --- quadrature ---------------------------------------------------------


@lru_cache(maxsize=None)
def _leggauss(n: int):
    x, w = np.polynomial.legendre.leggauss(n)
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


def _momentum_grid(xi: float, z: float, nodes: int):
    """Quadrature grid in y = 2 q z together with the k_perp^2 array.

    Nodes are placed in u with y = y_min + u^2, which clusters points at the
    lower edge; the zero-frequency integrand has a y ln y endpoint behaviour
    that the substitution turns into the quadrature-friendly u^3 ln u.
    """
    x, w = _leggauss(nodes)
    half = 0.5 * math.sqrt(Y_WINDOW)
    u = (x + 1.0) * half
    y_min = 2.0 * z * xi / C
    y = y_min + u * u
    weights = w * half * 2.0 * u
    # q^2 - (xi/c)^2 = u^2 (u^2 + 2 y_min) / (2 z)^2, free of cancellation
    kp2 = u * u * (u * u + 2.0 * y_min) / (4.0 * z * z)
    return y, weights, kp2


# --- Matsubara summation engine -----------------------------------------


def _matsubara_sum(
    term: Callable[[int, float], float],
    grid: MatsubaraGrid,
    l0_value: float | None = None,
) -> tuple[float, SumDiagnostics]:
    """Sum term(l, xi_l) with half weight at l = 0 and adaptive truncation.

    ``l0_value`` substitutes the l = 0 term (before the half weight), used
    when it is available in closed form.
    """
    total = 0.0
    for l in range(grid.l_max_cap + 1):
        xi = matsubara_frequency(l, grid.T)
        t = l0_value if (l == 0 and l0_value is not None) else term(l, xi)
        if l == 0:
            t *= 0.5
        total += t
        if l >= 1 and abs(t) <= grid.rel_tol * abs(total):
            rel = abs(t) / abs(total) if total != 0.0 else 0.0
            return total, SumDiagnostics(n_terms=l + 1, last_term_rel=rel, converged=True)
    rel = abs(t) / abs(total) if total != 0.0 else math.inf
    diag = SumDiagnostics(n_terms=grid.l_max_cap + 1, last_term_rel=rel, converged=False)
    raise TruncationError(
        f"Matsubara sum not converged after {diag.n_terms} terms "
        f"(last term {rel:.3e} of total, tolerance {grid.rel_tol:.1e})",
        diag,
    )


# --- core quantities -----------------------------------------------------


def free_energy_per_area(
    pair: HalfspacePair,
    z: float,
    grid: MatsubaraGrid,
    *,
    nodes: int = DEFAULT_NODES,
    with_diagnostics: bool = False,
):
    """Free energy per unit area (J/m^2) of two half-spaces at separation z.

    Negative for attractive configurations.
    """
    if not z > 0.0:
        raise ValueError("separation must be positive")
    side_a, side_b = pair.side_a, pair.side_b

    def term(l: int, xi: float) -> float:
        y, w, kp2 = _momentum_grid(xi, z, nodes)
        rta, rea = _model_reflections(side_a, xi, kp2)
        rtb, reb = _model_reflections(side_b, xi, kp2)
        em = np.exp(-y)
        g = np.log1p(-rta * rtb * em) + np.log1p(-rea * reb * em)
        return float(np.dot(w, y * g))

    s, diag = _matsubara_sum(term, grid)
    value = KB * grid.T / (8.0 * math.pi * z * z) * s
    return (value, diag) if with_diagnostics else value


def sphere_plate_force(
    pair: HalfspacePair,
    z: float,
    grid: MatsubaraGrid,
    *,
    nodes: int = DEFAULT_NODES,
    with_diagnostics: bool = False,
):
    """Sphere-plate force (N) via the proximity force approximation 2 pi R E(z)."""
    if pair.sphere_radius is None:
        raise ValueError("sphere_plate_force needs a sphere-plate pair")
    R = pair.sphere_radius
    if z / R > PFA_RATIO_LIMIT:
        warnings.warn(
            f"z/R = {z / R:.3g} exceeds {PFA_RATIO_LIMIT}; the proximity force "
            "approximation error grows like z/R",
            stacklevel=2,
        )
    out = free_energy_per_area(pair, z, grid, nodes=nodes, with_diagnostics=with_diagnostics)
    if with_diagnostics:
        energy, diag = out
        return 2.0 * math.pi * R * energy, diag
    return 2.0 * math.pi * R * out


def plate_plate_pressure(
    pair: HalfspacePair,
    z: float,
    grid: MatsubaraGrid,
    *,
    nodes: int = DEFAULT_NODES,
    with_diagnostics: bool = False,
):
    """Pressure (Pa) between two half-space plates; negative = attractive."""
    if not z > 0.0:
        raise ValueError("separation must be positive")
    side_a, side_b = pair.side_a, pair.side_b

    def term(l: int, xi: float) -> float:
        y, w, kp2 = _momentum_grid(xi, z, nodes)
        rta, rea = _model_reflections(side_a, xi, kp2)
        rtb, reb = _model_reflections(side_b, xi, kp2)
        g = _pressure_kernel(rta * rtb, y) + _pressure_kernel(rea * reb, y)
        return float(np.dot(w, y * y * g))

    s, diag = _matsubara_sum(term, grid)
    value = -KB * grid.T / (8.0 * math.pi * z**3) * s
    return (value, diag) if with_diagnostics else value


def _pressure_kernel(a, y):
    # a e^{-y} / (1 - a e^{-y}) written as a / (expm1(y) + (1 - a)) for
    # stability near y = 0 with a = 1.
    return a / (np.expm1(y) + (1.0 - a))


def _apply_low_freq_model(model: PermittivityModel, low_freq_model: str | None):
    if low_freq_model is None:
        return model
    if low_freq_model == "a":
        return with_dc_conductivity(model, False)
    if low_freq_model == "b":
        return with_dc_conductivity(model, True)
    raise ValueError("low_freq_model must be None, 'a' or 'b'")


def _zero_freq_tm(model: PermittivityModel) -> float:
    eps0 = model.static_permittivity()
    if math.isinf(eps0):
        return 1.0
    return (eps0 - 1.0) / (eps0 + 1.0)


def difference_force(
    probe: PermittivityModel,
    mat_high: PermittivityModel,
    mat_low: PermittivityModel,
    R: float,
    z: float,
    grid: MatsubaraGrid,
    *,
    low_freq_model: str | None = None,
    nodes: int = DEFAULT_NODES,
    analytic_l0: bool = False,
    with_diagnostics: bool = False,
):
    """One-pass difference force F_high(z) - F_low(z) on a sphere of radius R.

    ``low_freq_model`` forces the zero-frequency dc-conductivity treatment of
    ``mat_low``: ``"a"`` neglects it (finite static permittivity), ``"b"``
    keeps it; by default the material is used as built.  ``analytic_l0``
    replaces the numerically integrated zero-frequency term with its exact
    trilogarithm value (valid when both plate sections have vanishing
    zero-frequency TE reflection).
    """
    if not R > 0.0:
        raise ValueError("sphere radius must be positive")
    if not z > 0.0:
        raise ValueError("separation must be positive")
    if z / R > PFA_RATIO_LIMIT:
        warnings.warn(
            f"z/R = {z / R:.3g} exceeds {PFA_RATIO_LIMIT}; the proximity force "
            "approximation error grows like z/R",
            stacklevel=2,
        )
    mat_low = _apply_low_freq_model(mat_low, low_freq_model)

    def term(l: int, xi: float) -> float:
        y, w, kp2 = _momentum_grid(xi, z, nodes)
        rtp, rep = _model_reflections(probe, xi, kp2)
        rth, reh = _model_reflections(mat_high, xi, kp2)
        rtl, rel = _model_reflections(mat_low, xi, kp2)
        em = np.exp(-y)
        # grouped per polarization: identical sections cancel exactly
        g = (np.log1p(-rtp * rth * em) - np.log1p(-rtp * rtl * em)) + (
            np.log1p(-rep * reh * em) - np.log1p(-rep * rel * em)
        )
        return float(np.dot(w, y * g))

    l0 = _analytic_l0_energy(probe, mat_high, mat_low) if analytic_l0 else None
    s, diag = _matsubara_sum(term, grid, l0_value=l0)
    value = KB * grid.T * R / (4.0 * z * z) * s
    return (value, diag) if with_diagnostics else value


def difference_pressure(
    probe: PermittivityModel,
    mat_high: PermittivityModel,
    mat_low: PermittivityModel,
    z: float,
    grid: MatsubaraGrid,
    *,
    low_freq_model: str | None = None,
    nodes: int = DEFAULT_NODES,
    analytic_l0: bool = False,
    with_diagnostics: bool = False,
):
    """One-pass difference pressure P_high(z) - P_low(z) between plates."""
    if not z > 0.0:
        raise ValueError("separation must be positive")
    mat_low = _apply_low_freq_model(mat_low, low_freq_model)

    def term(l: int, xi: float) -> float:
        y, w, kp2 = _momentum_grid(xi, z, nodes)
        rtp, rep = _model_reflections(probe, xi, kp2)
        rth, reh = _model_reflections(mat_high, xi, kp2)
        rtl, rel = _model_reflections(mat_low, xi, kp2)
        g = (_pressure_kernel(rtp * rth, y) - _pressure_kernel(rtp * rtl, y)) + (
            _pressure_kernel(rep * reh, y) - _pressure_kernel(rep * rel, y)
        )
        return float(np.dot(w, y * y * g))

    l0 = _analytic_l0_pressure(probe, mat_high, mat_low) if analytic_l0 else None
    s, diag = _matsubara_sum(term, grid, l0_value=l0)
    value = -KB * grid.T / (8.0 * math.pi * z**3) * s
    return (value, diag) if with_diagnostics else value


def _require_te_free_l0(mat_high: PermittivityModel, mat_low: PermittivityModel):
    if not (_zero_freq_te_vanishes(mat_high) and _zero_freq_te_vanishes(mat_low)):
        raise ValueError(
            "analytic zero-frequency term requires both plate sections to have "
            "vanishing TE reflection at zero frequency"
        )


def _analytic_l0_energy(probe, mat_high, mat_low) -> float:
    # integral of y ln(1 - A e^{-y}) over [0, inf) equals -Li3(A); the TE
    # products vanish because the plate sections have r_TE(0) = 0.
    _require_te_free_l0(mat_high, mat_low)
    rp = _zero_freq_tm(probe)
    return -polylog3(rp * _zero_freq_tm(mat_high)) + polylog3(rp * _zero_freq_tm(mat_low))


def _analytic_l0_pressure(probe, mat_high, mat_low) -> float:
    # integral of y^2 A e^{-y}/(1 - A e^{-y}) over [0, inf) equals 2 Li3(A).
    _require_te_free_l0(mat_high, mat_low)
    rp = _zero_freq_tm(probe)
    return 2.0 * (
        polylog3(rp * _zero_freq_tm(mat_high)) - polylog3(rp * _zero_freq_tm(mat_low))
    )


# --- separation sweeps ---------------------------------------------------


def _sweep_point(args):
    kind, probe, mat_high, mat_low, R, z, grid, low_freq_model, nodes = args
    if kind == "force":
        return difference_force(
            probe, mat_high, mat_low, R, z, grid,
            low_freq_model=low_freq_model, nodes=nodes, with_diagnostics=True,
        )
    return difference_pressure(
        probe, mat_high, mat_low, z, grid,
        low_freq_model=low_freq_model, nodes=nodes, with_diagnostics=True,
    )


def _run_sweep(kind, probe, mat_high, mat_low, R, separations, grid,
               low_freq_model, nodes, workers):
    jobs = [
        (kind, probe, mat_high, mat_low, R, float(z), grid, low_freq_model, nodes)
        for z in separations
    ]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_sweep_point, jobs))
    else:
        results = [_sweep_point(job) for job in jobs]
    values = [value for value, _ in results]
    diags = [diag for _, diag in results]
    metadata = {
        "probe": probe.label,
        "material_high": mat_high.label,
        "material_low": mat_low.label,
        "temperature_K": grid.T,
        "low_freq_model": low_freq_model,
        "rel_tol": grid.rel_tol,
        "nodes": nodes,
        "l_terms_per_z": tuple(d.n_terms for d in diags),
        "tail_rel_per_z": tuple(d.last_term_rel for d in diags),
        "max_tail_rel": max(d.last_term_rel for d in diags),
    }
    return values, metadata


def difference_force_curve(
    probe: PermittivityModel,
    mat_high: PermittivityModel,
    mat_low: PermittivityModel,
    R: float,
    separations,
    grid: MatsubaraGrid,
    *,
    low_freq_model: str | None = None,
    nodes: int = DEFAULT_NODES,
    workers: int = 1,
) -> ForceCurve:
    """Difference force over a separation grid.

    Each separation is an independent work item; with ``workers > 1`` the
    points are dispatched to a process pool.  The per-point Matsubara sums
    run in fixed index order, so results are bit-identical for any worker
    count.
    """
    values, metadata = _run_sweep(
        "force", probe, mat_high, mat_low, R, separations, grid,
        low_freq_model, nodes, workers,
    )
    metadata["sphere_radius_m"] = R
    return ForceCurve(tuple(separations), tuple(values), metadata)


def difference_pressure_curve(
    probe: PermittivityModel,
    mat_high: PermittivityModel,
    mat_low: PermittivityModel,
    separations,
    grid: MatsubaraGrid,
    *,
    low_freq_model: str | None = None,
    nodes: int = DEFAULT_NODES,
    workers: int = 1,
) -> PressureCurve:
    """Difference pressure over a separation grid (see difference_force_curve)."""
    values, metadata = _run_sweep(
        "pressure", probe, mat_high, mat_low, None, separations, grid,
        low_freq_model, nodes, workers,
    )
    return PressureCurve(tuple(separations), tuple(values), metadata)


# --- trilogarithm and zero-frequency gap formulas ------------------------

_PI2_6 = math.pi**2 / 6.0


def polylog3(x: float) -> float:
    """Trilogarithm Li3(x) = sum x^k/k^3 for 0 <= x <= 1, to 1e-12 absolute.

    Uses the defining series up to x = 0.99; closer to 1 it switches to the
    expansion in u = -ln x,

        Li3(e^-u) = zeta(3) - (pi^2/6) u + (3/2 - ln u) u^2/2 + u^3/12
                    - u^4/288 + u^6/86400 - ...

    whose truncation error is below 1e-18 for u <= 0.011.
    """
    if not 0.0 <= x <= 1.0:
        raise ValueError("polylog3 is defined here for x in [0, 1]")
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return ZETA3
    if x <= 0.99:
        total = 0.0
        power = x
        k = 1
        while True:
            term = power / (k * k * k)
            total += term
            # geometric bound on the series tail
            if term * x / (1.0 - x) < 1e-15:
                return total
            power *= x
            k += 1
    u = -math.log(x)
    u2 = u * u
    return (
        ZETA3
        - _PI2_6 * u
        + (1.5 - math.log(u)) * 0.5 * u2
        + u2 * u / 12.0
        - u2 * u2 / 288.0
        + u2 * u2 * u2 / 86400.0
    )


def zero_freq_gap_force(R: float, z: float, T: float, eps0: float) -> float:
    """Closed-form force gap between the two low-frequency conductivity models.

    Returns -(kB T R)/(8 z^2) * (zeta(3) - Li3[(eps0-1)/(eps0+1)]), the exact
    zero-frequency-term difference for a metallic sphere above a plate section
    of static permittivity ``eps0``.  Tends to 0 as eps0 -> inf.
    """
    if not (R > 0.0 and z > 0.0 and T > 0.0):
        raise ValueError("R, z, T must be positive")
    if not eps0 > 1.0:
        raise ValueError("eps0 must exceed 1")
    if math.isinf(eps0):
        return 0.0
    x = (eps0 - 1.0) / (eps0 + 1.0)
    return -KB * T * R / (8.0 * z * z) * (ZETA3 - polylog3(x))


def zero_freq_gap_pressure(z: float, T: float, eps0: float) -> float:
    """Closed-form pressure gap, -(kB T)/(8 pi z^3) * (zeta(3) - Li3[...])."""
    if not (z > 0.0 and T > 0.0):
        raise ValueError("z, T must be positive")
    if not eps0 > 1.0:
        raise ValueError("eps0 must exceed 1")
    if math.isinf(eps0):
        return 0.0
    x = (eps0 - 1.0) / (eps0 + 1.0)
    return -KB * T / (8.0 * math.pi * z**3) * (ZETA3 - polylog3(x))
