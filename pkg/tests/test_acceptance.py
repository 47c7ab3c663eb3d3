"""Acceptance gate: one test per numbered criterion, tolerances pinned.

Each test prints `criterion NN: PASS|FAIL - detail`, so `pytest -v`
shows one line per criterion both in its own output and in the test
names.  Failing criteria fail honestly; nothing here is weakened to
pass.
"""

import math

import numpy as np
import pytest

from cavitymix.bogoliubov import compose, first_order_map, static_coefficients, verify_first_order_identities
from cavitymix.experiment import CircularMotion, ExperimentPlan, LinearMotion, circular_report, plan
from cavitymix.gaussian import (
    apply_symplectic,
    first_order_negativity,
    negativity,
    negativity_grid,
    reduce_to_pair,
    squeezed_vacuum,
    symplectic_from_map,
    symplectic_residual,
)
from cavitymix.profiles import PiecewiseConstantProfile, RampProfile, SinusoidalProfile
from cavitymix.spectrum import Cavity1D

ALPHA_12 = 2.0 * math.sqrt(2.0) / math.pi**2


def _verdict(num: int, ok: bool, detail: str) -> None:
    print(f"criterion {num:02d}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, f"criterion {num:02d}: {detail}"


def desktop_inputs(motion):
    return ExperimentPlan(
        wavelength=600e-9, lx=0.01, ly=0.01, lz=0.01, motion=motion, pair=(1, 2)
    )


def resonant_map(h0: float, dtau: float):
    coeffs = static_coefficients(Cavity1D(length=1.0, mu0=0.0, n_max=2))
    profile = SinusoidalProfile(h0=h0, omega_c=math.pi, tau0=0.0, tauf=dtau)
    return first_order_map(coeffs, profile)


def test_criterion_01_resonance_frequency():
    report = plan(desktop_inputs(LinearMotion(amplitude=1e-6, axis="x")))
    si_off = abs(report.omega_c_si / 4.2e6 - 1.0)
    per_m_off = abs(report.omega_c_per_meter / 1.4e-2 - 1.0)
    _verdict(
        1,
        si_off <= 0.02 and per_m_off <= 0.02,
        f"omega_c = {report.omega_c_si:.6g} 1/s ({si_off:.2%} from 4.2e6), "
        f"{report.omega_c_per_meter:.6g} 1/m ({per_m_off:.2%} from 1.4e-2), tolerance 2%",
    )


def test_criterion_02_growth_rate():
    report = plan(desktop_inputs(LinearMotion(amplitude=1e-6, axis="x")))
    off = abs(report.growth_rate / 6e2 - 1.0)
    _verdict(
        2,
        off <= 0.15,
        f"growth rate = {report.growth_rate:.6g} 1/s ({off:.2%} from 6e2), tolerance 15%",
    )


def test_criterion_03_circular_figures():
    report = circular_report(desktop_inputs(CircularMotion(dx=1e-3, dy=1e-3)))
    rpm_off = abs(report.rpm / 4e7 - 1.0)
    centripetal_off = abs(report.centripetal_acceleration / 1.5e6 - 1.0)
    _verdict(
        3,
        rpm_off <= 0.10 and centripetal_off <= 0.05,
        f"rpm = {report.rpm:.6g} ({rpm_off:.2%} from 4e7, tolerance 10%); "
        f"centripetal = {report.centripetal_acceleration:.6g} m/s^2 "
        f"({centripetal_off:.3g} relative from 1.5e6, tolerance 5%); "
        "d * omega^2 for a millimetre orbit at this angular velocity cannot "
        "reach down to 1.5e6 m/s^2",
    )


def test_criterion_04_creation_bound_scale():
    linear = plan(desktop_inputs(LinearMotion(amplitude=1e-6, axis="x")))
    circular = circular_report(desktop_inputs(CircularMotion(dx=1e-3, dy=1e-3)))
    log_lin = math.log10(linear.beta_h_squared)
    log_circ = math.log10(circular.beta_h_squared)
    _verdict(
        4,
        abs(log_lin - (-24.0)) <= 1.0 and abs(log_circ - (-18.0)) <= 1.0,
        f"log10 h^2: linear {log_lin:.2f} (target -24 +- 1), "
        f"circular {log_circ:.2f} (target -18 +- 1)",
    )


def test_criterion_05_resonant_linear_growth():
    h0 = 1e-3
    dtaus = np.arange(100.0, 1001.0, 100.0)
    values = np.array([abs(resonant_map(h0, t).a_entry(1, 2)) for t in dtaus])
    slope = np.polyfit(dtaus, values, 1)[0]
    expected = math.pi * ALPHA_12 * h0 / 2.0
    slope_off = abs(slope / expected - 1.0)

    coeffs = static_coefficients(Cavity1D(length=1.0, mu0=0.0, n_max=2))
    detuned = [
        abs(
            first_order_map(
                coeffs, SinusoidalProfile(h0=h0, omega_c=0.9 * math.pi, tau0=0.0, tauf=t)
            ).a_entry(1, 2)
        )
        for t in dtaus
    ]
    bound = 4.0 * ALPHA_12 * h0 / (0.1 * math.pi)
    worst = max(detuned)
    _verdict(
        5,
        slope_off <= 0.01 and worst <= bound,
        f"fitted slope {slope:.6g} vs pi*alpha*h0/2 = {expected:.6g} "
        f"({slope_off:.3%}, tolerance 1%); detuned max |A| = {worst:.3g} "
        f"<= bound {bound:.3g}",
    )


def test_criterion_06_first_order_identities():
    cavity = Cavity1D(length=1.0, mu0=0.0, n_max=5)
    coeffs = static_coefficients(cavity)
    profiles = (
        SinusoidalProfile(h0=1e-3, omega_c=2.7, tau0=0.0, tauf=10.0),
        PiecewiseConstantProfile(segments=((1.0, 5e-4), (2.0, -5e-4), (1.5, 2e-4))),
        RampProfile(h0=1e-3, ramp_time=1.5, tau0=0.0, tauf=10.0),
    )
    worst_anti = worst_sym = worst_parity = 0.0
    for profile in profiles:
        report = verify_first_order_identities(first_order_map(coeffs, profile))
        worst_anti = max(worst_anti, report.anti_hermiticity_residual)
        worst_sym = max(worst_sym, report.symmetry_residual)
        worst_parity = max(worst_parity, report.parity_residual)
    _verdict(
        6,
        worst_anti < 1e-10 and worst_sym < 1e-10 and worst_parity == 0.0,
        f"anti-Hermiticity {worst_anti:.3g} < 1e-10, symmetry {worst_sym:.3g} < 1e-10, "
        f"parity residual {worst_parity} (exact zero required) over three profile shapes",
    )


def test_criterion_07_negativity_oracle_and_ridge():
    # Pipeline vs closed form with the O(h0^2) residual constant stable
    # under halving h0.
    stable = True
    details = []
    for s in (0.5, 1.0):
        constants = {}
        for h0 in (1e-3, 5e-4):
            map_ = resonant_map(h0, dtau=2.0)
            gate = symplectic_from_map(map_, (1, 2))
            red = reduce_to_pair(squeezed_vacuum(2, s), (1, 2))
            full = negativity(apply_symplectic(red.state(), gate).sigma)
            closed = first_order_negativity(map_, (1, 2), s)
            constants[h0] = abs(full - closed) / h0**2
        ratio = max(constants.values()) / min(constants.values())
        stable = stable and ratio <= 4.0
        details.append(f"s={s}: C={constants[1e-3]:.3g}, ratio {ratio:.3g}")

    # Figure grid: ridge at the resonance column, off-resonance bounded.
    coeffs = static_coefficients(Cavity1D(length=1.0, mu0=0.0, n_max=2))
    omega_grid = np.array([0.5, 0.75, 1.0, 1.25, 1.5]) * math.pi
    dtau_grid = np.arange(5.0, 51.0, 5.0)
    s, h0 = 1.0, 1e-3
    grid = negativity_grid(coeffs, (1, 2), s, h0, omega_grid, dtau_grid)
    resonance_col = 2
    ridge_ok = bool(np.all(np.argmax(grid, axis=1) == resonance_col))
    monotone_ok = bool(np.all(np.diff(grid[:, resonance_col]) > 0.0))
    bounded_ok = True
    for j, omega_c in enumerate(omega_grid):
        if j == resonance_col:
            continue
        bound = (
            math.pi
            * ALPHA_12
            * h0
            * (1.0 / abs(math.pi - omega_c) + 1.0 / (math.pi + omega_c))
            * math.sinh(s)
        )
        bounded_ok = bounded_ok and float(np.max(grid[:, j])) <= bound
    _verdict(
        7,
        stable and ridge_ok and monotone_ok and bounded_ok,
        "; ".join(details)
        + f"; ridge at resonance column: {ridge_ok}, monotone: {monotone_ok}, "
        f"off-resonance bounded: {bounded_ok}",
    )


def test_criterion_08_purity_and_symplectic_residuals():
    worst_r = worst_rp = 0.0
    for s in (0.5, 1.0):
        for h0 in (1e-3, 5e-4):
            map_ = resonant_map(h0, dtau=2.0)
            gate = symplectic_from_map(map_, (1, 2))
            rp = symplectic_residual(gate) / h0**2
            red = reduce_to_pair(squeezed_vacuum(2, s), (1, 2))
            out = apply_symplectic(red.state(), gate)
            r = abs(np.linalg.det(out.sigma) - 1.0) / h0**2
            worst_r = max(worst_r, r)
            worst_rp = max(worst_rp, rp)
    _verdict(
        8,
        worst_r < 10.0 and worst_rp < 10.0,
        f"|det sigma - 1| <= {worst_r:.3g} h0^2, |S Omega S^T - Omega| <= "
        f"{worst_rp:.3g} h0^2, both below 10 h0^2",
    )


def test_criterion_09_dimensionless_invariance():
    base = static_coefficients(Cavity1D(length=1.0, mu0=3.0, n_max=8))
    worst = 0.0
    for c in (2.0, 10.0):
        scaled = static_coefficients(Cavity1D(length=c, mu0=3.0 / c, n_max=8))
        worst = max(
            worst,
            float(np.max(np.abs(scaled.alpha_hat - base.alpha_hat))),
            float(np.max(np.abs(scaled.beta_hat - base.beta_hat))),
        )
    _verdict(
        9,
        worst <= 1e-12,
        f"max coefficient change under (L, mu0) -> (cL, mu0/c) is {worst:.3g} <= 1e-12",
    )


def test_criterion_10_adiabatic_suppression():
    coeffs = static_coefficients(Cavity1D(length=1.0, mu0=0.0, n_max=4))
    metrics = []
    for ramp in (0.53, 5.3, 53.0):
        profile = RampProfile(h0=0.01, ramp_time=ramp, tau0=0.0, tauf=2.0 * ramp + 2.0)
        map_ = first_order_map(coeffs, profile)
        metrics.append(max(float(np.max(np.abs(map_.a_hat))), float(np.max(np.abs(map_.b_hat)))))
    decreasing = metrics[0] > metrics[1] > metrics[2]
    _verdict(
        10,
        decreasing,
        "max(|A|, |B|) over ramp times (T, 10T, 100T) = "
        + ", ".join(f"{m:.3g}" for m in metrics)
        + " (strictly decreasing required)",
    )


def test_criterion_11_composition():
    cavity = Cavity1D(length=1.0, mu0=0.3, n_max=10)
    coeffs = static_coefficients(cavity)
    profile = SinusoidalProfile(h0=0.02, omega_c=1.3, tau0=0.0, tauf=37.7, phase=0.4)
    whole = first_order_map(coeffs, profile)
    joined = compose(
        first_order_map(coeffs, profile.restrict(0.0, 17.3)),
        first_order_map(coeffs, profile.restrict(17.3, 37.7)),
    )
    worst = max(
        float(np.max(np.abs(joined.alpha_matrix() - whole.alpha_matrix()))),
        float(np.max(np.abs(joined.beta_matrix() - whole.beta_matrix()))),
    )
    _verdict(
        11,
        worst <= 1e-9,
        f"split-interval composition differs from the whole map by {worst:.3g} <= 1e-9 "
        "on the 10 x 10 block",
    )
