"""Shared oracles for the test suite.

The package evaluates its Fourier integrals in closed form, so the tests
check it against a plain dense-grid Simpson rule: same integrand, entirely
different numerics.
"""

from pathlib import Path

import numpy as np
from scipy.integrate import simpson

REPO_ROOT = Path(__file__).resolve().parent.parent
SCENARIO_DIR = REPO_ROOT / "scenarios"


def simpson_oscillatory(profile, delta, points_per_period=60, min_points=4001):
    """Simpson-rule value of the windowed Fourier integral of a profile.

    Resolution scales with the total phase so the rule stays accurate for
    every delta used in the tests.
    """
    duration = profile.tauf - profile.tau0
    cycles = abs(delta) * duration / (2.0 * np.pi) + 1.0
    n = max(min_points, int(points_per_period * cycles))
    if n % 2 == 0:
        n += 1
    tau = np.linspace(profile.tau0, profile.tauf, n)
    integrand = np.exp(-1j * delta * (tau - profile.tau0)) * profile.evaluate(tau)
    return complex(simpson(integrand, x=tau))


def simpson_oscillatory_segmented(profile, delta, breakpoints, points_per_segment=4001):
    """Simpson oracle for profiles with jump discontinuities.

    Integrates segment by segment so the rule never straddles a jump.  The
    two endpoint samples of each segment are nudged inward by a relative
    1e-9 so `evaluate` returns the one-sided limit belonging to that
    segment; the grid coordinates themselves stay exact.
    """
    total = 0.0 + 0.0j
    for a, b in zip(breakpoints[:-1], breakpoints[1:]):
        n = points_per_segment if points_per_segment % 2 == 1 else points_per_segment + 1
        tau = np.linspace(a, b, n)
        inside = np.clip(tau, a + 1e-9 * (b - a), b - 1e-9 * (b - a))
        integrand = np.exp(-1j * delta * (tau - profile.tau0)) * profile.evaluate(inside)
        total += complex(simpson(integrand, x=tau))
    return total
