"""First-order Bogoliubov maps of a rigid, weakly accelerated cavity.

Static coefficients.  For a 1+1 Dirichlet cavity the instantaneous-mode
overlap coefficients per unit dimensionless acceleration are

    alpha_hat[m, n] = pi^2 m n (-1 + (-1)^{m+n})
                      / (L^4 (w_m - w_n)^3 sqrt(w_m w_n)),   m != n,
    alpha_hat[n, n] = 0,
    beta_hat[m, n]  = pi^2 m n (+1 - (-1)^{m+n})
                      / (L^4 (w_m + w_n)^3 sqrt(w_m w_n)).

Both vanish identically when m + n is even, are dimensionless, and depend
on (mu0, L) only through mu0 * L.  alpha_hat is antisymmetric, beta_hat
symmetric.  The frequency differences come from the cancellation-safe
`spectrum.omega_diff_matrix`.

First-order map.  To linear order in h(tau), evolution from tau0 to tauf
factors into free phases times a perturbation,

    alpha = exp(i w dtau) (1 + A),      beta = exp(i w dtau) B,
    A[m, n] = i (w_m - w_n) alpha_hat[m, n] * I(w_m - w_n),
    B[m, n] = i (w_m + w_n) beta_hat[m, n]  * I(w_m + w_n),
    I(delta) = integral exp(-i delta (tau - tau0)) h(tau) dtau.

A is anti-Hermitian and B symmetric; both inherit the parity zeros.  Every
entry is computed by its own quadrature (nothing is filled in by symmetry),
so `verify_first_order_identities` is a real check of the numerics rather
than a tautology.

Composition.  Consecutive maps combine to first order as

    A[m, n] <- A1[m, n] + exp(-i (w_m - w_n) dtau1) A2[m, n],
    B[m, n] <- B1[m, n] + exp(-i (w_m + w_n) dtau1) B2[m, n],

with the free phases adding, which is also what the interval additivity of
I(delta) gives for a concatenated profile.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .profiles import AccelerationProfile, oscillatory_integral, validate_rigidity
from .spectrum import Cavity1D, omega_diff_matrix, omega_sum_matrix, omega_vector

FIRST_ORDER_SUP_H = 0.1
IDENTITY_TOLERANCE = 1e-10


def _parity_odd_mask(n_max: int) -> np.ndarray:
    n = np.arange(1, n_max + 1)
    return (n[:, None] + n[None, :]) % 2 == 1


@dataclass(frozen=True, eq=False)
class StaticCoefficients:
    """Per-unit-h overlap coefficients of a cavity, with cached frequencies."""

    cavity: Cavity1D
    alpha_hat: np.ndarray
    beta_hat: np.ndarray
    omega: np.ndarray

    def alpha_entry(self, m: int, n: int) -> float:
        return float(self.alpha_hat[m - 1, n - 1])

    def beta_entry(self, m: int, n: int) -> float:
        return float(self.beta_hat[m - 1, n - 1])


def static_coefficients(cavity: Cavity1D) -> StaticCoefficients:
    """Evaluate alpha_hat and beta_hat for all modes up to cavity.n_max."""
    n_max = cavity.n_max
    omega = omega_vector(cavity)
    diffs = omega_diff_matrix(cavity)
    sums = omega_sum_matrix(cavity)
    n = np.arange(1, n_max + 1, dtype=float)
    mn = n[:, None] * n[None, :]
    odd = _parity_odd_mask(n_max)
    root = np.sqrt(omega[:, None] * omega[None, :])
    l4 = cavity.length**4

    safe_diffs = np.where(odd, diffs, 1.0)
    alpha = np.where(odd, -2.0 * math.pi**2 * mn / (l4 * safe_diffs**3 * root), 0.0)
    beta = np.where(odd, 2.0 * math.pi**2 * mn / (l4 * sums**3 * root), 0.0)
    alpha.setflags(write=False)
    beta.setflags(write=False)
    omega.setflags(write=False)
    return StaticCoefficients(cavity=cavity, alpha_hat=alpha, beta_hat=beta, omega=omega)


@dataclass(frozen=True, eq=False)
class FirstOrderBogoliubovMap:
    """Linear-order Bogoliubov transformation over one acceleration interval.

    `a_hat` and `b_hat` are the perturbations defined above; `phases` holds
    w_n * (tauf - tau0).  `quadrature_error` bounds the absolute error of
    any single entry inherited from the Fourier integrals.
    """

    cavity: Cavity1D
    tau0: float
    tauf: float
    a_hat: np.ndarray
    b_hat: np.ndarray
    phases: np.ndarray
    quadrature_error: float = 0.0

    @property
    def duration(self) -> float:
        return self.tauf - self.tau0

    def a_entry(self, m: int, n: int) -> complex:
        return complex(self.a_hat[m - 1, n - 1])

    def b_entry(self, m: int, n: int) -> complex:
        return complex(self.b_hat[m - 1, n - 1])

    def alpha_matrix(self, include_free_phases: bool = True) -> np.ndarray:
        """Full alpha = exp(i w dtau) (1 + A), optionally without the phases."""
        base = np.eye(self.cavity.n_max, dtype=complex) + self.a_hat
        if not include_free_phases:
            return base
        return np.exp(1j * self.phases)[:, None] * base

    def beta_matrix(self, include_free_phases: bool = True) -> np.ndarray:
        if not include_free_phases:
            return self.b_hat.copy()
        return np.exp(1j * self.phases)[:, None] * self.b_hat

    @classmethod
    def identity(cls, cavity: Cavity1D, at_time: float = 0.0) -> "FirstOrderBogoliubovMap":
        """Zero-duration map: the neutral element of composition."""
        n = cavity.n_max
        return cls(
            cavity=cavity,
            tau0=at_time,
            tauf=at_time,
            a_hat=np.zeros((n, n), dtype=complex),
            b_hat=np.zeros((n, n), dtype=complex),
            phases=np.zeros(n),
            quadrature_error=0.0,
        )


def first_order_map(
    coeffs: StaticCoefficients,
    profile: AccelerationProfile,
    tol: float = 1e-10,
    max_evaluations: int | None = None,
) -> FirstOrderBogoliubovMap:
    """Evaluate the first-order map of `profile` on `coeffs.cavity`.

    Raises ValueError when the profile breaks the rigidity bound; warns when
    sup |h| exceeds 0.1, where the neglected O(h^2) terms start to matter.
    """
    report = validate_rigidity(profile)
    if not report.ok:
        raise ValueError(
            f"profile violates the rigidity bound |h| < {report.bound}: "
            f"|h({report.tau_at_sup})| = {report.sup_h}"
        )
    if report.sup_h > FIRST_ORDER_SUP_H:
        warnings.warn(
            f"sup |h| = {report.sup_h:.3g} exceeds {FIRST_ORDER_SUP_H}; "
            "first-order accuracy degrades as O(h^2)",
            stacklevel=2,
        )
    cavity = coeffs.cavity
    n_max = cavity.n_max
    diffs = omega_diff_matrix(cavity)
    sums = omega_sum_matrix(cavity)
    a_hat = np.zeros((n_max, n_max), dtype=complex)
    b_hat = np.zeros((n_max, n_max), dtype=complex)
    worst = 0.0
    for i in range(n_max):
        for j in range(n_max):
            if (i + j) % 2 == 0:
                continue  # parity zero is exact, no quadrature needed
            delta = diffs[i, j]
            res = oscillatory_integral(profile, delta, tol=tol, max_evaluations=max_evaluations)
            a_hat[i, j] = 1j * delta * coeffs.alpha_hat[i, j] * res.value
            worst = max(worst, abs(delta * coeffs.alpha_hat[i, j]) * res.error_estimate)
            sigma = sums[i, j]
            res = oscillatory_integral(profile, sigma, tol=tol, max_evaluations=max_evaluations)
            b_hat[i, j] = 1j * sigma * coeffs.beta_hat[i, j] * res.value
            worst = max(worst, abs(sigma * coeffs.beta_hat[i, j]) * res.error_estimate)
    duration = profile.tauf - profile.tau0
    return FirstOrderBogoliubovMap(
        cavity=cavity,
        tau0=profile.tau0,
        tauf=profile.tauf,
        a_hat=a_hat,
        b_hat=b_hat,
        phases=coeffs.omega * duration,
        quadrature_error=worst,
    )


def compose(
    first: FirstOrderBogoliubovMap, second: FirstOrderBogoliubovMap
) -> FirstOrderBogoliubovMap:
    """First-order composition of two consecutive maps (first, then second)."""
    if first.cavity != second.cavity:
        raise ValueError(
            f"maps act on different cavities: {first.cavity} vs {second.cavity}"
        )
    scale = max(1.0, abs(first.tauf))
    if abs(second.tau0 - first.tauf) > 1e-12 * scale:
        raise ValueError(
            f"second map starts at tau = {second.tau0}, first ends at tau = {first.tauf}"
        )
    cavity = first.cavity
    diffs = omega_diff_matrix(cavity)
    sums = omega_sum_matrix(cavity)
    dtau1 = first.duration
    a_hat = first.a_hat + np.exp(-1j * diffs * dtau1) * second.a_hat
    b_hat = first.b_hat + np.exp(-1j * sums * dtau1) * second.b_hat
    return FirstOrderBogoliubovMap(
        cavity=cavity,
        tau0=first.tau0,
        tauf=second.tauf,
        a_hat=a_hat,
        b_hat=b_hat,
        phases=first.phases + second.phases,
        quadrature_error=first.quadrature_error + second.quadrature_error,
    )


@dataclass(frozen=True)
class IdentityReport:
    """Residuals of the structural identities of a first-order map."""

    anti_hermiticity_residual: float
    symmetry_residual: float
    parity_residual: float
    quadrature_error: float
    tolerance: float
    passed: bool


def verify_first_order_identities(
    map_: FirstOrderBogoliubovMap, tolerance: float = IDENTITY_TOLERANCE
) -> IdentityReport:
    """Check A + A^dagger = 0, B - B^T = 0 and the parity zeros.

    All entries were produced by independent quadratures, so the residuals
    measure the actual numerical consistency of the map.
    """
    anti = float(np.max(np.abs(map_.a_hat + map_.a_hat.conj().T)))
    sym = float(np.max(np.abs(map_.b_hat - map_.b_hat.T)))
    even = ~_parity_odd_mask(map_.cavity.n_max)
    parity = float(
        max(np.max(np.abs(map_.a_hat[even])), np.max(np.abs(map_.b_hat[even])))
    )
    return IdentityReport(
        anti_hermiticity_residual=anti,
        symmetry_residual=sym,
        parity_residual=parity,
        quadrature_error=map_.quadrature_error,
        tolerance=tolerance,
        passed=(anti < tolerance and sym < tolerance and parity == 0.0),
    )
