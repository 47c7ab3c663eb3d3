"""Gaussian states, symplectic transforms, and negativity.

Quadratures are ordered (q1, p1, q2, p2, ...) with commutators
[X_i, X_j] = i Omega_ij, where the only nonvanishing components of the
symplectic form are Omega_{2i-1,2i} = -Omega_{2i,2i-1} = 1 (1-based).
The covariance matrix is sigma_ij = <X_i X_j + X_j X_i>/2 - <X_i><X_j>,
normalized so the vacuum is the identity.

Squeezing convention.  squeezed_vacuum assigns each mode the covariance
diag(e^s, e^{-s}).  With this normalization the mixing pipeline below
reproduces the closed form N = |Im A[m, n]| sinh s exactly at first order,
which is the anchor the convention is chosen against (a diag(e^{2s},
e^{-2s}) block would land on sinh 2s instead).

A first-order Bogoliubov map restricted to a mode pair acts on the pair's
quadratures by the real 4x4 matrix built from the complex 2x2 blocks of
alpha and beta,

    S[block i, block j] = [[Re(alpha + beta)_ij, -Im(alpha - beta)_ij],
                           [Im(alpha + beta)_ij,  Re(alpha - beta)_ij]],

which for beta = 0 and alpha = e^{i theta} reduces to a rotation by theta.
S is symplectic up to O(h^2); apply_symplectic widens the bona-fide
tolerance of the output state accordingly.  Restricting to the pair is
justified at first order: a pure state stays pure and the reduced state of
two modes depends only on the coefficients mixing those two modes.

Entanglement of a two-mode reduction is quantified by the smallest
symplectic eigenvalue nu of the partial transpose P sigma P with
P = diag(1, 1, 1, -1): the negativity is max{0, (1/nu - 1)/2}.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .bogoliubov import FirstOrderBogoliubovMap, StaticCoefficients
from .profiles import SinusoidalProfile, oscillatory_integral
from .spectrum import omega_diff_1d

SYMMETRY_TOL = 1e-12
PSD_TOL = 1e-10
PAIRING_TOL = 1e-8
B_OVER_A_REGIME = 0.01


class SymplecticPairingError(RuntimeError):
    """Eigenvalues of Omega sigma are not pure-imaginary conjugate pairs."""


def symplectic_form(n_modes: int) -> np.ndarray:
    """The 2N x 2N symplectic form for the (q1, p1, q2, p2, ...) ordering."""
    if n_modes < 1:
        raise ValueError(f"n_modes must be at least 1, got {n_modes}")
    omega = np.zeros((2 * n_modes, 2 * n_modes))
    for k in range(n_modes):
        omega[2 * k, 2 * k + 1] = 1.0
        omega[2 * k + 1, 2 * k] = -1.0
    return omega


def symplectic_residual(s: np.ndarray) -> float:
    """Max-norm deviation of S Omega S^T from Omega."""
    omega = symplectic_form(s.shape[0] // 2)
    return float(np.max(np.abs(s @ omega @ s.T - omega)))


@dataclass(frozen=True, eq=False)
class CovarianceState:
    """N-mode Gaussian state: covariance matrix plus first moments.

    `psd_tol` is the tolerance of the bona-fide check (eigenvalues of
    sigma + i Omega must exceed -psd_tol); transformations that are
    symplectic only to O(h^2) widen it on their output.
    """

    sigma: np.ndarray
    mean: np.ndarray | None = None
    psd_tol: float = PSD_TOL

    def __post_init__(self):
        sigma = np.array(self.sigma, dtype=float)
        if sigma.ndim != 2 or sigma.shape[0] != sigma.shape[1] or sigma.shape[0] % 2:
            raise ValueError(f"covariance must be square of even size, got {sigma.shape}")
        if np.max(np.abs(sigma - sigma.T)) > SYMMETRY_TOL:
            raise ValueError("covariance matrix is not symmetric")
        mean = self.mean
        mean = np.zeros(sigma.shape[0]) if mean is None else np.array(mean, dtype=float)
        if mean.shape != (sigma.shape[0],):
            raise ValueError(
                f"first moments have shape {mean.shape}, expected ({sigma.shape[0]},)"
            )
        omega = symplectic_form(sigma.shape[0] // 2)
        bound = float(np.min(np.linalg.eigvalsh(sigma + 1j * omega)))
        if bound < -self.psd_tol:
            raise ValueError(
                f"sigma + i Omega has eigenvalue {bound}, below -{self.psd_tol}: "
                "not a bona fide Gaussian state"
            )
        sigma.setflags(write=False)
        mean.setflags(write=False)
        object.__setattr__(self, "sigma", sigma)
        object.__setattr__(self, "mean", mean)

    @property
    def n_modes(self) -> int:
        return self.sigma.shape[0] // 2

    @classmethod
    def vacuum(cls, n_modes: int) -> "CovarianceState":
        return cls(sigma=np.eye(2 * n_modes))


def squeezed_vacuum(n_modes: int, s: float) -> CovarianceState:
    """Product state with every mode squeezed by s along the same quadrature.

    Per-mode covariance diag(e^s, e^{-s}); see the module docstring for why
    this normalization and not diag(e^{2s}, e^{-2s}).  Each block has unit
    determinant, so the state is pure.
    """
    if s < 0.0:
        raise ValueError(f"squeezing parameter must be nonnegative, got {s}")
    diag = np.empty(2 * n_modes)
    diag[0::2] = math.exp(s)
    diag[1::2] = math.exp(-s)
    return CovarianceState(sigma=np.diag(diag))


def apply_symplectic(state: CovarianceState, s: np.ndarray) -> CovarianceState:
    """Transform sigma -> S sigma S^T and the first moments by S."""
    s = np.asarray(s, dtype=float)
    if s.shape != state.sigma.shape:
        raise ValueError(
            f"transformation shape {s.shape} does not match state {state.sigma.shape}"
        )
    tol = max(state.psd_tol, 10.0 * symplectic_residual(s), PSD_TOL)
    return CovarianceState(sigma=s @ state.sigma @ s.T, mean=s @ state.mean, psd_tol=tol)


@dataclass(frozen=True, eq=False)
class TwoModeReduction:
    """Reduced 4x4 covariance of one mode pair, labels 1-based."""

    pair: tuple[int, int]
    sigma_red: np.ndarray
    mean_red: np.ndarray

    def state(self, psd_tol: float = PSD_TOL) -> CovarianceState:
        return CovarianceState(sigma=self.sigma_red, mean=self.mean_red, psd_tol=psd_tol)


def reduce_to_pair(state: CovarianceState, pair: tuple[int, int]) -> TwoModeReduction:
    """Discard all modes except the (1-based) pair."""
    m, n = pair
    if m == n:
        raise ValueError(f"pair must name two distinct modes, got {pair}")
    for k in (m, n):
        if not 1 <= k <= state.n_modes:
            raise ValueError(f"mode {k} outside the {state.n_modes}-mode state")
    idx = [2 * m - 2, 2 * m - 1, 2 * n - 2, 2 * n - 1]
    return TwoModeReduction(
        pair=pair,
        sigma_red=state.sigma[np.ix_(idx, idx)].copy(),
        mean_red=state.mean[idx].copy(),
    )


def _quadrature_block(alpha: complex, beta: complex) -> np.ndarray:
    return np.array(
        [
            [(alpha + beta).real, -(alpha - beta).imag],
            [(alpha + beta).imag, (alpha - beta).real],
        ]
    )


def symplectic_from_map(
    map_: FirstOrderBogoliubovMap,
    pair: tuple[int, int],
    include_free_phases: bool = False,
) -> np.ndarray:
    """4x4 quadrature action of the map restricted to the (1-based) pair.

    With include_free_phases off the blocks come from alpha = 1 + A and
    beta = B alone; the omitted phases are local rotations, under which the
    symplectic spectrum of any reduction's partial transpose is invariant.
    """
    m, n = pair
    if m == n:
        raise ValueError(f"pair must name two distinct modes, got {pair}")
    n_max = map_.cavity.n_max
    for k in (m, n):
        if not 1 <= k <= n_max:
            raise ValueError(f"mode {k} outside truncation n_max = {n_max}")
    alpha = map_.alpha_matrix(include_free_phases=include_free_phases)
    beta = map_.beta_matrix(include_free_phases=include_free_phases)
    s = np.empty((4, 4))
    for bi, i in enumerate((m - 1, n - 1)):
        for bj, j in enumerate((m - 1, n - 1)):
            s[2 * bi : 2 * bi + 2, 2 * bj : 2 * bj + 2] = _quadrature_block(
                alpha[i, j], beta[i, j]
            )
    return s


def partial_transpose(sigma_red: np.ndarray) -> np.ndarray:
    """P sigma P with P = diag(1, 1, 1, -1): time reversal of the second mode."""
    sigma_red = np.asarray(sigma_red, dtype=float)
    if sigma_red.shape != (4, 4):
        raise ValueError(f"partial transpose expects a 4x4 covariance, got {sigma_red.shape}")
    p = np.diag([1.0, 1.0, 1.0, -1.0])
    return p @ sigma_red @ p


def symplectic_eigenvalues(sigma: np.ndarray) -> np.ndarray:
    """Moduli {nu} of the pure-imaginary eigenvalue pairs of Omega sigma.

    Raises SymplecticPairingError when the spectrum is not pure-imaginary
    conjugate pairs to PAIRING_TOL, which signals a non-covariance input.
    Returned ascending, one value per mode.
    """
    sigma = np.asarray(sigma, dtype=float)
    if sigma.ndim != 2 or sigma.shape[0] != sigma.shape[1] or sigma.shape[0] % 2:
        raise ValueError(f"expected a square even-sized matrix, got {sigma.shape}")
    n = sigma.shape[0] // 2
    eigs = np.linalg.eigvals(symplectic_form(n) @ sigma)
    scale = max(1.0, float(np.max(np.abs(eigs))))
    worst_real = float(np.max(np.abs(eigs.real)))
    if worst_real > PAIRING_TOL * scale:
        raise SymplecticPairingError(
            f"eigenvalues of Omega sigma have real part up to {worst_real}; "
            "input is not a covariance matrix"
        )
    imag = np.sort(eigs.imag)
    mismatch = float(np.max(np.abs(imag + imag[::-1])))
    if mismatch > PAIRING_TOL * scale:
        raise SymplecticPairingError(
            f"eigenvalues of Omega sigma fail conjugate pairing by {mismatch}"
        )
    return imag[n:]


def negativity(sigma_red: np.ndarray) -> float:
    """max{0, (1/nu - 1)/2} with nu the smallest symplectic eigenvalue of the
    partial transpose; positive exactly when the pair is entangled."""
    nu = float(symplectic_eigenvalues(partial_transpose(sigma_red))[0])
    if nu <= 0.0:
        raise ValueError(f"degenerate covariance: smallest symplectic eigenvalue {nu}")
    return max(0.0, (1.0 / nu - 1.0) / 2.0)


def first_order_negativity(
    map_: FirstOrderBogoliubovMap, pair: tuple[int, int], s: float
) -> float:
    """Closed-form negativity |Im A[m, n]| sinh s of the mixed pair.

    Valid for a product input with both modes squeezed by s when the
    creation entry B[m, n] is negligible against A[m, n]; warns outside
    that regime (|B| > 0.01 |A|).
    """
    if s < 0.0:
        raise ValueError(f"squeezing parameter must be nonnegative, got {s}")
    a = map_.a_entry(*pair)
    b = map_.b_entry(*pair)
    if abs(b) > B_OVER_A_REGIME * abs(a):
        warnings.warn(
            f"|B{pair}| = {abs(b):.3g} is not negligible against |A{pair}| = "
            f"{abs(a):.3g}; the closed form drops the creation channel",
            stacklevel=2,
        )
    return abs(a.imag) * math.sinh(s)


def negativity_grid(
    coeffs: StaticCoefficients,
    pair: tuple[int, int],
    s: float,
    h0: float,
    omega_c_values: np.ndarray,
    delta_tau_values: np.ndarray,
) -> np.ndarray:
    """First-order negativity under a cosine drive, over a frequency/duration grid.

    Cell [i, j] holds |Im A[m, n]| sinh s for drive frequency
    omega_c_values[j] sustained for delta_tau_values[i].  The column at the
    mixing resonance |omega_m - omega_n| grows linearly in the duration;
    every other column stays bounded.
    """
    omega_c_values = np.asarray(omega_c_values, dtype=float)
    delta_tau_values = np.asarray(delta_tau_values, dtype=float)
    if omega_c_values.size == 0 or delta_tau_values.size == 0:
        raise ValueError("both grid axes must be nonempty")
    if s < 0.0:
        raise ValueError(f"squeezing parameter must be nonnegative, got {s}")
    m, n = pair
    delta = omega_diff_1d(coeffs.cavity, m, n)
    alpha_hat = coeffs.alpha_entry(m, n)
    grid = np.empty((delta_tau_values.size, omega_c_values.size))
    sinh_s = math.sinh(s)
    for j, omega_c in enumerate(omega_c_values):
        for i, dtau in enumerate(delta_tau_values):
            drive = SinusoidalProfile(h0=h0, omega_c=omega_c, tau0=0.0, tauf=dtau)
            kernel = oscillatory_integral(drive, delta).value
            a_entry = 1j * delta * alpha_hat * kernel
            grid[i, j] = abs(a_entry.imag) * sinh_s
    return grid
