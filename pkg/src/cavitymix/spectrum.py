"""Dirichlet cavity spectra and mode bookkeeping.

Conventions used throughout the package:

* natural units, c = hbar = 1; every length, inverse frequency and proper
  time is measured in the same unit,
* a 1+1 cavity of width L with field mass mu0 has angular frequencies
  w_n = sqrt(mu0^2 + (pi*n/L)^2) for n = 1, 2, ...,
* a 3+1 rectangular cavity with edges (Lx, Ly, Lz) and mass mu has
  w_{mnp} = sqrt(mu^2 + (pi*m/Lx)^2 + (pi*n/Ly)^2 + (pi*p/Lz)^2),
* freezing two quantum numbers of the 3+1 spectrum turns the third into a
  1+1 spectrum whose effective mass collects the frozen transverse momenta
  and the field mass.

Frequency differences w_m - w_n are needed deep inside resonance
denominators where the two frequencies can agree to many digits (large
effective mass).  `omega_diff_1d` therefore evaluates the difference as
(k_m^2 - k_n^2) / (w_m + w_n), which stays accurate when the direct
subtraction would cancel.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

_AXES = ("x", "y", "z")


@dataclass(frozen=True)
class Cavity1D:
    """Rigid 1+1 Dirichlet cavity: width, field mass, mode truncation."""

    length: float
    mu0: float = 0.0
    n_max: int = 10

    def __post_init__(self) -> None:
        if not self.length > 0.0:
            raise ValueError(f"cavity length must be positive, got {self.length}")
        if self.mu0 < 0.0:
            raise ValueError(f"field mass must be nonnegative, got {self.mu0}")
        if int(self.n_max) != self.n_max or self.n_max < 2:
            raise ValueError(f"n_max must be an integer >= 2, got {self.n_max}")


@dataclass(frozen=True)
class Cavity3D:
    """Rigid 3+1 rectangular Dirichlet cavity."""

    lx: float
    ly: float
    lz: float
    mu: float = 0.0

    def __post_init__(self) -> None:
        for name, edge in zip(_AXES, (self.lx, self.ly, self.lz)):
            if not edge > 0.0:
                raise ValueError(f"cavity edge l{name} must be positive, got {edge}")
        if self.mu < 0.0:
            raise ValueError(f"field mass must be nonnegative, got {self.mu}")

    def edge(self, axis: str) -> float:
        if axis not in _AXES:
            raise ValueError(f"axis must be one of {_AXES}, got {axis!r}")
        return (self.lx, self.ly, self.lz)[_AXES.index(axis)]


@dataclass(frozen=True)
class ModeSpec:
    """A single cavity mode: its quantum numbers and angular frequency."""

    numbers: tuple[int, ...]
    omega: float


def _check_quantum_number(n: int, label: str = "n") -> None:
    if int(n) != n or n < 1:
        raise ValueError(f"Dirichlet quantum number {label} must be an integer >= 1, got {n}")


def omega_1d(cavity: Cavity1D, n: int) -> float:
    """Angular frequency w_n = sqrt(mu0^2 + (pi*n/L)^2)."""
    _check_quantum_number(n)
    return math.hypot(cavity.mu0, math.pi * n / cavity.length)


def omega_diff_1d(cavity: Cavity1D, m: int, n: int) -> float:
    """w_m - w_n evaluated without catastrophic cancellation.

    Uses (k_m^2 - k_n^2) / (w_m + w_n) with k_n = pi*n/L, which is exact in
    real arithmetic and loses no relative accuracy when mu0*L is large and
    the two frequencies nearly coincide.
    """
    _check_quantum_number(m, "m")
    _check_quantum_number(n, "n")
    ksq_diff = (math.pi / cavity.length) ** 2 * float((m - n) * (m + n))
    return ksq_diff / (omega_1d(cavity, m) + omega_1d(cavity, n))


def omega_sum_1d(cavity: Cavity1D, m: int, n: int) -> float:
    """w_m + w_n (no cancellation issue; provided for symmetry)."""
    return omega_1d(cavity, m) + omega_1d(cavity, n)


def omega_3d(cavity: Cavity3D, m: int, n: int, p: int) -> float:
    """Angular frequency of the (m, n, p) mode of a rectangular cavity."""
    for q, label in zip((m, n, p), ("m", "n", "p")):
        _check_quantum_number(q, label)
    kx = math.pi * m / cavity.lx
    ky = math.pi * n / cavity.ly
    kz = math.pi * p / cavity.lz
    return math.sqrt(cavity.mu * cavity.mu + kx * kx + ky * ky + kz * kz)


def mode_1d(cavity: Cavity1D, n: int) -> ModeSpec:
    return ModeSpec((n,), omega_1d(cavity, n))


def mode_3d(cavity: Cavity3D, m: int, n: int, p: int) -> ModeSpec:
    return ModeSpec((m, n, p), omega_3d(cavity, m, n, p))


def reduce_to_effective_1d(
    cavity: Cavity3D,
    axis: str,
    transverse: tuple[int, int],
    n_max: int = 10,
) -> Cavity1D:
    """Freeze the two transverse quantum numbers of a rectangular cavity.

    `transverse` lists the frozen quantum numbers for the two remaining
    axes in (x, y, z) order; e.g. axis="x" freezes (n_y, n_z).  The result
    is a `Cavity1D` along `axis` whose effective mass satisfies

        mu0_eff^2 = mu^2 + sum_perp (pi * q_perp / L_perp)^2,

    so omega_1d(reduced, k) reproduces the 3+1 dispersion exactly.
    """
    if axis not in _AXES:
        raise ValueError(f"axis must be one of {_AXES}, got {axis!r}")
    if len(transverse) != 2:
        raise ValueError(f"exactly two transverse quantum numbers required, got {transverse!r}")
    edges = {"x": cavity.lx, "y": cavity.ly, "z": cavity.lz}
    perp_axes = [a for a in _AXES if a != axis]
    musq = cavity.mu * cavity.mu
    for q, perp in zip(transverse, perp_axes):
        _check_quantum_number(q, f"transverse {perp}")
        k = math.pi * q / edges[perp]
        musq += k * k
    return Cavity1D(length=edges[axis], mu0=math.sqrt(musq), n_max=n_max)


def omega_vector(cavity: Cavity1D) -> np.ndarray:
    """Frequencies (w_1, ..., w_{n_max}) as an array."""
    k = np.pi * np.arange(1, cavity.n_max + 1, dtype=float) / cavity.length
    return np.hypot(cavity.mu0, k)


def omega_diff_matrix(cavity: Cavity1D) -> np.ndarray:
    """Matrix D[i, j] = w_{i+1} - w_{j+1}, cancellation-safe."""
    omega = omega_vector(cavity)
    n = np.arange(1, cavity.n_max + 1, dtype=float)
    ksq = (np.pi / cavity.length) ** 2 * (n[:, None] - n[None, :]) * (n[:, None] + n[None, :])
    return ksq / (omega[:, None] + omega[None, :])


def omega_sum_matrix(cavity: Cavity1D) -> np.ndarray:
    """Matrix S[i, j] = w_{i+1} + w_{j+1}."""
    omega = omega_vector(cavity)
    return omega[:, None] + omega[None, :]
