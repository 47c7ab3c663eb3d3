"""Resonance catalog and analytic growth rates for sinusoidal driving.

A cosine drive h(tau) = h0 cos(omega_c (tau - tau0)) pumps the first-order
coefficients secularly when omega_c hits a resonance:

    mode mixing      A[m, n]:  omega_c = |omega_m - omega_n|,
    particle creation B[m, n]:  omega_c = omega_m + omega_n,

in both cases only for odd m + n.  At exact resonance the magnitude of the
coefficient grows linearly in the drive duration with slope

    d|A[m, n]|/dtau = |omega_m - omega_n| |alpha_hat[m, n]| h0 / 2,
    d|B[m, n]|/dtau = (omega_m + omega_n) |beta_hat[m, n]| h0 / 2,

the factor 1/2 coming from the cosine amplitude convention.  Off resonance
both coefficients stay bounded uniformly in the duration.

The paraxial helpers cover a transversally loaded rectangular cavity whose
quanta have wavelength lambda much smaller than the edges: the transverse
momentum 2 pi / lambda acts as a large effective mass, and the mixing
resonance between longitudinal numbers m and m' drops to

    omega_c ~= (pi lambda / 4) |m^2 - m'^2| / L^2,

far below the mode frequencies themselves.  All frequencies here are in
natural units (inverse length); SI conversion lives in the experiment
module.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .bogoliubov import StaticCoefficients, static_coefficients
from .spectrum import Cavity3D, omega_diff_1d, omega_sum_1d, reduce_to_effective_1d


class ResonanceKind(enum.Enum):
    MODE_MIXING = "mode_mixing"
    PARTICLE_CREATION = "particle_creation"


@dataclass(frozen=True)
class ResonanceEntry:
    """One resonance: drive here and the paired coefficient grows linearly.

    `growth_per_h0` is the slope of the coefficient magnitude per unit h0
    per unit proper time at exact resonance with cosine phase.
    """

    kind: ResonanceKind
    pair: tuple[int, int]
    omega_r: float
    coefficient: float
    growth_per_h0: float


def catalog_1d(coeffs: StaticCoefficients, max_omega: float) -> list[ResonanceEntry]:
    """All resonances of a 1D cavity with omega_r up to max_omega, ascending."""
    if max_omega <= 0.0:
        raise ValueError(f"max_omega must be positive, got {max_omega}")
    cavity = coeffs.cavity
    entries = []
    for m in range(1, cavity.n_max + 1):
        for n in range(m + 1, cavity.n_max + 1):
            if (m + n) % 2 == 0:
                continue
            omega_mix = omega_diff_1d(cavity, n, m)
            if omega_mix <= max_omega:
                coef = abs(coeffs.alpha_entry(m, n))
                entries.append(
                    ResonanceEntry(
                        kind=ResonanceKind.MODE_MIXING,
                        pair=(m, n),
                        omega_r=omega_mix,
                        coefficient=coef,
                        growth_per_h0=omega_mix * coef / 2.0,
                    )
                )
            omega_create = omega_sum_1d(cavity, m, n)
            if omega_create <= max_omega:
                coef = abs(coeffs.beta_entry(m, n))
                entries.append(
                    ResonanceEntry(
                        kind=ResonanceKind.PARTICLE_CREATION,
                        pair=(m, n),
                        omega_r=omega_create,
                        coefficient=coef,
                        growth_per_h0=omega_create * coef / 2.0,
                    )
                )
    entries.sort(key=lambda e: (e.omega_r, e.kind.value, e.pair))
    return entries


def catalog_3d(
    cavity: Cavity3D,
    axis: str,
    transverse: tuple[int, int],
    max_omega: float,
    n_max: int = 10,
) -> list[ResonanceEntry]:
    """Resonances for driving along one principal axis of a 3D cavity.

    Only the quantum number along the driven axis may change, and the two
    inert transverse numbers feed the effective mass, so the catalog equals
    the 1D catalog of the reduced cavity.  Entries are labelled by the
    longitudinal quantum numbers.
    """
    reduced = reduce_to_effective_1d(cavity, axis, transverse, n_max=n_max)
    return catalog_1d(static_coefficients(reduced), max_omega)


def predicted_mixing_growth(entry: ResonanceEntry, h0: float) -> float:
    """Linear growth rate of the resonant coefficient for drive amplitude h0."""
    if h0 < 0.0:
        raise ValueError(f"drive amplitude must be nonnegative, got {h0}")
    return entry.growth_per_h0 * h0


def displacement_h0(omega_r: float, displacement: float, length: float) -> float:
    """Peak h for harmonic motion of given displacement amplitude at omega_r.

    The peak proper acceleration of x(tau) = d cos(omega_r tau) is
    d omega_r^2, so h0 = d omega_r^2 L (natural units throughout).
    """
    return displacement * omega_r**2 * length


def paraxial_mixing_omega(wavelength: float, length: float, m: int, m_prime: int) -> float:
    """Approximate mixing resonance (pi lambda / 4) |m^2 - m'^2| / L^2.

    Valid when the transverse momentum 2 pi / lambda dominates the
    longitudinal momenta of both modes; see paraxial_validity_ratio.
    """
    return math.pi * wavelength * abs(m**2 - m_prime**2) / (4.0 * length**2)


def paraxial_mixing_growth(
    wavelength: float, length: float, displacement: float, m: int, m_prime: int
) -> float:
    """Approximate resonant growth rate (pi / 2) m m' d lambda / L^3.

    This is predicted_mixing_growth with h0 = d omega_c^2 L evaluated in the
    paraxial limit; per unit proper time in natural units.
    """
    return math.pi * m * m_prime * displacement * wavelength / (2.0 * length**3)


def paraxial_validity_ratio(
    wavelength: float, lx: float, ly: float, m_max: int, n_inert: int = 1
) -> float:
    """(2/lambda)^2 over the in-plane momentum scale (m/Lx)^2 + (n/Ly)^2.

    The paraxial formulas hold when this ratio is large; the experiment
    module requires it to exceed 1e4.
    """
    return (2.0 / wavelength) ** 2 / ((m_max / lx) ** 2 + (n_inert / ly) ** 2)
