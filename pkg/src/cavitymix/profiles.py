"""Proper acceleration profiles and their oscillatory Fourier integrals.

A profile is the dimensionless proper acceleration h(tau) = a(tau) * L of a
rigid cavity on its finite interval [tau0, tauf].  Rigidity of the cavity
requires sup |h| < 2 (the far wall must stay inside the near wall's Rindler
wedge); the bound is strict and `validate_rigidity` reports the worst point.

Everything downstream needs windowed Fourier transforms of h,

    I(delta) = integral_{tau0}^{tauf} exp(-i*delta*(tau - tau0)) h(tau) dtau,

with delta ranging from near zero up to sums of large mode frequencies.
Sampling the oscillation is hopeless at the extreme phases that show up in
laboratory-scale scenarios, so every profile instead reports itself as a
list of pieces on which h is a short sum of terms c * t^k * exp(i*mu*t)
(k <= 1, t = tau - tau0).  Each term integrates against the kernel in
closed form; `oscillatory_integral` only has to evaluate the elementary
antiderivative per term, switching to a series expansion when the total
phase across a piece is small enough for the direct formula to cancel.

For `SampledProfile` the piece list is the piecewise-linear interpolant of
the samples, i.e. a Filon-type rule: the oscillatory factor is handled
analytically, the data enters linearly per panel.  The reported error
estimate for all variants is a rounding bound proportional to the L1 mass
of the integrand; a requested tolerance below it raises `QuadratureError`.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

RIGIDITY_BOUND = 2.0

# Cross-over for the series branch of the phase primitives.  At 1e-4 the
# omitted z^5 term is ~1e-23 relative, far below double rounding.
_SMALL_PHASE = 1e-4
_EPS = float(np.finfo(float).eps)


class QuadratureError(RuntimeError):
    """An oscillatory integral could not meet the requested tolerance."""


@dataclass(frozen=True)
class OscillatoryIntegralResult:
    value: complex
    error_estimate: float
    evaluations: int


@dataclass(frozen=True)
class RigidityReport:
    """Outcome of the strict sup|h| < 2 check."""

    ok: bool
    sup_h: float
    tau_at_sup: float
    bound: float = RIGIDITY_BOUND


# A term c * t^power * exp(i*mu*t) contributing to h on one piece.
# Terms always come in conjugate pairs (or are real) so that h is real.
_Term = tuple[complex, float, int]
_Piece = tuple[float, float, tuple[_Term, ...]]


def _phase_integral_0(theta: float, a: float, b: float) -> complex:
    """integral_a^b exp(i*theta*t) dt, stable for small |theta|*(b-a)."""
    span = b - a
    z = 1j * theta * span
    if abs(theta) * span < _SMALL_PHASE:
        base = span * (1.0 + z * (0.5 + z * (1.0 / 6.0 + z * (1.0 / 24.0 + z / 120.0))))
    else:
        base = (cmath.exp(z) - 1.0) / (1j * theta)
    return cmath.exp(1j * theta * a) * base


def _phase_integral_1(theta: float, a: float, b: float) -> complex:
    """integral_a^b t * exp(i*theta*t) dt, stable for small |theta|*(b-a)."""
    span = b - a
    z = 1j * theta * span
    if abs(theta) * span < _SMALL_PHASE:
        i0 = span * (1.0 + z * (0.5 + z * (1.0 / 6.0 + z * (1.0 / 24.0 + z / 120.0))))
        i1 = span * span * (0.5 + z * (1.0 / 3.0 + z * (0.125 + z * (1.0 / 30.0 + z / 144.0))))
    else:
        i0 = (cmath.exp(z) - 1.0) / (1j * theta)
        i1 = (cmath.exp(z) * (z - 1.0) + 1.0) / (1j * theta) ** 2
    return cmath.exp(1j * theta * a) * (i1 + a * i0)


class AccelerationProfile:
    """Interface shared by every profile variant.

    Concrete profiles provide the interval [tau0, tauf], pointwise
    evaluation, the exact supremum of |h| (with its location), restriction
    to a subinterval, and the piecewise term representation consumed by
    `oscillatory_integral`.
    """

    tau0: float
    tauf: float

    @property
    def duration(self) -> float:
        return self.tauf - self.tau0

    def evaluate(self, tau):
        raise NotImplementedError

    def sup_abs(self) -> tuple[float, float]:
        """(sup |h|, a tau attaining it)."""
        raise NotImplementedError

    def restrict(self, a: float, b: float) -> "AccelerationProfile":
        raise NotImplementedError

    def _pieces(self) -> list[_Piece]:
        raise NotImplementedError

    def _check_interval(self) -> None:
        if not self.tauf > self.tau0:
            raise ValueError(f"profile interval must have tauf > tau0, got [{self.tau0}, {self.tauf}]")

    def _local(self, tau) -> np.ndarray:
        """tau -> t = tau - tau0, validating the domain."""
        t = np.asarray(tau, dtype=float)
        if np.any(t < self.tau0) or np.any(t > self.tauf):
            raise ValueError(
                f"tau outside the profile interval [{self.tau0}, {self.tauf}]"
            )
        return t - self.tau0

    def _check_restriction(self, a: float, b: float) -> None:
        if not (self.tau0 <= a < b <= self.tauf):
            raise ValueError(
                f"restriction [{a}, {b}] must nest inside [{self.tau0}, {self.tauf}]"
            )


@dataclass(frozen=True)
class SinusoidalProfile(AccelerationProfile):
    """h(tau) = h0 * cos(omega_c*(tau - tau0) + phase)."""

    h0: float
    omega_c: float
    tau0: float
    tauf: float
    phase: float = 0.0

    def __post_init__(self) -> None:
        self._check_interval()
        if self.omega_c < 0.0:
            raise ValueError(f"drive frequency must be nonnegative, got {self.omega_c}")

    def evaluate(self, tau):
        t = self._local(tau)
        out = self.h0 * np.cos(self.omega_c * t + self.phase)
        return float(out) if np.isscalar(tau) else out

    def sup_abs(self) -> tuple[float, float]:
        if self.h0 == 0.0:
            return 0.0, self.tau0
        if self.omega_c == 0.0:
            return abs(self.h0 * math.cos(self.phase)), self.tau0
        # |cos| peaks at multiples of pi; otherwise at an endpoint.
        lo = self.phase
        hi = self.phase + self.omega_c * self.duration
        k = math.ceil(lo / math.pi)
        if k * math.pi <= hi:
            tau_star = self.tau0 + (k * math.pi - lo) / self.omega_c
            return abs(self.h0), tau_star
        ends = [(abs(self.h0 * math.cos(lo)), self.tau0), (abs(self.h0 * math.cos(hi)), self.tauf)]
        return max(ends)

    def restrict(self, a: float, b: float) -> "SinusoidalProfile":
        self._check_restriction(a, b)
        return SinusoidalProfile(
            h0=self.h0,
            omega_c=self.omega_c,
            tau0=a,
            tauf=b,
            phase=self.phase + self.omega_c * (a - self.tau0),
        )

    def _pieces(self) -> list[_Piece]:
        c = 0.5 * self.h0 * cmath.exp(1j * self.phase)
        terms = ((c, self.omega_c, 0), (c.conjugate(), -self.omega_c, 0))
        return [(0.0, self.duration, terms)]


@dataclass(frozen=True)
class PiecewiseConstantProfile(AccelerationProfile):
    """Constant plateaus h_k held for the listed durations, in order."""

    segments: tuple[tuple[float, float], ...]
    tau0: float = 0.0

    def __post_init__(self) -> None:
        segs = tuple((float(d), float(h)) for d, h in self.segments)
        if not segs:
            raise ValueError("at least one (duration, h) segment required")
        for i, (d, _) in enumerate(segs):
            if not d > 0.0:
                raise ValueError(f"segment {i} duration must be positive, got {d}")
        object.__setattr__(self, "segments", segs)

    @property
    def tauf(self) -> float:  # type: ignore[override]
        return self.tau0 + sum(d for d, _ in self.segments)

    def _edges(self) -> np.ndarray:
        return np.concatenate([[0.0], np.cumsum([d for d, _ in self.segments])])

    def evaluate(self, tau):
        t = self._local(tau)
        edges = self._edges()
        values = np.array([h for _, h in self.segments])
        idx = np.clip(np.searchsorted(edges, t, side="right") - 1, 0, len(values) - 1)
        out = values[idx]
        return float(out) if np.isscalar(tau) else out

    def sup_abs(self) -> tuple[float, float]:
        edges = self._edges()
        best = max(range(len(self.segments)), key=lambda i: abs(self.segments[i][1]))
        return abs(self.segments[best][1]), self.tau0 + edges[best]

    def restrict(self, a: float, b: float) -> "PiecewiseConstantProfile":
        self._check_restriction(a, b)
        edges = self._edges() + self.tau0
        out: list[tuple[float, float]] = []
        for i, (_, h) in enumerate(self.segments):
            lo, hi = max(edges[i], a), min(edges[i + 1], b)
            if hi > lo:
                out.append((hi - lo, h))
        return PiecewiseConstantProfile(segments=tuple(out), tau0=a)

    def _pieces(self) -> list[_Piece]:
        edges = self._edges()
        return [
            (edges[i], edges[i + 1], ((complex(h), 0.0, 0),))
            for i, (_, h) in enumerate(self.segments)
        ]


@dataclass(frozen=True)
class RampProfile(AccelerationProfile):
    """Trapezoid pulse: linear ramp 0 -> h0 over ramp_time, hold, ramp back.

    h vanishes at both ends of the interval, so the map coefficients decay
    like 1/(ramp_time * delta^2) and vanish in the adiabatic limit.
    Requires tauf - tau0 >= 2 * ramp_time.
    """

    h0: float
    ramp_time: float
    tau0: float
    tauf: float

    def __post_init__(self) -> None:
        self._check_interval()
        if not self.ramp_time > 0.0:
            raise ValueError(f"ramp_time must be positive, got {self.ramp_time}")
        if self.duration < 2.0 * self.ramp_time:
            raise ValueError(
                f"interval of length {self.duration} cannot hold two ramps of {self.ramp_time}"
            )

    def _breakpoints(self) -> np.ndarray:
        s = self.duration
        return np.unique([0.0, self.ramp_time, s - self.ramp_time, s])

    def evaluate(self, tau):
        t = self._local(tau)
        r, s = self.ramp_time, self.duration
        up = t / r
        down = (s - t) / r
        out = self.h0 * np.minimum(1.0, np.minimum(up, down))
        return float(out) if np.isscalar(tau) else out

    def sup_abs(self) -> tuple[float, float]:
        return abs(self.h0), self.tau0 + self.ramp_time

    def restrict(self, a: float, b: float) -> "SampledProfile":
        self._check_restriction(a, b)
        nodes = [a] + [
            self.tau0 + t for t in self._breakpoints() if a < self.tau0 + t < b
        ] + [b]
        nodes_arr = np.array(nodes)
        return SampledProfile(tau=nodes_arr, h=np.asarray(self.evaluate(nodes_arr)))

    def _pieces(self) -> list[_Piece]:
        r, s = self.ramp_time, self.duration
        pieces: list[_Piece] = [(0.0, r, ((complex(self.h0 / r), 0.0, 1),))]
        if s > 2.0 * r:
            pieces.append((r, s - r, ((complex(self.h0), 0.0, 0),)))
        pieces.append(
            (s - r, s, ((complex(self.h0 * s / r), 0.0, 0), (complex(-self.h0 / r), 0.0, 1)))
        )
        return pieces


@dataclass(frozen=True, eq=False)
class SampledProfile(AccelerationProfile):
    """Piecewise-linear interpolant of (tau, h) samples.

    The grid must be strictly increasing; a uniform grid is typical but not
    required.  Fourier integrals treat the interpolant exactly (Filon rule),
    so the only error against the *samples* is interpolation error, which is
    the caller's modelling choice, not a quadrature artifact.
    """

    tau: np.ndarray
    h: np.ndarray

    def __post_init__(self) -> None:
        tau = np.asarray(self.tau, dtype=float)
        h = np.asarray(self.h, dtype=float)
        if tau.ndim != 1 or h.shape != tau.shape:
            raise ValueError("tau and h must be 1-d arrays of equal length")
        if tau.size < 2:
            raise ValueError("at least two samples required")
        if not np.all(np.diff(tau) > 0.0):
            raise ValueError("sample grid must be strictly increasing in tau")
        tau.setflags(write=False)
        h.setflags(write=False)
        object.__setattr__(self, "tau", tau)
        object.__setattr__(self, "h", h)

    @property
    def tau0(self) -> float:  # type: ignore[override]
        return float(self.tau[0])

    @property
    def tauf(self) -> float:  # type: ignore[override]
        return float(self.tau[-1])

    def evaluate(self, tau):
        t = self._local(tau) + self.tau0
        out = np.interp(t, self.tau, self.h)
        return float(out) if np.isscalar(tau) else out

    def sup_abs(self) -> tuple[float, float]:
        idx = int(np.argmax(np.abs(self.h)))
        return float(abs(self.h[idx])), float(self.tau[idx])

    def restrict(self, a: float, b: float) -> "SampledProfile":
        self._check_restriction(a, b)
        inner = (self.tau > a) & (self.tau < b)
        tau = np.concatenate([[a], self.tau[inner], [b]])
        h = np.interp(tau, self.tau, self.h)
        return SampledProfile(tau=tau, h=h)

    def _pieces(self) -> list[_Piece]:
        t = self.tau - self.tau0
        pieces: list[_Piece] = []
        for i in range(t.size - 1):
            a, b = float(t[i]), float(t[i + 1])
            slope = (self.h[i + 1] - self.h[i]) / (b - a)
            intercept = self.h[i] - slope * a
            pieces.append((a, b, ((complex(intercept), 0.0, 0), (complex(slope), 0.0, 1))))
        return pieces


@dataclass(frozen=True)
class WindowedSinusoidProfile(AccelerationProfile):
    """Sinusoidal drive with raised-cosine switch-on and switch-off ramps.

    The envelope rises as (1 - cos(pi*t/W))/2 over the first window_time W,
    holds at 1, and falls symmetrically over the last W.  Smooth switching
    removes the 1/delta jump contributions of a sharply gated drive; the
    window parameters are a modelling choice, not tied to any measurement.
    Requires tauf - tau0 >= 2 * window_time.
    """

    h0: float
    omega_c: float
    window_time: float
    tau0: float
    tauf: float
    phase: float = 0.0

    def __post_init__(self) -> None:
        self._check_interval()
        if self.omega_c < 0.0:
            raise ValueError(f"drive frequency must be nonnegative, got {self.omega_c}")
        if not self.window_time > 0.0:
            raise ValueError(f"window_time must be positive, got {self.window_time}")
        if self.duration < 2.0 * self.window_time:
            raise ValueError(
                f"interval of length {self.duration} cannot hold two windows of {self.window_time}"
            )

    def _envelope(self, t: np.ndarray) -> np.ndarray:
        w, s = self.window_time, self.duration
        env = np.ones_like(t)
        rising = t < w
        falling = t > s - w
        env = np.where(rising, 0.5 * (1.0 - np.cos(np.pi * t / w)), env)
        env = np.where(falling, 0.5 * (1.0 - np.cos(np.pi * (s - t) / w)), env)
        return env

    def evaluate(self, tau):
        t = self._local(tau)
        out = self.h0 * self._envelope(np.asarray(t, dtype=float)) * np.cos(
            self.omega_c * t + self.phase
        )
        return float(out) if np.isscalar(tau) else out

    def sup_abs(self) -> tuple[float, float]:
        # The envelope is not polynomially representable, so locate the
        # supremum on a dense grid; adequate for a strict-bound check on a
        # drive whose physical amplitudes sit far below the bound.
        t = np.linspace(0.0, self.duration, 8193)
        values = np.abs(self.h0 * self._envelope(t) * np.cos(self.omega_c * t + self.phase))
        idx = int(np.argmax(values))
        return float(values[idx]), float(self.tau0 + t[idx])

    def restrict(self, a: float, b: float) -> "AccelerationProfile":
        raise NotImplementedError(
            "windowed profiles do not restrict exactly; resample into SampledProfile instead"
        )

    def _pieces(self) -> list[_Piece]:
        w, s = self.window_time, self.duration
        nu = math.pi / w
        drive = (
            (0.5 * self.h0 * cmath.exp(1j * self.phase), self.omega_c),
            (0.5 * self.h0 * cmath.exp(-1j * self.phase), -self.omega_c),
        )
        rising: list[_Term] = []
        plateau: list[_Term] = []
        falling: list[_Term] = []
        gate = cmath.exp(1j * nu * s)
        for c, mu in drive:
            plateau.append((c, mu, 0))
            rising.extend(((0.5 * c, mu, 0), (-0.25 * c, mu + nu, 0), (-0.25 * c, mu - nu, 0)))
            falling.extend(
                (
                    (0.5 * c, mu, 0),
                    (-0.25 * c * gate, mu - nu, 0),
                    (-0.25 * c * gate.conjugate(), mu + nu, 0),
                )
            )
        pieces: list[_Piece] = [(0.0, w, tuple(rising))]
        if s > 2.0 * w:
            pieces.append((w, s - w, tuple(plateau)))
        pieces.append((s - w, s, tuple(falling)))
        return pieces


def validate_rigidity(profile: AccelerationProfile) -> RigidityReport:
    """Strict check of sup |h| < 2 with the worst point reported."""
    sup_h, tau_star = profile.sup_abs()
    return RigidityReport(ok=sup_h < RIGIDITY_BOUND, sup_h=sup_h, tau_at_sup=tau_star)


def oscillatory_integral(
    profile: AccelerationProfile,
    delta: float,
    tol: float = 1e-10,
    max_evaluations: int | None = None,
) -> OscillatoryIntegralResult:
    """integral_{tau0}^{tauf} exp(-i*delta*(tau - tau0)) h(tau) dtau.

    Exact per piece up to rounding; the error estimate is a rounding bound
    built from the L1 mass of the integrand.  Raises `QuadratureError` when
    the estimate exceeds `tol` or the term count exceeds `max_evaluations`.
    """
    pieces = profile._pieces()
    needed = sum(len(terms) for _, _, terms in pieces)
    if max_evaluations is not None and needed > max_evaluations:
        raise QuadratureError(
            f"integral needs {needed} closed-form term evaluations, "
            f"budget allows {max_evaluations}"
        )
    value = 0.0 + 0.0j
    mass = 0.0
    for a, b, terms in pieces:
        for coef, mu, power in terms:
            theta = mu - delta
            if power == 0:
                value += coef * _phase_integral_0(theta, a, b)
                mass += abs(coef) * (b - a)
            else:
                value += coef * _phase_integral_1(theta, a, b)
                mass += abs(coef) * 0.5 * (b * b - a * a)
    estimate = 64.0 * _EPS * mass
    if estimate > tol:
        raise QuadratureError(
            f"rounding-level error estimate {estimate:.3e} exceeds requested tolerance {tol:.3e}"
        )
    return OscillatoryIntegralResult(value=complex(value), error_estimate=estimate, evaluations=needed)


def profile_from_samples(tau: Sequence[float], h: Sequence[float]) -> SampledProfile:
    """Convenience constructor mirroring the other variants' signatures."""
    return SampledProfile(tau=np.asarray(tau, dtype=float), h=np.asarray(h, dtype=float))
