"""Coin-probability description of a single qubit.

A qubit state is encoded by the probabilities (p1, p2, p3) that three
classical coins land "up"; the coins correspond to spin measurements along
x, y and z.  This module holds the domain types and the bijections between
coin triples, spinors, complex numbers in the unit disk and 2x2 density
matrices, plus the scalar state functionals (purity, fidelity,
classification against the correlation ball).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import ClassicalStateError, DomainError, NotPureError

# Classification of a triple against the correlation ball uses a looser
# tolerance than matrix-equality assertions: classification is a physical
# statement, equality checks are floating-point bookkeeping.
CLASS_TOL = 1e-9
HERMITIAN_TOL = 1e-10
TRACE_TOL = 1e-12
DET_TOL = 1e-12
NORM_TOL = 1e-12
# Probabilities this close to 0 or 1 count as a pole of the spinor phase.
POLE_TOL = 1e-12

_CLAMP = 1e-12
TWO_PI = 2.0 * math.pi


def _unit_interval(value: float, name: str) -> float:
    """Validate a probability, absorbing sub-1e-12 floating spill."""
    value = float(value)
    if not math.isfinite(value):
        raise DomainError(f"{name} must be finite, got {value!r}")
    if -_CLAMP <= value < 0.0:
        return 0.0
    if 1.0 < value <= 1.0 + _CLAMP:
        return 1.0
    if not 0.0 <= value <= 1.0:
        raise DomainError(f"{name} must lie in [0, 1], got {value!r}")
    return value


def _wrap_phase(phase: float) -> float:
    phase = math.fmod(phase, TWO_PI)
    if phase < 0.0:
        phase += TWO_PI
    return phase if phase < TWO_PI else 0.0


@dataclass(frozen=True)
class ProbabilityTriple:
    """Probabilities of the "up" outcome for the x, y and z coins.

    Any point of the unit cube is constructible; only the points inside the
    correlation ball (p1-1/2)^2 + (p2-1/2)^2 + (p3-1/2)^2 <= 1/4 correspond
    to qubit states.  Triples outside the ball are called classical and are
    rejected by quantum-only operations, not by the constructor.
    """

    p1: float
    p2: float
    p3: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "p1", _unit_interval(self.p1, "p1"))
        object.__setattr__(self, "p2", _unit_interval(self.p2, "p2"))
        object.__setattr__(self, "p3", _unit_interval(self.p3, "p3"))

    def vec(self) -> np.ndarray:
        return np.array([self.p1, self.p2, self.p3])

    @property
    def radius2(self) -> float:
        """Squared distance from the cube center (1/2, 1/2, 1/2)."""
        return (
            (self.p1 - 0.5) ** 2 + (self.p2 - 0.5) ** 2 + (self.p3 - 0.5) ** 2
        )

    def classify(self) -> str:
        """Return 'pure', 'mixed' or 'classical'."""
        r2 = self.radius2
        if abs(r2 - 0.25) <= CLASS_TOL:
            return "pure"
        if r2 > 0.25:
            return "classical"
        return "mixed"

    @property
    def is_quantum(self) -> bool:
        return self.radius2 <= 0.25 + CLASS_TOL

    @property
    def is_pure(self) -> bool:
        return abs(self.radius2 - 0.25) <= CLASS_TOL

    def to_json_dict(self) -> dict:
        return {"kind": "coin-state", "p1": self.p1, "p2": self.p2, "p3": self.p3}

    @classmethod
    def from_json_dict(cls, data: dict) -> "ProbabilityTriple":
        if data.get("kind") != "coin-state":
            raise DomainError("expected a JSON object with kind 'coin-state'")
        try:
            return cls(data["p1"], data["p2"], data["p3"])
        except KeyError as exc:
            raise DomainError(f"coin-state object is missing field {exc}") from exc


@dataclass(frozen=True)
class DensityMatrix2:
    """Hermitian unit-trace 2x2 matrix.

    Hermiticity is exact by construction: only rho00, rho11 (real) and
    rho01 are stored, rho10 is always conj(rho01).  Nonnegativity is a
    reported property, not a constructor requirement, because coin triples
    outside the correlation ball map to indefinite matrices on purpose.
    """

    rho00: float
    rho01: complex
    rho11: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "rho00", float(self.rho00))
        object.__setattr__(self, "rho01", complex(self.rho01))
        object.__setattr__(self, "rho11", float(self.rho11))
        if abs(self.rho00 + self.rho11 - 1.0) > TRACE_TOL:
            raise DomainError(
                f"trace must be 1, got {self.rho00 + self.rho11!r}"
            )

    @property
    def rho10(self) -> complex:
        return self.rho01.conjugate()

    @property
    def det(self) -> float:
        return self.rho00 * self.rho11 - abs(self.rho01) ** 2

    @property
    def is_nonnegative(self) -> bool:
        return self.det >= -DET_TOL

    def eigenvalues(self) -> tuple[float, float]:
        """Closed-form eigenvalues, descending."""
        disc = max(1.0 - 4.0 * self.det, 0.0)
        half = 0.5 * math.sqrt(disc)
        return 0.5 + half, 0.5 - half

    def as_array(self) -> np.ndarray:
        return np.array(
            [[self.rho00, self.rho01], [self.rho10, self.rho11]], dtype=complex
        )

    @classmethod
    def from_array(cls, matrix: np.ndarray) -> "DensityMatrix2":
        m = np.asarray(matrix, dtype=complex)
        if m.shape != (2, 2):
            raise DomainError(f"expected a 2x2 matrix, got shape {m.shape}")
        if (
            abs(m[0, 0].imag) > HERMITIAN_TOL
            or abs(m[1, 1].imag) > HERMITIAN_TOL
            or abs(m[1, 0] - m[0, 1].conjugate()) > HERMITIAN_TOL
        ):
            raise DomainError("matrix is not Hermitian")
        return cls(m[0, 0].real, m[0, 1], m[1, 1].real)


@dataclass(frozen=True)
class Spinor2:
    """Normalized two-component spinor (a, b*exp(i*phase)) with a, b >= 0.

    The global phase is fixed to zero: the first component is real and
    nonnegative, so a spinor determines its pure state and vice versa up to
    the pole convention below.
    """

    amplitude0: float
    amplitude1: float
    phase: float

    def __post_init__(self) -> None:
        a0 = float(self.amplitude0)
        a1 = float(self.amplitude1)
        if a0 < 0.0 or a1 < 0.0:
            raise DomainError("spinor amplitudes must be nonnegative")
        if abs(a0 * a0 + a1 * a1 - 1.0) > NORM_TOL:
            raise DomainError(
                f"spinor must be normalized, got |.|^2 = {a0 * a0 + a1 * a1!r}"
            )
        object.__setattr__(self, "amplitude0", a0)
        object.__setattr__(self, "amplitude1", a1)
        object.__setattr__(self, "phase", _wrap_phase(float(self.phase)))

    def as_vector(self) -> np.ndarray:
        return np.array(
            [self.amplitude0, self.amplitude1 * cmath.exp(1j * self.phase)]
        )


def prob_to_density(p: ProbabilityTriple) -> DensityMatrix2:
    """Map a coin triple to its Hermitian unit-trace matrix.

    Total on the whole cube.  For classical triples the result has a
    negative eigenvalue; check ``is_nonnegative`` on the result rather than
    expecting an exception here.
    """
    off = (p.p1 - 0.5) - 1j * (p.p2 - 0.5)
    return DensityMatrix2(p.p3, off, 1.0 - p.p3)


def density_to_prob(rho: DensityMatrix2) -> ProbabilityTriple:
    """Inverse of prob_to_density; exact round-trip."""
    return ProbabilityTriple(
        0.5 + rho.rho01.real, 0.5 - rho.rho01.imag, rho.rho00
    )


def is_quantum(p: ProbabilityTriple) -> tuple[str, float]:
    """Classify a triple against the correlation ball.

    Returns ``(kind, radius2)`` with kind one of 'classical', 'mixed',
    'pure'.
    """
    return p.classify(), p.radius2


def _require_quantum(p: ProbabilityTriple, role: str = "state") -> None:
    if not p.is_quantum:
        raise ClassicalStateError(
            f"{role} ({p.p1}, {p.p2}, {p.p3}) lies outside the correlation "
            f"ball (radius^2 = {p.radius2} > 1/4): not a qubit state"
        )


def _require_pure(p: ProbabilityTriple, role: str = "state") -> None:
    if not p.is_pure:
        raise NotPureError(
            f"{role} ({p.p1}, {p.p2}, {p.p3}) is not pure: radius^2 = "
            f"{p.radius2}, expected 1/4"
        )


def purity(p: ProbabilityTriple) -> float:
    """Purity 2*(1 + |p|^2 - p1 - p2 - p3), i.e. Tr rho^2. In [1/2, 1]."""
    _require_quantum(p)
    dot = p.p1 * p.p1 + p.p2 * p.p2 + p.p3 * p.p3
    return 2.0 * (1.0 + dot - p.p1 - p.p2 - p.p3)


def fidelity(p: ProbabilityTriple, q: ProbabilityTriple) -> float:
    """Overlap Tr(rho_p rho_q) as a closed form in the two triples."""
    _require_quantum(p, "first state")
    _require_quantum(q, "second state")
    dot = p.p1 * q.p1 + p.p2 * q.p2 + p.p3 * q.p3
    return (
        2.0 + 2.0 * dot - p.p1 - p.p2 - p.p3 - q.p1 - q.p2 - q.p3
    )


def coin_phase(p: ProbabilityTriple) -> float:
    """Azimuthal phase of a triple, in [0, 2*pi); 0 by convention at poles."""
    dx = p.p1 - 0.5
    dy = p.p2 - 0.5
    if dx * dx + dy * dy <= POLE_TOL:
        return 0.0
    return _wrap_phase(math.atan2(dy, dx))


def prob_to_spinor(p: ProbabilityTriple) -> Spinor2:
    """Spinor (sqrt(p3), sqrt(1-p3)*exp(i*gamma)) of a pure triple.

    gamma satisfies cos(gamma) = (p1-1/2)/sqrt(p3(1-p3)) and
    sin(gamma) = (p2-1/2)/sqrt(p3(1-p3)); at the poles p3 in {0, 1} the
    phase is 0 by convention.
    """
    _require_pure(p)
    a0 = math.sqrt(p.p3)
    a1 = math.sqrt(1.0 - p.p3)
    return Spinor2(a0, a1, coin_phase(p))


def spinor_to_prob(s: Spinor2) -> ProbabilityTriple:
    """Pure triple of a spinor; inverse of prob_to_spinor away from poles."""
    p3 = s.amplitude0 ** 2
    r = s.amplitude0 * s.amplitude1
    return ProbabilityTriple(
        0.5 + r * math.cos(s.phase), 0.5 + r * math.sin(s.phase), p3
    )


def complex_to_coins(z: complex) -> ProbabilityTriple:
    """Map a complex number with |z| <= 1 to a pure coin triple.

    p3 = |z|^2 and the phase of z fixes p1, p2 on the circle
    (p1-1/2)^2 + (p2-1/2)^2 = p3(1-p3).
    """
    z = complex(z)
    mag2 = abs(z) ** 2
    if mag2 > 1.0 + _CLAMP:
        raise DomainError(f"|z| must be <= 1, got |z| = {abs(z)!r}")
    p3 = min(mag2, 1.0)
    r = math.sqrt(max(p3 * (1.0 - p3), 0.0))
    if r <= POLE_TOL or abs(z) == 0.0:
        phase = 0.0
    else:
        phase = cmath.phase(z)
    return ProbabilityTriple(
        0.5 + r * math.cos(phase), 0.5 + r * math.sin(phase), p3
    )


def coins_to_complex(p: ProbabilityTriple) -> complex:
    """Inverse of complex_to_coins on pure triples (phase 0 at poles)."""
    _require_pure(p)
    return cmath.rect(math.sqrt(p.p3), coin_phase(p))
