"""Nonlinear addition rules for coin probabilities of superposed states.

Four computation paths produce the coin triple of c1|psi1> + c2|psi2>:

* ``superpose_oracle`` builds the spinors explicitly, adds them and
  normalizes -- the ground truth the other paths are checked against;
* ``superpose_general`` evaluates the closed-form probability expressions
  for arbitrary (not necessarily orthogonal) pure inputs;
* ``superpose_orthogonal`` assembles the projector addition rule
  lam1*rho1 + lam2*rho2 + sqrt(lam1*lam2) * cross(rho0) for orthogonal
  inputs;
* ``superpose_spinor`` writes out the superposed column vector in the
  amplitude/phase parametrization.

The weight/phase triple (Pi1, Pi2, Pi3) encodes c1 = sqrt(Pi3) and
c2 = sqrt(1 - Pi3) * exp(i*alpha), with alpha read off the triple the same
way a state phase is.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DegeneratePhaseStateError,
    DegenerateSuperpositionError,
    DomainError,
    NotOrthogonalError,
)
from .states import (
    DensityMatrix2,
    ProbabilityTriple,
    _require_pure,
    coin_phase,
    density_to_prob,
    fidelity,
    prob_to_spinor,
)

ORTHO_TOL = 1e-9
ANNIHILATION_TOL = 1e-12
PHASE_TRACE_TOL = 1e-14
WEIGHT_TOL = 1e-14
# Closed forms divide by sqrt(p3 * q3); below this the oracle takes over.
GENERAL_POLE_TOL = 1e-12


@dataclass(frozen=True)
class SuperpositionWeights:
    """Pure triple (Pi1, Pi2, Pi3) encoding the coefficient pair (c1, c2).

    lambda1 = Pi3 and lambda2 = 1 - Pi3 are the weights; the relative
    phase alpha is the azimuthal phase of the triple (0 at the poles).
    """

    triple: ProbabilityTriple

    def __post_init__(self) -> None:
        _require_pure(self.triple, "weight triple")

    @classmethod
    def from_probabilities(
        cls, pi1: float, pi2: float, pi3: float
    ) -> "SuperpositionWeights":
        return cls(ProbabilityTriple(pi1, pi2, pi3))

    @property
    def lambda1(self) -> float:
        return self.triple.p3

    @property
    def lambda2(self) -> float:
        return 1.0 - self.triple.p3

    @property
    def alpha(self) -> float:
        return coin_phase(self.triple)

    @property
    def c1(self) -> float:
        return math.sqrt(self.lambda1)

    @property
    def c2(self) -> complex:
        return cmath.rect(math.sqrt(self.lambda2), self.alpha)


@dataclass(frozen=True)
class SuperpositionResult:
    state: ProbabilityTriple
    normalization: float
    path: str
    fallback_used: bool = False


def _as_weights(w) -> SuperpositionWeights:
    if isinstance(w, SuperpositionWeights):
        return w
    return SuperpositionWeights(w)


def _projector(p: ProbabilityTriple) -> tuple[np.ndarray, np.ndarray]:
    """Spinor vector and its projector matrix for a pure triple."""
    v = prob_to_spinor(p).as_vector()
    return v, np.outer(v, v.conj())


def superpose_oracle(
    p: ProbabilityTriple, q: ProbabilityTriple, w
) -> SuperpositionResult:
    """Direct spinor addition c1|chi1> + c2|chi2>, then normalization.

    This is the ground-truth path every probability-space formula is
    compared against.
    """
    w = _as_weights(w)
    _require_pure(p, "first state")
    _require_pure(q, "second state")
    v1 = prob_to_spinor(p).as_vector()
    v2 = prob_to_spinor(q).as_vector()
    chi = w.c1 * v1 + w.c2 * v2
    norm2 = float(np.vdot(chi, chi).real)
    if norm2 <= ANNIHILATION_TOL:
        raise DegenerateSuperpositionError(
            "the superposed vector has zero norm (exact destructive "
            "interference); no qubit state exists"
        )
    rho = DensityMatrix2.from_array(np.outer(chi, chi.conj()) / norm2)
    return SuperpositionResult(
        state=density_to_prob(rho), normalization=norm2, path="matrix_oracle"
    )


def superpose_general(
    p: ProbabilityTriple, q: ProbabilityTriple, w
) -> SuperpositionResult:
    """Closed-form addition rule for arbitrary pure inputs.

    Evaluates the normalization factor and the output probabilities purely
    in terms of the nine input probabilities.  When either state sits at a
    pole (p3 or q3 = 0) the closed forms are singular even though the
    superposition is fine; the oracle silently takes over and the result
    is flagged with ``fallback_used``.
    """
    w = _as_weights(w)
    _require_pure(p, "first state")
    _require_pure(q, "second state")
    if p.p3 <= GENERAL_POLE_TOL or q.p3 <= GENERAL_POLE_TOL:
        oracle = superpose_oracle(p, q, w)
        return SuperpositionResult(
            state=oracle.state,
            normalization=oracle.normalization,
            path="general_closed_form",
            fallback_used=True,
        )

    dp1, dp2 = p.p1 - 0.5, p.p2 - 0.5
    dq1, dq2 = q.p1 - 0.5, q.p2 - 0.5
    dw1, dw2 = w.triple.p1 - 0.5, w.triple.p2 - 0.5
    pi3 = w.triple.p3
    root_pq = math.sqrt(p.p3 * q.p3)

    norm = 1.0 + (2.0 / root_pq) * (
        dw1 * (dp1 * dq1 + dq2 * dp2 + p.p3 * q.p3)
        + dw2 * (dp2 * dq1 - dp1 * dq2)
    )
    if norm <= ANNIHILATION_TOL:
        raise DegenerateSuperpositionError(
            "the closed-form normalization vanishes (exact destructive "
            "interference); no qubit state exists"
        )

    root_qp = math.sqrt(q.p3 / p.p3)
    root_pq_ratio = math.sqrt(p.p3 / q.p3)
    out3 = (pi3 * p.p3 + (1.0 - pi3) * q.p3 + 2.0 * root_pq * dw1) / norm
    out1 = 0.5 + (
        pi3 * dp1
        + dq1 * (1.0 - pi3)
        + (dw1 * dp1 + dw2 * dp2) * root_qp
        + (dw1 * dq1 - dw2 * dq2) * root_pq_ratio
    ) / norm
    out2 = 0.5 + (
        dp2 * pi3
        + dq2 * (1.0 - pi3)
        + root_qp * (dw1 * dp2 - dw2 * dp1)
        + root_pq_ratio * (dw2 * dq1 + dw1 * dq2)
    ) / norm
    return SuperpositionResult(
        state=ProbabilityTriple(out1, out2, out3),
        normalization=norm,
        path="general_closed_form",
    )


def _require_orthogonal(p: ProbabilityTriple, q: ProbabilityTriple) -> None:
    overlap = fidelity(p, q)
    if overlap >= ORTHO_TOL:
        raise NotOrthogonalError(
            f"input states must be orthogonal (<psi1|psi2> = 0); their "
            f"overlap Tr(rho1 rho2) is {overlap}"
        )


def assemble_projector_sum(
    p: ProbabilityTriple,
    q: ProbabilityTriple,
    w,
    rho0: DensityMatrix2 | None = None,
) -> np.ndarray:
    """Matrix of the projector addition rule for orthogonal pure inputs.

    lam1*rho1 + lam2*rho2 + sqrt(lam1*lam2) *
    (rho1 rho0 rho2 + rho2 rho0 rho1) / sqrt(Tr(rho1 rho0 rho2 rho0)).

    By default rho0 is the projector of (|psi1> + e^{i*alpha}|psi2>)/sqrt(2),
    which gauges arg<psi1|psi0> to 0 and arg<psi2|psi0> to alpha so that the
    relative phase of the sum equals the weight phase alpha.  An explicit
    rho0 overrides that choice; the degenerate case where rho0 is orthogonal
    to an input (vanishing trace factor) is then an error.
    """
    w = _as_weights(w)
    _require_pure(p, "first state")
    _require_pure(q, "second state")
    _require_orthogonal(p, q)
    v1, m1 = _projector(p)
    v2, m2 = _projector(q)
    if rho0 is None:
        psi0 = (v1 + cmath.exp(1j * w.alpha) * v2) / math.sqrt(2.0)
        m0 = np.outer(psi0, psi0.conj())
    else:
        m0 = rho0.as_array()
    trace_factor = float(np.trace(m1 @ m0 @ m2 @ m0).real)
    if trace_factor <= PHASE_TRACE_TOL:
        raise DegeneratePhaseStateError(
            "Tr(rho1 rho0 rho2 rho0) vanishes: the phase-defining projector "
            "is orthogonal to one of the input states"
        )
    cross = (m1 @ m0 @ m2 + m2 @ m0 @ m1) / math.sqrt(trace_factor)
    return w.lambda1 * m1 + w.lambda2 * m2 + math.sqrt(
        w.lambda1 * w.lambda2
    ) * cross


def superpose_orthogonal(
    p: ProbabilityTriple,
    q: ProbabilityTriple,
    w,
    rho0: DensityMatrix2 | None = None,
) -> SuperpositionResult:
    """Projector addition rule for orthogonal pure inputs."""
    matrix = assemble_projector_sum(p, q, w, rho0)
    rho = DensityMatrix2.from_array(matrix)
    return SuperpositionResult(
        state=density_to_prob(rho), normalization=1.0, path="orthogonal_rule"
    )


def delta_decomposition(
    p: ProbabilityTriple,
    q: ProbabilityTriple,
    w,
    rho0: DensityMatrix2 | None = None,
) -> tuple[np.ndarray, np.ndarray, float]:
    """Split the output triple into linear and interference parts.

    Returns ``(linear, delta, T)`` where
    linear = lam1*p + lam2*q,
    delta = (P_out - linear) / sqrt(lam1*lam2), and
    T = Tr(rho1 rho0 rho2 rho0)^(-1/2) for the rho0 actually used.
    """
    w = _as_weights(w)
    if w.lambda1 * w.lambda2 < WEIGHT_TOL:
        raise DomainError(
            "delta is undefined for pure weights (lambda1 * lambda2 = 0)"
        )
    _require_pure(p, "first state")
    _require_pure(q, "second state")
    _require_orthogonal(p, q)
    v1, m1 = _projector(p)
    v2, m2 = _projector(q)
    if rho0 is None:
        psi0 = (v1 + cmath.exp(1j * w.alpha) * v2) / math.sqrt(2.0)
        m0 = np.outer(psi0, psi0.conj())
    else:
        m0 = rho0.as_array()
    trace_factor = float(np.trace(m1 @ m0 @ m2 @ m0).real)
    if trace_factor <= PHASE_TRACE_TOL:
        raise DegeneratePhaseStateError(
            "Tr(rho1 rho0 rho2 rho0) vanishes: the phase-defining projector "
            "is orthogonal to one of the input states"
        )
    result = superpose_orthogonal(p, q, w, rho0)
    linear = w.lambda1 * p.vec() + w.lambda2 * q.vec()
    delta = (result.state.vec() - linear) / math.sqrt(w.lambda1 * w.lambda2)
    return linear, delta, trace_factor ** -0.5


def superpose_spinor(
    p: ProbabilityTriple, q: ProbabilityTriple, w
) -> SuperpositionResult:
    """Explicit column vector of the superposition, for orthogonal inputs.

    Writes out
    (sqrt(Pi3*p3) + e^{i*delta}*sqrt(q3*(1-Pi3)),
     e^{i*beta}*sqrt(Pi3*(1-p3)) + e^{i*(delta+mu)}*sqrt((1-Pi3)*(1-q3)))
    with beta, mu the phases of p and q and delta the weight phase.
    """
    w = _as_weights(w)
    _require_pure(p, "first state")
    _require_pure(q, "second state")
    _require_orthogonal(p, q)
    beta = coin_phase(p)
    mu = coin_phase(q)
    delta = w.alpha
    pi3 = w.triple.p3
    top = math.sqrt(pi3 * p.p3) + cmath.exp(1j * delta) * math.sqrt(
        q.p3 * (1.0 - pi3)
    )
    bottom = cmath.exp(1j * beta) * math.sqrt(
        pi3 * (1.0 - p.p3)
    ) + cmath.exp(1j * (delta + mu)) * math.sqrt((1.0 - pi3) * (1.0 - q.p3))
    psi = np.array([top, bottom])
    norm2 = float(np.vdot(psi, psi).real)
    if norm2 <= ANNIHILATION_TOL:
        raise DegenerateSuperpositionError(
            "the superposed column vector has zero norm (exact destructive "
            "interference); no qubit state exists"
        )
    rho = DensityMatrix2.from_array(np.outer(psi, psi.conj()) / norm2)
    return SuperpositionResult(
        state=density_to_prob(rho), normalization=norm2, path="spinor_path"
    )


def orthogonal_partner(p: ProbabilityTriple, sign: str = "+") -> ProbabilityTriple:
    """The pure triple orthogonal to a pure triple.

    In two dimensions the orthogonal complement of a pure state is unique
    up to a global phase, so both sign branches (second-component phase
    beta + pi versus beta - pi) yield the same triple: the antipodal point
    (1-p1, 1-p2, 1-p3).  The sign parameter is kept so callers can record
    which branch they meant.
    """
    if sign not in ("+", "-"):
        raise DomainError(f"sign must be '+' or '-', got {sign!r}")
    _require_pure(p)
    return ProbabilityTriple(1.0 - p.p1, 1.0 - p.p2, 1.0 - p.p3)


def unit_normalization_phase(
    p: ProbabilityTriple, q: ProbabilityTriple
) -> float:
    """Weight phase alpha for which the closed-form normalization is 1.

    tan(alpha) = (1/sin(phi2-phi1)) *
                 (sqrt(p3*q3 / ((1-p3)*(1-q3))) + cos(phi1-phi2)).
    Undefined when the input phases coincide modulo pi or either state sits
    at a pole.
    """
    _require_pure(p, "first state")
    _require_pure(q, "second state")
    for name, value in (("p3", p.p3), ("q3", q.p3)):
        if value * (1.0 - value) <= GENERAL_POLE_TOL:
            raise DomainError(
                f"{name} = {value} sits at a pole; the phase condition "
                "is undefined there"
            )
    phi1 = coin_phase(p)
    phi2 = coin_phase(q)
    sin_diff = math.sin(phi2 - phi1)
    if abs(sin_diff) <= 1e-12:
        raise DomainError(
            "the input phases coincide modulo pi; no weight phase makes the "
            "normalization equal to 1"
        )
    ratio = math.sqrt(
        (p.p3 * q.p3) / ((1.0 - p.p3) * (1.0 - q.p3))
    )
    return math.atan((ratio + math.cos(phi1 - phi2)) / sin_diff)


def weights_for_phase(alpha: float, pi3: float = 0.5) -> SuperpositionWeights:
    """Pure weight triple with weight Pi3 and relative phase alpha."""
    if not 0.0 <= pi3 <= 1.0:
        raise DomainError(f"Pi3 must lie in [0, 1], got {pi3!r}")
    r = math.sqrt(pi3 * (1.0 - pi3))
    return SuperpositionWeights(
        ProbabilityTriple(
            0.5 + r * math.cos(alpha), 0.5 + r * math.sin(alpha), pi3
        )
    )
