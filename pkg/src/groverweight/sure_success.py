"""Probability-1 weight decision via phase-modified final two iterations.

For a promised fraction w the plan picks the iteration count k, keeps the
first k-2 iterations standard and replaces the last two with phases
(-theta1, pi) and (-theta2, pi).  theta1 rotates the (k-2)-step state onto
the cross point where both hypotheses' rotation circles meet their target
lines; theta2 then sends the two hypotheses to opposite Bloch poles with
one shared phase pair.

The theta2 relation is implicit (theta2 appears on both sides), so it is
rewritten to the linear form A cos(theta2) + B sin(theta2) = C and solved
in closed form; among the analytic candidates and their sign-flipped
variants the accepted branch is the first that verifiably drives both
hypotheses to opposite poles in the exact 2x2 simulation.  No candidate
verifying is an error, never a silent fallback.

Angles here are Bloch angles (twice the Hilbert half-angle).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import subspace
from .errors import (
    GeometryInfeasibleError,
    IndistinguishablePairError,
    InfeasiblePhaseError,
    ParameterError,
    PhaseSolutionFailureError,
)
from .decision import DecisionOutcome, _sample_outcome
from .oracle import BooleanOracle, round_weight
from .subspace import BlochVector, PhaseSchedule

POLE_TOL = 1e-9
COS_CLAMP = 1e-10
COS_SNAP = 5e-13
DENOM_TOL = 1e-12


@dataclass(frozen=True)
class SureSuccessPlan:
    """Iteration count, final-two phases and the geometry they solve."""

    k: int
    theta1: float
    theta2: float
    beta_small: float
    beta_big: float
    y: float

    @property
    def schedule(self) -> PhaseSchedule:
        return PhaseSchedule.sure_success(self.k, self.theta1, self.theta2)

    @property
    def oracle_calls(self) -> int:
        return self.k + 1


def select_k(w: float) -> int:
    """Smallest usable iteration count for the promise pair (w, 1-w).

    k = 2 whenever min(w, 1-w) <= mu_2; otherwise the unique k with
    mu_{k-1} < min(w, 1-w) <= mu_k.
    """
    if not 0.0 < w < 1.0:
        raise ParameterError(f"weight fraction must lie in (0, 1), got {w}")
    if w == 0.5:
        raise IndistinguishablePairError("w = 1/2 makes the two hypotheses identical")
    w_min = min(w, 1.0 - w)
    if w_min <= subspace.mu(2):
        return 2
    k = 3
    while w_min > subspace.mu(k):
        k += 1
    return k


def _snap_cos(value: float) -> float:
    """Clamp a cosine into [-1, 1] and absorb roundoff at the endpoints."""
    value = max(-1.0, min(1.0, value))
    if 1.0 - abs(value) < COS_SNAP:
        return math.copysign(1.0, value)
    return value


def cross_point(k: int, beta: float) -> BlochVector:
    """Target of the first modified rotation, on the unit sphere.

    x and z follow the cross-point equations; y is fixed as the positive
    root of 1 - x^2 - z^2 (tiny negative radicands are clamped to zero).
    """
    sign = -1.0 if k % 2 else 1.0
    x = (math.cos((2 * k - 2) * beta) - sign * math.cos(beta)) / (2.0 * math.sin(beta))
    z = (-math.cos((2 * k - 2) * beta) - sign * math.cos(beta)) / (2.0 * math.cos(beta))
    radicand = 1.0 - x * x - z * z
    if radicand < -1e-12:
        raise GeometryInfeasibleError(
            f"cross point leaves the sphere (radicand {radicand:.3e}); k and beta mismatch"
        )
    return BlochVector(x=x, y=math.sqrt(max(radicand, 0.0)), z=z)


def solve_theta1(k: int, beta: float) -> float:
    """First modified diffusion phase, in [0, pi]."""
    sign = -1.0 if k % 2 else 1.0
    num = sign * math.cos(beta) - math.cos(2 * beta) * math.cos((2 * k - 2) * beta)
    den = math.sin(2 * beta) * math.sin((2 * k - 2) * beta)
    value = num / den
    if abs(value) > 1.0 + COS_CLAMP:
        raise InfeasiblePhaseError(f"|cos theta1| = {abs(value):.6f} > 1 at k = {k}")
    return math.acos(_snap_cos(value))


def _theta2_candidates(k: int, beta: float, y: float) -> list[float]:
    """Closed-form solutions of A cos(theta2) + B sin(theta2) = C."""
    sign = -1.0 if k % 2 else 1.0
    a = math.cos(beta) * math.cos(2 * beta) - sign * math.cos((2 * k - 2) * beta)
    b = -sign * y * math.sin(2 * beta)
    c = -math.sin(2 * beta) * math.sin(beta)
    r = math.hypot(a, b)
    if r < 1e-15:
        return []
    gamma = math.acos(_snap_cos(c / r))
    delta = math.atan2(b, a)
    return [delta + gamma, delta - gamma]


def _pole_probabilities(w_small: float, k: int, theta1: float, theta2: float) -> tuple[float, float]:
    """Final solution-class probability for each hypothesis."""
    schedule = PhaseSchedule.sure_success(k, theta1, theta2)
    small = subspace.evolve(w_small, schedule)
    big = subspace.evolve(1.0 - w_small, schedule)
    return abs(small[1]) ** 2, abs(big[1]) ** 2


def _verified(w_small: float, k: int, theta1: float, theta2: float) -> bool:
    """True iff the two hypotheses land on opposite poles, smaller at -(-1)^k."""
    p_small, p_big = _pole_probabilities(w_small, k, theta1, theta2)
    if k % 2 == 1:
        return p_small >= 1.0 - POLE_TOL and 1.0 - p_big >= 1.0 - POLE_TOL
    return 1.0 - p_small >= 1.0 - POLE_TOL and p_big >= 1.0 - POLE_TOL


def solve_theta2(k: int, beta: float, y: float) -> float:
    """Second modified diffusion phase for a given cross-point y.

    Raises on a degenerate denominator in the defining relation, and when
    no analytic branch passes the end-to-end opposite-pole verification.
    """
    sign = -1.0 if k % 2 else 1.0
    denom = math.cos(beta) * math.cos(2 * beta) - sign * math.cos((2 * k - 2) * beta)
    if abs(denom) <= DENOM_TOL:
        raise InfeasiblePhaseError(f"theta2 relation degenerate at k = {k}, beta = {beta}")
    sin_t1 = y / math.sin((2 * k - 2) * beta)
    cos_t1 = _snap_cos(
        (sign * math.cos(beta) - math.cos(2 * beta) * math.cos((2 * k - 2) * beta))
        / (math.sin(2 * beta) * math.sin((2 * k - 2) * beta))
    )
    theta1 = math.atan2(sin_t1, cos_t1)
    w_small = math.sin(beta / 2.0) ** 2
    for theta2 in _theta2_candidates(k, beta, y):
        if _verified(w_small, k, theta1, theta2):
            return theta2
    raise PhaseSolutionFailureError(
        f"no theta2 branch reaches both poles at k = {k}, beta = {beta}"
    )


def plan_for_weight(w: float) -> SureSuccessPlan:
    """Solve the full plan for the promise pair (w, 1-w).

    One plan serves both hypotheses; candidate (theta1, theta2) branches
    and their sign flips are tried until the exact simulation confirms
    opposite poles, else the solve fails loudly.
    """
    k = select_k(w)
    w_small = min(w, 1.0 - w)
    beta = 2.0 * math.asin(math.sqrt(w_small))
    theta1 = solve_theta1(k, beta)
    candidates: list[tuple[float, float]] = []
    for t1 in (theta1, -theta1):
        y = math.sin(t1) * math.sin((2 * k - 2) * beta)
        for t2 in _theta2_candidates(k, beta, y):
            candidates.append((t1, t2))
    # Mirror fallback: flipped theta2 with unflipped theta1 and vice versa.
    candidates.extend([(t1, -t2) for t1, t2 in list(candidates)])
    for t1, t2 in candidates:
        if _verified(w_small, k, t1, t2):
            return SureSuccessPlan(
                k=k,
                theta1=t1,
                theta2=t2,
                beta_small=beta,
                beta_big=math.pi - beta,
                y=math.sin(t1) * math.sin((2 * k - 2) * beta),
            )
    raise PhaseSolutionFailureError(f"no verified phase branch for w = {w} (k = {k})")


def hypothesis_report(plan: SureSuccessPlan, u_small: float, u_big: float):
    """(final Bloch z, correct-inference probability) per hypothesis.

    u_small and u_big are the actual weight fractions run, which may be
    rounded versions of the promised w; certainty then degrades to the
    reported probability instead of being overclaimed.
    """
    schedule = plan.schedule
    out = []
    for u, small in ((u_small, True), (u_big, False)):
        vec = subspace.evolve(u, schedule)
        z = abs(vec[1]) ** 2 - abs(vec[0]) ** 2
        p_sol = abs(vec[1]) ** 2
        if plan.k % 2 == 1:
            p_correct = p_sol if small else 1.0 - p_sol
        else:
            p_correct = 1.0 - p_sol if small else p_sol
        out.append((z, p_correct))
    return out


def sure_success_decide(
    oracle: BooleanOracle, w: float, rng: np.random.Generator
) -> DecisionOutcome:
    """Run the plan against an oracle and infer max/min weight by parity.

    When N*w is an integer and the oracle weight matches a hypothesis the
    inference is certain; otherwise the sampled outcome follows the exact
    final distribution at the oracle's true fraction.
    """
    plan = plan_for_weight(w)
    size = oracle.size
    t_small = round_weight(min(w, 1.0 - w), size)
    t_big = round_weight(max(w, 1.0 - w), size)
    vec = subspace.evolve(oracle.t / size, plan.schedule)
    x_hat, f_bit = _sample_outcome(oracle, abs(vec[1]) ** 2, rng)
    if plan.k % 2 == 1:
        inferred = t_big if f_bit == 0 else t_small
    else:
        inferred = t_big if f_bit == 1 else t_small
    return DecisionOutcome(
        measured_x=x_hat,
        f_of_x=f_bit,
        inferred_t=inferred,
        correct=inferred == oracle.t,
        oracle_calls=plan.oracle_calls,
    )


def verify_no_cross(k: int, beta: float) -> bool:
    """Inequality guaranteeing no cross point before the (k-1)-th step.

    -sin(2 beta) > sin((2k-3) beta), proved for odd k on the bracket
    ((k-1)/(2k-1) pi, k/(2k+1) pi].
    """
    if k < 3 or k % 2 == 0:
        raise ParameterError("the no-cross inequality is stated for odd k >= 3")
    return -math.sin(2 * beta) > math.sin((2 * k - 3) * beta)


def verify_first_cross(k: int, beta: float) -> bool:
    """Inequality placing the first cross point at the (k-1)-th step.

    sin(2 beta) >= sin((2k-1) beta) on the same bracket, odd k.
    """
    if k < 3 or k % 2 == 0:
        raise ParameterError("the first-cross inequality is stated for odd k >= 3")
    return math.sin(2 * beta) >= math.sin((2 * k - 1) * beta) - 1e-12


def even_k_cross_analogues(k: int, beta: float) -> tuple[bool, bool]:
    """Mirrored no-cross / first-cross checks for even k.

    For even k the trajectory sits on the opposite side of the x axis, so
    the empirical analogues are sin((2k-3) beta) > sin(2 beta) and
    sin((2k-1) beta) >= -sin(2 beta).  Reported, not proved.
    """
    if k < 4 or k % 2 == 1:
        raise ParameterError("analogue checks are for even k >= 4")
    no_cross = math.sin((2 * k - 3) * beta) > math.sin(2 * beta)
    first_cross = math.sin((2 * k - 1) * beta) >= -math.sin(2 * beta) - 1e-12
    return no_cross, first_cross


def bracket(k: int) -> tuple[float, float]:
    """Bloch-angle bracket ((k-1)/(2k-1) pi, k/(2k+1) pi] for one k."""
    if k < 2:
        raise ParameterError("k must be >= 2")
    return (k - 1) / (2 * k - 1) * math.pi, k / (2 * k + 1) * math.pi


def rotate(vector: np.ndarray, axis: np.ndarray, angle: float) -> np.ndarray:
    """Right-handed Rodrigues rotation of a 3-vector about a unit axis."""
    axis = np.asarray(axis, dtype=float)
    vector = np.asarray(vector, dtype=float)
    cos_a, sin_a = math.cos(angle), math.sin(angle)
    return (
        vector * cos_a
        + np.cross(axis, vector) * sin_a
        + axis * np.dot(axis, vector) * (1.0 - cos_a)
    )


def run_schedule_bloch(beta: float, schedule) -> np.ndarray:
    """Execute a schedule as Bloch rotations for the hypothesis at angle beta.

    The Hilbert step -I_{psi0}(theta) I_{sol}(phi) acts as a rotation by
    phi about the solution pole followed by a rotation by theta about this
    hypothesis's uniform-state axis (global phase discarded).
    """
    psi0_axis = np.array([math.sin(beta), 0.0, -math.cos(beta)])
    z_axis = np.array([0.0, 0.0, 1.0])
    vec = psi0_axis.copy()
    for theta, phi in schedule:
        vec = rotate(vec, z_axis, phi)
        vec = rotate(vec, psi0_axis, theta)
    return vec
