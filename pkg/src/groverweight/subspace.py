"""Exact evolution in the two-dimensional invariant plane of Grover dynamics.

Every phase-oracle / diffusion operator preserves the plane spanned by the
normalized uniform superpositions over non-solutions and solutions.  A state
is therefore a complex pair (c_ns, c_sol), and one generalized iteration is
an exact 2x2 unitary.  Two angle conventions appear throughout:

* Hilbert half-angle  beta_H = arcsin(sqrt(t/N)),
* Bloch angle         beta_B = 2 * beta_H.

Functions document which one they take.  The amplitude recurrence is this
module's ground truth; the trigonometric closed forms and root sets follow
the assignment that agrees with it (a_k tracks the non-solution class, b_k
the solution class).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateSubspaceError, ParameterError

NORM_TOL = 1e-9


@dataclass(frozen=True)
class SubspaceState:
    """Amplitudes of the normalized (non-solution, solution) components."""

    c_ns: complex
    c_sol: complex
    t: int
    size: int

    def __post_init__(self):
        norm = abs(self.c_ns) ** 2 + abs(self.c_sol) ** 2
        if abs(norm - 1.0) > NORM_TOL:
            raise ParameterError(f"state not normalized: |c|^2 = {norm}")

    @property
    def u(self) -> float:
        """Weight fraction t/N."""
        return self.t / self.size

    @property
    def solution_probability(self) -> float:
        return abs(self.c_sol) ** 2

    def vector(self) -> np.ndarray:
        return np.array([self.c_ns, self.c_sol], dtype=complex)


@dataclass(frozen=True)
class BlochVector:
    x: float
    y: float
    z: float

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])

    def norm(self) -> float:
        return math.sqrt(self.x**2 + self.y**2 + self.z**2)


@dataclass(frozen=True)
class PhaseSchedule:
    """Ordered (theta, phi) phase pairs, one per generalized iteration.

    theta drives the diffusion operator -I_{psi0}(theta), phi the oracle
    phase I_{sol}(phi); the standard Grover iteration is (pi, pi).
    """

    steps: tuple[tuple[float, float], ...]

    def __post_init__(self):
        steps = tuple((float(t), float(p)) for t, p in self.steps)
        for theta, phi in steps:
            if not (math.isfinite(theta) and math.isfinite(phi)):
                raise ParameterError("phase angles must be finite")
        object.__setattr__(self, "steps", steps)

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    @classmethod
    def standard(cls, k: int) -> "PhaseSchedule":
        """k standard Grover iterations."""
        if k < 0:
            raise ParameterError("iteration count must be non-negative")
        return cls(((math.pi, math.pi),) * k)

    @classmethod
    def sure_success(cls, k: int, theta1: float, theta2: float) -> "PhaseSchedule":
        """k-2 standard iterations followed by (-theta1, pi), (-theta2, pi)."""
        if k < 2:
            raise ParameterError("sure-success schedules need k >= 2")
        steps = ((math.pi, math.pi),) * (k - 2)
        return cls(steps + ((-theta1, math.pi), (-theta2, math.pi)))


def hilbert_angle(u: float) -> float:
    """beta_H with sin^2(beta_H) = u."""
    if not 0.0 <= u <= 1.0:
        raise ParameterError(f"weight fraction {u} outside [0, 1]")
    return math.asin(math.sqrt(u))


def step_matrix(u: float, theta: float, phi: float) -> np.ndarray:
    """2x2 matrix of -I_{psi0}(theta) . I_{sol}(phi) in the (ns, sol) basis.

    The uniform state has coordinates (cos beta_H, sin beta_H).  At
    (pi, pi) this is the plain rotation by 2*beta_H (one Grover iteration);
    at (0, 0) it collapses to -identity.
    """
    beta = hilbert_angle(u)
    c, s = math.cos(beta), math.sin(beta)
    proj = np.array([[c * c, c * s], [c * s, s * s]], dtype=complex)
    i_psi0 = np.eye(2, dtype=complex) - (1.0 - np.exp(1j * theta)) * proj
    i_sol = np.array([[1.0, 0.0], [0.0, np.exp(1j * phi)]], dtype=complex)
    return -(i_psi0 @ i_sol)


def evolve(u: float, steps) -> np.ndarray:
    """Run a phase schedule from the uniform state at weight fraction u.

    Low-level path shared by integer-weight and real-fraction callers;
    returns the final (c_ns, c_sol) pair.
    """
    beta = hilbert_angle(u)
    state = np.array([math.cos(beta), math.sin(beta)], dtype=complex)
    for theta, phi in steps:
        state = step_matrix(u, theta, phi) @ state
    return state


def initial_state(t: int, size: int) -> SubspaceState:
    """Uniform superposition decomposed over the two classes."""
    if not 0 <= t <= size:
        raise ParameterError(f"weight {t} outside [0, {size}]")
    if t in (0, size):
        raise DegenerateSubspaceError(
            f"t = {t} of N = {size}: no two-dimensional invariant plane"
        )
    return SubspaceState(
        c_ns=complex(math.sqrt((size - t) / size)),
        c_sol=complex(math.sqrt(t / size)),
        t=t,
        size=size,
    )


def apply_generalized_step(state: SubspaceState, theta: float, phi: float) -> SubspaceState:
    """One -I_{psi0}(theta) . I_{sol}(phi) application, exactly unitary."""
    vec = step_matrix(state.u, theta, phi) @ state.vector()
    return SubspaceState(c_ns=vec[0], c_sol=vec[1], t=state.t, size=state.size)


def run_schedule(t: int, size: int, schedule: PhaseSchedule | tuple) -> SubspaceState:
    """Left-to-right composition of generalized steps from the uniform state."""
    state = initial_state(t, size)
    vec = evolve(state.u, schedule)
    return SubspaceState(c_ns=vec[0], c_sol=vec[1], t=t, size=size)


def recurrence_amplitudes(k: int, u: float) -> tuple[float, float]:
    """Per-state class amplitudes after k standard iterations, times sqrt(N).

    a_k multiplies every non-solution state, b_k every solution state; the
    common 1/sqrt(N) factor is carried symbolically.  This recurrence is
    the ground truth the trigonometric closed forms are checked against.
    """
    if k < 0:
        raise ParameterError("iteration count must be non-negative")
    if not 0.0 < u < 1.0:
        raise ParameterError(f"weight fraction {u} outside (0, 1)")
    a, b = 1.0, 1.0
    for _ in range(k):
        a, b = (1.0 - 2.0 * u) * a - 2.0 * u * b, 2.0 * (1.0 - u) * a + (1.0 - 2.0 * u) * b
    return a, b


def closed_form_amplitudes(k: int, u: float) -> tuple[float, float]:
    """Closed form of the recurrence: a_k = cos((2k+1)b)/cos(b), b_k = sin((2k+1)b)/sin(b).

    b here is the Hilbert half-angle of u.
    """
    if k < 0:
        raise ParameterError("iteration count must be non-negative")
    if not 0.0 < u < 1.0:
        raise ParameterError(f"weight fraction {u} outside (0, 1)")
    beta = hilbert_angle(u)
    return (
        math.cos((2 * k + 1) * beta) / math.cos(beta),
        math.sin((2 * k + 1) * beta) / math.sin(beta),
    )


def roots(k: int) -> tuple[tuple[float, ...], tuple[float, ...]]:
    """The k weight-fraction zeros of a_k and of b_k, each ascending.

    a_k vanishes at sin^2((2m-1)/(2k+1) * pi/2) and b_k at
    sin^2(l*pi/(2k+1)), 1 <= m, l <= k; paired elements across the two
    sets sum to one.
    """
    if k < 1:
        raise ParameterError("k must be >= 1")
    a_roots = tuple(math.sin((2 * m - 1) / (2 * k + 1) * math.pi / 2) ** 2 for m in range(1, k + 1))
    b_roots = tuple(math.sin(l * math.pi / (2 * k + 1)) ** 2 for l in range(1, k + 1))
    return a_roots, b_roots


def mu(k: int) -> float:
    """The root closest to 1/2 decidable with k standard iterations."""
    if k < 1:
        raise ParameterError("k must be >= 1")
    return math.sin(k / (2 * k + 1) * math.pi / 2) ** 2


def bloch_from_state(state: SubspaceState) -> BlochVector:
    """Bloch picture with the solution pole at (0, 0, +1).

    The uniform state maps to (sin beta_B, 0, -cos beta_B).
    """
    cross = np.conj(state.c_ns) * state.c_sol
    return BlochVector(
        x=2.0 * cross.real,
        y=2.0 * cross.imag,
        z=abs(state.c_sol) ** 2 - abs(state.c_ns) ** 2,
    )


def bloch_from_pair(vec: np.ndarray) -> BlochVector:
    """Bloch map for a raw (c_ns, c_sol) pair from :func:`evolve`."""
    cross = np.conj(vec[0]) * vec[1]
    return BlochVector(
        x=2.0 * cross.real,
        y=2.0 * cross.imag,
        z=abs(vec[1]) ** 2 - abs(vec[0]) ** 2,
    )
