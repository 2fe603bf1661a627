"""Randomized weight decision by repeated Grover iterations.

Implements the one-shot N/4 vs 3N/4 discriminator and its k-iteration
generalization for the promise pair (round(mu_k * N), round((1-mu_k) * N)),
including the parity-based inference rule and the exact success
probability evaluated from the amplitude recurrence.

Oracle-call accounting: reported counts include the single classical
verification query f(x_hat) on top of the k phase queries, so a k-iteration
run costs k + 1.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import subspace
from .errors import ParameterError, PromiseViolationError
from .oracle import BooleanOracle, round_weight
from .statevector import measure_distribution, run_full_schedule

SUPPORT_TOL = 1e-12


@dataclass(frozen=True)
class DecisionOutcome:
    """Result of one decision run: measurement, inference and cost."""

    measured_x: int
    f_of_x: int | None
    inferred_t: int
    correct: bool
    oracle_calls: int


@dataclass(frozen=True)
class PromisePair:
    """The two promised weights decidable with k standard iterations."""

    size: int
    t_small: int
    t_big: int
    k: int

    @classmethod
    def for_iterations(cls, k: int, size: int) -> "PromisePair":
        if k < 1:
            raise ParameterError("k must be >= 1")
        m = subspace.mu(k)
        t_small = round_weight(m, size)
        t_big = round_weight(1.0 - m, size)
        if not 0 < t_small < t_big < size:
            raise ParameterError(
                f"promise pair degenerate at N = {size}, k = {k}: ({t_small}, {t_big})"
            )
        return cls(size=size, t_small=t_small, t_big=t_big, k=k)

    def weights(self) -> tuple[int, int]:
        return self.t_small, self.t_big


def infer_from_bit(pair: PromisePair, k: int, f_bit: int) -> int:
    """Step-11 parity rule: map the verified bit f(x_hat) to a weight."""
    if k % 2 == 1:
        return pair.t_big if f_bit == 0 else pair.t_small
    return pair.t_big if f_bit == 1 else pair.t_small


def _class_probabilities(oracle: BooleanOracle, k: int) -> tuple[float, float]:
    """(P(f=0 outcome), P(f=1 outcome)) after k standard iterations."""
    t, size = oracle.t, oracle.size
    if t == 0:
        return 1.0, 0.0
    if t == size:
        return 0.0, 1.0
    state = subspace.run_schedule(t, size, subspace.PhaseSchedule.standard(k))
    p_sol = state.solution_probability
    return 1.0 - p_sol, p_sol


def _sample_outcome(oracle: BooleanOracle, p_sol: float, rng: np.random.Generator) -> tuple[int, int]:
    """Draw x_hat: Bernoulli on the class, then uniform within the class."""
    in_solution = rng.random() < p_sol
    pool = oracle.ones if in_solution else oracle.zeros
    x_hat = int(pool[rng.integers(len(pool))])
    return x_hat, int(in_solution)


def distinguish_quarter(oracle: BooleanOracle, rng: np.random.Generator | None = None) -> DecisionOutcome:
    """One-iteration discrimination of weights N/4 vs 3N/4.

    At the promised weights one entire class has zero amplitude, so the
    single verified bit f(x_hat) decides with certainty.  A final
    distribution with support in both classes contradicts both
    hypotheses and raises.
    """
    size = oracle.size
    if size % 4 != 0:
        raise ParameterError("domain size must be divisible by 4")
    rng = np.random.default_rng() if rng is None else rng
    sv = run_full_schedule(oracle, subspace.PhaseSchedule.standard(1))
    probs = measure_distribution(sv)
    mass_zero = float(probs[oracle.zeros].sum()) if len(oracle.zeros) else 0.0
    mass_one = float(probs[oracle.ones].sum()) if len(oracle.ones) else 0.0
    if mass_zero > SUPPORT_TOL and mass_one > SUPPORT_TOL:
        raise PromiseViolationError(
            "measurement support spans both classes; weight is neither N/4 nor 3N/4"
        )
    x_hat = int(rng.choice(size, p=probs / probs.sum()))
    f_bit = oracle.value(x_hat)
    inferred = 3 * size // 4 if f_bit == 0 else size // 4
    return DecisionOutcome(
        measured_x=x_hat,
        f_of_x=f_bit,
        inferred_t=inferred,
        correct=inferred == oracle.t,
        oracle_calls=2,
    )


def randomized_weight_decision(
    oracle: BooleanOracle,
    k: int,
    rng: np.random.Generator,
    strict: bool = False,
) -> DecisionOutcome:
    """k standard iterations, one sampled measurement, one verified bit.

    The inference rule is total, so an off-promise oracle still yields an
    answer; with strict=True a mismatch against the oracle's cached weight
    raises instead.
    """
    if k < 1:
        raise ParameterError("k must be >= 1")
    pair = PromisePair.for_iterations(k, oracle.size)
    _, p_sol = _class_probabilities(oracle, k)
    x_hat, f_bit = _sample_outcome(oracle, p_sol, rng)
    inferred = infer_from_bit(pair, k, f_bit)
    correct = inferred == oracle.t
    if strict and not correct:
        raise PromiseViolationError(
            f"inferred weight {inferred} does not match oracle weight {oracle.t}"
        )
    return DecisionOutcome(
        measured_x=x_hat,
        f_of_x=f_bit,
        inferred_t=inferred,
        correct=correct,
        oracle_calls=k + 1,
    )


def exact_success_probability(k: int, t: int, size: int) -> float:
    """Probability that the parity rule names the true weight; no sampling.

    Evaluated from the amplitude recurrence: with per-state amplitudes
    a_k/sqrt(N) and b_k/sqrt(N), the f=0 outcome carries (N-t) a_k^2 / N
    and the f=1 outcome t b_k^2 / N.
    """
    pair = PromisePair.for_iterations(k, size)
    if t not in pair.weights():
        raise ParameterError(f"weight {t} is not one of the promised pair {pair.weights()}")
    a, b = subspace.recurrence_amplitudes(k, t / size)
    p_zero = (size - t) * a * a / size
    p_one = t * b * b / size
    if k % 2 == 1:
        return p_one if t == pair.t_small else p_zero
    return p_zero if t == pair.t_small else p_one


def theorem_bound(k: int, size: int) -> float:
    """Guaranteed success lower bound 1 - 64 (k+1)^2 / N^2."""
    return 1.0 - 64.0 * (k + 1) ** 2 / size**2


def empirical_success_count(
    oracle: BooleanOracle,
    k: int,
    trials: int,
    rng: np.random.Generator,
) -> int:
    """Correct inferences over independent Monte Carlo runs.

    Only the measured class determines the inference, so trials draw the
    class Bernoulli in one vectorized pass.
    """
    if trials < 1:
        raise ParameterError("trials must be >= 1")
    pair = PromisePair.for_iterations(k, oracle.size)
    _, p_sol = _class_probabilities(oracle, k)
    f_bits = rng.random(trials) < p_sol
    big = (f_bits == 0) if k % 2 == 1 else (f_bits == 1)
    inferred = np.where(big, pair.t_big, pair.t_small)
    return int(np.count_nonzero(inferred == oracle.t))


def empirical_success_rate(
    oracle: BooleanOracle,
    k: int,
    trials: int,
    rng: np.random.Generator,
) -> float:
    return empirical_success_count(oracle, k, trials, rng) / trials


def theorem1_iteration_amplitudes(t: int, size: int) -> tuple[float, float]:
    """Per-state amplitudes after one standard iteration, in closed form.

    (N - 4t) / (N sqrt(N)) on the f=0 class and (3N - 4t) / (N sqrt(N))
    on the f=1 class, valid for every 0 <= t <= N.
    """
    root = size * math.sqrt(size)
    return (size - 4 * t) / root, (3 * size - 4 * t) / root
