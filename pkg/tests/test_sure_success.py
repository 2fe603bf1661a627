import math

import numpy as np
import pytest

from groverweight import statevector, subspace, sure_success
from groverweight.errors import (
    GeometryInfeasibleError,
    IndistinguishablePairError,
    InfeasiblePhaseError,
    ParameterError,
)
from groverweight.oracle import make_random_oracle
from groverweight.subspace import PhaseSchedule


def test_select_k_examples():
    assert sure_success.select_k(0.3) == 2
    assert sure_success.select_k(math.sin(math.pi / 5) ** 2) == 2  # boundary inclusive
    assert sure_success.select_k(0.4) == 4
    assert sure_success.select_k(0.7) == 2  # mirrored through 1 - w
    with pytest.raises(IndistinguishablePairError):
        sure_success.select_k(0.5)
    with pytest.raises(ParameterError):
        sure_success.select_k(0.0)


def test_select_k_bracket_property():
    rng = np.random.default_rng(2)
    for w in rng.uniform(1e-4, 0.4999, 300):
        k = sure_success.select_k(float(w))
        assert k >= 2
        if k == 2:
            assert w <= subspace.mu(2)
        else:
            assert subspace.mu(k - 1) < w <= subspace.mu(k)


def test_cross_point_boundary_lies_in_xz_plane():
    point = sure_success.cross_point(2, 2 * math.pi / 5)
    assert point.y == pytest.approx(0.0, abs=1e-7)
    assert point.x == pytest.approx(-0.5877852522924731, abs=1e-12)
    assert point.z == pytest.approx(0.8090169943749475, abs=1e-12)
    assert point.norm() == pytest.approx(1.0, abs=1e-10)


def test_cross_point_unit_norm_across_brackets():
    rng = np.random.default_rng(3)
    for k in range(2, 9):
        lo, hi = sure_success.bracket(k)
        lo = 1e-3 if k == 2 else lo  # k = 2 serves every fraction below mu_2
        for beta in rng.uniform(lo + 1e-9, hi, 50):
            point = sure_success.cross_point(k, float(beta))
            assert point.norm() == pytest.approx(1.0, abs=1e-10)
            assert point.y >= 0.0


def test_cross_point_infeasible_off_bracket():
    # mirrored angle pi - beta lies outside the bracket; the formula leaves the sphere
    with pytest.raises(GeometryInfeasibleError):
        sure_success.cross_point(2, math.pi - 2 * math.pi / 5)


def test_theta1_boundary_is_pi_exactly():
    assert sure_success.solve_theta1(2, 2 * math.pi / 5) == pytest.approx(math.pi, abs=1e-12)


def test_theta1_rotation_lands_on_cross_point():
    # Rodrigues rotation is the independent check on the phase equation
    for k, w in ((2, 0.30), (4, 0.40), (3, math.sin(math.pi / 5) ** 2 + 0.02)):
        beta = 2 * math.asin(math.sqrt(w))
        theta1 = sure_success.solve_theta1(k, beta)
        target = sure_success.cross_point(k, beta)
        axis = np.array([math.sin(beta), 0.0, -math.cos(beta)])
        start = np.array(
            [-math.sin((2 * k - 3) * beta), 0.0, -math.cos((2 * k - 3) * beta)]
        )
        hits = []
        for signed in (theta1, -theta1):
            rotated = sure_success.rotate(start, axis, signed)
            hits.append(np.allclose(rotated, [target.x, target.y, target.z], atol=1e-9))
        assert any(hits)


def test_theta2_boundary_is_pi_exactly():
    theta2 = sure_success.solve_theta2(2, 2 * math.pi / 5, 0.0)
    assert abs(abs(theta2) - math.pi) < 1e-12


def test_theta2_degenerate_denominator_raises():
    # k = 2, beta = pi/4 zeroes cos(beta)cos(2 beta) - cos(2 beta)
    with pytest.raises(InfeasiblePhaseError):
        sure_success.solve_theta2(2, math.pi / 4, 0.1)


def test_plan_certainty_for_spec_scale_cases():
    for w in (0.30, 0.40, 0.25, 11 / 32, 0.47):
        plan = sure_success.plan_for_weight(w)
        report = sure_success.hypothesis_report(plan, min(w, 1 - w), max(w, 1 - w))
        for z, p_correct in report:
            assert p_correct >= 1 - 1e-9
            assert abs(abs(z) - 1.0) < 1e-9


def test_plan_shares_one_phase_pair_for_both_hypotheses():
    plan = sure_success.plan_for_weight(0.3)
    schedule = plan.schedule
    assert len(schedule) == plan.k
    assert schedule.steps[-2] == (-plan.theta1, math.pi)
    assert schedule.steps[-1] == (-plan.theta2, math.pi)
    # both runs consume the same schedule object; final poles are opposite
    small = subspace.evolve(0.3, schedule)
    big = subspace.evolve(0.7, schedule)
    assert abs(small[0]) ** 2 == pytest.approx(1.0, abs=1e-9)  # even k: non-solution pole
    assert abs(big[1]) ** 2 == pytest.approx(1.0, abs=1e-9)


def test_boundary_weights_degenerate_to_standard_grover():
    for k in range(2, 11):
        plan = sure_success.plan_for_weight(subspace.mu(k))
        assert plan.k == k
        assert abs(abs(plan.theta1) - math.pi) < 1e-9
        assert abs(abs(plan.theta2) - math.pi) < 1e-9


def test_plan_survives_theta2_degenerate_weight():
    # w with D = 0 exactly: the linear-form solver still verifies a branch
    w = math.sin(math.pi / 8) ** 2
    plan = sure_success.plan_for_weight(w)
    report = sure_success.hypothesis_report(plan, w, 1 - w)
    assert all(p >= 1 - 1e-9 for _, p in report)


def test_decide_statevector_support_both_hypotheses():
    # integral N*w: probability-1 inference via the full simulator's support
    size = 32
    w = 11 / 32
    plan = sure_success.plan_for_weight(w)
    for t, good_bit in ((11, 1 if plan.k % 2 else 0), (21, 0 if plan.k % 2 else 1)):
        orc = make_random_oracle(5, t, seed=t)
        out = statevector.run_full_schedule(orc, plan.schedule)
        dist = statevector.measure_distribution(out)
        support = np.flatnonzero(dist > 1e-12)
        assert all(orc.value(int(x)) == good_bit for x in support)


def test_decide_outcomes_correct_on_both_weights():
    rng = np.random.default_rng(8)
    expected_calls = sure_success.plan_for_weight(11 / 32).k + 1
    for t in (11, 21):
        orc = make_random_oracle(5, t, seed=t + 1)
        for _ in range(20):
            out = sure_success.sure_success_decide(orc, 11 / 32, rng)
            assert out.correct and out.inferred_t == t
            assert out.oracle_calls == expected_calls


def test_decide_with_redundant_small_plan():
    # w = 1/4 is decidable with one standard iteration; the k = 2 plan must also work
    rng = np.random.default_rng(21)
    orc = make_random_oracle(2, 1, seed=0)
    for _ in range(20):
        out = sure_success.sure_success_decide(orc, 0.25, rng)
        assert out.correct and out.inferred_t == 1


def test_no_cross_inequality_on_brackets():
    for k in (3, 5, 7, 9):
        lo, hi = sure_success.bracket(k)
        for beta in np.linspace(lo, hi, 102)[1:]:
            assert sure_success.verify_no_cross(k, float(beta))
            assert sure_success.verify_first_cross(k, float(beta))


def test_no_cross_negative_control_below_bracket():
    lo, _ = sure_success.bracket(3)
    assert not sure_success.verify_no_cross(3, lo - 0.1)


def test_first_cross_boundary_equality_allowed():
    for k in (3, 5, 9):
        _, hi = sure_success.bracket(k)
        assert sure_success.verify_first_cross(k, hi)


def test_cross_checks_reject_even_k():
    with pytest.raises(ParameterError):
        sure_success.verify_no_cross(4, 1.3)
    with pytest.raises(ParameterError):
        sure_success.even_k_cross_analogues(5, 1.3)


def test_even_k_analogues_hold_empirically():
    for k in (4, 6, 8, 10):
        lo, hi = sure_success.bracket(k)
        for beta in np.linspace(lo, hi, 102)[1:]:
            no_cross, first_cross = sure_success.even_k_cross_analogues(k, float(beta))
            assert no_cross and first_cross


def test_bloch_and_hilbert_paths_agree():
    rng = np.random.default_rng(31)
    for w in rng.uniform(0.02, 0.48, 25):
        w = float(w)
        plan = sure_success.plan_for_weight(w)
        for u in (w, 1 - w):
            beta = 2 * math.asin(math.sqrt(u))
            bloch_vec = sure_success.run_schedule_bloch(beta, plan.schedule)
            pair = subspace.evolve(u, plan.schedule)
            z_hilbert = abs(pair[1]) ** 2 - abs(pair[0]) ** 2
            assert bloch_vec[2] == pytest.approx(z_hilbert, abs=1e-9)
            assert np.linalg.norm(bloch_vec) == pytest.approx(1.0, abs=1e-9)
