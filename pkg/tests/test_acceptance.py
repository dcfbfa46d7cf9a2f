"""Acceptance gate: ten end-to-end criteria with pinned tolerances.

Each test is one criterion; the conftest terminal-summary hook prints one
pass/fail line per criterion at the end of the run.
"""

import time

import numpy as np
import pytest

import ahcurv as ac
from ahcurv.cli import main

PENCIL_FLATNESS_TOL = 1e-10
TRACE_IDENTITY_TOL = 1e-10
BOCHNER_TRACE_TOL = 1e-9
LEMMA_FLOAT_MARGIN = 1e-6
CONDITION_TOL = 1e-7
THEOREM_TOL = 1e-6
REPLAY_TOL = 1e-6
PENCIL_C1_TOL = 1e-12
NEGATIVE_CONTROL_MIN_DEV = 1e-3

LEMMA_EXACT_BUDGET_S = 60.0
LEMMA_FLOAT_BUDGET_S = 5.0
THEOREM_CASE2_BUDGET_S = 30.0
THEOREM_CASE1_BUDGET_S = 15.0
COROLLARY_BUDGET_S = 10.0
REPLAY_BUDGET_S = 30.0


def test_criterion_01_pencil_bochner_flatness():
    rng = np.random.default_rng(101)
    for n in (3, 4, 5):
        s = ac.standard_structure(n)
        p1_norm = ac.tensor_norm(ac.pi1(s))
        for _ in range(10):
            a, b = rng.uniform(-2.0, 2.0, size=2)
            B = ac.bochner(ac.pencil(s, a, b), s)
            assert ac.tensor_norm(B) <= PENCIL_FLATNESS_TOL * (abs(a) + abs(b)) * p1_norm


def test_criterion_02_trace_identity_suite():
    for n in (3, 4):
        s = ac.standard_structure(n)
        rng = np.random.default_rng(200 + n)
        g = np.eye(2 * n)
        for _ in range(20):
            A = rng.standard_normal((2 * n, 2 * n))
            Q = A + A.T
            Q = 0.5 * (Q + s.J.T @ Q @ s.J)
            trQ = np.trace(Q)
            phiQ, psiQ = ac.phi(Q, s), ac.psi(Q, s)
            pairs = [
                (ac.ricci(phiQ), trQ * g + (2 * n - 2) * Q),
                (ac.ricci(psiQ), 6.0 * Q),
                (ac.star_ricci(phiQ, s), 2.0 * Q),
                (ac.star_ricci(psiQ, s), trQ * g + (2 * n + 2) * Q),
                (ac.ricci(ac.pi1(s)), (2 * n - 1) * g),
                (ac.ricci(ac.pi2(s)), 3.0 * g),
                (ac.star_ricci(ac.pi1(s), s), g),
                (ac.star_ricci(ac.pi2(s), s), (2 * n + 1) * g),
            ]
            for got, expected in pairs:
                rel = np.linalg.norm(got - expected) / max(1.0, np.linalg.norm(expected))
                assert rel <= TRACE_IDENTITY_TOL


def test_criterion_03_bochner_trace_freeness():
    s = ac.standard_structure(3)
    rng = np.random.default_rng(300)
    for _ in range(20):
        R = ac.random_rk_tensor(rng, s)
        B = ac.bochner(R, s)
        budget = BOCHNER_TRACE_TOL * ac.tensor_norm(R)
        assert np.linalg.norm(ac.ricci(B)) <= budget
        assert np.linalg.norm(ac.star_ricci(B, s)) <= budget


def test_criterion_04_lemma_exact_and_float():
    t0 = time.monotonic()
    assert ac.lemma_kernel_dimension(2, "exact") == 0
    assert ac.lemma_kernel_dimension(3, "exact") == 0
    assert time.monotonic() - t0 <= LEMMA_EXACT_BUDGET_S
    t0 = time.monotonic()
    for n in (2, 3):
        result = ac.lemma_kernel(n, "float")
        assert result.dimension == 0
        assert result.smallest_retained_ratio >= LEMMA_FLOAT_MARGIN
    assert time.monotonic() - t0 <= LEMMA_FLOAT_BUDGET_S


def test_criterion_05_theorem_case_two_end_to_end():
    s = ac.standard_structure(3)
    t0 = time.monotonic()
    for seed in range(20):
        rng = np.random.default_rng(500 + seed)
        mu, nu = rng.uniform(-1.0, 1.0, size=2)
        sample = ac.constrained_sample(s, 1.0, mu, nu, rng)
        assert sample.condition_dev <= CONDITION_TOL
        report = ac.verify_theorem(sample.tensor, s, 1.0, mu, nu, rng,
                                   tol=THEOREM_TOL)
        assert report.case == "lambda_nonzero"
        assert report.bochner_norm <= THEOREM_TOL
        assert report.proportionality_residual <= THEOREM_TOL
        assert report.passed
    assert time.monotonic() - t0 <= THEOREM_CASE2_BUDGET_S


def test_criterion_06_theorem_case_one_end_to_end():
    s = ac.standard_structure(3)
    t0 = time.monotonic()
    for seed in range(10):
        rng = np.random.default_rng(600 + seed)
        mu, nu = 0.0, 0.0
        while abs(mu) < 0.05 and abs(nu) < 0.05:
            mu, nu = rng.uniform(-1.0, 1.0, size=2)
        sample = ac.constrained_sample(s, 0.0, mu, nu, rng)
        report = ac.verify_theorem(sample.tensor, s, 0.0, mu, nu, rng,
                                   tol=THEOREM_TOL)
        assert report.case == "lambda_zero"
        assert report.proportionality_residual <= THEOREM_TOL
        assert report.passed
    assert time.monotonic() - t0 <= THEOREM_CASE1_BUDGET_S


def test_criterion_07_corollary_both_directions():
    s = ac.standard_structure(3)
    t0 = time.monotonic()
    tensors = []
    for seed in range(3):
        rng = np.random.default_rng(700 + seed)
        tensors.append(ac.constrained_sample(s, 1.0, 0.0, 0.0, rng).tensor)
    pencil_rng = np.random.default_rng(790)
    for _ in range(2):
        a, b = pencil_rng.uniform(-2.0, 2.0, size=2)
        tensors.append(ac.pencil(s, a, b))
    for k, R in enumerate(tensors):
        report = ac.verify_corollary(R, s, np.random.default_rng(750 + k),
                                     tol=THEOREM_TOL)
        assert report.forward_applicable and report.forward_passed
        assert report.reverse_applicable and report.reverse_passed
        assert report.passed
    assert time.monotonic() - t0 <= COROLLARY_BUDGET_S


def test_criterion_08_derivation_replay():
    s = ac.standard_structure(3)
    t0 = time.monotonic()
    for seed in range(10):
        rng = np.random.default_rng(800 + seed)
        sample = ac.constrained_sample(s, 1.0, 0.3, -0.2, rng)
        report = ac.replay_derivation(sample.tensor, s, 1.0, 0.3, -0.2, rng)
        for tag, residual in report.residuals.items():
            assert residual <= REPLAY_TOL * report.scale, (tag, residual)
    a, b = 1.3, 0.7
    pencil_report = ac.replay_derivation(ac.pencil(s, a, b), s, 1.0, 0.0, 0.0,
                                         np.random.default_rng(890))
    assert abs(pencil_report.c1_formula - a) <= PENCIL_C1_TOL
    assert time.monotonic() - t0 <= REPLAY_BUDGET_S


def test_criterion_09_negative_control(tmp_path):
    s = ac.standard_structure(3)
    R = ac.random_rk_tensor(np.random.default_rng(900), s)
    _, max_dev = ac.condition_residual(R, s, 1.0, 0.0, 0.0, 200,
                                       np.random.default_rng(901))
    assert max_dev > NEGATIVE_CONTROL_MIN_DEV
    path = tmp_path / "generic.json"
    ac.write_tensor_file(path, ac.TensorFile(n=3, tensor=R, kind="random-rk"))
    assert main(["verify", "theorem", str(path), "--lambda", "1"]) == 4


def test_criterion_10_cli_determinism_and_round_trip(tmp_path):
    first = tmp_path / "first.json"
    second = tmp_path / "second.json"
    argv = ["gen", "--n", "3", "--kind", "constrained", "--lambda", "1",
            "--mu", "0.5", "--nu", "0.25", "--seed", "77"]
    assert main(argv + ["--out", str(first)]) == 0
    assert main(argv + ["--out", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()
    loaded = ac.read_tensor_file(first)
    round_trip = tmp_path / "copy.json"
    ac.write_tensor_file(round_trip, loaded)
    assert np.array_equal(ac.read_tensor_file(round_trip).tensor, loaded.tensor)
