import numpy as np
import pytest
from hypothesis import given, strategies as st

import ahcurv as ac
from ahcurv.constraints import lemma_constraint_matrix

BASIS_TOL = 1e-10
CONDITION_TOL = 1e-7
VERIFY_TOL = 1e-6
PENCIL_TOL = 1e-10
EXPECTED_RK_DIMS = {2: 12, 3: 57}
EXPECTED_HOLO_ONLY_DIMS = {2: 3, 3: 21}
EXPECTED_ANTI_ONLY_DIMS = {2: 4, 3: 9}


@pytest.mark.parametrize("n", [2, 3])
def test_rk_basis_dimension_and_orthonormality(n):
    basis = ac.rk_basis(ac.standard_structure(n))
    assert len(basis) == EXPECTED_RK_DIMS[n]
    gram = basis.matrix @ basis.matrix.T
    assert np.abs(gram - np.eye(len(basis))).max() <= BASIS_TOL


def test_rk_basis_elements_are_fixed_points(st3):
    basis = ac.rk_basis(st3)
    for T in basis.tensors[:10]:
        assert ac.validate_curvature_symmetries(T).max_residual() <= BASIS_TOL
        assert ac.rk_residual(T, st3) <= BASIS_TOL
        reprojected = ac.project_rk(ac.project_curvature(T), st3)
        assert np.abs(reprojected - T).max() <= BASIS_TOL


def test_rk_basis_spans_pencil(st3):
    basis = ac.rk_basis(st3)
    R = ac.pencil(st3, -0.9, 2.3).ravel()
    reconstructed = (basis.matrix @ R) @ basis.matrix
    assert np.abs(reconstructed - R).max() <= BASIS_TOL


def test_random_rk_tensor_properties(st3, rng):
    R = ac.random_rk_tensor(rng, st3)
    assert abs(ac.tensor_norm(R) - 1.0) <= 1e-12
    assert ac.validate_curvature_symmetries(R).passes()
    assert ac.rk_residual(R, st3) <= 1e-12


def test_constrained_sample_basic(st3):
    s = ac.constrained_sample(st3, 1.0, 0.0, 0.0, np.random.default_rng(0))
    assert abs(ac.tensor_norm(s.tensor) - 1.0) <= 1e-12
    assert s.condition_dev <= CONDITION_TOL
    assert s.solution_dim == 10  # n^2 + 1 at n = 3 for generic lam != 0
    fresh = np.random.default_rng(99)
    vals = []
    for _ in range(200):
        p = ac.sample_antiholomorphic_pair(fresh, st3)
        vals.append(ac.evaluate4(s.tensor, p.x, p.y, p.y, p.x))
    assert np.ptp(vals) <= 2 * CONDITION_TOL


def test_constrained_sample_guards(st3):
    rng = np.random.default_rng(0)
    with pytest.raises(ac.InvalidArgument):
        ac.constrained_sample(st3, 0.0, 0.0, 0.0, rng)
    with pytest.raises(ac.InvalidArgument):
        ac.constrained_sample(st3, 1.0, 0.0, 0.0, rng, plane_count=10)
    with pytest.raises(ac.DimensionTooSmall):
        ac.constrained_sample(ac.standard_structure(2), 1.0, 0.0, 0.0, rng)


def test_constrained_sample_no_solution_branch(st3, monkeypatch):
    # the two-parameter model family always solves the condition, so a trivial
    # kernel cannot arise from valid inputs; exercise the branch directly
    import ahcurv.constraints as mod

    monkeypatch.setattr(mod, "nullspace_float",
                        lambda A, rel_threshold: (np.empty((A.shape[1], 0)), 1.0))
    with pytest.raises(ac.NoSolution):
        ac.constrained_sample(st3, 1.0, 0.0, 0.0, np.random.default_rng(0))


@given(lam=st.floats(-2, 2, allow_nan=False), mu=st.floats(-2, 2, allow_nan=False),
       nu=st.floats(-2, 2, allow_nan=False))
def test_pencil_always_satisfies_condition(lam, mu, nu):
    if lam == 0.0 and mu == 0.0 and nu == 0.0:
        return
    s = ac.standard_structure(3)
    dev = ac.condition_residual(ac.pi1(s), s, lam, mu, nu, 40,
                                np.random.default_rng(1))[1]
    scale = max(1.0, abs(lam), abs(mu), abs(nu))
    assert dev <= PENCIL_TOL * scale


def test_verify_theorem_case_nonzero(st3):
    s = ac.constrained_sample(st3, 1.0, 0.25, -0.5, np.random.default_rng(21))
    report = ac.verify_theorem(s.tensor, st3, 1.0, 0.25, -0.5,
                               np.random.default_rng(22))
    assert report.case == "lambda_nonzero"
    assert report.passed
    assert report.bochner_norm <= VERIFY_TOL
    assert report.proportionality_residual <= VERIFY_TOL


def test_verify_theorem_case_zero_on_pencil(st3):
    report = ac.verify_theorem(ac.pencil(st3, 1.1, 0.4), st3, 0.0, 1.0, 0.0,
                               np.random.default_rng(23))
    assert report.case == "lambda_zero"
    assert report.bochner_norm is None
    assert report.proportionality_residual <= 1e-12
    assert report.passed


def test_verify_theorem_rejects_generic_tensor(st3, rng):
    R = ac.random_rk_tensor(rng, st3)
    with pytest.raises(ac.HypothesisNotSatisfied) as info:
        ac.verify_theorem(R, st3, 1.0, 0.0, 0.0, np.random.default_rng(24))
    assert info.value.max_dev > 1e-3


def test_verify_corollary_on_pencil_and_sample(st3):
    for R in (ac.pencil(st3, -0.4, 1.2),
              ac.constrained_sample(st3, 1.0, 0.0, 0.0,
                                    np.random.default_rng(31)).tensor):
        report = ac.verify_corollary(R, st3, np.random.default_rng(32))
        assert report.forward_applicable and report.forward_passed
        assert report.reverse_applicable and report.reverse_passed
        assert report.passed


def test_verify_corollary_generic_not_applicable(st3, rng):
    R = ac.random_rk_tensor(rng, st3)
    report = ac.verify_corollary(R, st3, np.random.default_rng(33))
    assert not report.forward_applicable
    assert not report.reverse_applicable
    assert report.forward_passed is None and report.reverse_passed is None
    assert report.passed  # vacuous: neither premise holds


@pytest.mark.parametrize("n", [2, 3])
def test_lemma_kernel_exact_is_zero(n):
    result = ac.lemma_kernel(n, "exact")
    assert result.dimension == 0
    assert result.levels[-1] == 0


@pytest.mark.parametrize("n", [2, 3])
def test_lemma_kernel_float_agrees(n):
    result = ac.lemma_kernel(n, "float")
    assert result.dimension == 0
    assert result.smallest_retained_ratio >= 1e-6


@pytest.mark.parametrize("n", [2, 3])
def test_lemma_holomorphic_only_regression(n):
    holo = ac.lemma_kernel(n, "exact", ac.LemmaConfig(families=(ac.HOLOMORPHIC,)))
    assert holo.dimension == EXPECTED_HOLO_ONLY_DIMS[n]
    assert holo.dimension > 0  # one family alone does not force vanishing
    holo_f = ac.lemma_kernel(n, "float", ac.LemmaConfig(families=(ac.HOLOMORPHIC,)))
    assert holo_f.dimension == holo.dimension


def test_lemma_antiholomorphic_only_regression():
    # exact mode at n=3 needs three enlargement levels here (slow); the n=2
    # exact value plus float agreement at both sizes pins the behavior
    anti = ac.lemma_kernel(2, "exact", ac.LemmaConfig(families=(ac.ANTIHOLOMORPHIC,)))
    assert anti.dimension == EXPECTED_ANTI_ONLY_DIMS[2]
    for n in (2, 3):
        anti_f = ac.lemma_kernel(n, "float",
                                 ac.LemmaConfig(families=(ac.ANTIHOLOMORPHIC,)))
        assert anti_f.dimension == EXPECTED_ANTI_ONLY_DIMS[n]


def test_lemma_inconclusive_when_capped():
    with pytest.raises(ac.Inconclusive):
        ac.lemma_kernel(2, "exact", ac.LemmaConfig(max_levels=1))


def test_lemma_kernel_guards():
    with pytest.raises(ac.DimensionTooSmall):
        ac.lemma_kernel(1, "exact")
    with pytest.raises(ac.InvalidArgument):
        ac.lemma_kernel(2, "rational")


def test_lemma_kernel_dimension_wrapper():
    assert ac.lemma_kernel_dimension(2, "exact") == 0


def test_lemma_constraint_matrix_shape():
    rows, ncols = lemma_constraint_matrix(2, level=1)
    assert ncols == 21  # pair-symmetric coordinates: m(m+1)/2 with m = C(4,2)
    assert all(len(r) == ncols for r in rows)
    rows3, ncols3 = lemma_constraint_matrix(3, level=1)
    assert ncols3 == 120
    dim, _ = ac.nullspace_exact(rows, ncols)
    assert dim == ac.lemma_kernel(2, "exact").levels[0]


def test_replay_on_constrained_sample(st3):
    s = ac.constrained_sample(st3, 1.0, 0.3, -0.2, np.random.default_rng(41))
    report = ac.replay_derivation(s.tensor, st3, 1.0, 0.3, -0.2,
                                  np.random.default_rng(42))
    assert set(report.residuals) == {"2.1", "polarization", "2.4", "2.5",
                                     "2.6", "2.7", "2.8", "2.9", "2.10"}
    assert report.normalized_max() <= VERIFY_TOL
    assert abs(report.c1_formula - report.c1_empirical) <= VERIFY_TOL


@given(t=st.floats(min_value=0.5, max_value=8.0, allow_nan=False))
def test_replay_residuals_scale_with_tensor(t):
    s = ac.standard_structure(3)
    R = ac.pencil(s, 0.9, -0.3)
    base = ac.replay_derivation(R, s, 1.0, 0.1, 0.2, np.random.default_rng(43))
    scaled = ac.replay_derivation(t * R, s, 1.0, 0.1, 0.2, np.random.default_rng(43))
    assert scaled.normalized_max() <= VERIFY_TOL
    assert abs(scaled.c1_formula - t * base.c1_formula) <= 1e-9 * max(1.0, t)


def test_replay_guards(st3, rng):
    R = ac.pencil(st3, 1.0, 0.0)
    with pytest.raises(ac.InvalidArgument):
        ac.replay_derivation(R, st3, 0.0, 1.0, 0.0, rng)
    with pytest.raises(ac.DimensionTooSmall):
        ac.replay_derivation(np.zeros((4,) * 4), ac.standard_structure(2),
                             1.0, 0.0, 0.0, rng)
    generic = ac.random_rk_tensor(rng, st3)
    with pytest.raises(ac.HypothesisNotSatisfied):
        ac.replay_derivation(generic, st3, 1.0, 0.0, 0.0, rng)
