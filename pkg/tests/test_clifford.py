import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dirac2e import clifford
from dirac2e.exact import ExactMatrix, ExactScalar


def test_pauli_matrices_match_standard_display():
    assert clifford.pauli(1).to_numpy().tolist() == [[0, 1], [1, 0]]
    assert clifford.pauli(3).to_numpy().tolist() == [[1, 0], [0, -1]]
    s2 = clifford.pauli(2).to_numpy()
    assert np.array_equal(s2, np.array([[0, -1j], [1j, 0]]))


def test_pauli_squares_to_identity_exactly():
    for j in (1, 2, 3):
        s = clifford.pauli(j)
        assert (s @ s) == ExactMatrix.identity(2)


def test_pauli_index_out_of_range():
    with pytest.raises(ValueError):
        clifford.pauli(0)
    with pytest.raises(ValueError):
        clifford.pauli(4)


def test_beta_is_diag_1_1_m1_m1():
    rep = clifford.standard_dirac_rep()
    assert rep.beta.to_numpy().tolist() == [
        [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]]


def test_alpha_beta_anticommute_exactly():
    rep = clifford.standard_dirac_rep()
    a1, beta = rep.alpha[0], rep.beta
    assert (a1 @ beta + beta @ a1).is_zero()


def test_alpha_squares_to_identity():
    rep = clifford.standard_dirac_rep()
    a2 = rep.alpha[1]
    assert (a2 @ a2) == ExactMatrix.identity(4)


def test_all_matrices_hermitian():
    rep = clifford.standard_dirac_rep()
    for m in rep.all_matrices():
        assert m.is_hermitian()


def test_check_clifford_all_pass_with_zero_deviation():
    checks = clifford.check_clifford(clifford.standard_dirac_rep())
    assert len(checks) == 10
    assert all(c.passed for c in checks)
    assert all(c.deviation == 0.0 for c in checks)


def test_check_clifford_reports_identity_beta_failure():
    rep = clifford.standard_dirac_rep()
    bad = clifford.DiracRep(alpha=rep.alpha, beta=ExactMatrix.identity(4))
    checks = {c.name: c for c in clifford.check_clifford(bad)}
    # I4 commutes with alpha_1, so {beta, alpha_1} = 2*alpha_1 != 0.
    assert not checks["anticommutator(m1,m4)"].passed
    assert checks["anticommutator(m1,m4)"].deviation == 2.0


def test_check_clifford_scaled_alpha_deviation():
    rep = clifford.standard_dirac_rep()
    scaled = clifford.DiracRep(
        alpha=(rep.alpha[0].scale(2), rep.alpha[1], rep.alpha[2]),
        beta=rep.beta)
    # Independent exact multiply: {2a1, 2a1} - 2 I4 = 8 I4 - 2 I4 = 6 I4.
    a1 = rep.alpha[0].to_numpy()
    defect = (2 * a1) @ (2 * a1) + (2 * a1) @ (2 * a1) - 2 * np.eye(4)
    expected_dev = float(np.max(np.abs(defect)))
    checks = {c.name: c for c in clifford.check_clifford(scaled)}
    rec = checks["anticommutator(m1,m1)"]
    assert not rec.passed
    assert rec.deviation == expected_dev == 6.0


def test_free_symbol_at_rest_is_beta():
    sym = clifford.free_symbol((0, 0, 0), 1.0)
    rep = clifford.standard_dirac_rep()
    assert np.array_equal(sym.matrix, rep.beta.to_numpy())


def test_free_symbol_massless_e3_has_sigma3_off_blocks():
    sym = clifford.free_symbol((0, 0, 1), 0.0)
    s3 = clifford.pauli(3).to_numpy()
    assert np.array_equal(sym.matrix[:2, 2:], s3)
    assert np.array_equal(sym.matrix[2:, :2], s3)
    assert np.array_equal(sym.matrix[:2, :2], np.zeros((2, 2)))


def test_free_symbol_square_322():
    # |xi|^2 + m^2 = 1 + 4 + 4 + 9 = 18, checked by direct 4x4 multiply.
    sym = clifford.free_symbol((1, 2, 2), 3.0)
    sq = sym.matrix @ sym.matrix
    assert np.max(np.abs(sq - 18 * np.eye(4))) < 1e-12


@settings(max_examples=40, deadline=None)
@given(st.lists(st.floats(-5, 5), min_size=3, max_size=3),
       st.floats(0, 4))
def test_free_symbol_square_is_energy_squared(xi, m):
    sym = clifford.free_symbol(xi, m)
    e2 = float(np.dot(xi, xi)) + m * m
    sq = sym.matrix @ sym.matrix
    assert np.max(np.abs(sq - e2 * np.eye(4))) <= 1e-12 * max(1.0, e2)


def test_plane_waves_at_rest_are_standard_basis():
    basis = clifford.plane_wave_eigenvectors((0, 0, 0), 1.0)
    assert basis.energy == 1.0
    assert np.array_equal(basis.plus, np.eye(4)[:, :2])
    assert np.array_equal(basis.minus, np.eye(4)[:, 2:])


def test_plane_waves_massless_unit_momentum():
    basis = clifford.plane_wave_eigenvectors((0, 0, 1), 0.0)
    assert basis.energy == pytest.approx(1.0)
    sym = clifford.free_symbol((0, 0, 1), 0.0).matrix
    for col in range(2):
        u = basis.plus[:, col]
        v = basis.minus[:, col]
        assert np.linalg.norm(sym @ u - u) < 1e-12
        assert np.linalg.norm(sym @ v + v) < 1e-12


def test_plane_wave_residual_generic_momentum():
    xi, m = (0.3, -0.7, 1.1), 0.5
    sym = clifford.free_symbol(xi, m)
    basis = clifford.plane_wave_eigenvectors(xi, m)
    # Oracle: dense diagonalization of the 4x4 symbol.
    evals = np.linalg.eigvalsh(sym.matrix)
    e = math.sqrt(np.dot(xi, xi) + m * m)
    assert np.allclose(np.sort(evals), [-e, -e, e, e], atol=1e-12)
    for col in range(2):
        u = basis.plus[:, col]
        v = basis.minus[:, col]
        assert np.linalg.norm(sym.matrix @ u - basis.energy * u) <= 1e-12
        assert np.linalg.norm(sym.matrix @ v + basis.energy * v) <= 1e-12


def test_plane_wave_gram_orthonormal_random():
    rng = np.random.default_rng(7)
    for _ in range(100):
        xi = rng.normal(size=3) * 3
        m = float(rng.uniform(0, 3))
        if np.linalg.norm(xi) == 0 and m == 0:
            continue
        basis = clifford.plane_wave_eigenvectors(xi, m)
        cols = np.hstack([basis.plus, basis.minus])
        gram = cols.conj().T @ cols
        assert np.max(np.abs(gram - np.eye(4))) <= 1e-12


def test_plane_wave_phase_convention_deterministic():
    basis = clifford.plane_wave_eigenvectors((0.4, 0.3, -0.8), 0.7)
    for cols in (basis.plus, basis.minus):
        for col in range(2):
            v = cols[:, col]
            lead = v[np.argmax(np.abs(v) > 1e-14)]
            assert abs(lead.imag) < 1e-14
            assert lead.real > 0


def test_plane_wave_degenerate_symbol_rejected():
    with pytest.raises(ValueError):
        clifford.plane_wave_eigenvectors((0, 0, 0), 0.0)


@settings(max_examples=30, deadline=None)
@given(st.integers(-8, 8), st.integers(-8, 8), st.integers(1, 16),
       st.integers(-8, 8), st.integers(-8, 8), st.integers(1, 16))
def test_exact_scalar_ring_multiplication(a, b, q, c, d, r):
    x = ExactScalar.of(Fraction(a, q), Fraction(b, q), Fraction(c, q))
    y = ExactScalar.of(Fraction(c, r), Fraction(d, r), Fraction(a, r), Fraction(b, r))
    prod = (x * y).to_complex()
    assert prod == pytest.approx(x.to_complex() * y.to_complex(), abs=1e-12)
    assert ((x + y) - y).to_complex() == pytest.approx(x.to_complex(), abs=1e-12)
