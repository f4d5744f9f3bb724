import math

import numpy as np
import pytest

from qclone.linalg import (
    DensityOperator,
    HermitianMatrix,
    StateVector,
    SubsystemLayout,
    bures_distance,
    hermitian_eigenvalues,
    outer,
    partial_trace,
    partial_transpose,
    purity,
    reduced_density,
    sqrt_fidelity,
    tensor,
    von_neumann_entropy,
)

BELL = StateVector(SubsystemLayout((2, 2)), np.array([1, 0, 0, 1]) / math.sqrt(2))


def ghz(n):
    amps = np.zeros(2**n)
    amps[0] = amps[-1] = 1 / math.sqrt(2)
    return StateVector(SubsystemLayout((2,) * n), amps)


class TestLayout:
    def test_basic(self):
        lay = SubsystemLayout((2, 3, 4))
        assert lay.total == 24
        assert len(lay) == 3
        assert lay.concat(SubsystemLayout((5,))).dims == (2, 3, 4, 5)

    def test_rejects_bad_dims(self):
        with pytest.raises(ValueError):
            SubsystemLayout((2, 0))
        with pytest.raises(ValueError):
            SubsystemLayout(())


class TestStateVector:
    def test_normalization_enforced(self):
        with pytest.raises(ValueError):
            StateVector(SubsystemLayout((2,)), [1.0, 1.0])

    def test_size_must_match_layout(self):
        with pytest.raises(ValueError):
            StateVector(SubsystemLayout((2, 2)), [1.0, 0.0])

    def test_accepts_and_freezes(self):
        psi = StateVector(SubsystemLayout((2,)), [1.0, 0.0])
        assert psi.dim == 2
        with pytest.raises(ValueError):
            psi.amps[0] = 0.5


class TestDensityOperator:
    def test_rejects_non_hermitian(self):
        mat = np.array([[0.5, 0.5], [0.0, 0.5]])
        with pytest.raises(ValueError):
            DensityOperator(SubsystemLayout((2,)), mat)

    def test_rejects_wrong_trace(self):
        with pytest.raises(ValueError):
            DensityOperator(SubsystemLayout((2,)), np.eye(2))

    def test_rejects_negative_eigenvalue(self):
        mat = np.array([[0.5, 0.6], [0.6, 0.5]])  # eigenvalues -0.1 and 1.1
        with pytest.raises(ValueError):
            DensityOperator(SubsystemLayout((2,)), mat)

    def test_accepts_psd_outside_gershgorin(self):
        # every row violates diagonal dominance, yet the matrix is PSD
        psi = StateVector(SubsystemLayout((2, 2)), np.full(4, 0.5))
        rho = outer(psi)
        assert rho.dim == 4
        np.testing.assert_allclose(np.trace(rho.mat).real, 1.0, rtol=0, atol=1e-14)


def test_tensor_states_and_operators():
    zero = StateVector(SubsystemLayout((2,)), [1, 0])
    one = StateVector(SubsystemLayout((2,)), [0, 1])
    both = tensor(zero, one)
    np.testing.assert_allclose(both.amps, [0, 1, 0, 0], rtol=0, atol=0)
    assert both.layout.dims == (2, 2)

    rho = tensor(outer(zero), outer(one))
    np.testing.assert_allclose(rho.mat, np.diag([0.0, 1.0, 0.0, 0.0]), rtol=0, atol=0)

    with pytest.raises(TypeError):
        tensor(zero, outer(one))


def test_outer_is_pure():
    rho = outer(BELL)
    np.testing.assert_allclose(purity(rho), 1.0, rtol=0, atol=1e-14)
    np.testing.assert_allclose(von_neumann_entropy(rho), 0.0, rtol=0, atol=1e-12)


def test_partial_trace_matches_reduced_density():
    rng = np.random.default_rng(42)
    amps = rng.standard_normal(8) + 1j * rng.standard_normal(8)
    psi = StateVector(SubsystemLayout((2, 2, 2)), amps / np.linalg.norm(amps))
    rho = outer(psi)
    for keep in ([0], [2], [0, 1], [0, 2], [1, 2], [0, 1, 2]):
        a = partial_trace(rho, keep)
        b = reduced_density(psi, keep)
        np.testing.assert_allclose(a.mat, b.mat, rtol=0, atol=1e-13)
        assert a.layout.dims == tuple(psi.layout.dims[i] for i in keep)


def test_reduced_density_keep_order_is_significant():
    rng = np.random.default_rng(7)
    amps = rng.standard_normal(8) + 1j * rng.standard_normal(8)
    psi = StateVector(SubsystemLayout((2, 2, 2)), amps / np.linalg.norm(amps))
    fwd = reduced_density(psi, [0, 1]).mat
    rev = reduced_density(psi, [1, 0]).mat
    swap = fwd.reshape(2, 2, 2, 2).transpose(1, 0, 3, 2).reshape(4, 4)
    np.testing.assert_allclose(rev, swap, rtol=0, atol=1e-14)


def test_partial_trace_bell_is_maximally_mixed():
    rho = partial_trace(outer(BELL), [0])
    np.testing.assert_allclose(rho.mat, np.eye(2) / 2, rtol=0, atol=1e-14)
    np.testing.assert_allclose(von_neumann_entropy(rho), math.log(2), rtol=0, atol=1e-12)


def test_partial_trace_validates_subsystems():
    rho = outer(BELL)
    with pytest.raises(ValueError):
        partial_trace(rho, [])
    with pytest.raises(ValueError):
        partial_trace(rho, [0, 0])
    with pytest.raises(ValueError):
        partial_trace(rho, [2])


def test_partial_transpose_bell():
    rho = outer(BELL)
    pt = partial_transpose(rho, 1)
    assert isinstance(pt, HermitianMatrix)
    expected = np.diag([0.5, 0.0, 0.0, 0.5]).astype(complex)
    expected[1, 2] = expected[2, 1] = 0.5
    np.testing.assert_allclose(pt.mat, expected, rtol=0, atol=1e-15)
    w = hermitian_eigenvalues(pt)
    np.testing.assert_allclose(w, [-0.5, 0.5, 0.5, 0.5], rtol=0, atol=1e-12)


def test_partial_transpose_of_product_state_stays_psd():
    zero = StateVector(SubsystemLayout((2,)), [1, 0])
    plus = StateVector(SubsystemLayout((2,)), np.array([1, 1]) / math.sqrt(2))
    rho = tensor(outer(zero), outer(plus))
    w = hermitian_eigenvalues(partial_transpose(rho, 1))
    assert w[0] >= -1e-13


def test_entropy_and_purity_extremes():
    mixed = DensityOperator(SubsystemLayout((4,)), np.eye(4) / 4)
    np.testing.assert_allclose(von_neumann_entropy(mixed), math.log(4), rtol=0, atol=1e-12)
    np.testing.assert_allclose(purity(mixed), 0.25, rtol=0, atol=1e-14)


def test_sqrt_fidelity_pure_shortcut():
    """Against a pure state the root fidelity is sqrt(<psi|rho|psi>)."""
    rng = np.random.default_rng(11)
    amps = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    psi = StateVector(SubsystemLayout((4,)), amps / np.linalg.norm(amps))
    mat = 0.6 * outer(psi).mat + 0.1 * np.eye(4)
    rho = DensityOperator(SubsystemLayout((4,)), mat)
    expect = math.sqrt(float(np.vdot(psi.amps, rho.mat @ psi.amps).real))
    np.testing.assert_allclose(sqrt_fidelity(rho, outer(psi)), expect, rtol=0, atol=1e-12)
    np.testing.assert_allclose(sqrt_fidelity(outer(psi), rho), expect, rtol=0, atol=1e-12)


def test_sqrt_fidelity_pure_pure_is_overlap():
    zero = outer(StateVector(SubsystemLayout((2,)), [1, 0]))
    plus = outer(StateVector(SubsystemLayout((2,)), np.array([1, 1]) / math.sqrt(2)))
    np.testing.assert_allclose(sqrt_fidelity(zero, plus), 1 / math.sqrt(2), rtol=0, atol=1e-12)
    np.testing.assert_allclose(sqrt_fidelity(zero, zero), 1.0, rtol=0, atol=1e-12)


def test_bures_distance_extremes():
    zero = outer(StateVector(SubsystemLayout((2,)), [1, 0]))
    one = outer(StateVector(SubsystemLayout((2,)), [0, 1]))
    np.testing.assert_allclose(bures_distance(zero, zero), 0.0, rtol=0, atol=1e-7)
    np.testing.assert_allclose(bures_distance(zero, one), math.sqrt(2), rtol=0, atol=1e-12)


def test_ghz_reduction_via_state_vector():
    """reduced_density avoids the full density matrix, so large registers work."""
    psi = ghz(14)
    rho = reduced_density(psi, [0, 13])
    np.testing.assert_allclose(np.diag(rho.mat).real, [0.5, 0, 0, 0.5], rtol=0, atol=1e-14)
    np.testing.assert_allclose(rho.mat[0, 3], 0.0, rtol=0, atol=1e-14)
