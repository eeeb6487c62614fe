import numpy as np
import pytest

from rindlerqq.crosscheck import SplitMix64, random_state
from rindlerqq.entanglement import negativity
from rindlerqq.fano import validate_state
from rindlerqq.linalg import BipartiteState, tensor
from rindlerqq.rindler import (
    accelerate_both,
    accelerate_qubit,
    accelerate_qutrit,
    apply_channel,
    choi_matrix,
    isometry_defect,
    qubit_isometry,
    qutrit_isometry,
    rindler_param_from_physical,
)

R_GRID_64 = np.linspace(0.0, np.pi / 4, 64)


def test_param_from_physical_limits():
    # large acceleration pushes the mixing angle to pi/4, small to 0
    assert abs(rindler_param_from_physical(1.0, 1e12, 1.0) - np.pi / 4) < 1e-9
    assert 0.0 <= rindler_param_from_physical(1.0, 1e-6, 1.0) < 1e-12
    # exponent -pi: r = arctan(exp(-pi)) ~ 0.0432 rad
    r = rindler_param_from_physical(1.0, 1.0, 1.0)
    assert abs(r - np.arctan(np.exp(-np.pi))) < 1e-15
    assert abs(r - 0.0432) < 5e-4


def test_param_from_physical_rejects_nonpositive():
    for bad in [(0, 1, 1), (1, 0, 1), (1, 1, 0), (-1, 1, 1)]:
        with pytest.raises(ValueError):
            rindler_param_from_physical(*bad)


def test_qubit_isometry_columns():
    v0 = qubit_isometry(0.0)
    assert np.abs(v0[:, 0] - [1, 0, 0, 0]).max() < 1e-15
    assert np.abs(v0[:, 1] - [0, 0, 1, 0]).max() < 1e-15
    v = qubit_isometry(np.pi / 4)
    assert np.abs(v[:, 0] - [1 / np.sqrt(2), 0, 0, 1 / np.sqrt(2)]).max() < 1e-15


def test_qutrit_isometry_structure():
    w0 = qutrit_isometry(0.0)
    # r=0 embeds |0>,|D>,|U> into region I with region II in vacuum
    expect = np.zeros((16, 3))
    expect[0, 0] = expect[4, 1] = expect[8, 2] = 1.0
    assert np.abs(w0 - expect).max() < 1e-15
    w = qutrit_isometry(0.6)
    # the |P,D> amplitude in column 1 is negative
    assert w[13, 1].real < 0
    # column-0 norm is the algebraic identity cos^4 + 2 sin^2 cos^2 + sin^4 = 1
    assert abs(np.linalg.norm(w[:, 0]) - 1.0) < 1e-15


def test_isometries_on_grid():
    for r in R_GRID_64:
        assert isometry_defect(qubit_isometry(r)) < 1e-14
        assert isometry_defect(qutrit_isometry(r)) < 1e-14


def test_param_range_enforced():
    with pytest.raises(ValueError):
        qubit_isometry(-0.1)
    with pytest.raises(ValueError):
        qutrit_isometry(1.0)


def test_qubit_channel_on_basis_state():
    rho = np.zeros((6, 6), dtype=complex)
    rho[0, 0] = 1.0
    state = BipartiteState(rho, 2, 3)
    for r in (0.2, np.pi / 4):
        out = accelerate_qubit(state, r).rho
        expect = np.zeros((6, 6))
        expect[0, 0] = np.cos(r) ** 2
        expect[3, 3] = np.sin(r) ** 2
        assert np.abs(out - expect).max() < 1e-15


def test_qutrit_channel_on_basis_state():
    rho = np.zeros((6, 6), dtype=complex)
    rho[0, 0] = 1.0
    out = accelerate_qutrit(BipartiteState(rho, 2, 3), 0.7).rho
    c, s = np.cos(0.7), np.sin(0.7)
    marg = np.diag(out)[0:4].real
    assert np.abs(marg - [c ** 4, s * s * c * c, s * s * c * c, s ** 4]).max() < 1e-14


def test_zero_acceleration_is_identity():
    rng = SplitMix64(5)
    for _ in range(10):
        state = random_state(rng)
        out = accelerate_qubit(state, 0.0).rho
        assert np.abs(out - state.rho).max() < 1e-14
        e0 = negativity(state).negativity
        for channel, kw in (("qutrit", {"r_t": 0.0}), ("both", {"r_q": 0.0, "r_t": 0.0})):
            out_state = apply_channel(state, channel, **kw)
            assert abs(negativity(out_state).negativity - e0) < 1e-10


def test_channels_preserve_trace_and_positivity():
    rng = SplitMix64(11)
    for _ in range(20):
        state = random_state(rng)
        for r in (0.1, 0.5, np.pi / 4):
            for out in (
                accelerate_qubit(state, r),
                accelerate_qutrit(state, r),
                accelerate_both(state, r, 0.8 * r),
            ):
                rep = validate_state(out.rho)
                assert rep.trace_deviation < 1e-12
                assert rep.min_eigenvalue > -1e-10
                assert rep.hermitian


def test_joint_channel_factorizes():
    rng = SplitMix64(17)
    for _ in range(50):
        state = random_state(rng)
        r_q = rng.uniform(0.0, np.pi / 4)
        r_t = rng.uniform(0.0, np.pi / 4)
        joint = accelerate_both(state, r_q, r_t).rho
        composed = accelerate_qubit(accelerate_qutrit(state, r_t), r_q).rho
        assert np.abs(joint - composed).max() <= 1e-12


def test_joint_channel_leading_element():
    rng = SplitMix64(23)
    state = random_state(rng)
    r_q, r_t = 0.31, 0.47
    out = accelerate_both(state, r_q, r_t).rho
    expect = np.cos(r_q) ** 2 * np.cos(r_t) ** 4 * state.rho[0, 0]
    assert abs(out[0, 0] - expect) < 1e-14


def test_qubit_channel_equals_reference_table():
    # the qubit-acceleration element table is defect-free: full agreement
    rng = SplitMix64(29)
    state = random_state(rng)
    for r in (0.0, 0.4, np.pi / 4):
        out = accelerate_qubit(state, r).rho
        c, s = np.cos(r), np.sin(r)
        table = np.zeros((6, 6), dtype=complex)
        for m in range(3):
            for mp in range(3):
                table[m, mp] = c * c * state.rho[m, mp]
                table[m, 3 + mp] = c * state.rho[m, 3 + mp]
                table[3 + m, mp] = c * state.rho[3 + m, mp]
                table[3 + m, 3 + mp] = s * s * state.rho[m, mp] + state.rho[3 + m, 3 + mp]
        assert np.abs(out - table).max() <= 1e-12


def test_choi_matrices_are_psd():
    from rindlerqq.linalg import hermitian_eigenvalues

    for r in (0.0, 0.3, np.pi / 4):
        for channel, kw in (
            ("qubit", {"r_q": r}),
            ("qutrit", {"r_t": r}),
            ("both", {"r_q": r, "r_t": 0.9 * r}),
        ):
            choi = choi_matrix(channel, **kw)
            eigs = hermitian_eigenvalues(choi)
            assert eigs[0] > -1e-10
            # trace-preserving channel: choi partial trace over output = I/6
            assert abs(np.trace(choi) - 1.0) < 1e-12


def test_channel_rejects_unphysical_input():
    m = np.diag([1.2, -0.2, 0, 0, 0, 0]).astype(complex)
    state = BipartiteState(m, 2, 3)
    with pytest.raises(ValueError):
        accelerate_qubit(state, 0.3)
    out = accelerate_qubit(state, 0.3, check_input=False)
    assert abs(np.trace(out.rho) - 1.0) < 1e-12


def test_qubit_channel_acts_on_2x4_states():
    rng = SplitMix64(31)
    state = random_state(rng)
    mid = accelerate_qutrit(state, 0.5)
    out = accelerate_qubit(mid, 0.4)
    assert out.dims == (2, 4)
    assert abs(np.trace(out.rho) - 1.0) < 1e-12


def test_channel_commutation_order_irrelevant():
    # qubit channel lifted to the (2,4) carrier commutes with the qutrit channel
    rng = SplitMix64(37)
    state = random_state(rng)
    r_q, r_t = 0.52, 0.33
    a = accelerate_qubit(accelerate_qutrit(state, r_t), r_q).rho
    b = accelerate_both(state, r_q, r_t).rho
    assert np.abs(a - b).max() < 1e-12


def test_product_state_marginal_factorization():
    # accelerating the qubit of a product state leaves the qutrit marginal fixed
    from rindlerqq.linalg import partial_trace

    rng = np.random.default_rng(3)
    qub = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    qub = qub @ qub.conj().T
    qub /= np.trace(qub).real
    qut = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    qut = qut @ qut.conj().T
    qut /= np.trace(qut).real
    state = BipartiteState(tensor(qub, qut), 2, 3)
    out = accelerate_qubit(state, 0.6).rho
    assert np.abs(partial_trace(out, (2, 3), "a") - qut).max() < 1e-13
