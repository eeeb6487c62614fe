import numpy as np
import pytest

from rindlerqq.entanglement import is_ppt, negativity
from rindlerqq.families import one_parameter
from rindlerqq.linalg import BipartiteState, tensor

from conftest import bell_block_state, plane_rotation_unitary, random_density


def test_product_states_have_zero_negativity(rng):
    for _ in range(20):
        a = random_density(2, rng)
        b = random_density(3, rng)
        state = BipartiteState(tensor(a, b), 2, 3)
        assert negativity(state).negativity < 1e-12
        assert is_ppt(state)


def test_bell_block_is_maximally_entangled():
    state = BipartiteState(bell_block_state(), 2, 3)
    result = negativity(state)
    assert abs(result.negativity - 1.0) < 1e-12
    expected = np.array([-0.5, 0.0, 0.0, 0.5, 0.5, 0.5])
    assert np.abs(result.eigenvalues - expected).max() < 1e-12
    assert not is_ppt(state)


def test_one_parameter_endpoint():
    assert abs(negativity(one_parameter(0.0)).negativity - 1.0) < 1e-10


def test_self_consistency_trace_norm(rng):
    for _ in range(20):
        state = BipartiteState(random_density(6, rng), 2, 3)
        res = negativity(state)
        assert abs(res.negativity - (res.trace_norm() - 1.0)) < 1e-10


def test_local_unitary_invariance(rng):
    for _ in range(20):
        rho = random_density(6, rng)
        e0 = negativity(BipartiteState(rho, 2, 3)).negativity
        u = tensor(plane_rotation_unitary(2, rng), plane_rotation_unitary(3, rng))
        rotated = u @ rho @ u.conj().T
        e1 = negativity(BipartiteState(rotated, 2, 3)).negativity
        assert abs(e0 - e1) < 1e-10


def test_convexity(rng):
    for _ in range(20):
        r1 = random_density(6, rng)
        r2 = random_density(6, rng)
        lam = rng.uniform()
        mix = BipartiteState(lam * r1 + (1 - lam) * r2, 2, 3)
        e_mix = negativity(mix).negativity
        e1 = negativity(BipartiteState(r1, 2, 3)).negativity
        e2 = negativity(BipartiteState(r2, 2, 3)).negativity
        assert e_mix <= lam * e1 + (1 - lam) * e2 + 1e-10


def test_negativity_range(rng):
    for _ in range(30):
        e = negativity(BipartiteState(random_density(6, rng), 2, 3)).negativity
        assert -1e-12 <= e <= 1.0 + 1e-9


def test_is_ppt_on_weak_bell_mixture():
    # 0.9 * I/6 + 0.1 * Bell block: the partial-transpose minimum is
    # 0.9/6 - 0.1/2 = 0.1 > 0, so the mixture stays PPT
    rho = 0.9 * np.eye(6) / 6.0 + 0.1 * bell_block_state()
    oracle_min = np.linalg.eigvalsh(
        rho.reshape(2, 3, 2, 3).transpose(2, 1, 0, 3).reshape(6, 6)
    )[0]
    assert oracle_min > 0
    assert is_ppt(BipartiteState(rho, 2, 3))


def test_unphysical_input_rejected_unless_requested():
    m = np.diag([1.5, -0.5, 0, 0, 0, 0]).astype(complex)
    state = BipartiteState(m, 2, 3)
    with pytest.raises(ValueError):
        negativity(state)
    res = negativity(state, require_physical=False)
    assert res.negativity >= 0.0


def test_dimension_guard():
    with pytest.raises(ValueError):
        negativity(BipartiteState(np.eye(9) / 9.0, 3, 3))
