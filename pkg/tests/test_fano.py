import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rindlerqq.crosscheck import SplitMix64, random_fano_params
from rindlerqq.fano import (
    FanoParams,
    appendix_a_density,
    appendix_a_elements,
    density_to_fano,
    fano_to_density,
    generators,
    validate_state,
)
from rindlerqq.families import example_one
from rindlerqq.linalg import tensor

from conftest import random_density


def test_generators_traceless_hermitian_orthogonal():
    gen = generators()
    all_gens = list(gen.sigma) + list(gen.tau)
    for g in all_gens:
        assert abs(np.trace(g)) < 1e-14
        assert np.abs(g - g.conj().T).max() < 1e-14
    for fam in (gen.sigma, gen.tau):
        for i, gi in enumerate(fam):
            for j, gj in enumerate(fam):
                expect = 2.0 if i == j else 0.0
                assert abs(np.trace(gi @ gj) - expect) < 1e-14


def test_generator_convention_pinned_by_element_table():
    # the closed-form table forces <0|sigma3|0> = -1: the (00,00) element of
    # the s3-only state must carry -s3/6 for the table to keep unit trace
    gen = generators()
    assert gen.sigma[2][0, 0] == -1.0 and gen.sigma[2][1, 1] == 1.0
    params = FanoParams([0.0, 0.0, 1.0], np.zeros(8), np.zeros((3, 8)))
    rho = fano_to_density(params).rho
    assert np.abs(np.diag(rho) - np.array([0, 0, 0, 2, 2, 2]) / 6.0).max() < 1e-15
    assert abs(appendix_a_elements(params)[1] - 0.0) < 1e-15
    assert abs(np.trace(appendix_a_density(params).rho) - 1.0) < 1e-15


def test_tau8_normalization():
    gen = generators()
    assert abs(np.trace(gen.tau[7] @ gen.tau[7]) - 2.0) < 1e-14


def test_zero_params_is_maximally_mixed():
    rho = fano_to_density(FanoParams.zero()).rho
    assert np.abs(rho - np.eye(6) / 6.0).max() < 1e-15
    rho_table = appendix_a_density(FanoParams.zero()).rho
    assert np.abs(rho_table - np.eye(6) / 6.0).max() < 1e-15


def test_polarized_example_elements():
    # s3 = t3 = 1 with correlations (1,-1,1): diagonal (0,0,0,4,0,2)/6 and a
    # single surviving coherence on the (01,10) pair
    state = fano_to_density(example_one(1.0, 1.0))
    rho = state.rho
    assert np.abs(np.diag(rho).real - np.array([0, 0, 0, 4, 0, 2]) / 6.0).max() < 1e-15
    assert abs(rho[0, 0]) < 1e-15
    assert abs(rho[1, 3] - 1.0 / 3.0) < 1e-15
    assert abs(rho[0, 4]) < 1e-15


def test_trace_exactly_one_for_random_params(rng):
    for _ in range(50):
        params = FanoParams(rng.uniform(-1, 1, 3), rng.uniform(-1, 1, 8),
                            rng.uniform(-1, 1, (3, 8)))
        rho = fano_to_density(params).rho
        assert abs(np.trace(rho) - 1.0) < 1e-15
        assert np.abs(rho - rho.conj().T).max() < 1e-15


def test_table_matches_generator_construction_seeded():
    rng = SplitMix64(1234)
    for _ in range(100):
        params = random_fano_params(rng)
        a = fano_to_density(params).rho
        b = appendix_a_density(params).rho
        assert np.abs(a - b).max() <= 1e-12


def test_inversion_round_trip_random_states(rng):
    for _ in range(100):
        rho = random_density(6, rng)
        params = density_to_fano(rho)
        back = fano_to_density(params).rho
        assert np.abs(back - rho).max() <= 1e-12


def test_inversion_on_maximally_mixed():
    params = density_to_fano(np.eye(6) / 6.0)
    assert np.abs(params.s).max() < 1e-14
    assert np.abs(params.t).max() < 1e-14
    assert np.abs(params.c).max() < 1e-14


def test_inversion_recovers_polarized_example():
    params = density_to_fano(fano_to_density(example_one(1.0, 1.0)).rho)
    assert np.abs(params.s - [0, 0, 1]).max() < 1e-12
    assert np.abs(params.t - [0, 0, 1, 0, 0, 0, 0, 0]).max() < 1e-12
    expected_c = np.zeros((3, 8))
    expected_c[0, 0], expected_c[1, 1], expected_c[2, 2] = 1.0, -1.0, 1.0
    assert np.abs(params.c - expected_c).max() < 1e-12


def test_inversion_rejects_non_hermitian():
    m = np.eye(6, dtype=complex)
    m[0, 1] = 1.0
    with pytest.raises(ValueError):
        density_to_fano(m)


@settings(max_examples=50, derandomize=True, deadline=None)
@given(
    s=st.lists(st.floats(-1, 1, allow_nan=False), min_size=3, max_size=3),
    t=st.lists(st.floats(-1, 1, allow_nan=False), min_size=8, max_size=8),
)
def test_parameter_round_trip_property(s, t):
    c = np.outer(np.asarray(s), np.asarray(t)[:3]) @ np.ones((3, 8)) * 0.1
    params = FanoParams(np.asarray(s), np.asarray(t), c)
    rec = density_to_fano(fano_to_density(params).rho)
    assert np.abs(rec.s - params.s).max() < 1e-12
    assert np.abs(rec.t - params.t).max() < 1e-12
    assert np.abs(rec.c - params.c).max() < 1e-12


def test_validate_state_reports():
    ok = validate_state(np.eye(6) / 6.0)
    assert ok.is_physical and ok.hermitian
    bad = validate_state(np.diag([1.2, -0.2, 0, 0, 0, 0]))
    assert not bad.is_physical
    assert bad.min_eigenvalue < -1e-6
    # the polarized example at (1,1): report computed, physicality not assumed
    rep = validate_state(fano_to_density(example_one(1.0, 1.0)).rho)
    assert rep.hermitian and rep.trace_deviation < 1e-14
    assert not rep.is_physical
    assert rep.min_eigenvalue < -0.1


def test_fano_params_sanity_bounds():
    with pytest.raises(ValueError):
        FanoParams([3.0, 0, 0], np.zeros(8), np.zeros((3, 8)))
    with pytest.raises(ValueError):
        FanoParams([np.nan, 0, 0], np.zeros(8), np.zeros((3, 8)))


def test_tensor_convention_matches_table_index_map():
    # a_4 is the (00,10) slot: for pure s-parameters it must equal (s1+is2)/6
    params = FanoParams([0.25, -0.5, 0.0], np.zeros(8), np.zeros((3, 8)))
    rho = fano_to_density(params).rho
    assert abs(rho[0, 3] - (0.25 - 0.5j) / 6.0) < 1e-15
    gen = generators()
    manual = (np.eye(6) + 0.25 * tensor(gen.sigma[0], np.eye(3))
              - 0.5 * tensor(gen.sigma[1], np.eye(3))) / 6.0
    assert np.abs(rho - manual).max() < 1e-15
