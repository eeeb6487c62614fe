import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20260810)


def plane_rotation_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    """Unitary composed of complex plane (Givens) rotations over all index pairs."""
    u = np.eye(n, dtype=complex)
    for p in range(n - 1):
        for q in range(p + 1, n):
            theta = rng.uniform(0.0, 2.0 * np.pi)
            phi = rng.uniform(0.0, 2.0 * np.pi)
            g = np.eye(n, dtype=complex)
            g[p, p] = np.cos(theta)
            g[p, q] = -np.sin(theta) * np.exp(1j * phi)
            g[q, p] = np.sin(theta) * np.exp(-1j * phi)
            g[q, q] = np.cos(theta)
            u = u @ g
    return u


def random_density(n: int, rng: np.random.Generator) -> np.ndarray:
    g = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def bell_block_state() -> np.ndarray:
    """|Phi><Phi| with |Phi> = (|00> + |12>)/sqrt(2) on the 2x3 carrier."""
    psi = np.zeros(6, dtype=complex)
    psi[0] = psi[5] = 1.0 / np.sqrt(2.0)
    return np.outer(psi, psi.conj())
