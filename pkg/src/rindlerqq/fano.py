"""Fano/Bloch parameterization of the qubit-qutrit state.

The 6x6 density matrix is built two independent ways: from the generator
expansion

    rho = (1/6) [ I6 + sum_i s_i sigma_i (x) I3
                       + sum_j t_j I2 (x) tau_j
                       + sum_ij c_ij sigma_i (x) tau_j ]

and from the explicit 36-element closed-form table (`appendix_a_density`).
The two constructions agree to machine precision; the cross-check suite uses
that agreement as a regression anchor.

Generator convention: sigma_1 = |0><1|+|1><0|, sigma_2 = i(|0><1|-|1><0|),
sigma_3 = |1><1|-|0><0|, and tau_1..tau_8 the standard 3x3 Gell-Mann set.
With this choice the closed-form table is Hermitian and has unit trace for
every parameter value.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .linalg import (
    BipartiteState,
    as_matrix,
    dagger,
    hermiticity_defect,
    hermitian_eigenvalues,
    tensor,
)
from .tolerances import TOL

SQRT3 = np.sqrt(3.0)

# basis order for the 6x6 carrier: |00>,|01>,|02>,|10>,|11>,|12> (qubit first)
BASIS_23 = ("00", "01", "02", "10", "11", "12")


@dataclass(frozen=True)
class FanoParams:
    """Bloch vectors s (qubit, 3), t (qutrit, 8) and 3x8 correlation matrix c."""

    s: np.ndarray
    t: np.ndarray
    c: np.ndarray

    def __post_init__(self):
        s = np.asarray(self.s, dtype=float).reshape(3)
        t = np.asarray(self.t, dtype=float).reshape(8)
        c = np.asarray(self.c, dtype=float).reshape(3, 8)
        for name, arr, bound in (("s", s, 2.0), ("t", t, 2.0), ("c", c, 2.0)):
            if not np.all(np.isfinite(arr)):
                raise ValueError(f"FanoParams.{name} contains non-finite entries")
            if np.max(np.abs(arr)) > bound:
                raise ValueError(f"FanoParams.{name} exceeds the sanity bound |x| <= {bound}")
        for arr in (s, t, c):
            arr.setflags(write=False)
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "c", c)

    @staticmethod
    def zero() -> "FanoParams":
        return FanoParams(np.zeros(3), np.zeros(8), np.zeros((3, 8)))


@dataclass(frozen=True)
class GeneratorSet:
    """The three 2x2 and eight 3x3 traceless Hermitian generators."""

    sigma: tuple
    tau: tuple


def generators() -> GeneratorSet:
    """Return the fixed generator convention used throughout the package."""
    sigma = (
        np.array([[0, 1], [1, 0]], dtype=complex),
        np.array([[0, 1j], [-1j, 0]], dtype=complex),
        np.array([[-1, 0], [0, 1]], dtype=complex),
    )
    tau = (
        np.array([[0, 1, 0], [1, 0, 0], [0, 0, 0]], dtype=complex),
        np.array([[0, -1j, 0], [1j, 0, 0], [0, 0, 0]], dtype=complex),
        np.array([[1, 0, 0], [0, -1, 0], [0, 0, 0]], dtype=complex),
        np.array([[0, 0, 1], [0, 0, 0], [1, 0, 0]], dtype=complex),
        np.array([[0, 0, -1j], [0, 0, 0], [1j, 0, 0]], dtype=complex),
        np.array([[0, 0, 0], [0, 0, 1], [0, 1, 0]], dtype=complex),
        np.array([[0, 0, 0], [0, 0, -1j], [0, 1j, 0]], dtype=complex),
        np.diag([1.0, 1.0, -2.0]).astype(complex) / SQRT3,
    )
    for g in sigma + tau:
        g.setflags(write=False)
    return GeneratorSet(sigma=sigma, tau=tau)


_GEN = generators()


def fano_to_density(params: FanoParams) -> BipartiteState:
    """Assemble the 6x6 state from the generator expansion.

    The construction is total: trace is exactly 1 and the matrix Hermitian
    for any parameters, but positivity is not guaranteed. Callers decide
    physicality via `validate_state`.
    """
    s, t, c = params.s, params.t, params.c
    i2, i3 = np.eye(2, dtype=complex), np.eye(3, dtype=complex)
    rho = tensor(i2, i3)
    for i in range(3):
        if s[i]:
            rho = rho + s[i] * tensor(_GEN.sigma[i], i3)
    for j in range(8):
        if t[j]:
            rho = rho + t[j] * tensor(i2, _GEN.tau[j])
    for i in range(3):
        for j in range(8):
            if c[i, j]:
                rho = rho + c[i, j] * tensor(_GEN.sigma[i], _GEN.tau[j])
    return BipartiteState(rho / 6.0, 2, 3)


def appendix_a_elements(params: FanoParams) -> dict[int, complex]:
    """The 36 closed-form elements a_1..a_36 of the initial state.

    Index k corresponds to row (k-1)//6 and column (k-1)%6 of the 6x6 matrix
    in the basis 00,01,02,10,11,12 (a_1 = (00,00), ..., a_36 = (12,12)).

    These are the published reference formulas with the sign/index defects
    repaired so the table is Hermitian, has unit trace, and reproduces the
    generator expansion exactly (see the cross-check suite for the verbatim
    comparison machinery).
    """
    s1, s2, s3 = (float(x) for x in params.s)
    t1, t2, t3, t4, t5, t6, t7, t8 = (float(x) for x in params.t)
    c = params.c

    def cc(i: int, j: int) -> float:
        return float(c[i - 1, j - 1])

    r3 = SQRT3
    a: dict[int, complex] = {}
    a[1] = (1 - s3 + t3 + t8 / r3 - cc(3, 3) - cc(3, 8) / r3) / 6
    a[2] = (t1 - 1j * t2 - cc(3, 1) + 1j * cc(3, 2)) / 6
    a[3] = (t4 - 1j * t5 - cc(3, 4) + 1j * cc(3, 5)) / 6
    a[4] = (s1 + 1j * s2 + cc(1, 3) + 1j * cc(2, 3) + (cc(1, 8) + 1j * cc(2, 8)) / r3) / 6
    a[5] = (cc(1, 1) + cc(2, 2) + 1j * cc(2, 1) - 1j * cc(1, 2)) / 6
    a[6] = (cc(1, 4) + cc(2, 5) + 1j * cc(2, 4) - 1j * cc(1, 5)) / 6
    a[7] = (t1 + 1j * t2 - cc(3, 1) - 1j * cc(3, 2)) / 6
    a[8] = (1 - s3 - t3 + t8 / r3 + cc(3, 3) - cc(3, 8) / r3) / 6
    a[9] = (t6 - 1j * t7 - cc(3, 6) + 1j * cc(3, 7)) / 6
    a[10] = (cc(1, 1) - cc(2, 2) + 1j * cc(1, 2) + 1j * cc(2, 1)) / 6
    a[11] = (s1 + 1j * s2 - cc(1, 3) - 1j * cc(2, 3) + (cc(1, 8) + 1j * cc(2, 8)) / r3) / 6
    a[12] = (cc(1, 6) + cc(2, 7) + 1j * cc(2, 6) - 1j * cc(1, 7)) / 6
    a[13] = (t4 + 1j * t5 - cc(3, 4) - 1j * cc(3, 5)) / 6
    a[14] = (t6 + 1j * t7 - cc(3, 6) - 1j * cc(3, 7)) / 6
    a[15] = (1 - s3 - 2 * t8 / r3 + 2 * cc(3, 8) / r3) / 6
    a[16] = (cc(1, 4) - cc(2, 5) + 1j * cc(1, 5) + 1j * cc(2, 4)) / 6
    a[17] = (cc(1, 6) - cc(2, 7) + 1j * cc(1, 7) + 1j * cc(2, 6)) / 6
    a[18] = (s1 + 1j * s2 - 2 * (cc(1, 8) + 1j * cc(2, 8)) / r3) / 6
    a[19] = (s1 - 1j * s2 + cc(1, 3) - 1j * cc(2, 3) + (cc(1, 8) - 1j * cc(2, 8)) / r3) / 6
    a[20] = (cc(1, 1) - cc(2, 2) - 1j * cc(1, 2) - 1j * cc(2, 1)) / 6
    a[21] = (cc(1, 4) - cc(2, 5) - 1j * cc(1, 5) - 1j * cc(2, 4)) / 6
    a[22] = (1 + s3 + t3 + t8 / r3 + cc(3, 3) + cc(3, 8) / r3) / 6
    a[23] = (t1 - 1j * t2 + cc(3, 1) - 1j * cc(3, 2)) / 6
    a[24] = (t4 - 1j * t5 + cc(3, 4) - 1j * cc(3, 5)) / 6
    a[25] = (cc(1, 1) + cc(2, 2) + 1j * cc(1, 2) - 1j * cc(2, 1)) / 6
    a[26] = (s1 - 1j * s2 - cc(1, 3) + 1j * cc(2, 3) + (cc(1, 8) - 1j * cc(2, 8)) / r3) / 6
    a[27] = (cc(1, 6) - cc(2, 7) - 1j * cc(1, 7) - 1j * cc(2, 6)) / 6
    a[28] = (t1 + 1j * t2 + cc(3, 1) + 1j * cc(3, 2)) / 6
    a[29] = (1 + s3 - t3 + t8 / r3 - cc(3, 3) + cc(3, 8) / r3) / 6
    a[30] = (t6 - 1j * t7 + cc(3, 6) - 1j * cc(3, 7)) / 6
    a[31] = (cc(1, 4) + cc(2, 5) + 1j * cc(1, 5) - 1j * cc(2, 4)) / 6
    a[32] = (cc(1, 6) + cc(2, 7) + 1j * cc(1, 7) - 1j * cc(2, 6)) / 6
    a[33] = (s1 - 1j * s2 - 2 * (cc(1, 8) - 1j * cc(2, 8)) / r3) / 6
    a[34] = (t4 + 1j * t5 + cc(3, 4) + 1j * cc(3, 5)) / 6
    a[35] = (t6 + 1j * t7 + cc(3, 6) + 1j * cc(3, 7)) / 6
    a[36] = (1 + s3 - 2 * t8 / r3 - 2 * cc(3, 8) / r3) / 6
    return a


def appendix_a_density(params: FanoParams) -> BipartiteState:
    """Build the state directly from the 36 closed-form elements.

    Independent construction path used as an oracle against `fano_to_density`.
    """
    a = appendix_a_elements(params)
    rho = np.zeros((6, 6), dtype=complex)
    for k in range(1, 37):
        rho[(k - 1) // 6, (k - 1) % 6] = a[k]
    return BipartiteState(rho, 2, 3)


def density_to_fano(state: BipartiteState | np.ndarray) -> FanoParams:
    """Invert the expansion: recover (s, t, c) from a Hermitian 6x6 matrix.

    s_i = tr(rho sigma_i (x) I3); the qutrit and correlation coefficients pick
    up a 3/2 normalization from tr(tau_j^2) = 2 on a 3-dimensional factor, so
    the round trip through `fano_to_density` is the identity.
    """
    rho = state.rho if isinstance(state, BipartiteState) else as_matrix(state)
    if rho.shape != (6, 6):
        raise ValueError(f"expected a 6x6 matrix, got {rho.shape}")
    defect = hermiticity_defect(rho)
    if defect > TOL.hermiticity:
        raise ValueError(f"matrix is not Hermitian within {TOL.hermiticity:g} (defect {defect:g})")
    i2, i3 = np.eye(2, dtype=complex), np.eye(3, dtype=complex)
    s = np.array([np.trace(rho @ tensor(_GEN.sigma[i], i3)).real for i in range(3)])
    t = np.array([1.5 * np.trace(rho @ tensor(i2, _GEN.tau[j])).real for j in range(8)])
    c = np.array(
        [
            [1.5 * np.trace(rho @ tensor(_GEN.sigma[i], _GEN.tau[j])).real for j in range(8)]
            for i in range(3)
        ]
    )
    return FanoParams(s, t, c)


@dataclass(frozen=True)
class StateReport:
    """Physicality diagnostics for a candidate density matrix."""

    hermitian: bool
    hermiticity_defect: float
    trace_deviation: float
    min_eigenvalue: float
    is_physical: bool
    eigenvalues: np.ndarray = field(repr=False)


def validate_state(
    m, tol_trace: float = TOL.trace, tol_psd: float = TOL.psd
) -> StateReport:
    """Report (never raise): Hermiticity, trace deviation, minimum eigenvalue.

    is_physical requires all three checks to pass.
    """
    a = as_matrix(m)
    if a.shape[0] != a.shape[1]:
        raise ValueError("validate_state needs a square matrix")
    defect = hermiticity_defect(a)
    hermitian = defect <= TOL.hermiticity
    trace_dev = abs(np.trace(a) - 1.0)
    if hermitian:
        eigs = hermitian_eigenvalues(a)
    else:
        eigs = hermitian_eigenvalues((a + dagger(a)) / 2.0)
    min_eig = float(eigs[0])
    return StateReport(
        hermitian=hermitian,
        hermiticity_defect=defect,
        trace_deviation=float(trace_dev),
        min_eigenvalue=min_eig,
        is_physical=bool(hermitian and trace_dev <= tol_trace and min_eig >= -tol_psd),
        eigenvalues=eigs,
    )
