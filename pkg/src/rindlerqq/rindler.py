"""Uniform-acceleration channels for the qubit and qutrit factors.

Each channel is realized as an isometric dilation into (region I) x (region
II) Rindler modes followed by a partial trace over region II. The element
tables printed in the reference are deliberately NOT used as the computation
path; the cross-check module compares them against these channels instead.

Basis conventions:
  * qubit region-I/II pair ordered |00>,|01>,|10>,|11> (I first);
  * accelerated qutrit factor ordered |0>,|D>,|U>,|P> (vacuum, spin-down,
    spin-up, particle pair), with the inertial qutrit levels |0>,|1>,|2>
    entering as vacuum, D, U;
  * the joint dilation is ordered (qubit-I, qutrit-I, qubit-II, qutrit-II)
    before the trace over the two region-II factors.

The unobservable dilation phase is fixed to zero.
"""

from __future__ import annotations

import numpy as np

from .linalg import BipartiteState, dagger, partial_trace, tensor
from .fano import validate_state
from .tolerances import TOL

R_MAX = np.pi / 4

# accelerated-qutrit basis labels, index order
BASIS_24 = ("00", "0D", "0U", "0P", "10", "1D", "1U", "1P")


def check_rindler_param(r: float) -> float:
    r = float(r)
    if not np.isfinite(r) or r < 0.0 or r > R_MAX + 1e-15:
        raise ValueError(f"acceleration parameter r = {r!r} outside [0, pi/4]")
    return min(r, R_MAX)


def rindler_param_from_physical(omega: float, acceleration: float, light_speed: float) -> float:
    """Mixing angle r = arctan(exp(-pi * omega * c / a)), in (0, pi/4)."""
    if omega <= 0 or acceleration <= 0 or light_speed <= 0:
        raise ValueError("omega, acceleration and light speed must all be positive")
    return float(np.arctan(np.exp(-np.pi * omega * light_speed / acceleration)))


def qubit_isometry(r: float) -> np.ndarray:
    """4x2 isometry: |0> -> cos r |0_I 0_II> + sin r |1_I 1_II>, |1> -> |1_I 0_II>."""
    r = check_rindler_param(r)
    v = np.zeros((4, 2), dtype=complex)
    v[0, 0] = np.cos(r)
    v[3, 0] = np.sin(r)
    v[2, 1] = 1.0
    return v


def qutrit_isometry(r: float) -> np.ndarray:
    """16x3 isometry on the qutrit, region-I (x) region-II each ordered {0,D,U,P}.

    column 0: cos^2 r |0,0> + sin r cos r (|U,D> + |D,U>) + sin^2 r |P,P>
    column 1: cos r |D,0> - sin r |P,D>
    column 2: cos r |U,0> + sin r |P,U>
    """
    r = check_rindler_param(r)
    c, s = np.cos(r), np.sin(r)
    w = np.zeros((16, 3), dtype=complex)
    w[0 * 4 + 0, 0] = c * c
    w[2 * 4 + 1, 0] = s * c
    w[1 * 4 + 2, 0] = s * c
    w[3 * 4 + 3, 0] = s * s
    w[1 * 4 + 0, 1] = c
    w[3 * 4 + 1, 1] = -s
    w[2 * 4 + 0, 2] = c
    w[3 * 4 + 2, 2] = s
    return w


def _permute_rows(m: np.ndarray, dims: tuple[int, ...], perm: tuple[int, ...]) -> np.ndarray:
    cols = m.shape[1]
    return m.reshape(*dims, cols).transpose(*perm, len(dims)).reshape(m.shape[0], cols)


def _qubit_lift(r: float, dim_b: int) -> np.ndarray:
    # kron(V, I_dB) maps |q,m> to (i, k, m); reorder to (i, m, k) so region II is last
    lift = tensor(qubit_isometry(r), np.eye(dim_b, dtype=complex))
    return _permute_rows(lift, (2, 2, dim_b), (0, 2, 1))


def _qutrit_lift(r: float) -> np.ndarray:
    # kron(I2, W) is already ordered (q, a, b) with region II last
    return tensor(np.eye(2, dtype=complex), qutrit_isometry(r))


def _both_lift(r_q: float, r_t: float) -> np.ndarray:
    # kron(V, W) maps |q,m> to (i, k, a, b); reorder to (i, a, k, b)
    lift = tensor(qubit_isometry(r_q), qutrit_isometry(r_t))
    return _permute_rows(lift, (2, 2, 4, 4), (0, 2, 1, 3))


def _dilate_and_trace(lift: np.ndarray, rho: np.ndarray, dim_keep: int, dim_env: int) -> np.ndarray:
    big = lift @ rho @ dagger(lift)
    return partial_trace(big, (dim_keep, dim_env), "b")


def _require_physical(state: BipartiteState) -> None:
    report = validate_state(state.rho)
    if not report.is_physical:
        raise ValueError(
            "channel input is not a physical state "
            f"(hermitian={report.hermitian}, trace deviation={report.trace_deviation:.3e}, "
            f"min eigenvalue={report.min_eigenvalue:.3e})"
        )


def accelerate_qubit(state: BipartiteState, r_q: float, check_input: bool = True) -> BipartiteState:
    """Accelerate the qubit factor; output keeps the spectator factor dimension."""
    if state.dim_a != 2 or state.dim_b not in (3, 4):
        raise ValueError(f"qubit channel expects a (2,3) or (2,4) state, got {state.dims}")
    if check_input:
        _require_physical(state)
    lift = _qubit_lift(r_q, state.dim_b)
    out = _dilate_and_trace(lift, state.rho, 2 * state.dim_b, 2)
    return BipartiteState(out, 2, state.dim_b)


def accelerate_qutrit(state: BipartiteState, r_t: float, check_input: bool = True) -> BipartiteState:
    """Accelerate the qutrit factor; the output factor is 4-dimensional."""
    if state.dims != (2, 3):
        raise ValueError(f"qutrit channel expects a (2,3) state, got {state.dims}")
    if check_input:
        _require_physical(state)
    lift = _qutrit_lift(r_t)
    out = _dilate_and_trace(lift, state.rho, 8, 4)
    return BipartiteState(out, 2, 4)


def accelerate_both(
    state: BipartiteState, r_q: float, r_t: float, check_input: bool = True
) -> BipartiteState:
    """Accelerate both factors; equals the two single-factor channels composed."""
    if state.dims != (2, 3):
        raise ValueError(f"joint channel expects a (2,3) state, got {state.dims}")
    if check_input:
        _require_physical(state)
    lift = _both_lift(r_q, r_t)
    out = _dilate_and_trace(lift, state.rho, 8, 8)
    return BipartiteState(out, 2, 4)


CHANNELS = ("qubit", "qutrit", "both")


def apply_channel(
    state: BipartiteState,
    channel: str,
    r_q: float | None = None,
    r_t: float | None = None,
    check_input: bool = True,
) -> BipartiteState:
    """Dispatch one of the three channels by name."""
    if channel == "qubit":
        if r_q is None:
            raise ValueError("qubit channel needs r_q")
        return accelerate_qubit(state, r_q, check_input=check_input)
    if channel == "qutrit":
        if r_t is None:
            raise ValueError("qutrit channel needs r_t")
        return accelerate_qutrit(state, r_t, check_input=check_input)
    if channel == "both":
        if r_q is None or r_t is None:
            raise ValueError("joint channel needs r_q and r_t")
        return accelerate_both(state, r_q, r_t, check_input=check_input)
    raise ValueError(f"unknown channel {channel!r}; expected one of {CHANNELS}")


def choi_matrix(channel: str, r_q: float | None = None, r_t: float | None = None) -> np.ndarray:
    """Choi matrix of a channel: apply it to one half of the maximally
    entangled state on C6 (x) C6. PSD iff the channel is completely positive."""
    if channel == "qubit":
        lift, keep, env = _qubit_lift(check_rindler_param(r_q), 3), 6, 2
    elif channel == "qutrit":
        lift, keep, env = _qutrit_lift(check_rindler_param(r_t)), 8, 4
    elif channel == "both":
        lift, keep, env = _both_lift(check_rindler_param(r_q), check_rindler_param(r_t)), 8, 8
    else:
        raise ValueError(f"unknown channel {channel!r}; expected one of {CHANNELS}")
    n = 6
    choi = np.zeros((n * keep, n * keep), dtype=complex)
    basis = np.eye(n, dtype=complex)
    for i in range(n):
        for j in range(n):
            e_ij = np.outer(basis[i], basis[j])
            choi += tensor(e_ij, _dilate_and_trace(lift, e_ij, keep, env))
    return choi / n


def isometry_defect(v: np.ndarray) -> float:
    """max |V^dag V - I|; zero for an exact isometry."""
    k = v.shape[1]
    return float(np.max(np.abs(dagger(v) @ v - np.eye(k))))
