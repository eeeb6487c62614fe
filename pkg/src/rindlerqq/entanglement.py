"""Negativity of 2 (x) d states via the partial transpose."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import BipartiteState, hermitian_eigenvalues, partial_transpose
from .fano import validate_state
from .tolerances import TOL


@dataclass(frozen=True)
class NegativityResult:
    """Negativity together with the full spectrum of the partial transpose."""

    negativity: float
    eigenvalues: np.ndarray

    def trace_norm(self) -> float:
        return float(np.sum(np.abs(self.eigenvalues)))


def negativity(state: BipartiteState, require_physical: bool = True) -> NegativityResult:
    """E = ||rho^{T_A}||_1 - 1 = 2 * sum of |negative eigenvalues| of rho^{T_A}.

    The transpose acts on the qubit factor. E = 0 iff the state is PPT, and
    E = 1 for maximally entangled Bell-type states. With
    require_physical=False the same functional is evaluated for any Hermitian
    unit-trace matrix (used when scanning families that leave the state space).
    """
    if state.dim_a != 2 or state.dim_b not in (3, 4):
        raise ValueError(f"negativity expects a (2,3) or (2,4) state, got {state.dims}")
    if require_physical:
        report = validate_state(state.rho)
        if not report.is_physical:
            raise ValueError(
                "negativity of an unphysical state "
                f"(trace deviation={report.trace_deviation:.3e}, "
                f"min eigenvalue={report.min_eigenvalue:.3e}); "
                "pass require_physical=False to evaluate anyway"
            )
    pt = partial_transpose(state.rho, state.dims, "a")
    eigs = hermitian_eigenvalues(pt)
    value = 2.0 * float(np.sum(np.abs(eigs[eigs < 0.0])))
    return NegativityResult(negativity=value, eigenvalues=eigs)


def is_ppt(state: BipartiteState) -> bool:
    """Peres-Horodecki test: no partial-transpose eigenvalue below -TOL.psd."""
    result = negativity(state)
    return bool(result.eigenvalues[0] >= -TOL.psd)
