"""The three benchmark initial states.

* `example_one(s3, t3)`: both factors polarized along the third axis with a
  fixed correlation pattern c11 = 1, c22 = -1, c33 = 1. Only s3 = t3 = 0 is
  a physical state; all other members fail positivity (the sweep command
  therefore supports an explicit unphysical bypass for this family).
* `one_parameter(p)`: the standard one-parameter qubit-qutrit family on
  0 <= p <= 1/2; pure Bell-type at p = 0.
* `two_parameter(alpha, gamma)`: the two-parameter family with
  beta = (1 - gamma - 2 alpha) / 3; physical iff alpha, beta, gamma >= 0.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import BipartiteState
from .fano import FanoParams, fano_to_density

_PSD_SLACK = 1e-12


@dataclass(frozen=True)
class ExampleOne:
    s3: float
    t3: float


@dataclass(frozen=True)
class OneParameter:
    p: float


@dataclass(frozen=True)
class TwoParameter:
    alpha: float
    gamma: float

    @property
    def beta(self) -> float:
        return (1.0 - self.gamma - 2.0 * self.alpha) / 3.0


FamilySpec = ExampleOne | OneParameter | TwoParameter


def example_one(s3: float, t3: float) -> FanoParams:
    """Bloch-vector parameters of the polarized example family."""
    s = np.array([0.0, 0.0, float(s3)])
    t = np.zeros(8)
    t[2] = float(t3)
    c = np.zeros((3, 8))
    c[0, 0] = 1.0
    c[1, 1] = -1.0
    c[2, 2] = 1.0
    return FanoParams(s, t, c)


def example_one_state(s3: float, t3: float) -> BipartiteState:
    return fano_to_density(example_one(s3, t3))


def one_parameter(p: float) -> BipartiteState:
    """One-parameter family; trace 1 and positive semidefinite on [0, 1/2]."""
    p = float(p)
    if not 0.0 <= p <= 0.5:
        raise ValueError(f"one-parameter family needs 0 <= p <= 1/2, got {p}")
    hi = (1.0 - 2.0 * p) / 2.0
    rho = np.zeros((6, 6), dtype=complex)
    # basis order 00,01,02,10,11,12
    diag = [p / 2, p / 2, hi, hi, p / 2, p / 2]
    for i, d in enumerate(diag):
        rho[i, i] = d
    rho[0, 5] = rho[5, 0] = p / 2      # |00><12| block
    rho[2, 3] = rho[3, 2] = hi         # |02><10| block
    return BipartiteState(rho, 2, 3)


def two_parameter(alpha: float, gamma: float) -> BipartiteState:
    """Two-parameter family; raises naming the violated weight when not PSD."""
    spec = TwoParameter(float(alpha), float(gamma))
    beta = spec.beta
    mid = (beta + spec.gamma) / 2.0
    weights = [("beta", beta), ("(beta+gamma)/2", mid), ("alpha", spec.alpha)]
    for name, value in weights:
        if value < -_PSD_SLACK:
            raise ValueError(
                f"two-parameter family rejected: diagonal weight {name} = {value:.6g} < 0"
            )
    # the {01,10} coherence block has eigenvalues beta and gamma
    if min(beta, spec.gamma) < -_PSD_SLACK:
        raise ValueError(
            "two-parameter family rejected: coherence block needs "
            f"|beta-gamma|/2 <= (beta+gamma)/2, i.e. min(beta, gamma) >= 0 "
            f"(beta = {beta:.6g}, gamma = {spec.gamma:.6g})"
        )
    rho = np.zeros((6, 6), dtype=complex)
    diag = [beta, mid, spec.alpha, mid, beta, spec.alpha]
    for i, d in enumerate(diag):
        rho[i, i] = d
    rho[1, 3] = rho[3, 1] = (beta - spec.gamma) / 2.0
    return BipartiteState(rho, 2, 3)


def family_state(spec: FamilySpec) -> BipartiteState:
    """Build the density matrix for any family specification."""
    if isinstance(spec, ExampleOne):
        return example_one_state(spec.s3, spec.t3)
    if isinstance(spec, OneParameter):
        return one_parameter(spec.p)
    if isinstance(spec, TwoParameter):
        return two_parameter(spec.alpha, spec.gamma)
    raise TypeError(f"not a family specification: {spec!r}")


def family_label(spec: FamilySpec) -> str:
    if isinstance(spec, ExampleOne):
        return f"example-one(s3={spec.s3:g}, t3={spec.t3:g})"
    if isinstance(spec, OneParameter):
        return f"one-parameter(p={spec.p:g})"
    if isinstance(spec, TwoParameter):
        return f"two-parameter(alpha={spec.alpha:g}, gamma={spec.gamma:g}, beta={spec.beta:g})"
    raise TypeError(f"not a family specification: {spec!r}")


def max_entangled_two_parameter(step: float = 0.05) -> tuple[float, float, float]:
    """Coarse-grid argmax of the zero-acceleration negativity over (alpha, gamma).

    Only the single coherence survives the partial transpose, so the
    negativity is max(0, gamma - 3 beta); the grid search documents that the
    maximum sits at (alpha, gamma) = (0, 1) with value 1.
    """
    from .entanglement import negativity  # local import to avoid a cycle

    best = (0.0, 0.0, -1.0)
    n = int(round(1.0 / step))
    for ia in range(n + 1):
        alpha = ia * step
        for ig in range(n + 1):
            gamma = ig * step
            if 2 * alpha + gamma > 1.0 + 1e-12:
                continue
            try:
                state = two_parameter(alpha, gamma)
            except ValueError:
                continue
            value = negativity(state).negativity
            if value > best[2] + 1e-12:
                best = (alpha, gamma, value)
    return best


# documented stand-in used by the fig3 preset: the stated alpha = beta = 0.5
# violates the weight constraint, so the preset uses the grid maximizer below.
FIG3_SUBSTITUTE = TwoParameter(alpha=0.0, gamma=1.0)
