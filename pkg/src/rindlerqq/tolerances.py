"""Central numerical tolerance constants.

Every module draws its thresholds from here so property tests have a single
tuning point.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    hermiticity: float = 1e-12     # max |M - M^dag| for a matrix to count as Hermitian
    trace: float = 1e-10           # |trace - 1| for a density matrix
    psd: float = 1e-10             # slack on the minimum eigenvalue of a state
    eigen_offdiag: float = 1e-13   # Jacobi sweep target for the off-diagonal norm
    isometry: float = 1e-14        # |V^dag V - I| for the dilation isometries
    table_match: float = 1e-12     # elementwise agreement threshold in cross-checks


TOL = Tolerances()
