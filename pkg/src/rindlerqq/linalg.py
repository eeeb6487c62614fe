"""Dense complex linear algebra for small bipartite systems.

Everything operates on numpy complex128 matrices of side at most 48. The
Hermitian eigensolver is a self-contained cyclic Jacobi iteration so results
are bit-stable across platforms and independent of any LAPACK build.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .tolerances import TOL


def as_matrix(m) -> np.ndarray:
    """Coerce to a 2-D complex128 array and reject non-finite entries."""
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a.real)) or not np.all(np.isfinite(a.imag)):
        raise ValueError("matrix contains NaN or Inf entries")
    return a


def dagger(m: np.ndarray) -> np.ndarray:
    return np.conjugate(np.transpose(m))


def hermiticity_defect(m: np.ndarray) -> float:
    """max |M[i,j] - conj(M[j,i])|."""
    return float(np.max(np.abs(m - dagger(m)))) if m.size else 0.0


def tensor(a, b) -> np.ndarray:
    """Kronecker product, row-major convention: (i1*rb+i2, j1*cb+j2) -> a[i1,j1]*b[i2,j2]."""
    return np.kron(as_matrix(a), as_matrix(b))


@dataclass(frozen=True)
class BipartiteState:
    """A density matrix together with its tensor factor dimensions.

    dim_a is the qubit side (always 2 here); dim_b is 3 before the qutrit is
    accelerated and 4 afterwards.
    """

    rho: np.ndarray
    dim_a: int
    dim_b: int

    def __post_init__(self):
        rho = as_matrix(self.rho)
        d = self.dim_a * self.dim_b
        if rho.shape != (d, d):
            raise ValueError(
                f"state of dims ({self.dim_a},{self.dim_b}) must be {d}x{d}, got {rho.shape}"
            )
        rho.setflags(write=False)
        object.__setattr__(self, "rho", rho)

    @property
    def dims(self) -> tuple[int, int]:
        return (self.dim_a, self.dim_b)


def _check_bipartite_shape(m: np.ndarray, dims: tuple[int, int]) -> None:
    da, db = dims
    if da < 1 or db < 1:
        raise ValueError(f"invalid factor dimensions {dims}")
    if m.shape != (da * db, da * db):
        raise ValueError(f"matrix shape {m.shape} does not match factor dims {dims}")


def partial_trace(m, dims: tuple[int, int], which: str) -> np.ndarray:
    """Trace out one tensor factor.

    which='b' returns the dA x dA reduction X[i,j] = sum_k M[i*dB+k, j*dB+k];
    which='a' is the symmetric formula. The total trace is preserved.
    """
    a = as_matrix(m)
    _check_bipartite_shape(a, dims)
    da, db = dims
    t = a.reshape(da, db, da, db)
    if which == "b":
        return np.einsum("ikjk->ij", t)
    if which == "a":
        return np.einsum("kikj->ij", t)
    raise ValueError("which must be 'a' or 'b'")


def partial_transpose(m, dims: tuple[int, int], which: str) -> np.ndarray:
    """Transpose one tensor factor; an involution that preserves trace and Hermiticity."""
    a = as_matrix(m)
    _check_bipartite_shape(a, dims)
    da, db = dims
    t = a.reshape(da, db, da, db)
    if which == "a":
        t = t.transpose(2, 1, 0, 3)
    elif which == "b":
        t = t.transpose(0, 3, 2, 1)
    else:
        raise ValueError("which must be 'a' or 'b'")
    return t.reshape(da * db, da * db)


def _offdiagonal_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.sqrt(np.sum(np.abs(off) ** 2)))


def hermitian_eigenvalues(h, tol: float = TOL.hermiticity) -> np.ndarray:
    """All eigenvalues of a Hermitian matrix, ascending.

    Cyclic complex Jacobi sweeps; iterates until the off-diagonal Frobenius
    norm drops below TOL.eigen_offdiag (relative to the matrix scale). Raises
    on input that is not Hermitian within `tol`.
    """
    a = as_matrix(h)
    n = a.shape[0]
    if a.shape[1] != n:
        raise ValueError("eigensolver needs a square matrix")
    defect = hermiticity_defect(a)
    if defect > tol:
        raise ValueError(f"matrix is not Hermitian within {tol:g} (defect {defect:g})")
    a = (a + dagger(a)) / 2.0
    if n == 1:
        return np.array([a[0, 0].real])

    scale = max(1.0, float(np.sqrt(np.sum(np.abs(a) ** 2))))
    target = TOL.eigen_offdiag * scale
    tiny = 1e-300
    for _ in range(100):
        if _offdiagonal_norm(a) <= target:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                mag = abs(apq)
                if mag <= tiny:
                    continue
                phase = apq / mag
                tau = (a[q, q].real - a[p, p].real) / (2.0 * mag)
                if tau >= 0.0:
                    t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                # rows: [p] <- c*[p] - s*u*[q]; [q] <- s*conj(u)*[p] + c*[q]
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * phase * rq
                a[q, :] = s * np.conj(phase) * rp + c * rq
                # columns: [p] <- c*[p] - s*conj(u)*[q]; [q] <- s*u*[p] + c*[q]
                cp = a[:, p].copy()
                cq = a[:, q].copy()
                a[:, p] = c * cp - s * np.conj(phase) * cq
                a[:, q] = s * phase * cp + c * cq
    else:
        raise RuntimeError("Jacobi iteration did not converge in 100 sweeps")
    return np.sort(np.real(np.diag(a)))
