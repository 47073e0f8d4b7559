"""Small dense complex linear algebra for two-qubit channel calculations.

States are 1-D complex numpy arrays, operators and density matrices are
square 2-D complex numpy arrays.  All dimensions stay tiny (at most 32),
so everything is dense and eager.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "DimensionMismatchError",
    "NonHermitianError",
    "NotDensityMatrixError",
    "basis_state",
    "dag",
    "density_eigenvalues",
    "hermitian_eigenvalues",
    "is_hermitian",
    "kron",
    "max_abs_diff",
    "outer",
    "partial_trace",
    "purify",
    "random_density",
    "random_pure",
]

HERMITIAN_TOL = 1e-10
TRACE_TOL = 1e-10
NEGATIVE_EIG_TOL = -1e-9


class DimensionMismatchError(ValueError):
    """Operand dimensions are incompatible."""


class NonHermitianError(ValueError):
    """A matrix required to be Hermitian is not."""


class NotDensityMatrixError(ValueError):
    """A matrix fails the density-matrix checks (Hermitian, PSD, unit trace)."""


def kron(*ops) -> np.ndarray:
    """Tensor product of one or more matrices or vectors."""
    out = np.asarray(ops[0], dtype=complex)
    for op in ops[1:]:
        out = np.kron(out, np.asarray(op, dtype=complex))
    return out


def dag(a) -> np.ndarray:
    """Conjugate transpose."""
    return np.conj(np.asarray(a)).T


def outer(psi) -> np.ndarray:
    """Projector |psi><psi| of a state vector."""
    psi = np.asarray(psi, dtype=complex)
    return np.outer(psi, psi.conj())


def basis_state(dim: int, index: int) -> np.ndarray:
    """Computational basis vector |index> in the given dimension."""
    if not 0 <= index < dim:
        raise DimensionMismatchError(f"basis index {index} outside dimension {dim}")
    e = np.zeros(dim, dtype=complex)
    e[index] = 1.0
    return e


def max_abs_diff(a, b) -> float:
    """Largest entrywise modulus of a - b."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise DimensionMismatchError(f"shape mismatch: {a.shape} vs {b.shape}")
    return float(np.max(np.abs(a - b)))


def is_hermitian(h, tol: float = HERMITIAN_TOL) -> bool:
    h = np.asarray(h)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        return False
    return max_abs_diff(h, dag(h)) <= tol


def hermitian_eigenvalues(h, tol: float = HERMITIAN_TOL) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix, in descending order."""
    h = np.asarray(h, dtype=complex)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise DimensionMismatchError(f"expected a square matrix, got shape {h.shape}")
    if max_abs_diff(h, dag(h)) > tol:
        raise NonHermitianError("matrix is not Hermitian within tolerance")
    return np.linalg.eigvalsh(h)[::-1].copy()


def density_eigenvalues(rho) -> np.ndarray:
    """Validate a density matrix and return its eigenvalues, descending.

    Eigenvalues a rounding error away from [0, 1] are clamped onto the
    boundary; anything below -1e-9 means the input is genuinely not
    positive and raises instead of being masked.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise NotDensityMatrixError(f"expected a square matrix, got shape {rho.shape}")
    if max_abs_diff(rho, dag(rho)) > HERMITIAN_TOL:
        raise NotDensityMatrixError("density matrix must be Hermitian")
    tr = complex(np.trace(rho))
    if abs(tr - 1.0) > TRACE_TOL:
        raise NotDensityMatrixError(f"density matrix must have unit trace, got {tr}")
    eigs = np.linalg.eigvalsh(rho)[::-1]
    if eigs[-1] < NEGATIVE_EIG_TOL:
        raise NotDensityMatrixError(f"density matrix has negative eigenvalue {eigs[-1]}")
    return np.clip(eigs, 0.0, 1.0)


def partial_trace(rho, dims, keep) -> np.ndarray:
    """Reduced matrix over the subsystems listed in ``keep``.

    ``dims`` lists the subsystem dimensions in tensor order; kept
    subsystems stay in their original order.
    """
    rho = np.asarray(rho, dtype=complex)
    dims = [int(d) for d in dims]
    total = int(np.prod(dims))
    if rho.ndim != 2 or rho.shape != (total, total):
        raise DimensionMismatchError(
            f"matrix shape {rho.shape} does not match subsystem dims {dims}"
        )
    keep = sorted(set(int(k) for k in keep))
    if not keep or any(k < 0 or k >= len(dims) for k in keep):
        raise DimensionMismatchError(f"invalid subsystem selection {keep} for dims {dims}")
    tensor = rho.reshape(dims + dims)
    remaining = list(range(len(dims)))
    for sub in sorted(set(range(len(dims))) - set(keep), reverse=True):
        axis = remaining.index(sub)
        tensor = np.trace(tensor, axis1=axis, axis2=axis + len(remaining))
        remaining.pop(axis)
    kept_dim = int(np.prod([dims[k] for k in keep]))
    return tensor.reshape(kept_dim, kept_dim)


def purify(rho) -> np.ndarray:
    """A pure state on (reference x system) whose system marginal is rho.

    The reference factor comes first, so tracing out subsystem 0 of the
    returned vector's projector reproduces the input.
    """
    rho = np.asarray(rho, dtype=complex)
    density_eigenvalues(rho)
    w, v = np.linalg.eigh(rho)
    w = np.clip(w, 0.0, 1.0)
    d = rho.shape[0]
    psi = np.zeros(d * d, dtype=complex)
    for i in range(d):
        if w[i] > 0.0:
            psi += np.sqrt(w[i]) * kron(basis_state(d, i), v[:, i])
    return psi


def random_pure(dim: int, seed) -> np.ndarray:
    """Haar-like random state vector: normalized complex Gaussian entries.

    ``seed`` is anything ``numpy.random.default_rng`` accepts (an int, a
    SeedSequence, or an existing Generator to draw from).
    """
    rng = np.random.default_rng(seed)
    v = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return v / np.linalg.norm(v)


def random_density(dim: int, seed) -> np.ndarray:
    """Hilbert-Schmidt random density matrix G G^dag / tr(G G^dag)."""
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    rho = g @ dag(g)
    return rho / np.trace(rho).real
