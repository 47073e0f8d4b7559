"""Kraus-operator channels: memoryless and correlated amplitude damping.

The central object is the fully correlated two-qubit damping channel,
where relaxation only ever happens on both qubits at once: the basis
states |00>, |01>, |10> pass through untouched and only |11> decays,
surviving with probability eta.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .qmat import DimensionMismatchError, dag, kron, max_abs_diff, random_density

__all__ = [
    "EtaOutOfRangeError",
    "QuantumChannel",
    "ad_channel",
    "apply",
    "check_composition",
    "choi_matrix",
    "complementary_output",
    "compose",
    "degrading_map",
    "fc_channel",
    "identity_channel",
    "memory_channel",
    "tensor",
]

COMPLETENESS_TOL = 1e-12

# Environment basis used when embedding the two leak directions of the
# correlated channel into a two-qubit environment: no decay -> |00>,
# joint decay -> |11>.
_ENV_INDEX = (0, 3)


class EtaOutOfRangeError(ValueError):
    """Transmissivity outside its admissible interval."""


def _check_eta(eta: float) -> float:
    eta = float(eta)
    if not -1e-12 <= eta <= 1.0 + 1e-12:
        raise EtaOutOfRangeError(f"transmissivity must be in [0, 1], got {eta}")
    return min(max(eta, 0.0), 1.0)


@dataclass(frozen=True)
class QuantumChannel:
    """A completely positive trace-preserving map in Kraus form."""

    kraus: tuple[np.ndarray, ...]
    dim_in: int
    dim_out: int

    def __post_init__(self):
        ops = tuple(np.asarray(k, dtype=complex) for k in self.kraus)
        object.__setattr__(self, "kraus", ops)
        for k in ops:
            if k.shape != (self.dim_out, self.dim_in):
                raise DimensionMismatchError(
                    f"Kraus operator shape {k.shape} does not match "
                    f"({self.dim_out}, {self.dim_in})"
                )
        acc = np.zeros((self.dim_in, self.dim_in), dtype=complex)
        for k in ops:
            acc += dag(k) @ k
        if max_abs_diff(acc, np.eye(self.dim_in)) > COMPLETENESS_TOL:
            raise ValueError("Kraus operators do not satisfy the completeness relation")


def identity_channel(dim: int) -> QuantumChannel:
    return QuantumChannel((np.eye(dim, dtype=complex),), dim, dim)


def ad_channel(eta: float) -> QuantumChannel:
    """Single-qubit amplitude damping; |1> survives with probability eta."""
    eta = _check_eta(eta)
    e0 = np.array([[1.0, 0.0], [0.0, np.sqrt(eta)]], dtype=complex)
    e1 = np.array([[0.0, np.sqrt(1.0 - eta)], [0.0, 0.0]], dtype=complex)
    return QuantumChannel((e0, e1), 2, 2)


def fc_channel(eta: float) -> QuantumChannel:
    """Fully correlated two-qubit amplitude damping: only |11> decays."""
    eta = _check_eta(eta)
    b0 = np.diag([1.0, 1.0, 1.0, np.sqrt(eta)]).astype(complex)
    b1 = np.zeros((4, 4), dtype=complex)
    b1[0, 3] = np.sqrt(1.0 - eta)
    return QuantumChannel((b0, b1), 4, 4)


def tensor(a: QuantumChannel, b: QuantumChannel) -> QuantumChannel:
    """Channel acting as ``a`` on the first factor and ``b`` on the second."""
    ops = tuple(kron(ka, kb) for ka in a.kraus for kb in b.kraus)
    return QuantumChannel(ops, a.dim_in * b.dim_in, a.dim_out * b.dim_out)


def memory_channel(eta: float, mu: float) -> QuantumChannel:
    """Partial-memory damping: two independent dampings with weight 1 - mu
    plus the fully correlated damping with weight mu.

    Realized as the weighted union of the two Kraus sets, which makes the
    completeness relation automatic.
    """
    eta = _check_eta(eta)
    mu = float(mu)
    if not 0.0 <= mu <= 1.0:
        raise ValueError(f"memory weight must be in [0, 1], got {mu}")
    ops: list[np.ndarray] = []
    if mu < 1.0:
        uncorrelated = tensor(ad_channel(eta), ad_channel(eta))
        ops.extend(np.sqrt(1.0 - mu) * k for k in uncorrelated.kraus)
    if mu > 0.0:
        ops.extend(np.sqrt(mu) * k for k in fc_channel(eta).kraus)
    return QuantumChannel(tuple(ops), 4, 4)


def apply(ch: QuantumChannel, rho) -> np.ndarray:
    """Channel action sum_i K_i rho K_i^dag."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (ch.dim_in, ch.dim_in):
        raise DimensionMismatchError(
            f"state shape {rho.shape} does not match channel input dimension {ch.dim_in}"
        )
    out = np.zeros((ch.dim_out, ch.dim_out), dtype=complex)
    for k in ch.kraus:
        out += k @ rho @ dag(k)
    return out


def compose(after: QuantumChannel, before: QuantumChannel) -> QuantumChannel:
    """Channel equal to running ``before`` first, then ``after``."""
    if before.dim_out != after.dim_in:
        raise DimensionMismatchError(
            f"cannot compose: inner output dim {before.dim_out} != outer input dim {after.dim_in}"
        )
    ops = tuple(ka @ kb for ka in after.kraus for kb in before.kraus)
    return QuantumChannel(ops, before.dim_in, after.dim_out)


def complementary_output(eta: float, rho) -> np.ndarray:
    """State handed to the environment by the correlated damping channel.

    The channel has two Kraus directions, so the environment is
    effectively two dimensional; its state [tr(B_i rho B_j^dag)]_ij is
    embedded in a two-qubit environment on the {|00>, |11>} block.
    """
    eta = _check_eta(eta)
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise DimensionMismatchError(f"expected a 4x4 state, got shape {rho.shape}")
    ks = fc_channel(eta).kraus
    env = np.zeros((4, 4), dtype=complex)
    for i, ki in enumerate(ks):
        for j, kj in enumerate(ks):
            env[_ENV_INDEX[i], _ENV_INDEX[j]] = np.trace(ki @ rho @ dag(kj))
    return env


def _corner_collapse_channel() -> QuantumChannel:
    """CPTP map folding the one-excitation populations into |00><00| while
    keeping the |00>/|11> populations and coherence.

    Built from a five-qubit circuit: attach three ancilla qubits in |0>,
    flip the first ancilla conditioned on each system qubit (it records
    the excitation parity), swap the system register with the remaining
    ancilla pair whenever that parity is odd, then discard the ancillas.
    The circuit is a permutation unitary, so the reduced map is completely
    positive by construction.
    """

    def idx(s: int, a1: int, a23: int) -> int:
        return s * 8 + a1 * 4 + a23

    u = np.zeros((32, 32))
    for s in range(4):
        parity = ((s >> 1) ^ s) & 1
        for a1 in range(2):
            for a23 in range(4):
                b1 = a1 ^ parity
                if b1:
                    u[idx(a23, b1, s), idx(s, a1, a23)] = 1.0
                else:
                    u[idx(s, b1, a23), idx(s, a1, a23)] = 1.0
    ops = []
    for a1 in range(2):
        for a23 in range(4):
            k = np.zeros((4, 4), dtype=complex)
            for s_out in range(4):
                for s_in in range(4):
                    k[s_out, s_in] = u[idx(s_out, a1, a23), idx(s_in, 0, 0)]
            if np.any(k):
                ops.append(k)
    return QuantumChannel(tuple(ops), 4, 4)


def degrading_map(eta: float) -> QuantumChannel:
    """Map turning the channel output into the environment output.

    Collapses the noiseless one-excitation block onto |00>, then runs the
    correlated damping again with residual strength (1 - eta)/eta.  Only
    defined for eta >= 1/2, where that residual strength is itself an
    admissible transmissivity.
    """
    eta = _check_eta(eta)
    if eta < 0.5:
        raise EtaOutOfRangeError(f"degrading map requires eta >= 0.5, got {eta}")
    return compose(fc_channel((1.0 - eta) / eta), _corner_collapse_channel())


def choi_matrix(ch: QuantumChannel) -> np.ndarray:
    """Choi state: channel applied to one half of a maximally entangled pair."""
    d = ch.dim_in
    omega = np.zeros(d * d, dtype=complex)
    for i in range(d):
        omega[i * d + i] = 1.0 / np.sqrt(d)
    proj = np.outer(omega, omega.conj())
    out = np.zeros((ch.dim_out * d, ch.dim_out * d), dtype=complex)
    for k in ch.kraus:
        m = kron(k, np.eye(d))
        out += m @ proj @ dag(m)
    return out


def check_composition(n_samples: int = 100, seed: int = 0, tol: float = 1e-12) -> float:
    """Max deviation of fc(eta1*eta2) from fc(eta2) after fc(eta1) on random states."""
    worst = 0.0
    for i in range(n_samples):
        rng = np.random.default_rng(np.random.SeedSequence([seed, i]))
        eta1 = float(rng.uniform())
        eta2 = float(rng.uniform())
        rho = random_density(4, rng)
        direct = apply(fc_channel(eta1 * eta2), rho)
        chained = apply(compose(fc_channel(eta2), fc_channel(eta1)), rho)
        worst = max(worst, max_abs_diff(direct, chained))
    return worst
