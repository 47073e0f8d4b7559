"""Entropy functionals over channel inputs and outputs.

Everything is in bits (base-2 logarithms) with the 0 log 0 = 0 convention
applied after clamping eigenvalues onto [0, 1].
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .channels import QuantumChannel, apply, complementary_output, fc_channel
from .qmat import density_eigenvalues, kron, outer, purify

__all__ = [
    "DomainError",
    "Ensemble",
    "coherent_info",
    "entropy_exchange",
    "entropy_exchange_purified",
    "h2",
    "holevo",
    "mutual_info",
    "vn_entropy",
    "xlog2",
]

PROB_TOL = 1e-12
NORM_TOL = 1e-12


class DomainError(ValueError):
    """Argument outside the function domain."""


def xlog2(x):
    """x * log2(x) with the 0 log 0 = 0 convention; scalars or arrays."""
    scalar = np.ndim(x) == 0
    arr = np.atleast_1d(np.asarray(x, dtype=float))
    out = np.zeros_like(arr)
    mask = arr > 0.0
    out[mask] = arr[mask] * np.log2(arr[mask])
    return float(out[0]) if scalar else out


def h2(x):
    """Shannon binary entropy in bits; accepts scalars or arrays in [0, 1]."""
    arr = np.asarray(x, dtype=float)
    if np.any(arr < -PROB_TOL) or np.any(arr > 1.0 + PROB_TOL):
        raise DomainError("binary entropy argument outside [0, 1]")
    arr = np.clip(arr, 0.0, 1.0)
    return -xlog2(arr) - xlog2(1.0 - arr)


@dataclass(frozen=True)
class Ensemble:
    """Finite ensemble of pure two-qubit states with probabilities."""

    items: tuple[tuple[float, np.ndarray], ...]

    def __post_init__(self):
        items = tuple((float(p), np.asarray(s, dtype=complex)) for p, s in self.items)
        object.__setattr__(self, "items", items)
        probs = np.array([p for p, _ in items])
        if probs.size == 0:
            raise ValueError("ensemble must contain at least one state")
        if np.any(probs < -PROB_TOL):
            raise ValueError("ensemble probabilities must be nonnegative")
        if abs(probs.sum() - 1.0) > PROB_TOL:
            raise ValueError(f"ensemble probabilities must sum to 1, got {probs.sum()}")
        for _, s in items:
            if s.shape != (4,):
                raise ValueError("ensemble states must be two-qubit state vectors")
            if abs(np.linalg.norm(s) - 1.0) > NORM_TOL:
                raise ValueError("ensemble states must be normalized")

    def average_state(self) -> np.ndarray:
        rho = np.zeros((4, 4), dtype=complex)
        for p, s in self.items:
            rho += p * outer(s)
        return rho


def vn_entropy(rho) -> float:
    """Von Neumann entropy in bits."""
    return float(-np.sum(xlog2(density_eigenvalues(rho))))


def holevo(ch: QuantumChannel, ens: Ensemble) -> float:
    """Output entropy of the mean state minus the mean output entropy."""
    avg = vn_entropy(apply(ch, ens.average_state()))
    conditional = 0.0
    for p, s in ens.items:
        if p > 0.0:
            conditional += p * vn_entropy(apply(ch, outer(s)))
    return avg - conditional


def entropy_exchange(eta: float, rho) -> float:
    """Entropy picked up by the environment, via the complementary output."""
    return vn_entropy(complementary_output(eta, rho))


def entropy_exchange_purified(eta: float, rho) -> float:
    """Same quantity via a purification, as an independent cross-check.

    Attaches a four-dimensional reference, evolves the system half of the
    purification through the channel, and takes the global entropy.
    """
    psi = purify(np.asarray(rho, dtype=complex))
    ops = tuple(kron(np.eye(4), k) for k in fc_channel(eta).kraus)
    extended = QuantumChannel(ops, 16, 16)
    return vn_entropy(apply(extended, outer(psi)))


def coherent_info(eta: float, rho) -> float:
    """Output entropy minus entropy exchange."""
    rho = np.asarray(rho, dtype=complex)
    return vn_entropy(apply(fc_channel(eta), rho)) - entropy_exchange(eta, rho)


def mutual_info(eta: float, rho) -> float:
    """Input entropy plus coherent information."""
    return vn_entropy(rho) + coherent_info(eta, rho)
