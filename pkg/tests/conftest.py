"""Shared test helpers.

``kron_embed`` is the independent oracle for subset application: it
builds the full operator by conjugating a plain Kronecker product with
an explicit basis-permutation matrix, touching none of the package's
axis-moving code.
"""

from __future__ import annotations

import numpy as np

from ghzdense.qstate import StateVector


def kron_embed(gate: np.ndarray, qubits: tuple[int, ...], n: int) -> np.ndarray:
    """Full 2^n matrix applying ``gate`` to ``qubits`` (1-based, first
    listed qubit = most significant bit of the gate's own index)."""
    k = len(qubits)
    rest = [q for q in range(1, n + 1) if q not in qubits]
    order = list(qubits) + rest
    dim = 2**n
    perm = np.zeros((dim, dim))
    for idx in range(dim):
        bits = format(idx, f"0{n}b")
        permuted = "".join(bits[q - 1] for q in order)
        perm[int(permuted, 2), idx] = 1.0
    full = np.kron(np.asarray(gate, dtype=np.complex128), np.eye(2 ** (n - k)))
    return perm.T @ full @ perm


def random_state(rng: np.random.Generator, n_qubits: int) -> StateVector:
    """Normalized complex Gaussian state vector."""
    z = rng.standard_normal(2**n_qubits) + 1j * rng.standard_normal(2**n_qubits)
    return StateVector(z / np.linalg.norm(z))
