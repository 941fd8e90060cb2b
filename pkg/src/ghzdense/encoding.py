"""Sender-side encoding operations and the single-qubit reachability analysis.

The dense-coding sender holds qubits 1 and 2 of a shared GHZ triple and
turns the shared state into any of the eight GHZ basis states with one
fixed two-qubit operation per message. The reachability half answers a
sharper question: which basis states can be turned into which others by
acting on a *single* qubit only, up to global phase?

The decision procedure writes a state s as

    |0>_q (x) x0  +  |1>_q (x) x1

and collects the two co-factor rows into a 2 x 2^(n-1) matrix X (same
for the target, giving Y). A unitary u on qubit q maps s to the target
exactly when u X = Y, and such a u exists iff the column Gram matrices
X^H X and Y^H Y agree entrywise: the columns are frames of vectors in
C^2, and frames with equal Gram matrices are unitarily related. A global
phase on either state cancels out of its Gram matrix, so the criterion
already carries the up-to-phase freedom. When the verdict is positive,
the witness is the unitary polar factor of Y X^H; when negative, the
largest achievable overlap |<target| (u (x) 1) |source>| over all
unitaries u is the nuclear norm of Y X^H, reported as the obstruction.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .bases import BasisCatalog, bell_state, ghz_state
from .qstate import (
    IDENTITY,
    PAULI_X,
    PAULI_Z,
    StateVector,
    UnitaryMatrix,
    apply_on_subset,
    fidelity_up_to_phase,
)

REACH_ATOL = 1e-10  # Gram comparisons accumulate a few products
_WITNESS_MIN_FIDELITY = 1.0 - 1e-9
_ORACLE_BATCH = 50_000

# The eight message operations on qubits (1, 2), rows over the two-qubit
# basis |00>, |01>, |10>, |11>. All entries are 0 or +-1.
_ENCODING_PATTERNS = (
    ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)),
    ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, -1, 0), (0, 0, 0, -1)),
    ((0, 0, 1, 0), (0, 0, 0, 1), (1, 0, 0, 0), (0, 1, 0, 0)),
    ((0, 0, 1, 0), (0, 0, 0, 1), (-1, 0, 0, 0), (0, -1, 0, 0)),
    ((0, 1, 0, 0), (1, 0, 0, 0), (0, 0, 0, 1), (0, 0, 1, 0)),
    ((0, -1, 0, 0), (1, 0, 0, 0), (0, 0, 0, -1), (0, 0, 1, 0)),
    ((0, 0, 0, 1), (0, 0, 1, 0), (0, 1, 0, 0), (1, 0, 0, 0)),
    ((0, 0, 0, 1), (0, 0, 1, 0), (0, -1, 0, 0), (-1, 0, 0, 0)),
)

# Single-qubit encoders for the two-qubit protocol: identity, phase flip,
# bit flip, and the combined flip |0> -> -|1>, |1> -> |0>.
_BELL_ENCODERS = (IDENTITY, PAULI_Z, PAULI_X, UnitaryMatrix([[0, 1], [-1, 0]]))


@dataclass(frozen=True)
class EncodingOp:
    """One message's two-qubit operation and where it acts."""

    message_index: int
    matrix: UnitaryMatrix
    acts_on: tuple[int, int] = (1, 2)


@lru_cache(maxsize=None)
def encoding_op(message: int) -> EncodingOp:
    """Operation taking the first GHZ state to GHZ state ``message`` (1..8)."""
    if not isinstance(message, int) or not 1 <= message <= 8:
        raise ValueError(f"message index {message!r} out of range 1..8")
    matrix = UnitaryMatrix(np.array(_ENCODING_PATTERNS[message - 1], dtype=np.complex128))
    return EncodingOp(message_index=message, matrix=matrix)


def encode(message: int, shared: StateVector | None = None) -> StateVector:
    """Apply message ``message``'s operation to qubits 1 and 2 of ``shared``.

    ``shared`` defaults to the first GHZ state, the protocol's standing
    assumption; any other three-qubit state is accepted for general use.
    """
    op = encoding_op(message)
    if shared is None:
        shared = ghz_state(1)
    elif shared.n_qubits != 3:
        raise ValueError(f"shared state must have 3 qubits, got {shared.n_qubits}")
    return apply_on_subset(shared, op.matrix, op.acts_on)


def bell_encode(message: int, shared: StateVector | None = None) -> StateVector:
    """Two-qubit-protocol encoding: one single-qubit operation on qubit 1
    turns the first Bell pair into Bell pair ``message`` (1..4)."""
    if not isinstance(message, int) or not 1 <= message <= 4:
        raise ValueError(f"message index {message!r} out of range 1..4")
    if shared is None:
        shared = bell_state(1)
    elif shared.n_qubits != 2:
        raise ValueError(f"shared state must have 2 qubits, got {shared.n_qubits}")
    return apply_on_subset(shared, _BELL_ENCODERS[message - 1], (1,))


@dataclass(frozen=True)
class ReachabilityVerdict:
    """Outcome of a single-qubit reachability question.

    Exactly one of ``witness`` (when reachable) and ``obstruction`` (the
    best achievable overlap magnitude, when not) is populated. The index
    fields are filled in only by :func:`reachability_matrix`.
    """

    reachable: bool
    witness: UnitaryMatrix | None = None
    obstruction: float | None = None
    source_index: int | None = None
    target_index: int | None = None


def _cofactors(state: StateVector, qubit: int) -> np.ndarray:
    """2 x 2^(n-1) matrix whose rows are the (unnormalized) co-factors of
    the |0> and |1> branches of ``qubit``."""
    n = state.n_qubits
    if not 1 <= qubit <= n:
        raise ValueError(f"qubit {qubit} out of range 1..{n}")
    psi = state.amplitudes.reshape((2,) * n)
    return np.moveaxis(psi, qubit - 1, 0).reshape(2, -1)


def reachable_by_single_qubit(
    source: StateVector, target: StateVector, qubit: int
) -> ReachabilityVerdict:
    """Decide whether some unitary on ``qubit`` alone maps ``source`` to
    ``target`` up to global phase, exactly (no sampling involved)."""
    if source.n_qubits != target.n_qubits:
        raise ValueError(
            f"qubit counts differ: {source.n_qubits} vs {target.n_qubits}"
        )
    x = _cofactors(source, qubit)
    y = _cofactors(target, qubit)
    gram_gap = float(np.max(np.abs(x.conj().T @ x - y.conj().T @ y)))
    cross = y @ x.conj().T
    w, sing, vh = np.linalg.svd(cross)
    if gram_gap > REACH_ATOL:
        return ReachabilityVerdict(reachable=False, obstruction=float(sing.sum()))
    witness = UnitaryMatrix(w @ vh)
    achieved = fidelity_up_to_phase(apply_on_subset(source, witness, (qubit,)), target)
    if achieved < _WITNESS_MIN_FIDELITY:
        raise ArithmeticError(
            f"witness fidelity {achieved} below {_WITNESS_MIN_FIDELITY}; "
            "Gram comparison and polar construction disagree"
        )
    return ReachabilityVerdict(reachable=True, witness=witness)


def _haar_batch(count: int, rng: np.random.Generator) -> np.ndarray:
    """Stack of ``count`` Haar-random single-qubit unitaries, shape (count, 2, 2)."""
    z = (rng.standard_normal((count, 2, 2)) + 1j * rng.standard_normal((count, 2, 2))) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r, axis1=1, axis2=2)
    return q * (d / np.abs(d))[:, np.newaxis, :]


def reachability_oracle(
    source: StateVector,
    target: StateVector,
    qubit: int,
    samples: int = 10_000,
    rng_seed=0,
) -> float:
    """Brute-force cross-check, kept independent of the Gram analysis:
    apply ``samples`` Haar-random unitaries to ``qubit`` of ``source`` and
    return the best fidelity (up to phase) against ``target`` seen.

    ``rng_seed`` may be anything ``numpy.random.default_rng`` accepts.
    Results are a deterministic function of the arguments.
    """
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    if source.n_qubits != target.n_qubits:
        raise ValueError(
            f"qubit counts differ: {source.n_qubits} vs {target.n_qubits}"
        )
    x = _cofactors(source, qubit)
    y = _cofactors(target, qubit)
    rng = np.random.default_rng(rng_seed)
    best = 0.0
    remaining = samples
    while remaining > 0:
        batch = _haar_batch(min(remaining, _ORACLE_BATCH), rng)
        # |<target| (u (x) 1) |source>|^2, vectorized over the batch.
        overlaps = np.einsum("id,nij,jd->n", y.conj(), batch, x)
        best = max(best, float(np.max(np.abs(overlaps) ** 2)))
        remaining -= batch.shape[0]
    return best


def reachability_matrix(catalog: BasisCatalog, qubit: int) -> np.ndarray:
    """Boolean matrix over ordered catalog pairs: entry (i-1, j-1) says
    whether state i reaches state j through a unitary on ``qubit``."""
    k = len(catalog)
    out = np.zeros((k, k), dtype=bool)
    for i in range(1, k + 1):
        for j in range(1, k + 1):
            verdict = reachable_by_single_qubit(catalog.state(i), catalog.state(j), qubit)
            out[i - 1, j - 1] = verdict.reachable
    return out


def reachability_oracle_matrix(
    catalog: BasisCatalog, qubit: int, samples: int = 10_000, rng_seed: int = 0
) -> np.ndarray:
    """Best sampled fidelity for every ordered catalog pair.

    Each pair gets its own stream derived from (rng_seed, i, j), so the
    matrix does not depend on evaluation order.
    """
    k = len(catalog)
    out = np.zeros((k, k))
    for i in range(1, k + 1):
        for j in range(1, k + 1):
            out[i - 1, j - 1] = reachability_oracle(
                catalog.state(i), catalog.state(j), qubit, samples, rng_seed=[rng_seed, i, j]
            )
    return out
