"""Receiver-side disentangling network and GHZ-basis measurement.

The receiver cannot read the GHZ basis with independent single-qubit
measurements directly, but a short network turns each GHZ basis state
into a distinct computational ket first:

    CNOT(control=1, target=3), CNOT(control=1, target=2), H(qubit 1)

The two CNOTs share the control and have disjoint targets, so they
commute; their listed order is a convention, not a requirement. After
the network, three ordinary single-qubit readouts plus a classical table
lookup recover the GHZ index.
"""

from __future__ import annotations

from functools import cache

import numpy as np

from .qstate import (
    CNOT,
    HADAMARD,
    StateVector,
    UnitaryMatrix,
    apply_on_subset,
    embed_on_subset,
    measure_computational,
)

GATE_SEQUENCE: tuple[tuple[str, tuple[int, ...]], ...] = (
    ("CNOT", (1, 3)),
    ("CNOT", (1, 2)),
    ("H", (1,)),
)

_GATES = {"CNOT": CNOT, "H": HADAMARD}

# Measurement outcome (bits of qubits 1, 2, 3) -> GHZ index. This is the
# contract; tests re-derive it from the network itself.
DECODE_TABLE = {
    "000": 1,
    "100": 2,
    "011": 3,
    "111": 4,
    "010": 5,
    "110": 6,
    "001": 7,
    "101": 8,
}

OUTCOME_TABLE = {index: outcome for outcome, index in DECODE_TABLE.items()}


def disentangle(state: StateVector) -> StateVector:
    """Run the gate sequence; GHZ basis states come out as computational kets."""
    if state.n_qubits != 3:
        raise ValueError(f"network expects 3 qubits, got {state.n_qubits}")
    for name, qubits in GATE_SEQUENCE:
        state = apply_on_subset(state, _GATES[name], qubits)
    return state


@cache
def network_unitary() -> UnitaryMatrix:
    """The whole network as one 8x8 operator (gates composed in order)."""
    composite = np.eye(8, dtype=np.complex128)
    for name, qubits in GATE_SEQUENCE:
        composite = embed_on_subset(_GATES[name], qubits, 3).entries @ composite
    return UnitaryMatrix(composite)


def decode(outcome: str) -> int:
    """GHZ index for a three-bit measurement outcome string."""
    if not isinstance(outcome, str) or len(outcome) != 3 or any(c not in "01" for c in outcome):
        raise ValueError(f"malformed outcome {outcome!r}; expected three bits like '011'")
    return DECODE_TABLE[outcome]


def outcome_for_index(index: int) -> str:
    """Bit string the network produces for GHZ state ``index`` (the
    inverse of :func:`decode`); this is the classical label of a message."""
    if not isinstance(index, int) or not 1 <= index <= 8:
        raise ValueError(f"index {index!r} out of range 1..8")
    return OUTCOME_TABLE[index]


def ghz_measure(state: StateVector, rng_seed) -> tuple[int, float]:
    """Measure a three-qubit state in the GHZ basis.

    Disentangles, samples a computational outcome, decodes. Index i is
    returned with probability |<ghz_i|state>|^2 for any input, because
    the network is unitary. ``rng_seed`` is an integer seed or a numpy
    Generator, as in :func:`ghzdense.qstate.measure_computational`.
    """
    outcome, probability = measure_computational(disentangle(state), rng_seed)
    return decode(outcome), probability


def index_distribution(state: StateVector) -> np.ndarray:
    """Probability of each GHZ index (entry i-1 for index i), no sampling."""
    probs = disentangle(state).probabilities()
    return np.array([probs[int(OUTCOME_TABLE[i], 2)] for i in range(1, 9)])
