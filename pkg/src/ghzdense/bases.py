"""The three named orthonormal bases used by the dense-coding protocols.

* ``bell``: the four maximally entangled two-qubit pairs.
* ``ghz``: the eight maximally entangled three-qubit triples. Message
  numbering throughout the package follows this catalog's order.
* ``phi``: an eight-state basis whose amplitudes all have magnitude
  1/(2*sqrt(2)) and differ only in sign. It is the standard contrast
  case for the reachability analysis: unlike the GHZ catalog it is not
  built from two-ket superpositions.

Amplitudes are constructed from integer sign patterns times a single
normalization constant rather than floating literals, so a transcription
slip cannot hide below the Gram-test tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .qstate import ATOL, StateVector

# Each family pairs two computational kets; odd catalog index takes the
# '+' superposition, even takes '-'.
_BELL_PAIRS = ((0b00, 0b11), (0b01, 0b10))
_GHZ_PAIRS = ((0b000, 0b111), (0b011, 0b100), (0b010, 0b101), (0b001, 0b110))

_PHI_SIGNS = (
    (+1, +1, +1, +1, +1, +1, +1, +1),
    (+1, +1, +1, +1, -1, -1, -1, -1),
    (+1, +1, -1, -1, -1, -1, +1, +1),
    (+1, +1, -1, -1, +1, +1, -1, -1),
    (+1, -1, +1, -1, -1, +1, +1, -1),
    (+1, -1, +1, -1, +1, -1, -1, +1),
    (+1, -1, -1, +1, -1, +1, -1, +1),
    (+1, -1, -1, +1, +1, -1, +1, -1),
)


def _check_index(index: int, count: int, name: str) -> None:
    if not isinstance(index, (int, np.integer)) or isinstance(index, bool):
        raise ValueError(f"{name} index must be an integer, got {index!r}")
    if not 1 <= index <= count:
        raise ValueError(f"{name} index {index} out of range 1..{count}")


def _paired_state(pairs, index: int, n_qubits: int) -> StateVector:
    first, second = pairs[(index - 1) // 2]
    amps = np.zeros(1 << n_qubits, dtype=np.complex128)
    amps[first] = 1.0
    amps[second] = 1.0 if index % 2 else -1.0
    return StateVector(amps / np.sqrt(2.0))


def bell_state(index: int) -> StateVector:
    """Bell pair number ``index`` (1..4): (|00>+|11>), (|00>-|11>),
    (|01>+|10>), (|01>-|10>), each over sqrt(2)."""
    _check_index(index, 4, "bell")
    return _paired_state(_BELL_PAIRS, index, 2)


def ghz_state(index: int) -> StateVector:
    """GHZ triple number ``index`` (1..8); index 1 is (|000>+|111>)/sqrt(2)."""
    _check_index(index, 8, "ghz")
    return _paired_state(_GHZ_PAIRS, index, 3)


def phi_state(index: int) -> StateVector:
    """Sign-pattern basis state number ``index`` (1..8)."""
    _check_index(index, 8, "phi")
    signs = np.array(_PHI_SIGNS[index - 1], dtype=np.complex128)
    return StateVector(signs / np.sqrt(8.0))


@dataclass(frozen=True)
class BasisCatalog:
    """Ordered family of equally sized states; indexing is 1-based."""

    name: str
    states: tuple[StateVector, ...]

    def __post_init__(self) -> None:
        if not self.states:
            raise ValueError("catalog needs at least one state")
        n = self.states[0].n_qubits
        if any(s.n_qubits != n for s in self.states):
            raise ValueError("all catalog states must have the same qubit count")

    def __len__(self) -> int:
        return len(self.states)

    @property
    def n_qubits(self) -> int:
        return self.states[0].n_qubits

    def state(self, index: int) -> StateVector:
        _check_index(index, len(self.states), self.name)
        return self.states[index - 1]


@lru_cache(maxsize=None)
def bell_catalog() -> BasisCatalog:
    return BasisCatalog("bell", tuple(bell_state(i) for i in range(1, 5)))


@lru_cache(maxsize=None)
def ghz_catalog() -> BasisCatalog:
    return BasisCatalog("ghz", tuple(ghz_state(i) for i in range(1, 9)))


@lru_cache(maxsize=None)
def phi_catalog() -> BasisCatalog:
    return BasisCatalog("phi", tuple(phi_state(i) for i in range(1, 9)))


def catalog_by_name(name: str) -> BasisCatalog:
    builders = {"bell": bell_catalog, "ghz": ghz_catalog, "phi": phi_catalog}
    try:
        return builders[name]()
    except KeyError:
        raise ValueError(f"unknown basis {name!r}; expected one of {sorted(builders)}") from None


@dataclass(frozen=True)
class OrthonormalityReport:
    """Worst-case deviations of a catalog's Gram matrix from the identity."""

    max_off_diagonal: float
    max_diagonal_deviation: float

    def within(self, tol: float = ATOL) -> bool:
        return self.max_off_diagonal <= tol and self.max_diagonal_deviation <= tol


def verify_orthonormal(catalog: BasisCatalog) -> OrthonormalityReport:
    """Largest |<i|j>| for i != j and largest |1 - <i|i>| over the catalog."""
    rows = np.stack([s.amplitudes for s in catalog.states])
    gram = rows.conj() @ rows.T
    diag = np.diagonal(gram).copy()
    np.fill_diagonal(gram, 0.0)
    return OrthonormalityReport(
        max_off_diagonal=float(np.max(np.abs(gram))),
        max_diagonal_deviation=float(np.max(np.abs(1.0 - diag))),
    )
