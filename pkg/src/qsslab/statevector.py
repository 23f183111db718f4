"""Brute-force pure-state simulator over labelled qubits.

This is the ground truth for everything :mod:`qsslab.bell` claims: it keeps
exact complex amplitudes (signs and phases included) for up to twelve qubits,
which covers six Bell pairs.  The protocol engines run on top of it so that
adversarial manipulations produce physically correct statistics instead of
whatever the label algebra would predict.

Conventions:

* Amplitudes are stored as a ``(2, ..., 2)`` tensor with one axis per live
  qubit; the flat index is big-endian, first qubit in :attr:`PureState.qubits`
  most significant.
* Bell measurements collapse in place and leave the measured pair in the
  observed Bell state, so it can be measured again (the sequential protocol
  re-measures the dealer's qubit on purpose).  Pass ``remove=True`` to factor
  the pair out of the register instead; removed ids are tombstoned and any
  further use raises :class:`StateError`.
* Every stochastic operation takes an explicit ``numpy.random.Generator``.
"""
from __future__ import annotations

import math

import numpy as np

from .bell import Basis, BellLabel, PauliOp

MAX_QUBITS = 12

_SQRT1_2 = 1.0 / math.sqrt(2.0)

# Rows indexed by BellLabel.index (phi+, phi-, psi+, psi-); columns are the
# computational two-qubit basis |00>, |01>, |10>, |11>.
BELL_VECTORS = np.array(
    [
        [1, 0, 0, 1],
        [1, 0, 0, -1],
        [0, 1, 1, 0],
        [0, 1, -1, 0],
    ],
    dtype=complex,
) * _SQRT1_2

_LABELS_BY_INDEX = [BellLabel.from_index(i) for i in range(4)]

PAULI_MATRICES = {
    PauliOp.U1: np.array([[1, 0], [0, 1]], dtype=complex),
    PauliOp.U2: np.array([[1, 0], [0, -1]], dtype=complex),
    PauliOp.U3: np.array([[0, 1], [1, 0]], dtype=complex),
    PauliOp.U4: np.array([[0, 1], [-1, 0]], dtype=complex),
}

HADAMARD = np.array([[1, 1], [1, -1]], dtype=complex) * _SQRT1_2


class StateError(Exception):
    """Illegal use of a register: unknown, duplicate or consumed qubits."""


class PureState:
    """A register of labelled qubits with exact complex amplitudes.

    A fresh instance is the empty register (a single scalar amplitude 1).
    Operations mutate the register in place and return measurement results;
    use :meth:`copy` when a branch must be kept.
    """

    def __init__(self) -> None:
        self._qubits: list[int] = []
        self._axis: dict[int, int] = {}
        self._amps: np.ndarray = np.ones((), dtype=complex)
        self._consumed: set[int] = set()

    # -- introspection ----------------------------------------------------

    @property
    def qubits(self) -> tuple[int, ...]:
        """Live qubit ids, in amplitude-axis order."""
        return tuple(self._qubits)

    @property
    def consumed(self) -> frozenset[int]:
        return frozenset(self._consumed)

    @property
    def num_qubits(self) -> int:
        return len(self._qubits)

    @property
    def amplitudes(self) -> np.ndarray:
        """Flat amplitude vector, big-endian in :attr:`qubits` order."""
        return self._amps.reshape(-1).copy()

    def norm(self) -> float:
        return float(np.linalg.norm(self._amps))

    def copy(self) -> "PureState":
        dup = PureState()
        dup._qubits = list(self._qubits)
        dup._axis = dict(self._axis)
        dup._amps = self._amps.copy()
        dup._consumed = set(self._consumed)
        return dup

    def _require_live(self, *qubits: int) -> None:
        for q in qubits:
            if q in self._consumed:
                raise StateError(f"qubit {q} was measured out of the register")
            if q not in self._axis:
                raise StateError(f"qubit {q} is not in the register")

    # -- preparation -------------------------------------------------------

    def add_bell_pair(self, qa: int, qb: int, label: BellLabel) -> "PureState":
        """Tensor a fresh Bell pair ``(qa, qb)`` in ``label`` onto the register."""
        for q in (qa, qb):
            if not isinstance(q, int) or q <= 0:
                raise ValueError(f"qubit ids must be positive integers, got {q!r}")
            if q in self._axis or q in self._consumed:
                raise ValueError(f"duplicate qubit id {q}")
        if qa == qb:
            raise ValueError(f"a pair needs two distinct ids, got {qa} twice")
        if self.num_qubits + 2 > MAX_QUBITS:
            raise StateError(f"register limited to {MAX_QUBITS} qubits")
        pair = BELL_VECTORS[label.index].reshape(2, 2)
        self._amps = np.tensordot(self._amps, pair, axes=0)
        self._axis[qa] = len(self._qubits)
        self._axis[qb] = len(self._qubits) + 1
        self._qubits.extend((qa, qb))
        return self

    # -- unitaries ----------------------------------------------------------

    def _apply_matrix(self, q: int, matrix: np.ndarray) -> None:
        axis = self._axis[q]
        amps = np.tensordot(matrix, self._amps, axes=([1], [axis]))
        self._amps = np.moveaxis(amps, 0, axis)

    def apply_op(self, q: int, op: PauliOp) -> "PureState":
        """Apply one of the encoding operators ``u1..u4`` to qubit ``q``."""
        self._require_live(q)
        self._apply_matrix(q, PAULI_MATRICES[op])
        return self

    def apply_hadamard(self, q: int) -> "PureState":
        """Rotate qubit ``q`` between the rectilinear and diagonal bases."""
        self._require_live(q)
        self._apply_matrix(q, HADAMARD)
        return self

    # -- Bell measurement ----------------------------------------------------

    def _bell_components(self, qa: int, qb: int) -> tuple[np.ndarray, list[int]]:
        """Amplitudes regrouped as (Bell component of (qa, qb)) x (rest).

        Returns the ``(4, rest)`` component matrix and the axis order of the
        remaining qubits.
        """
        ia, ib = self._axis[qa], self._axis[qb]
        arr = np.moveaxis(self._amps, (ia, ib), (0, 1)).reshape(4, -1)
        rest = [q for q in self._qubits if q not in (qa, qb)]
        return BELL_VECTORS.conj() @ arr, rest

    def bell_probabilities(self, qa: int, qb: int) -> np.ndarray:
        """Born probabilities of the four Bell outcomes on ``(qa, qb)``."""
        self._require_live(qa, qb)
        if qa == qb:
            raise StateError("Bell measurement needs two distinct qubits")
        comps, _ = self._bell_components(qa, qb)
        return (np.abs(comps) ** 2).sum(axis=1)

    def _collapse_bell(self, qa: int, qb: int, index: int,
                       comps: np.ndarray, prob: float, remove: bool) -> None:
        rest = comps[index] / math.sqrt(prob)
        if remove:
            keep = [q for q in self._qubits if q not in (qa, qb)]
            self._amps = rest.reshape((2,) * len(keep))
            self._qubits = keep
            self._axis = {q: i for i, q in enumerate(keep)}
            self._consumed.update((qa, qb))
            return
        n_rest = len(self._qubits) - 2
        arr = np.multiply.outer(BELL_VECTORS[index].reshape(2, 2),
                                rest.reshape((2,) * n_rest))
        ia, ib = self._axis[qa], self._axis[qb]
        self._amps = np.moveaxis(arr, (0, 1), (ia, ib))

    def measure_bell(self, qa: int, qb: int, rng: np.random.Generator,
                     remove: bool = False) -> BellLabel:
        """Sample a Bell-basis measurement of ``(qa, qb)`` and collapse."""
        self._require_live(qa, qb)
        if qa == qb:
            raise StateError("Bell measurement needs two distinct qubits")
        comps, _ = self._bell_components(qa, qb)
        probs = (np.abs(comps) ** 2).sum(axis=1)
        index = int(np.searchsorted(np.cumsum(probs), rng.random() * probs.sum()))
        index = min(index, 3)
        self._collapse_bell(qa, qb, index, comps, float(probs[index]), remove)
        return _LABELS_BY_INDEX[index]

    def project_bell(self, qa: int, qb: int, label: BellLabel,
                     remove: bool = False) -> float:
        """Force the Bell outcome ``label`` on ``(qa, qb)``; return its probability.

        Collapses like :meth:`measure_bell`.  Raises :class:`StateError` if the
        outcome has (numerically) zero probability.
        """
        self._require_live(qa, qb)
        comps, _ = self._bell_components(qa, qb)
        prob = float((np.abs(comps[label.index]) ** 2).sum())
        if prob < 1e-15:
            raise StateError(f"outcome {label} has zero probability on ({qa}, {qb})")
        self._collapse_bell(qa, qb, label.index, comps, prob, remove)
        return prob

    # -- single-qubit measurement ---------------------------------------------

    def measure_qubit(self, q: int, basis: Basis, rng: np.random.Generator,
                      remove: bool = False) -> int:
        """Born-rule measurement of one qubit; returns the observed bit.

        In the diagonal basis bit 0 means ``|+>`` and bit 1 means ``|->``; the
        qubit is left in the observed eigenstate unless ``remove`` is set.
        """
        self._require_live(q)
        if basis is Basis.DIAGONAL:
            self.apply_hadamard(q)
        axis = self._axis[q]
        arr = np.moveaxis(self._amps, axis, 0).reshape(2, -1)
        p1 = float((np.abs(arr[1]) ** 2).sum())
        bit = 1 if rng.random() < p1 else 0
        prob = p1 if bit else 1.0 - p1
        rest = arr[bit] / math.sqrt(prob)
        if remove:
            keep = [qq for qq in self._qubits if qq != q]
            self._amps = rest.reshape((2,) * len(keep))
            self._qubits = keep
            self._axis = {qq: i for i, qq in enumerate(keep)}
            self._consumed.add(q)
            return bit
        collapsed = np.zeros_like(arr)
        collapsed[bit] = rest
        self._amps = np.moveaxis(collapsed.reshape((2,) * len(self._qubits)), 0, axis)
        if basis is Basis.DIAGONAL:
            self.apply_hadamard(q)
        return bit

    # -- analysis ---------------------------------------------------------------

    def bell_coefficients(self, pairing: tuple[tuple[int, int], tuple[int, int]]) -> np.ndarray:
        """Coefficients in the Bell x Bell product basis of ``pairing``.

        Only defined when the register holds exactly the four named qubits.
        Entry ``[i, j]`` multiplies (Bell state ``i`` on the first pair) x
        (Bell state ``j`` on the second), indices per ``BellLabel.index``.
        """
        (qa, qb), (qc, qd) = pairing
        ids = [qa, qb, qc, qd]
        if len(set(ids)) != 4:
            raise ValueError(f"pairing must name four distinct qubits, got {ids}")
        self._require_live(*ids)
        if self.num_qubits != 4:
            raise ValueError("bell_coefficients requires a register of exactly "
                             f"four live qubits, this one has {self.num_qubits}")
        order = [self._axis[q] for q in ids]
        arr = np.moveaxis(self._amps, order, range(4)).reshape(4, 4)
        conj = BELL_VECTORS.conj()
        return conj @ arr @ conj.T


def new_register() -> PureState:
    """Fresh empty register: zero qubits, scalar amplitude 1."""
    return PureState()


def equal_up_to_global_phase(s1: PureState, s2: PureState, tol: float = 1e-12) -> bool:
    """True iff some unit complex ``c`` makes ``max |s1 - c*s2| <= tol``."""
    if set(s1.qubits) != set(s2.qubits):
        raise ValueError("states are over different qubit sets: "
                         f"{sorted(s1.qubits)} vs {sorted(s2.qubits)}")
    a = s1._amps
    # align s2's axes to s1's qubit order
    perm = [s2.qubits.index(q) for q in s1.qubits]
    b = np.transpose(s2._amps, perm) if s2.num_qubits else s2._amps
    overlap = np.vdot(b, a)
    if abs(overlap) < tol:
        return bool(np.abs(a).max(initial=0.0) <= tol and np.abs(b).max(initial=0.0) <= tol)
    phase = overlap / abs(overlap)
    return bool(np.abs(a - phase * b).max() <= tol)
