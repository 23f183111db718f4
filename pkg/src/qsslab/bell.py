"""Phase-free Bell-pair label algebra.

A Bell pair is tracked by a two-bit ``(x, z)`` label: ``x`` says whether the
halves are bit-flipped relative to each other, ``z`` carries the relative
phase.  Global phases are deliberately dropped; classical announcements in the
protocols only ever name one of the four Bell states, never a phase.  The
:mod:`qsslab.statevector` simulator holds exact amplitudes and is the ground
truth every rule in this module is tested against.

Under this labelling the three workhorse operations are all two-bit XORs:

* applying one of the encoding operators ``u1..u4`` to either half of a pair
  XORs the pair label with the operator's own ``(x, z)`` label,
* a Bell measurement that swaps entanglement between two pairs leaves the
  surviving pair in ``l_ab ^ l_cd ^ outcome``,
* reading any one of those identities backwards is again an XOR.
"""
from __future__ import annotations

from enum import Enum
from typing import Iterable


class BellLabel(Enum):
    """One of the four Bell states as an ``(x_bit, z_bit)`` pair.

    ``PHI_PLUS`` is the XOR identity.  ``a ^ b`` composes labels.
    """

    PHI_PLUS = (0, 0)
    PHI_MINUS = (0, 1)
    PSI_PLUS = (1, 0)
    PSI_MINUS = (1, 1)

    @property
    def x_bit(self) -> int:
        return self.value[0]

    @property
    def z_bit(self) -> int:
        return self.value[1]

    @property
    def index(self) -> int:
        """Row index ``2*x + z`` used by the statevector simulator's tables."""
        return 2 * self.value[0] + self.value[1]

    @property
    def text(self) -> str:
        """Wire form: ``phi+``, ``phi-``, ``psi+`` or ``psi-``."""
        return _LABEL_TEXT[self]

    @classmethod
    def from_bits(cls, x: int, z: int) -> "BellLabel":
        return cls((x & 1, z & 1))

    @classmethod
    def from_index(cls, index: int) -> "BellLabel":
        return cls.from_bits(index >> 1, index & 1)

    @classmethod
    def from_text(cls, text: str) -> "BellLabel":
        try:
            return _TEXT_LABEL[text.strip().lower()]
        except KeyError:
            raise ValueError(f"unknown Bell label {text!r}; expected one of "
                             f"{sorted(_TEXT_LABEL)}") from None

    def __xor__(self, other: "BellLabel") -> "BellLabel":
        return BellLabel.from_bits(self.x_bit ^ other.x_bit,
                                   self.z_bit ^ other.z_bit)

    def __str__(self) -> str:
        return self.text


_LABEL_TEXT = {
    BellLabel.PHI_PLUS: "phi+",
    BellLabel.PHI_MINUS: "phi-",
    BellLabel.PSI_PLUS: "psi+",
    BellLabel.PSI_MINUS: "psi-",
}
_TEXT_LABEL = {text: label for label, text in _LABEL_TEXT.items()}


class PauliOp(Enum):
    """The four encoding operators and the secret bits they stand for.

    The ``(x, z)`` label of each operator is fixed by its matrix:
    ``u1 = I``, ``u2 = Z``, ``u3 = X`` and ``u4 = ZX``.  The bit assignment
    ``u1..u4 -> 00, 01, 10, 11`` follows the encoding convention of the
    protocol; the label assignment follows from the matrices themselves (see
    the dense-coding tests, which derive it from the simulator).
    """

    U1 = ("00", BellLabel.PHI_PLUS)
    U2 = ("01", BellLabel.PHI_MINUS)
    U3 = ("10", BellLabel.PSI_PLUS)
    U4 = ("11", BellLabel.PSI_MINUS)

    @property
    def secret_bits(self) -> str:
        return self.value[0]

    @property
    def op_label(self) -> BellLabel:
        """The operator's own ``(x, z)`` label: XOR it onto a pair label."""
        return self.value[1]

    @property
    def kind(self) -> str:
        return self.name.lower()

    @classmethod
    def from_bits(cls, bits: str) -> "PauliOp":
        for op in cls:
            if op.secret_bits == bits:
                return op
        raise ValueError(f"malformed secret bits {bits!r}; expected two bits")

    @classmethod
    def from_label(cls, label: BellLabel) -> "PauliOp":
        for op in cls:
            if op.op_label is label:
                return op
        raise AssertionError("unreachable: labels are exhaustive")

    def __str__(self) -> str:
        return self.kind


class Basis(Enum):
    """Single-qubit measurement bases used by the detecting mode."""

    RECTILINEAR = "rectilinear"
    DIAGONAL = "diagonal"

    def __str__(self) -> str:
        return self.value


class Correlation(Enum):
    CORRELATED = "correlated"
    ANTICORRELATED = "anticorrelated"

    def __str__(self) -> str:
        return self.value


def encode_secret(bits: str) -> PauliOp:
    """Map a two-bit secret string onto its encoding operator."""
    if not isinstance(bits, str) or len(bits) != 2 or set(bits) - {"0", "1"}:
        raise ValueError(f"malformed secret bits {bits!r}; expected two bits")
    return PauliOp.from_bits(bits)


def pauli_action_on_bell(op: PauliOp, label: BellLabel) -> BellLabel:
    """Label of a Bell pair after ``op`` acts on one of its qubits.

    Exact up to a global phase, which the label never carries.
    """
    return label ^ op.op_label


def swap_outcome(l_ab: BellLabel, l_cd: BellLabel,
                 l_bc_measured: BellLabel) -> BellLabel:
    """Label of the surviving pair ``(a, d)`` after Bell-measuring ``(b, c)``.

    Each of the four outcomes occurs with probability 1/4; the probability
    statement lives in the statevector simulator, this is only the label
    bookkeeping.
    """
    return l_ab ^ l_cd ^ l_bc_measured


def infer_link(l_ab: BellLabel, l_cd: BellLabel, l_ad: BellLabel) -> BellLabel:
    """Invert :func:`swap_outcome`: recover the measured label from the rest.

    ``infer_link(a, c, swap_outcome(a, c, m)) == m`` for every input, since
    XOR is its own inverse.
    """
    return l_ab ^ l_cd ^ l_ad


def ring_reconstruct(initial_labels: Iterable[BellLabel],
                     measured_labels: Iterable[BellLabel]) -> PauliOp:
    """Recover the dealer's encoding operator from a completed run.

    ``initial_labels`` are the base labels of the prepared pairs (one per
    pair); ``measured_labels`` are every announced Bell outcome, the dealer's
    final measurement included.  Intermediate link collapses telescope away,
    so the operator label is just the XOR of everything.
    """
    initial = list(initial_labels)
    measured = list(measured_labels)
    if not initial or not measured:
        raise ValueError("initial and measured label lists must be non-empty")
    if len(initial) != len(measured):
        raise ValueError(f"label list length mismatch: {len(initial)} initial "
                         f"vs {len(measured)} measured")
    acc = BellLabel.PHI_PLUS
    for label in initial:
        acc = acc ^ label
    for label in measured:
        acc = acc ^ label
    return PauliOp.from_label(acc)


def detect_correlation_rule(label: BellLabel, basis: Basis) -> Correlation:
    """Whether the halves of a pair agree when both are read in ``basis``.

    In the rectilinear basis the bit flip (``x``) decides, in the diagonal
    basis the phase flip (``z``) does.
    """
    bit = label.x_bit if basis is Basis.RECTILINEAR else label.z_bit
    return Correlation.ANTICORRELATED if bit else Correlation.CORRELATED


def infer_chain_labels(initial_labels: list[BellLabel],
                       agent_labels: list[BellLabel],
                       dealer_label: BellLabel) -> list[BellLabel]:
    """Walk the sequential-link chain backwards from the dealer's outcome.

    For the sequential protocol with pairs ``p_0..p_n`` and announced agent
    outcomes ``m_1..m_n``, returns the inferred labels of the dealer-held link
    pair just before each agent's step, ending with the encoded label of pair
    ``p_0``.  Element ``0`` is the link before agent ``n``'s step, element
    ``n-1`` the encoded pair.
    """
    n = len(agent_labels)
    if len(initial_labels) != n + 1:
        raise ValueError("need one initial label per pair: "
                         f"{len(initial_labels)} labels for {n} agents")
    links = []
    link = dealer_label
    for k in range(n, 0, -1):
        link = infer_link(link, initial_labels[k], agent_labels[k - 1])
        links.append(link)
    return links
