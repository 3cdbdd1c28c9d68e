"""
Closed-form states of the sharing protocol, written out term by term.

Nothing here runs a circuit: every vector is assembled from its printed
ket expansion so that the simulator can be checked against it.
"""
import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..exceptions import NormalizationError
from ..statevec import NORM_ATOL

logger = logging.getLogger(__name__)

HONEST_LABELS = tuple(f"psi{i}" for i in range(9))
REDUCED_LABELS = ("psi3_AC", "psi3_AB", "psi3_A")
CHEAT_LABELS = {("bob", 0): "bob_0", ("bob", 1): "bob_1", ("charlie", 0): "charlie_0", ("charlie", 1): "charlie_1"}
BOTH_LABEL = "both_00"
GAMMA_BRANCH = "bob_gamma"
GAMMA_BRANCH_NORMALIZED = "bob_gamma_normalized"

_R2 = np.sqrt(2.0)


@dataclass(frozen=True, eq=False)
class ClosedFormState:
    """
    A state exactly as its formula prints it.

    Parameters
    ----------
    label : str

    amplitudes : np.ndarray
        Raw amplitude vector, stored verbatim even when it is not unit-norm.

    normalized : bool
        Whether the printed formula is unit-norm.
    """

    label: str
    amplitudes: np.ndarray
    normalized: bool

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=np.complex128).reshape(-1)
        amps.flags.writeable = False
        object.__setattr__(self, "amplitudes", amps)
        if self.normalized and abs(np.linalg.norm(amps) - 1.0) > NORM_ATOL:
            raise NormalizationError(f"{self.label} is flagged normalized but has norm {np.linalg.norm(amps)!r}.")

    @property
    def n_qubits(self):
        return int(round(np.log2(self.amplitudes.size)))

    @property
    def norm(self):
        return float(np.linalg.norm(self.amplitudes))


def ket(bits):
    """Computational basis vector for a bit string such as "011"."""
    vec = np.zeros(2 ** len(bits), dtype=np.complex128)
    vec[int(bits, 2)] = 1.0
    return vec


def _closed_form(label, amplitudes):
    norm = np.linalg.norm(amplitudes)
    return ClosedFormState(label, amplitudes, normalized=bool(abs(norm - 1.0) <= NORM_ATOL))


def honest_states(secret):
    """
    psi0 ... psi8 of an honest run, built from their ket expansions.

    Returns
    -------
    list of ClosedFormState
        In label order psi0 first.
    """
    a, b = secret.alpha, secret.beta
    k = ket
    psi0 = a * k("011") + b * k("111")
    psi1 = (a * (k("011") + k("111")) + b * (k("011") - k("111"))) / _R2
    psi2 = (a * (k("011") + k("100")) + b * (k("011") - k("100"))) / _R2
    psi3 = (a * (k("000") - k("110") + k("011") - k("101"))
            + b * (k("100") - k("010") - k("001") + k("111"))) / 2
    psi4 = psi2
    psi5 = (a * (k("011") + k("111")) + b * (k("011") - k("111"))) / _R2
    psi6 = (a * (k("011") + k("111")) - b * (k("011") - k("111"))) / _R2
    psi7 = a * k("011") - b * k("111")
    psi8 = psi0
    vectors = (psi0, psi1, psi2, psi3, psi4, psi5, psi6, psi7, psi8)
    return [_closed_form(label, vec) for label, vec in zip(HONEST_LABELS, vectors)]


def post_measurement_states(secret):
    """
    What remains of psi3 once cheaters observe |0>.

    psi3_AC is Alice and Charlie after Bob sees |0>, psi3_AB is Alice and Bob
    after Charlie sees |0>, psi3_A is Alice alone after both see |0>.
    """
    a, b = secret.alpha, secret.beta
    k = ket
    two_party = (a * (k("00") - k("11")) + b * (k("10") - k("01"))) / _R2
    alone = a * k("0") + b * k("1")
    return [
        _closed_form("psi3_AC", two_party),
        _closed_form("psi3_AB", two_party),
        _closed_form("psi3_A", alone),
    ]


def cheat_final_state(secret, who, outcome):
    """
    Final state psi8 when one party measures in the computational basis.

    Parameters
    ----------
    secret : Secret

    who : str or Party
        "bob" or "charlie".

    outcome : int
        The basis index the cheater observed.

    Returns
    -------
    ClosedFormState

    Raises
    ------
    ValueError
        For any other party or outcome.
    """
    who = getattr(who, "label", who)
    if (who, outcome) not in CHEAT_LABELS:
        raise ValueError(
            f"Cheating party must be bob or charlie with outcome 0 or 1. Received ({who!r}, {outcome!r}) instead.")
    a, b = secret.alpha, secret.beta
    flag = "01" if who == "bob" else "10"
    sign = 1.0 if outcome == 0 else -1.0
    plus = a * ket("0" + "11") + b * ket("1" + "11")
    minus = a * ket("0" + flag) - b * ket("1" + flag)
    return _closed_form(CHEAT_LABELS[(who, outcome)], (plus + sign * minus) / _R2)


def both_cheat_final_state(secret):
    """
    Final state when Bob and Charlie both observe |0>, with the 1/sqrt(2)
    prefactor exactly as printed (the vector has norm sqrt(2)).
    """
    a, b = secret.alpha, secret.beta
    k = ket
    vec = ((a * k("011") + b * k("111"))
           + (a * (k("000") + k("001") + k("010")) - b * (k("100") + k("101") + k("110")))) / _R2
    return _closed_form(BOTH_LABEL, vec)


@dataclass(frozen=True)
class ArbitraryBasisBranch:
    """
    Bob's |gamma> branch under an arbitrary-basis measurement.

    ``normalized`` is None when the printed vector vanishes.
    """

    printed: ClosedFormState
    normalized: Optional[ClosedFormState]
    alpha_prime: complex
    beta_prime: complex


def shifted_coefficients(secret, basis):
    """alpha' = alpha - beta(ab* + a*b) and beta' = beta - alpha(ab* + a*b)."""
    a, b = basis.a, basis.b
    s = a * np.conj(b) + np.conj(a) * b
    return secret.alpha - secret.beta * s, secret.beta - secret.alpha * s


def arbitrary_basis_final_state(secret, basis):
    """
    psi8 after Bob measures in {|gamma>, |gamma_perp>} and observes |gamma>.

    The printed vector is kept as is; it is not unit-norm for general
    secrets. Its renormalization is returned alongside.

    Returns
    -------
    ArbitraryBasisBranch
    """
    alpha, beta = secret.alpha, secret.beta
    a, b = basis.a, basis.b
    ac, bc = np.conj(a), np.conj(b)
    s = a * bc + ac * b
    alpha_prime, beta_prime = shifted_coefficients(secret, basis)
    flagged_zero = alpha * (abs(a) ** 2 - abs(b) ** 2) + beta * (ac * b - a * bc)
    flagged_one = alpha * (a * bc - ac * b) + beta * (abs(b) ** 2 - abs(a) ** 2)
    vec = np.zeros(8, dtype=np.complex128)
    vec[0b011] = alpha - beta * s
    vec[0b111] = -(alpha * s - beta)
    vec[0b001] = flagged_zero
    vec[0b101] = flagged_one
    vec /= _R2
    printed = ClosedFormState(GAMMA_BRANCH, vec, normalized=bool(abs(np.linalg.norm(vec) - 1.0) <= NORM_ATOL))
    norm = np.linalg.norm(vec)
    normalized = None
    if norm > NORM_ATOL:
        normalized = ClosedFormState(GAMMA_BRANCH_NORMALIZED, vec / norm, normalized=True)
    else:
        logger.debug("Printed arbitrary-basis state vanishes for basis %s", basis)
    return ArbitraryBasisBranch(printed, normalized, complex(alpha_prime), complex(beta_prime))
