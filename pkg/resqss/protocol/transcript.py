from dataclasses import dataclass, field
from typing import Dict

from ..statevec import PureState
from .cheat_model import CheatModel
from .secret import Secret
from .verdict import Verdict


@dataclass(frozen=True)
class ProtocolTranscript:
    """
    Everything recorded during one seeded run of the protocol.

    ``snapshots`` maps "psi0" ... "psi8" to the joint state after each circuit
    column of the branch that was executed; "psi3" is the dealer's state
    before any share holder measured it. ``adversary_outcomes`` maps the
    cheating parties ("bob", "charlie") to the basis index they observed.
    ``recovered`` is Alice's qubit after any correction.
    """

    secret: Secret
    cheat: CheatModel
    snapshots: Dict[str, PureState]
    adversary_outcomes: Dict[str, int]
    ancilla_outcome: str
    verdict: Verdict
    correction_applied: bool
    recovered: PureState
    fidelity_before_correction: float
    fidelity_recovered: float
    rng_seed: int = field(default=0)
