__all__ = [
    "Secret",
    "Party",
    "CheatModel",
    "Verdict",
    "ProtocolTranscript",
    "QSSProtocol",
    "verdict_from_outcome",
    "dealer_input",
    "encode",
    "encode_with_snapshots",
    "party_hadamards",
    "apply_cheat",
    "reconstruct",
    "corrective_phase",
    "run_protocol",
    "trial_seed",
    "ANCILLA_QUBITS",
]

from .secret import Secret
from .cheat_model import CheatModel, Party
from .verdict import Verdict, verdict_from_outcome
from .transcript import ProtocolTranscript
from .qss import (
    ANCILLA_QUBITS,
    QSSProtocol,
    apply_cheat,
    corrective_phase,
    dealer_input,
    encode,
    encode_with_snapshots,
    party_hadamards,
    reconstruct,
    run_protocol,
    trial_seed,
)
