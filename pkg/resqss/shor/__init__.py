__all__ = [
    "ShorCodeword",
    "ErrorKind",
    "ErrorSpec",
    "Syndrome",
    "ShorTrial",
    "shor_encode",
    "logical_fidelity",
    "inject_error",
    "random_unitary_error",
    "measure_syndrome",
    "syndrome_table",
    "recover",
    "run_error_trial",
    "exhaustive_errors",
    "exhaustive_sweep",
    "random_unitary_sweep",
    "N_PHYSICAL",
]

from .codeword import N_PHYSICAL, ShorCodeword, logical_fidelity, shor_encode
from .errors import ErrorKind, ErrorSpec, inject_error, random_unitary_error
from .syndrome import Syndrome, measure_syndrome
from .recovery import (
    ShorTrial,
    exhaustive_errors,
    exhaustive_sweep,
    random_unitary_sweep,
    recover,
    run_error_trial,
    syndrome_table,
)
