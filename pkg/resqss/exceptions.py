"""Exceptions raised by the resqss package."""


class InvalidQubitError(ValueError):
    """A qubit index is out of range, duplicated, or the register is too large."""


class NormalizationError(ValueError):
    """A secret, basis or state violates its normalization or finiteness invariant."""


class ZeroProbabilityBranchError(RuntimeError):
    """A measurement selected an outcome whose Born weight is zero."""


class UncorrectableSyndromeError(ValueError):
    """A Shor code syndrome that no single-qubit error produces."""

    def __init__(self, syndrome):
        self.syndrome = syndrome
        super().__init__(
            f"Syndrome {syndrome} is outside the single-qubit error table; "
            "the codeword carries an uncorrectable error."
        )


class ReportWriteError(OSError):
    """A report could not be written to its destination."""
