from enum import Enum


class Verdict(Enum):
    """Alice's cheat diagnosis, valued by the ancilla outcome that triggers it."""

    NO_CHEAT = "11"
    BOB_CHEATED = "01"
    CHARLIE_CHEATED = "10"
    BOTH_CHEATED = "00"

    @property
    def needs_correction(self):
        return self is not Verdict.NO_CHEAT

    @property
    def label(self):
        return {
            Verdict.NO_CHEAT: "NoCheat",
            Verdict.BOB_CHEATED: "BobCheated",
            Verdict.CHARLIE_CHEATED: "CharlieCheated",
            Verdict.BOTH_CHEATED: "BothCheated",
        }[self]


def verdict_from_outcome(outcome):
    """
    Decode the ancilla measurement on Bob's and Charlie's lines.

    Parameters
    ----------
    outcome : str
        Two-bit string, Bob's bit first.

    Returns
    -------
    Verdict

    Raises
    ------
    ValueError
        If ``outcome`` is not one of "00", "01", "10", "11".
    """
    try:
        return Verdict(outcome)
    except ValueError:
        raise ValueError(
            f"Ancilla outcome must be one of 00, 01, 10, 11. Received {outcome!r} instead.") from None
