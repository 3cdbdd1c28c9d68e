from dataclasses import dataclass
from enum import Enum
from typing import Optional

from ..statevec import SingleQubitBasis


class Party(Enum):
    """Share holders other than Alice, valued by the qubit they hold."""

    BOB = 1
    CHARLIE = 2

    @property
    def qubit(self):
        return self.value

    @property
    def label(self):
        return self.name.lower()


@dataclass(frozen=True)
class CheatModel:
    """
    Which share holders measure their qubit before reconstruction, and in
    which basis. A missing basis means that party is honest.
    """

    bob: Optional[SingleQubitBasis] = None
    charlie: Optional[SingleQubitBasis] = None

    def __post_init__(self):
        for name in ("bob", "charlie"):
            basis = getattr(self, name)
            if basis is not None and not isinstance(basis, SingleQubitBasis):
                raise ValueError(
                    f"`{name}` has to be a SingleQubitBasis. Received instance of {type(basis)} instead.")

    @classmethod
    def honest(cls):
        return cls()

    @classmethod
    def computational(cls, *parties):
        """Every named party measures in the computational basis."""
        bases = {party.label: SingleQubitBasis.computational() for party in parties}
        return cls(**bases)

    @property
    def is_honest(self):
        return self.bob is None and self.charlie is None

    def cheaters(self):
        """(party, basis) pairs in the order their measurements are replayed: Bob, then Charlie."""
        pairs = []
        if self.bob is not None:
            pairs.append((Party.BOB, self.bob))
        if self.charlie is not None:
            pairs.append((Party.CHARLIE, self.charlie))
        return pairs

    def describe(self):
        if self.is_honest:
            return "honest"
        parts = [f"{party.label}(a={basis.a:.6g}, b={basis.b:.6g})" for party, basis in self.cheaters()]
        return " + ".join(parts)
