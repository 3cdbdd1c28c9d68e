import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..protocol import CheatModel, Party, Secret
from ..shor import ErrorSpec
from ..statevec import SingleQubitBasis, basis_from_angle

logger = logging.getLogger(__name__)

DEFAULT_TRIALS = 100_000
DEFAULT_FORMAT = "table"
DEFAULT_SEED = 0
DEFAULT_CHEAT = "none"
DEFAULT_SECRET = "0.6,0,0.8,0"

FORMATS = ("json", "csv", "table")
CHEAT_CHOICES = ("none", "bob", "charlie", "both")
SWEEP_PARTIES = ("bob", "charlie", "both")
RENORMALIZATION_WARNING = 1e-6
GRID_ATOL = 1e-9


def _floats(text, count, flag):
    try:
        values = [float(part) for part in text.split(",")]
    except ValueError:
        raise ValueError(f"`{flag}` takes {count} comma-separated numbers. Received {text!r} instead.") from None
    if len(values) != count:
        raise ValueError(f"`{flag}` takes {count} comma-separated numbers. Received {text!r} instead.")
    return values


def parse_secret(text):
    """
    Secret from "re(alpha),im(alpha),re(beta),im(beta)".

    The coefficients are renormalized; a warning is logged when the input
    norm was off by more than ``RENORMALIZATION_WARNING``.
    """
    re_a, im_a, re_b, im_b = _floats(text, 4, "--secret")
    secret, deviation = Secret.normalized(complex(re_a, im_a), complex(re_b, im_b))
    if deviation > RENORMALIZATION_WARNING:
        logger.warning("Secret %r was renormalized (norm off by %.3g)", text, deviation)
    return secret


def parse_polar(text):
    """Secret from Bloch angles "theta,phi" in radians."""
    theta, phi = _floats(text, 2, "--secret-polar")
    return Secret.from_polar(theta, phi)


def parse_cheat(who, angle=None, bob_angle=None, charlie_angle=None):
    """
    Cheat model for ``who`` in {"none", "bob", "charlie", "both"}.

    Each cheater measures in the basis a = cos t, b = sin t, where t is
    their own angle if given, else ``angle``, else 0 (computational).
    """
    if who not in CHEAT_CHOICES:
        raise ValueError(f"`--cheat` must be one of {', '.join(CHEAT_CHOICES)}. Received {who!r} instead.")
    parties = {
        "none": (),
        "bob": (Party.BOB,),
        "charlie": (Party.CHARLIE,),
        "both": (Party.BOB, Party.CHARLIE),
    }[who]
    own = {Party.BOB: bob_angle, Party.CHARLIE: charlie_angle}
    bases = {}
    for party in parties:
        degrees = own[party] if own[party] is not None else angle
        bases[party.label] = SingleQubitBasis.computational() if degrees is None else basis_from_angle(degrees)
    return CheatModel(**bases)


def sweep_cheat(who, basis):
    if who not in SWEEP_PARTIES:
        raise ValueError(f"`--who` must be one of {', '.join(SWEEP_PARTIES)}. Received {who!r} instead.")
    if who == "both":
        return CheatModel(bob=basis, charlie=basis)
    return CheatModel(**{who: basis})


def sweep_angles(start, stop, step):
    """Inclusive grid start, start + step, ... up to stop, in degrees."""
    if step <= 0:
        raise ValueError(f"`--step` must be positive. Received {step!r} instead.")
    if stop < start:
        raise ValueError(f"Empty sweep grid: `--stop` {stop!r} lies below `--start` {start!r}.")
    n_points = int(np.floor((stop - start) / step + GRID_ATOL)) + 1
    return [float(start + step * i) for i in range(n_points)]


def shor_draw(seed):
    """The uniform draw a seeded measurement error uses."""
    return float(np.random.Generator(np.random.Philox(key=int(seed))).random())


def parse_error(text, seed=DEFAULT_SEED):
    """
    Error from "X:q", "Y:q", "Z:q" or "measure:q:t" (basis angle t in
    degrees, outcome drawn from ``seed``). "exhaustive" passes through and
    "none" gives None.
    """
    if text in ("exhaustive", "none"):
        return None if text == "none" else text
    parts = text.split(":")
    try:
        if parts[0] in ("X", "Y", "Z") and len(parts) == 2:
            return ErrorSpec.pauli(parts[0], int(parts[1]))
        if parts[0] == "measure" and len(parts) == 3:
            angle = float(parts[2])
            return ErrorSpec.measurement(basis_from_angle(angle), int(parts[1]), shor_draw(seed), angle)
    except ValueError as exc:
        raise ValueError(f"Cannot read error {text!r}: {exc}") from None
    raise ValueError(f"`--error` must be X:q, Y:q, Z:q, measure:q:t, exhaustive or none. Received {text!r} instead.")


def describe_secret(secret):
    return {
        "alpha": [secret.alpha.real, secret.alpha.imag],
        "beta": [secret.beta.real, secret.beta.imag],
    }


@dataclass(frozen=True)
class RunConfig:
    """
    Settings of one ``run`` invocation.

    Parameters
    ----------
    secret : Secret

    cheat : CheatModel

    trials : int
        Number of seeded protocol executions, positive.

    seed : int
        Unsigned 64-bit run seed.

    format : str
        One of "json", "csv", "table".

    output_path : str, optional
        Report destination, stdout when omitted.

    progress : bool
        Show a tqdm bar over trials.
    """

    secret: Secret
    cheat: CheatModel
    trials: int = DEFAULT_TRIALS
    seed: int = DEFAULT_SEED
    format: str = DEFAULT_FORMAT
    output_path: Optional[str] = None
    progress: bool = False

    def __post_init__(self):
        if self.trials <= 0:
            raise ValueError(f"`trials` must be a positive integer. Received {self.trials!r} instead.")
        check_seed(self.seed)
        check_format(self.format)

    def as_dict(self):
        return {
            "secret": describe_secret(self.secret),
            "cheat": self.cheat.describe(),
            "trials": self.trials,
            "seed": self.seed,
            "format": self.format,
        }


def check_seed(seed):
    if not 0 <= seed < 2 ** 64:
        raise ValueError(f"`seed` must be an unsigned 64-bit integer. Received {seed!r} instead.")


def check_format(fmt):
    if fmt not in FORMATS:
        raise ValueError(f"`format` must be one of {', '.join(FORMATS)}. Received {fmt!r} instead.")
