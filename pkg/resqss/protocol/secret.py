from dataclasses import dataclass

import numpy as np

from ..exceptions import NormalizationError
from ..statevec import NORM_ATOL, PureState


@dataclass(frozen=True)
class Secret:
    """
    The single-qubit secret alpha|0> + beta|1> that the dealer shares.

    Parameters
    ----------
    alpha : complex

    beta : complex

    Raises
    ------
    NormalizationError
        If a coefficient is not finite or |alpha|^2 + |beta|^2 differs from 1
        by more than ``NORM_ATOL``.
    """

    alpha: complex
    beta: complex

    def __post_init__(self):
        alpha, beta = complex(self.alpha), complex(self.beta)
        if not (np.isfinite(alpha) and np.isfinite(beta)):
            raise NormalizationError("Secret coefficients must be finite.")
        norm2 = abs(alpha) ** 2 + abs(beta) ** 2
        if abs(norm2 - 1.0) > NORM_ATOL:
            raise NormalizationError(
                f"Secret needs |alpha|^2 + |beta|^2 = 1. Received {norm2!r} instead.")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)

    @classmethod
    def from_polar(cls, theta, phi):
        """Bloch-sphere angles in radians: alpha = cos(theta/2), beta = e^{i phi} sin(theta/2)."""
        return cls(np.cos(theta / 2.0), np.exp(1j * phi) * np.sin(theta / 2.0))

    @classmethod
    def normalized(cls, alpha, beta):
        """
        Renormalize raw coefficients.

        Returns
        -------
        (Secret, float)
            The unit-norm secret and how far the input norm was from 1.
        """
        alpha, beta = complex(alpha), complex(beta)
        norm = np.sqrt(abs(alpha) ** 2 + abs(beta) ** 2)
        if not np.isfinite(norm) or norm == 0.0:
            raise NormalizationError(f"Cannot normalize the secret ({alpha}, {beta}).")
        return cls(alpha / norm, beta / norm), float(abs(norm - 1.0))

    @classmethod
    def random(cls, rng):
        """Haar-random secret drawn from a numpy Generator."""
        coeffs = rng.normal(size=2) + 1j * rng.normal(size=2)
        coeffs /= np.linalg.norm(coeffs)
        return cls(coeffs[0], coeffs[1])

    @property
    def state(self):
        return PureState(1, [self.alpha, self.beta])
