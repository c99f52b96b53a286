"""Chain configuration and deterministic impurity profiles.

Sites and bonds are numbered from 1, bond ``i`` joining sites ``i`` and
``i + 1`` (bond ``N`` joins ``N`` and ``1`` on a periodic chain). Energies
are measured in units of the uniform field, ``h = 1``, so the uniform
exchange is ``J = 2 * lam``.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

BOUNDARIES = ("open", "periodic")

# Presets over ProfileParams: (weight, width).
DISTRIBUTIONS = {
    "pure": (1.0, 1.0),
    "gaussian": (1.0, 0.1),
    "double-gaussian": (0.5, 0.1),
    "bimodal": (0.5, 10.0),
}


@dataclass(frozen=True)
class ProfileParams:
    """Two-peaked Gaussian impurity profile.

    Parameters
    ----------
    strength_1, strength_2 : float
        Peak strengths (zeta for couplings, xi for fields).
    width : float
        Inverse squared width epsilon of each Gaussian, must be positive.
    weight : float
        Mixing weight P in [0, 1] of the first peak.
    center_1, center_2 : float, optional
        Peak positions. Default to ``N // 2 + 1`` and ``N // 2`` for an
        ``N``-site chain, i.e. ``(N+1)/2`` and ``(N-1)/2`` for odd ``N``.
    """

    strength_1: float = 0.0
    strength_2: float = 0.0
    width: float = 1.0
    weight: float = 1.0
    center_1: Optional[float] = None
    center_2: Optional[float] = None

    def __post_init__(self):
        if not self.width > 0:
            raise ValueError(f"profile width must be positive, got {self.width}")
        if not 0.0 <= self.weight <= 1.0:
            raise ValueError(f"profile weight must lie in [0, 1], got {self.weight}")

    @classmethod
    def preset(cls, kind: str, strength_1: float = 0.0, strength_2: float = 0.0,
               **overrides) -> "ProfileParams":
        """Build a named distribution; any field can be overridden."""
        if kind not in DISTRIBUTIONS:
            raise ValueError(f"unknown distribution {kind!r}; expected one of {sorted(DISTRIBUTIONS)}")
        if kind == "pure":
            strength_1 = strength_2 = 0.0
        weight, width = DISTRIBUTIONS[kind]
        params = dict(strength_1=strength_1, strength_2=strength_2, width=width, weight=weight)
        params.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**params)

    def centers(self, n_sites: int) -> tuple[float, float]:
        c1 = n_sites // 2 + 1 if self.center_1 is None else self.center_1
        c2 = n_sites // 2 if self.center_2 is None else self.center_2
        return c1, c2

    @property
    def is_pure(self) -> bool:
        return self.strength_1 == 0.0 and self.strength_2 == 0.0


@dataclass(frozen=True)
class ChainSpec:
    """Physical description of an impurity XY chain.

    ``lam`` is the reduced coupling J/(2h); ``alpha`` shapes the bond
    couplings and ``beta`` the site fields.
    """

    n_sites: int
    lam: float
    gamma: float = 1.0
    boundary: str = "periodic"
    alpha: ProfileParams = field(default_factory=ProfileParams)
    beta: ProfileParams = field(default_factory=ProfileParams)

    def __post_init__(self):
        if int(self.n_sites) != self.n_sites or self.n_sites < 2:
            raise ValueError(f"n_sites must be an integer >= 2, got {self.n_sites}")
        if not 0.0 <= self.gamma <= 1.0:
            raise ValueError(f"gamma must lie in [0, 1], got {self.gamma}")
        if not self.lam >= 0:
            raise ValueError(f"lam must be non-negative, got {self.lam}")
        if self.boundary not in BOUNDARIES:
            raise ValueError(f"boundary must be one of {BOUNDARIES}, got {self.boundary!r}")

    @property
    def n_bonds(self) -> int:
        return self.n_sites if self.boundary == "periodic" else self.n_sites - 1

    def replace(self, **changes) -> "ChainSpec":
        return dataclasses.replace(self, **changes)


def gaussian_profile(params: ProfileParams, n_entries: int,
                     n_sites: Optional[int] = None) -> np.ndarray:
    """Evaluate the double-Gaussian profile at indices ``1..n_entries``.

    Entry ``i`` is ``P s1 exp(-eps (i - c1)**2) + (1 - P) s2 exp(-eps (i - c2)**2)``.
    Default centers are taken from ``n_sites`` (``n_entries`` if omitted),
    so bond and site profiles of one chain share their peaks.

    Raises
    ------
    ValueError
        If ``1 + value <= 0`` anywhere, which would flip the sign of a
        coupling or field.
    """
    if n_entries < 1:
        raise ValueError(f"need at least 1 entry, got {n_entries}")
    c1, c2 = params.centers(n_entries if n_sites is None else n_sites)
    i = np.arange(1, n_entries + 1, dtype=float)
    eps = params.width
    values = (params.weight * params.strength_1 * np.exp(-eps * (i - c1) ** 2)
              + (1.0 - params.weight) * params.strength_2 * np.exp(-eps * (i - c2) ** 2))
    bad = np.flatnonzero(1.0 + values <= 0)
    if bad.size:
        k = int(bad[0])
        raise ValueError(f"profile makes 1 + value <= 0 at index {k + 1} (value {values[k]:.6g})")
    return values


@dataclass(frozen=True)
class DisorderProfile:
    alpha: np.ndarray
    beta: np.ndarray


def disorder_profile(spec: ChainSpec) -> DisorderProfile:
    alpha = gaussian_profile(spec.alpha, spec.n_bonds, spec.n_sites)
    beta = gaussian_profile(spec.beta, spec.n_sites)
    return DisorderProfile(alpha=alpha, beta=beta)


def couplings(spec: ChainSpec) -> np.ndarray:
    """Bond exchange ``J_i = 2 lam (1 + alpha_i)``; length N-1 (open) or N."""
    J = 2.0 * spec.lam * (1.0 + gaussian_profile(spec.alpha, spec.n_bonds, spec.n_sites))
    # lam == 0 legitimately gives zero couplings
    if np.any(J < 0):
        raise ValueError("negative coupling")
    return J


def fields(spec: ChainSpec) -> np.ndarray:
    """Site fields ``h_i = 1 + beta_i``."""
    return 1.0 + gaussian_profile(spec.beta, spec.n_sites)
