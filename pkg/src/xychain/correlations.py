"""Ground-state spin correlators from the fermion correlation matrix."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class PairCorrelators:
    """Quarter-scaled two-point functions and half-scaled magnetizations.

    ``sxx = <s^x_l s^x_m> / 4`` in Pauli units, likewise ``syy`` and
    ``szz``; ``mz_l = <s^z_l> / 2``.
    """

    sxx: float
    syy: float
    szz: float
    mz_l: float
    mz_m: float
    l: int
    m: int


def _check_pair(n: int, l: int, m: int) -> None:
    if not (1 <= l < m <= n):
        raise ValueError(f"need 1 <= l < m <= {n}, got l={l}, m={m}")


def pair_correlators(g: np.ndarray, l: int, m: int) -> PairCorrelators:
    """Correlators of sites ``l < m`` (1-based) via Wick's theorem.

    ``<s^x_l s^x_m>`` is the determinant of G restricted to rows
    ``l..m-1`` and columns ``l+1..m``; ``<s^y_l s^y_m>`` uses rows
    ``l+1..m`` and columns ``l..m-1``.
    """
    g = np.asarray(g, dtype=float)
    _check_pair(g.shape[0], l, m)
    i, j = l - 1, m - 1
    if m == l + 1:
        xx, yy = g[i, j], g[j, i]
    else:
        xx = np.linalg.det(g[i:j, i + 1:j + 1])
        yy = np.linalg.det(g[i + 1:j + 1, i:j])
    zz = g[i, i] * g[j, j] - g[j, i] * g[i, j]
    return PairCorrelators(
        sxx=0.25 * float(xx),
        syy=0.25 * float(yy),
        szz=0.25 * float(zz),
        mz_l=0.5 * float(g[i, i]),
        mz_m=0.5 * float(g[j, j]),
        l=l,
        m=m,
    )


def magnetization(g: np.ndarray) -> np.ndarray:
    """Per-site ``<s^z_i> / 2``."""
    return 0.5 * np.diag(g).copy()
