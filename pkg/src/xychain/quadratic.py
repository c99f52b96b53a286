"""Hopping/pairing matrices of the Jordan-Wigner fermion Hamiltonian.

After the Jordan-Wigner map the chain reads

    H = sum_ij c_i^+ A_ij c_j + 1/2 sum_ij (c_i^+ B_ij c_j^+ + h.c.) + const

with A symmetric and B antisymmetric. On a periodic chain the boundary
bond is treated as an ordinary hopping/pairing term (fermions strictly
periodic, no parity projection).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import BOUNDARIES, ChainSpec, couplings, fields


@dataclass(frozen=True)
class QuadraticForm:
    a: np.ndarray
    b: np.ndarray

    @property
    def n(self) -> int:
        return self.a.shape[0]


def assemble(J: np.ndarray, h: np.ndarray, gamma: float, boundary: str = "open") -> QuadraticForm:
    """Build ``A`` and ``B`` from bond couplings ``J`` and site fields ``h``.

    ``A_ii = -2 h_i``, ``A_{i,i+1} = A_{i+1,i} = -J_i``,
    ``B_{i,i+1} = -gamma J_i = -B_{i+1,i}``.
    """
    J = np.asarray(J, dtype=float)
    h = np.asarray(h, dtype=float)
    if boundary not in BOUNDARIES:
        raise ValueError(f"boundary must be one of {BOUNDARIES}, got {boundary!r}")
    n = h.shape[0]
    expected = n if boundary == "periodic" else n - 1
    if J.ndim != 1 or h.ndim != 1 or J.shape[0] != expected:
        raise ValueError(f"{boundary} chain of {n} sites needs {expected} couplings, got {J.shape[0]}")

    a = np.diag(-2.0 * h)
    b = np.zeros((n, n))
    i = np.arange(expected)
    j = (i + 1) % n
    # periodic N = 2 would double-count the single bond pair
    np.add.at(a, (i, j), -J)
    np.add.at(a, (j, i), -J)
    np.add.at(b, (i, j), -gamma * J)
    np.add.at(b, (j, i), gamma * J)
    return QuadraticForm(a=a, b=b)


def from_spec(spec: ChainSpec) -> QuadraticForm:
    return assemble(couplings(spec), fields(spec), spec.gamma, spec.boundary)
