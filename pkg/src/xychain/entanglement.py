"""Two-qubit reduced density matrices and Wootters concurrence.

Basis ordering is ``{uu, ud, du, dd}`` with the first slot the lower site.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .correlations import PairCorrelators

STATE_ATOL = 1e-9
PATH_ATOL = 1e-12

# sigma_y (x) sigma_y is real: the two imaginary units cancel
_YY = np.array([[0.0, 0.0, 0.0, -1.0],
                [0.0, 0.0, 1.0, 0.0],
                [0.0, 1.0, 0.0, 0.0],
                [-1.0, 0.0, 0.0, 0.0]])


class NonPhysicalStateError(ValueError):
    """A density matrix violates trace or positivity beyond tolerance."""

    def __init__(self, message: str, values):
        super().__init__(f"{message}: {values}")
        self.values = values


@dataclass(frozen=True)
class XStateDensity:
    r11: float
    r22: float
    r33: float
    r44: float
    r23: float
    r14: float

    def to_matrix(self) -> np.ndarray:
        rho = np.diag([self.r11, self.r22, self.r33, self.r44])
        rho[1, 2] = rho[2, 1] = self.r23
        rho[0, 3] = rho[3, 0] = self.r14
        return rho

    def swapped(self) -> "XStateDensity":
        """Same state with the two qubits exchanged."""
        return XStateDensity(self.r11, self.r33, self.r22, self.r44, self.r23, self.r14)


@dataclass(frozen=True)
class ConcurrenceResult:
    c: float
    lambdas: tuple[float, float, float, float]
    degenerate_flag: bool = False


def pair_density_matrix(pc: PairCorrelators) -> XStateDensity:
    x = XStateDensity(
        r11=0.5 * pc.mz_l + 0.5 * pc.mz_m + pc.szz + 0.25,
        r22=0.5 * pc.mz_l - 0.5 * pc.mz_m - pc.szz + 0.25,
        r33=0.5 * pc.mz_m - 0.5 * pc.mz_l - pc.szz + 0.25,
        r44=-0.5 * pc.mz_l - 0.5 * pc.mz_m + pc.szz + 0.25,
        r23=pc.sxx + pc.syy,
        r14=pc.sxx - pc.syy,
    )
    _check_xstate(x)
    return x


def _check_xstate(x: XStateDensity) -> None:
    diag = (x.r11, x.r22, x.r33, x.r44)
    if abs(sum(diag) - 1.0) > STATE_ATOL:
        raise NonPhysicalStateError("trace differs from 1", x)
    if min(diag) < -STATE_ATOL:
        raise NonPhysicalStateError("negative population", x)
    if x.r22 * x.r33 - x.r23 ** 2 < -STATE_ATOL or x.r11 * x.r44 - x.r14 ** 2 < -STATE_ATOL:
        raise NonPhysicalStateError("X-state block is not positive semidefinite", x)


def concurrence_xstate(x: XStateDensity, degenerate: bool = False) -> ConcurrenceResult:
    """Concurrence of an X state from its block invariants.

    Uses ``sqrt(r11 r44) +- |r14|`` and ``sqrt(r22 r33) +- |r23|`` as the
    spin-flip eigenvalues and cross-checks against the equivalent
    ``2 max(0, |r14| - sqrt(r22 r33), |r23| - sqrt(r11 r44))``.
    """
    outer = np.sqrt(max(x.r11 * x.r44, 0.0))
    inner = np.sqrt(max(x.r22 * x.r33, 0.0))
    lam = sorted((outer + abs(x.r14), inner + abs(x.r23),
                  outer - abs(x.r14), inner - abs(x.r23)), reverse=True)
    c = max(0.0, lam[0] - lam[1] - lam[2] - lam[3])
    closed = 2.0 * max(0.0, abs(x.r14) - inner, abs(x.r23) - outer)
    if abs(c - closed) > PATH_ATOL:
        raise ArithmeticError(f"X-state concurrence paths disagree: {c!r} vs {closed!r}")
    return ConcurrenceResult(c=float(c), lambdas=tuple(float(v) for v in lam),
                             degenerate_flag=degenerate)


def concurrence_general(rho: np.ndarray, degenerate: bool = False) -> ConcurrenceResult:
    """Wootters concurrence of a real two-qubit density matrix.

    The spin-flip eigenvalues are those of ``R = sqrt(sqrt(rho) rho~ sqrt(rho))``
    with ``rho~ = (s_y x s_y) rho* (s_y x s_y)``. For real ``rho`` they
    equal the singular values of the symmetric ``sqrt(rho) YY sqrt(rho)``.
    """
    rho = np.asarray(rho)
    if np.iscomplexobj(rho):
        raise TypeError("only real density matrices are supported")
    rho = rho.astype(float)
    if rho.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {rho.shape}")
    if np.abs(rho - rho.T).max() > STATE_ATOL:
        raise NonPhysicalStateError("matrix is not symmetric", rho)
    if abs(np.trace(rho) - 1.0) > STATE_ATOL:
        raise NonPhysicalStateError("trace differs from 1", np.trace(rho))
    w, v = np.linalg.eigh(0.5 * (rho + rho.T))
    if w[0] < -STATE_ATOL:
        raise NonPhysicalStateError("matrix is not positive semidefinite", w)
    # rounding-level eigenvalues would otherwise enter through their square roots
    w = np.where(w <= 4 * np.finfo(float).eps * max(w[-1], 1.0), 0.0, w)
    root = (v * np.sqrt(w)) @ v.T
    lam = np.linalg.svd(root @ _YY @ root, compute_uv=False)
    c = max(0.0, lam[0] - lam[1] - lam[2] - lam[3])
    return ConcurrenceResult(c=float(c), lambdas=tuple(float(x) for x in lam),
                             degenerate_flag=degenerate)
