"""Quasiparticle modes and the ground-state correlation matrix.

The Bogoliubov modes solve the coupled equations

    phi_k (A - B) = Lambda_k psi_k,    psi_k (A + B) = Lambda_k phi_k,

with rows ``phi_k``, ``psi_k``. Since ``(A - B)^T = A + B`` this is the
singular value decomposition ``A - B = Phi^T diag(Lambda) Psi``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .quadratic import QuadraticForm

DEGENERACY_RTOL = 1e-8


class ConvergenceError(RuntimeError):
    """Raised when the iterative factorization fails to converge."""

    def __init__(self, message: str, sweeps: int, off_norm: float):
        super().__init__(f"{message} (sweeps={sweeps}, off-diagonal measure={off_norm:.3e})")
        self.sweeps = sweeps
        self.off_norm = off_norm


@dataclass(frozen=True)
class FermionModes:
    """Quasiparticle energies (ascending) and mode rows ``phi``, ``psi``."""

    energies: np.ndarray
    phi: np.ndarray
    psi: np.ndarray
    degenerate: bool


def _round_robin(n: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """Rounds of disjoint index pairs covering every pair once (circle method)."""
    m = n + (n % 2)
    players = list(range(m))
    rounds = []
    for _ in range(m - 1):
        p = np.array(players[: m // 2])
        q = np.array(players[m // 2:][::-1])
        keep = (p < n) & (q < n)
        p, q = p[keep], q[keep]
        lo, hi = np.minimum(p, q), np.maximum(p, q)
        rounds.append((lo, hi))
        players = [players[0]] + [players[-1]] + players[1:-1]
    return rounds


def jacobi_svd(m: np.ndarray, tol: float | None = None, max_sweeps: int = 60):
    """One-sided (Hestenes) Jacobi SVD of a square real matrix.

    Returns ``u, s, vt`` with ``m = u @ diag(s) @ vt`` and ``s`` descending,
    like :func:`numpy.linalg.svd`. Rotations are applied to disjoint column
    pairs in parallel rounds, so each sweep is ``n - 1`` vectorized steps.
    """
    w = np.array(m, dtype=float, copy=True)
    n = w.shape[1]
    v = np.eye(n)
    if tol is None:
        tol = n * np.finfo(float).eps
    rounds = _round_robin(n)
    off = np.inf
    for sweep in range(1, max_sweeps + 1):
        off = 0.0
        for p, q in rounds:
            wp, wq = w[:, p], w[:, q]
            alpha = np.einsum("ij,ij->j", wp, wp)
            beta = np.einsum("ij,ij->j", wq, wq)
            gamma = np.einsum("ij,ij->j", wp, wq)
            scale = np.sqrt(alpha * beta)
            with np.errstate(divide="ignore", invalid="ignore"):
                measure = np.where(scale > 0, np.abs(gamma) / scale, 0.0)
            off = max(off, float(measure.max(initial=0.0)))
            rot = measure > tol
            if not rot.any():
                continue
            p, q = p[rot], q[rot]
            alpha, beta, gamma = alpha[rot], beta[rot], gamma[rot]
            zeta = (beta - alpha) / (2.0 * gamma)
            t = np.sign(zeta) / (np.abs(zeta) + np.sqrt(1.0 + zeta * zeta))
            t = np.where(zeta == 0, 1.0, t)
            c = 1.0 / np.sqrt(1.0 + t * t)
            s = c * t
            for mat in (w, v):
                xp, xq = mat[:, p].copy(), mat[:, q]
                mat[:, p] = c * xp - s * xq
                mat[:, q] = s * xp + c * xq
        if off <= tol:
            break
    else:
        raise ConvergenceError("Jacobi SVD did not converge", max_sweeps, off)

    s = np.linalg.norm(w, axis=0)
    order = np.argsort(-s, kind="stable")
    s, w, v = s[order], w[:, order], v[:, order]
    small = s <= s[0] * n * np.finfo(float).eps if s[0] > 0 else np.ones(n, bool)
    u = np.zeros_like(w)
    u[:, ~small] = w[:, ~small] / s[~small]
    if small.any():
        # complete the left basis deterministically for null singular values
        k = int((~small).sum())
        q_full, _ = np.linalg.qr(np.hstack([u[:, :k], np.eye(n)]))
        basis = q_full[:, :n]
        basis[:, :k] = u[:, :k]
        u = basis
        s = np.where(small, 0.0, s)
    return u, s, v.T


def diagonalize(qf: QuadraticForm, method: str = "lapack") -> FermionModes:
    """Solve for the quasiparticle modes of ``qf``.

    Parameters
    ----------
    method : {"lapack", "jacobi"}
        ``"lapack"`` uses the ``gesvd`` driver; ``"jacobi"`` uses
        :func:`jacobi_svd`, slower but accurate to high relative precision.
    """
    m = qf.a - qf.b
    if method == "lapack":
        u, s, vt = scipy.linalg.svd(m, lapack_driver="gesvd")
    elif method == "jacobi":
        u, s, vt = jacobi_svd(m)
    else:
        raise ValueError(f"unknown method {method!r}")
    # ascending energies
    phi = u.T[::-1].copy()
    psi = vt[::-1].copy()
    energies = s[::-1].copy()
    degenerate = bool(energies[0] < DEGENERACY_RTOL * energies[-1])
    return FermionModes(energies=energies, phi=phi, psi=psi, degenerate=degenerate)


def correlation_matrix(modes: FermionModes) -> np.ndarray:
    """``G_ij = -sum_k psi_ki phi_kj``."""
    return -modes.psi.T @ modes.phi
