"""Brute-force exact diagonalization of the spin chain.

Works directly with Pauli operators on the full 2**N space and shares no
code with the fermion pipeline beyond the coupling/field arrays. Basis
states are bit strings with site 1 the most significant bit and bit 0
meaning spin up (sigma^z = +1).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .config import ChainSpec, couplings, fields
from .correlations import PairCorrelators
from .entanglement import ConcurrenceResult, concurrence_general

MAX_SITES = 14
GAP_ATOL = 1e-10

_PAULI = {
    "x": np.array([[0.0, 1.0], [1.0, 0.0]]),
    # i*sigma_y, real; products of two carry the sign -1
    "iy": np.array([[0.0, 1.0], [-1.0, 0.0]]),
    "z": np.array([[1.0, 0.0], [0.0, -1.0]]),
}


@dataclass(frozen=True)
class DenseSpinState:
    amplitudes: np.ndarray
    energy: float
    gap: float

    @property
    def n_sites(self) -> int:
        return int(np.log2(self.amplitudes.size))

    @property
    def degenerate(self) -> bool:
        return self.gap < GAP_ATOL


def build_hamiltonian_dense(spec: ChainSpec) -> np.ndarray:
    """Dense ``2**N x 2**N`` Hamiltonian of the XY chain in a transverse field."""
    n = spec.n_sites
    if n > MAX_SITES:
        raise ValueError(f"dense oracle limited to {MAX_SITES} sites, got {n}")
    J = couplings(spec)
    h = fields(spec)
    dim = 1 << n
    states = np.arange(dim)
    # bit for site k (1-based) sits at position n - k
    up = [((states >> (n - k)) & 1) == 0 for k in range(1, n + 1)]

    H = np.zeros((dim, dim))
    sz = np.array([np.where(u, 1.0, -1.0) for u in up])
    H[states, states] = -(h[:, None] * sz).sum(axis=0)

    cx = (1.0 + spec.gamma) / 2.0
    cy = (1.0 - spec.gamma) / 2.0
    for b, Jb in enumerate(J):
        i, j = b + 1, (b + 1) % n + 1
        flipped = states ^ (1 << (n - i)) ^ (1 << (n - j))
        # <flip|s^y_i s^y_j|s> = -1 if both spins equal, +1 otherwise
        same = up[i - 1] == up[j - 1]
        amp = -Jb * (cx + cy * np.where(same, -1.0, 1.0))
        np.add.at(H, (flipped, states), amp)
    return H


def ground_state_dense(h_matrix: np.ndarray) -> DenseSpinState:
    """Lowest eigenpair of a dense symmetric Hamiltonian and the spectral gap."""
    h_matrix = np.asarray(h_matrix, dtype=float)
    if np.abs(h_matrix - h_matrix.T).max() > 1e-12 * max(np.abs(h_matrix).max(), 1.0):
        raise ValueError("Hamiltonian is not symmetric")
    try:
        w, v = scipy.linalg.eigh(h_matrix, subset_by_index=[0, 1])
    except np.linalg.LinAlgError as exc:
        raise RuntimeError(f"dense eigensolve failed: {exc}") from exc
    psi = v[:, 0]
    first = np.flatnonzero(np.abs(psi) > 1e-14)[0]
    if psi[first] < 0:
        psi = -psi
    return DenseSpinState(amplitudes=psi, energy=float(w[0]), gap=float(w[1] - w[0]))


def reduced_density_matrix(state: DenseSpinState, l: int, m: int) -> np.ndarray:
    n = state.n_sites
    if not (1 <= l < m <= n):
        raise ValueError(f"need 1 <= l < m <= {n}, got l={l}, m={m}")
    psi = state.amplitudes.reshape((2,) * n)
    psi = np.moveaxis(psi, (l - 1, m - 1), (0, 1)).reshape(4, -1)
    rho = psi @ psi.T
    return 0.5 * (rho + rho.T)


def _pair_operator(a: str, b: str) -> np.ndarray:
    return np.kron(_PAULI[a], _PAULI[b])


def oracle_correlators(state: DenseSpinState, l: int, m: int) -> PairCorrelators:
    """Correlators read off the exact reduced density matrix."""
    rho = reduced_density_matrix(state, l, m)
    one = np.eye(2)
    return PairCorrelators(
        sxx=0.25 * float(np.sum(rho * _pair_operator("x", "x"))),
        syy=-0.25 * float(np.sum(rho * _pair_operator("iy", "iy"))),
        szz=0.25 * float(np.sum(rho * _pair_operator("z", "z"))),
        mz_l=0.5 * float(np.sum(rho * np.kron(_PAULI["z"], one))),
        mz_m=0.5 * float(np.sum(rho * np.kron(one, _PAULI["z"]))),
        l=l,
        m=m,
    )


def solve(spec: ChainSpec) -> DenseSpinState:
    return ground_state_dense(build_hamiltonian_dense(spec))


def oracle_concurrence(spec: ChainSpec, l: int, m: int) -> ConcurrenceResult:
    """Concurrence of sites ``l, m`` from the exact ground state.

    Raises
    ------
    ValueError
        If the ground space is degenerate, where the pair state is not unique.
    """
    state = solve(spec)
    if state.degenerate:
        raise ValueError(f"degenerate ground space (gap {state.gap:.3e}); concurrence is ill-defined")
    return concurrence_general(reduced_density_matrix(state, l, m))
