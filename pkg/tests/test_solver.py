import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from xychain.config import ChainSpec, ProfileParams
from xychain.oracle import build_hamiltonian_dense
from xychain.quadratic import assemble, from_spec
from xychain.solver import _round_robin, correlation_matrix, diagonalize, jacobi_svd

METHODS = ["lapack", "jacobi"]


def check_modes(qf, modes):
    n = qf.n
    assert np.all(np.diff(modes.energies) >= 0)
    assert np.all(modes.energies >= 0)
    assert np.abs(modes.phi @ modes.phi.T - np.eye(n)).max() < 1e-10
    assert np.abs(modes.psi @ modes.psi.T - np.eye(n)).max() < 1e-10
    lam = modes.energies[:, None]
    minus, plus = qf.a - qf.b, qf.a + qf.b
    norm = lambda x: np.abs(x).sum(axis=1).max()
    assert np.abs(modes.phi @ minus - lam * modes.psi).max() <= 1e-9 * norm(minus)
    assert np.abs(modes.psi @ plus - lam * modes.phi).max() <= 1e-9 * norm(plus)


@pytest.mark.parametrize("method", METHODS)
def test_zero_coupling(method):
    qf = assemble(np.zeros(4), np.ones(5), 1.0, "open")
    modes = diagonalize(qf, method)
    assert np.allclose(modes.energies, 2.0, atol=1e-14)
    assert np.allclose(modes.psi, -modes.phi, atol=1e-14)
    assert np.abs(correlation_matrix(modes) - np.eye(5)).max() < 1e-12


@pytest.mark.parametrize("method", METHODS)
def test_two_site_energies(method):
    # many-body levels are -sqrt5, -1, 1, sqrt5, so the excitations are sqrt5 -+ 1
    modes = diagonalize(assemble([1.0], [1.0, 1.0], 1.0, "open"), method)
    assert modes.energies == pytest.approx([np.sqrt(5) - 1, np.sqrt(5) + 1], abs=1e-14)


@pytest.mark.parametrize("spec", [
    ChainSpec(4, 0.6, boundary="open"),
    ChainSpec(5, 1.3, gamma=0.5, boundary="open", alpha=ProfileParams.preset("double-gaussian", 0.5, 0.3)),
    ChainSpec(6, 0.4, gamma=0.2, boundary="open", beta=ProfileParams.preset("gaussian", 1.0)),
])
def test_energies_against_exact_spectrum(spec):
    # open chains: every many-body level is E0 + a subset sum of the mode energies
    levels = np.linalg.eigvalsh(build_hamiltonian_dense(spec))
    energies = diagonalize(from_spec(spec)).energies
    sums = sorted(sum(c) for r in range(spec.n_sites + 1) for c in itertools.combinations(energies, r))
    assert np.allclose(levels - levels[0], sums, atol=1e-10)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 30), st.floats(0, 3), st.floats(0, 1), st.sampled_from(["open", "periodic"]),
       st.floats(-0.5, 1.0), st.floats(-0.5, 2.0), st.sampled_from(METHODS))
def test_mode_invariants(n, lam, gamma, boundary, zeta, xi, method):
    spec = ChainSpec(n, lam, gamma, boundary,
                     alpha=ProfileParams.preset("double-gaussian", zeta, zeta / 2),
                     beta=ProfileParams.preset("gaussian", xi))
    qf = from_spec(spec)
    modes = diagonalize(qf, method)
    check_modes(qf, modes)
    g = correlation_matrix(modes)
    assert np.all(np.abs(g) <= 1 + 1e-9)
    assert modes.degenerate == (modes.energies[0] < 1e-8 * modes.energies[-1])


def test_methods_agree():
    spec = ChainSpec(41, 0.45, alpha=ProfileParams.preset("bimodal", 0.5, 0.6))
    qf = from_spec(spec)
    g1 = correlation_matrix(diagonalize(qf, "lapack"))
    g2 = correlation_matrix(diagonalize(qf, "jacobi"))
    assert np.abs(g1 - g2).max() < 1e-10


def test_translation_invariance_periodic():
    g = correlation_matrix(diagonalize(from_spec(ChainSpec(101, 1.0, boundary="periodic"))))
    n = 101
    i, j = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    for d in range(n):
        vals = g[i[(j - i) % n == d], j[(j - i) % n == d]]
        assert np.ptp(vals) < 1e-9


def test_reflection_symmetric_open_chain():
    spec = ChainSpec(21, 0.8, boundary="open",
                     alpha=ProfileParams(0.7, 0.7, width=0.3, weight=0.5, center_1=10, center_2=11),
                     beta=ProfileParams(0.4, 0.0, width=0.2, weight=1.0, center_1=11))
    g = correlation_matrix(diagonalize(from_spec(spec)))
    # reflection reverses pair order, hence the transpose: G_ij = G_{N+1-j, N+1-i}
    assert np.abs(g - g[::-1, ::-1].T).max() < 1e-9


def test_deterministic():
    qf = from_spec(ChainSpec(31, 0.9, alpha=ProfileParams.preset("double-gaussian", 0.5, 0.3)))
    for method in METHODS:
        a, b = diagonalize(qf, method), diagonalize(qf, method)
        assert np.array_equal(a.phi, b.phi) and np.array_equal(a.psi, b.psi)


def test_degenerate_flag_large_lambda_open():
    # ordered phase: the edge mode energy decays like (h/J)**N
    modes = diagonalize(from_spec(ChainSpec(60, 2.0, boundary="open")))
    assert modes.degenerate


@pytest.mark.parametrize("n", [1, 2, 5, 8])
def test_round_robin_covers_pairs(n):
    seen = set()
    for p, q in _round_robin(n):
        assert len(set(p) | set(q)) == 2 * len(p)
        seen |= {(int(a), int(b)) for a, b in zip(p, q)}
    assert seen == {(a, b) for a in range(n) for b in range(a + 1, n)}


def test_jacobi_rank_deficient():
    m = np.zeros((5, 5))
    m[0, 1], m[2, 2] = 3.0, 1.0
    u, s, vt = jacobi_svd(m)
    assert s == pytest.approx([3, 1, 0, 0, 0])
    assert np.abs(u @ np.diag(s) @ vt - m).max() < 1e-15
    assert np.abs(u.T @ u - np.eye(5)).max() < 1e-14


def test_unknown_method():
    with pytest.raises(ValueError):
        diagonalize(assemble([1.0], [1.0, 1.0], 1.0), "qr")
