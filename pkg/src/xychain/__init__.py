"""Ground-state pair entanglement of XY spin chains with impurity profiles."""

from .config import ChainSpec, DisorderProfile, ProfileParams, couplings, disorder_profile, fields, gaussian_profile
from .correlations import PairCorrelators, pair_correlators
from .entanglement import (ConcurrenceResult, NonPhysicalStateError, XStateDensity, concurrence_general,
                           concurrence_xstate, pair_density_matrix)
from .quadratic import QuadraticForm, assemble
from .solver import ConvergenceError, FermionModes, correlation_matrix, diagonalize
from .sweep import SweepConfig, SweepRow, concurrence, emit_csv, pair_entanglement, run_sweep

__version__ = "0.1.0"

__all__ = [
    "ChainSpec", "DisorderProfile", "ProfileParams", "couplings", "disorder_profile", "fields", "gaussian_profile",
    "PairCorrelators", "pair_correlators",
    "ConcurrenceResult", "NonPhysicalStateError", "XStateDensity", "concurrence_general", "concurrence_xstate",
    "pair_density_matrix",
    "QuadraticForm", "assemble",
    "ConvergenceError", "FermionModes", "correlation_matrix", "diagonalize",
    "SweepConfig", "SweepRow", "concurrence", "emit_csv", "pair_entanglement", "run_sweep",
]
