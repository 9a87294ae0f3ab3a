"""Exact spectra of the ring-frustrated non-Hermitian XY chain."""

from ._frustra import (
    CapacityError,
    DomainError,
    ModelParams,
    PhaseKind,
    SingularLoopError,
    boundary_curves,
    channel_match,
    classify_phase,
    ed_spectrum,
    enumerate_spectrum,
    f_min,
    ground_manifold,
    hermitian_counterpart,
    omega,
    reality_function,
    scan,
    spectral_gap,
    winding_number,
)

__all__ = [
    "CapacityError",
    "DomainError",
    "ModelParams",
    "PhaseKind",
    "SingularLoopError",
    "boundary_curves",
    "channel_match",
    "classify_phase",
    "ed_spectrum",
    "enumerate_spectrum",
    "f_min",
    "ground_manifold",
    "hermitian_counterpart",
    "omega",
    "reality_function",
    "scan",
    "spectral_gap",
    "winding_number",
]
