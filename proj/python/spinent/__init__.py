"""Multiparticle entanglement of N two-level atoms driven by a squeezed
vacuum field: Dicke-basis spin algebra, stable Wigner-d series, and the
entanglement parameter E with its Ramsey-spectroscopy bridge."""

from ._spinent import (
    CollectiveState,
    DegenerateFrameError,
    EntanglementReport,
    FrameAngles,
    MomentTable,
    SpinSector,
    SweepRow,
    analyze,
    build_state,
    closed_form_moments,
    coherent_state,
    delta_consistency,
    dicke_state,
    lambda_residual,
    log_factorial,
    make_sector,
    moments,
    report,
    rotate_y,
    series_ratios,
    sweep_xi,
    wigner_d,
    wigner_d_matrix,
)

__all__ = [
    "CollectiveState",
    "DegenerateFrameError",
    "EntanglementReport",
    "FrameAngles",
    "MomentTable",
    "SpinSector",
    "SweepRow",
    "analyze",
    "build_state",
    "closed_form_moments",
    "coherent_state",
    "delta_consistency",
    "dicke_state",
    "lambda_residual",
    "log_factorial",
    "make_sector",
    "moments",
    "report",
    "rotate_y",
    "series_ratios",
    "sweep_xi",
    "wigner_d",
    "wigner_d_matrix",
]
