"""Exponential bases for additive measures on the coordinate axes."""

from ._core import (
    AdditiveSpace,
    AddspecError,
    Measure,
    alternating_zigzag_norm,
    centered_lattice,
    classify_spectrum_candidates,
    collinear_failure_demo,
    extremal_eigenvalues,
    find_zigzag_loop,
    gram_matrix,
    l_space_onb,
    lev_style_set,
    m_tau_eigenvalues,
    max_zigzag_length,
    mirror_spectrum,
    multiplicity,
    nonoverlap_riesz_spectrum,
    residual,
    run_cli,
    scan_residual,
    section_certificate,
    solve_families,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
