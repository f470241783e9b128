"""Fourier analysis of the 1/4 Cantor measure.

Truncated evaluation of its Fourier transform, radix-4 digit spectra
(canonical, scaled, additive), spectral functions and their residue
components, and exact label-level models of the Cuntz isometries.
"""
from .digits import (
    DigitSystem,
    LevelSet,
    additive,
    canonical,
    contains,
    enumerate_level,
    invariance_check,
    orthogonality_check,
    scaled,
)
from .numerics import (
    FREQUENCY_CAP,
    FrequencyOverflowError,
    ProductConfig,
    atoms,
    is_zero_of_muhat,
    muhat_atoms,
    muhat_trunc,
    tail_bound,
    v4,
    zero_mask,
)
from .operators import (
    cuntz_check,
    lemma_us1_check,
    m_shift,
    s0,
    s0_adj,
    s1,
    s1_adj,
    u_p,
    w_tilde,
    w_tilde_bijection_check,
)
from .reports import CheckReport
from .spectral import (
    SpectralSample,
    completeness_defect,
    periodicity_defect,
    residue_component,
    sample_grid,
    spectral_fn,
)

__version__ = "0.1.0"
