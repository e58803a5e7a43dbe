"""
量子态模块
TSB 态、双模压缩真空与双模压缩数态的孪生Fock展开
"""

from .tsb_state import (
    TsbParams,
    TwinFockState,
    c00,
    c11,
    select_cutoff,
    tsb_coefficients,
    squeezed_vacuum_coefficients,
    squeezed_number_coefficients,
    mean_photon_number,
    mean_photon_number_closed_form,
    factorial_moment,
)

__all__ = [
    'TsbParams',
    'TwinFockState',
    'c00',
    'c11',
    'select_cutoff',
    'tsb_coefficients',
    'squeezed_vacuum_coefficients',
    'squeezed_number_coefficients',
    'mean_photon_number',
    'mean_photon_number_closed_form',
    'factorial_moment',
]

__version__ = '1.0.0'
