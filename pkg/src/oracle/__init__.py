"""
暴力截断 Fock 空间校验模块
稠密振幅、矩阵指数压缩、分束器与相移，以及偏振相干态的逐模校验
"""

from .fock_lattice import OracleState, lattice_index, lattice_size, lattice_modes
from .unitaries import (
    suggest_cutoff,
    apply_two_mode_squeeze,
    apply_beam_splitter,
    apply_phase,
    apply_interferometer,
    parity_of,
    oracle_parity_curve,
)
from .coherent_oracle import truncated_coherent_amplitudes, coherent_oracle_signal

__all__ = [
    'OracleState',
    'lattice_index',
    'lattice_size',
    'lattice_modes',
    'suggest_cutoff',
    'apply_two_mode_squeeze',
    'apply_beam_splitter',
    'apply_phase',
    'apply_interferometer',
    'parity_of',
    'oracle_parity_curve',
    'truncated_coherent_amplitudes',
    'coherent_oracle_signal',
]

__version__ = '1.0.0'
