"""
偏振模块
旋转装置配置、偏振相干态传播与线/圆偏振奇偶信号
"""

from .rotation import RotationConfig, signal_period
from .coherent_signals import (
    PolarizedCoherentInput,
    propagate_output_amplitudes,
    coherent_parity,
    parity_signal_linear,
    parity_signal_circular,
    coherent_signal_curve,
)

__all__ = [
    'RotationConfig',
    'signal_period',
    'PolarizedCoherentInput',
    'propagate_output_amplitudes',
    'coherent_parity',
    'parity_signal_linear',
    'parity_signal_circular',
    'coherent_signal_curve',
]

__version__ = '1.0.0'
