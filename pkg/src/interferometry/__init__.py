"""
干涉测量模块
Legendre 级数形式的奇偶信号、误差传播灵敏度、海森堡极限比较与分辨率指标
"""

from .legendre import legendre, legendre_table, legendre_derivative, legendre_offset_table
from .parity_signal import (
    parity_curve,
    parity_derivative_curve,
    sensitivity_curve,
    parity_expectation,
    parity_derivative,
    sensitivity,
    heisenberg_limit,
    peak_sensitivity_limit,
)
from .sensitivity_optimizer import SearchGrid, SensitivityReport, optimal_sensitivity
from .resolution_metrics import (
    SignalCurve,
    ResolutionMetrics,
    sample_signal_curve,
    sample_sensitivity_curve,
    resolution_metrics,
)

__all__ = [
    'legendre',
    'legendre_table',
    'legendre_derivative',
    'legendre_offset_table',
    'parity_curve',
    'parity_derivative_curve',
    'sensitivity_curve',
    'parity_expectation',
    'parity_derivative',
    'sensitivity',
    'heisenberg_limit',
    'peak_sensitivity_limit',
    'SearchGrid',
    'SensitivityReport',
    'optimal_sensitivity',
    'SignalCurve',
    'ResolutionMetrics',
    'sample_signal_curve',
    'sample_sensitivity_curve',
    'resolution_metrics',
]

__version__ = '1.0.0'
